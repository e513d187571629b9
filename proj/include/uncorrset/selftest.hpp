#pragma once

// The invariant suite run by `uncorrset selftest` and the acceptance binary.

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "uncorrset/constructions.hpp"
#include "uncorrset/determinants.hpp"
#include "uncorrset/engine/classify.hpp"
#include "uncorrset/engine/enumerate.hpp"
#include "uncorrset/engine/moments.hpp"
#include "uncorrset/engine/verify.hpp"
#include "uncorrset/model.hpp"
#include "uncorrset/numeric/matrix.hpp"

namespace uncorrset::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Small random rationals; reproducible from the seed.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

    Rational rational(long long num_bound = 20, long long den_bound = 12) {
        return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
    }

    Rational positive_rational(long long num_bound = 20, long long den_bound = 6) {
        return Rational(integer(1, num_bound), integer(1, den_bound));
    }

    /// Three distinct positive points, sorted.
    Support3 positive_support() {
        std::array<Rational, 3> p;
        do {
            for (auto& v : p) v = positive_rational();
            std::sort(p.begin(), p.end());
        } while (!(p[0] < p[1] && p[1] < p[2]));
        return Support3::positive(p[0], p[1], p[2]);
    }

    OffsetVector offsets() {
        OffsetVector x;
        do {
            for (auto& v : x.x) v = ExactScalar(rational());
        } while (x.is_zero());
        return x;
    }

    Point point(unsigned J, unsigned K) {
        return {static_cast<unsigned>(integer(1, J)), static_cast<unsigned>(integer(1, K))};
    }

private:
    std::mt19937_64 rng_;
};

struct Options {
    std::uint64_t seed = 20240611;
    EngineConfig engine{};
};

namespace detail {

inline CriterionResult timed(int id, std::string name, const std::function<bool(std::ostringstream&)>& body) {
    CriterionResult r{id, std::move(name), false, {}, 0};
    std::ostringstream detail;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.passed = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
        r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.detail = detail.str();
    return r;
}

inline PointList column(unsigned j, unsigned K) {
    PointList v;
    for (unsigned k = 1; k <= K; ++k) v.push_back({j, k});
    return v;
}

inline PointList row(unsigned k, unsigned J) {
    PointList v;
    for (unsigned j = 1; j <= J; ++j) v.push_back({j, k});
    return v;
}

inline PointList full_box(const Box& b) {
    PointList v;
    for (unsigned j = 1; j <= b.J; ++j)
        for (unsigned k = 1; k <= b.K; ++k) v.push_back({j, k});
    return v;
}

inline PointList sorted(PointList v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline PointList transpose(const PointList& v) {
    PointList t;
    for (const auto& p : v) t.push_back({p.k, p.j});
    return sorted(std::move(t));
}

/// Condition rows at the given points, as a rational matrix.
inline RationalMatrix condition_matrix(const PointList& pts, const ASequence& seq) {
    RationalMatrix m(pts.size(), 4);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto r = condition_row(seq, pts[i]);
        for (std::size_t c = 0; c < 4; ++c) m(i, c) = r[c];
    }
    return m;
}

inline OffsetVector as_offsets(const std::vector<Rational>& v) {
    return {{ExactScalar(v[0]), ExactScalar(v[1]), ExactScalar(v[2]), ExactScalar(v[3])}};
}

/// Column implication and cross maximality, read off one enumeration.
inline bool structural_ok(const PointList& found, const Box& box, std::ostringstream& out, const std::string& tag) {
    for (unsigned j = 1; j <= box.J; ++j) {
        unsigned in_col = 0;
        for (const auto& p : found) in_col += p.j == j;
        if (in_col >= 2 && in_col != box.K) {
            out << tag << ": column " << j << " partially present; ";
            return false;
        }
    }
    for (unsigned k = 1; k <= box.K; ++k) {
        unsigned in_row = 0;
        for (const auto& p : found) in_row += p.k == k;
        if (in_row >= 2 && in_row != box.J) {
            out << tag << ": row " << k << " partially present; ";
            return false;
        }
    }
    return true;
}

inline bool table_ok(const OffsetVector& x, const Support3& s) {
    const JointTable t = realize(x, s);
    const ExactScalar third(Rational(1, 3));
    for (std::size_t r = 0; r < 3; ++r) {
        ExactScalar rs = 0;
        ExactScalar cs = 0;
        for (std::size_t c = 0; c < 3; ++c) {
            if (quad_sign(t(r, c)) < 0) return false;
            rs += t(r, c);
            cs += t(c, r);
        }
        if (rs != third || cs != third) return false;
    }
    return true;
}

}  // namespace detail

/// 1. Moments against the A_j condition on random positive supports.
inline CriterionResult oracle_equivalence(const Options& opt, unsigned supports = 20, unsigned per_support = 10) {
    return detail::timed(1, "oracle equivalence", [&](std::ostringstream& out) {
        Gen g(opt.seed);
        unsigned vectors = 0;
        unsigned members = 0;
        unsigned mismatches = 0;
        for (unsigned si = 0; si < supports; ++si) {
            const Support3 s = g.positive_support();
            const ASequence seq(s);
            for (unsigned vi = 0; vi < per_support; ++vi) {
                OffsetVector x;
                switch (vi % 5) {
                    case 0:
                    case 1: x = g.offsets(); break;
                    case 2: x = cross_witness(g.integer(1, 10), g.integer(1, 10), seq); break;
                    case 3: x = vi % 2 ? vline_witness(g.integer(1, 10), seq) : hline_witness(g.integer(1, 10), seq); break;
                    default: {
                        // A random rational vector vanishing at two random points.
                        const Point p1 = g.point(10, 10);
                        Point p2 = g.point(10, 10);
                        while (p2 == p1) p2 = g.point(10, 10);
                        const auto basis = nullspace(detail::condition_matrix({p1, p2}, seq));
                        std::vector<Rational> v(4, Rational(0));
                        for (const auto& b : basis) {
                            const Rational c = g.rational();
                            for (std::size_t i = 0; i < 4; ++i) v[i] += c * b[i];
                        }
                        x = detail::as_offsets(v);
                        if (x.is_zero()) x = g.offsets();
                    }
                }
                const JointTable t = realize(x, s);
                const OffsetVector xt = t.offsets();
                ++vectors;
                for (unsigned j = 1; j <= 10; ++j) {
                    for (unsigned k = 1; k <= 10; ++k) {
                        const bool by_moment = is_uncorrelated(t, j, k);
                        const bool by_condition = condition_lhs(xt, seq, j, k).is_zero();
                        members += by_moment;
                        if (by_moment != by_condition) ++mismatches;
                    }
                }
            }
        }
        out << vectors << " vectors on " << supports << " supports, " << members << " member cells, " << mismatches
            << " mismatches";
        return vectors >= 200 && mismatches == 0;
    });
}

/// 2. Each construction enumerates exactly its golden set.
inline CriterionResult golden_sets(const Options& opt) {
    return detail::timed(2, "construction golden sets", [&](std::ostringstream& out) {
        const Support3 s = Support3::positive(1, 2, 3);
        const Box box{16, 16};
        unsigned runs = 0;
        unsigned failed = 0;
        auto check = [&](const std::string& tag, const Construction& c, PointList expected) {
            ++runs;
            const auto rep = verify_claim(c.x, c.support, c.descriptor, box, opt.engine);
            if (rep.found != detail::sorted(std::move(expected)) || rep.verdict != Verdict::Match) {
                ++failed;
                out << tag << " failed; ";
            }
        };
        check("empty", make_empty(s), {});
        for (Point p : {Point{1, 1}, Point{2, 3}, Point{5, 7}}) check("singleton", make_singleton(s, p.j, p.k), {p});
        check("two-point (1,2),(2,1)", make_two_point(s, {1, 2}, {2, 1}), {{1, 2}, {2, 1}});
        check("two-point (2,5),(4,3)", make_two_point(s, {2, 5}, {4, 3}), {{2, 5}, {4, 3}});
        for (unsigned i = 1; i <= 3; ++i) {
            check("vline " + std::to_string(i), make_vline(s, i), detail::column(i, box.K));
            check("hline " + std::to_string(i), make_hline(s, i), detail::row(i, box.J));
        }
        {
            PointList e = detail::column(2, box.K);
            const PointList h = detail::row(3, box.J);
            e.insert(e.end(), h.begin(), h.end());
            check("cross(2,3)", make_cross(s, 2, 3), e);
        }
        {
            PointList e;
            for (unsigned m = 1; m <= 16; ++m) e.push_back({m, m});
            check("diagonal", make_diagonal(s), e);
        }
        const BetaSupport bs(1, 2);
        for (unsigned m : {2u, 4u, 7u}) {
            PointList e;
            for (unsigned j = 1; j < m; ++j) e.push_back({j, m - j});
            check("anti-diagonal " + std::to_string(m), make_antidiagonal(bs, m), e);
        }
        out << runs << " runs, " << failed << " failed";
        return failed == 0;
    });
}

/// 3. F and G closed forms against cofactor expansion.
inline CriterionResult determinant_identities(const Options& opt) {
    return detail::timed(3, "determinant identities", [&](std::ostringstream& out) {
        unsigned symbolic = 0;
        unsigned bad = 0;
        for (unsigned n = 3; n <= 7; ++n)
            for (unsigned m = 2; m < n; ++m, ++symbolic)
                if (!f_result(m, n).equal) {
                    ++bad;
                    out << "F(" << m << "," << n << ") differs; ";
                }
        for (unsigned n = 2; n <= 6; ++n)
            for (unsigned m = 1; m < n; ++m, ++symbolic)
                if (!g_result(m, n).equal) {
                    ++bad;
                    out << "G(" << m << "," << n << ") differs; ";
                }
        Gen g(opt.seed ^ 0x5eedULL);
        const std::array<std::pair<unsigned, unsigned>, 3> pairs{{{7, 9}, {8, 10}, {9, 10}}};
        std::vector<std::pair<MultiPoly, ClosedForm>> forms;
        for (auto [m, n] : pairs) {
            forms.emplace_back(f_direct(m, n), f_closed_form(m, n));
            forms.emplace_back(g_direct(m, n), g_closed_form(m, n));
        }
        unsigned sampled = 0;
        for (unsigned i = 0; i < 100; ++i) {
            std::array<Rational, 4> pt;
            bool distinct = false;
            while (!distinct) {
                for (auto& v : pt) v = g.rational(9, 5);
                distinct = pt[0] != pt[1] && pt[0] != pt[2] && pt[0] != pt[3] && pt[1] != pt[2] && pt[1] != pt[3] &&
                           pt[2] != pt[3];
            }
            const std::span<const Rational> sp(pt);
            for (const auto& [direct, closed] : forms) {
                ++sampled;
                if (direct.eval(sp) != closed.eval(sp)) ++bad;
            }
        }
        const MultiPoly vdm = vandermonde_product();
        for (unsigned n = 2; n <= 7; ++n) {
            if (!f_direct(1, n).is_zero() || !f_closed(1, n).is_zero()) {
                ++bad;
                out << "F(1," << n << ") does not vanish; ";
            }
        }
        if (!mp_eq(f_direct(2, 3), vdm) || !mp_eq(f_closed(2, 3), vdm)) {
            ++bad;
            out << "F(2,3) is not the Vandermonde product; ";
        }
        if (!mp_eq(g_direct(1, 2), vdm) || !mp_eq(g_closed(1, 2), vdm)) {
            ++bad;
            out << "G(1,2) is not the Vandermonde product; ";
        }
        out << symbolic << " symbolic identities, " << sampled << " sampled evaluations up to (9,10), " << bad
            << " failures";
        return bad == 0;
    });
}

/// Root of t^3 - t^2 - t - 1, to the digits printed by a double bisection.
inline constexpr double kTribonacci = 1.8392867552141612;

/// 4. The slope line for m = 2.
inline CriterionResult slope_line_m2(const Options& opt) {
    return detail::timed(4, "slope line m=2", [&](std::ostringstream& out) {
        const unsigned m = 2;
        const Rational width(1, 1000000000);
        const RootInterval b0 = beta0(m, width);
        bool ok = b0.width() <= width && b0.lo > 1 && b0.hi < 2;
        ok = ok && beta0_poly(m)(b0.lo).sign() < 0 && beta0_poly(m)(b0.hi).sign() > 0;
        ok = ok && to_double(b0.lo) <= kTribonacci + 1e-12 && to_double(b0.hi) >= kTribonacci - 1e-12;
        out << "beta0 in [" << to_double(b0.lo) << ", " << to_double(b0.hi) << "]; ";

        const BetaSupport bs(1, 2);
        const Construction c = make_slopeline(bs, m, width);
        const Box box{12, 12};
        const auto rep = verify_claim(c.x, c.support, c.descriptor, box, opt.engine);
        const PointList triple{{1, 2}, {2, 4}, {3, 6}};
        ok = ok && rep.found == triple && rep.certificate == CertificateKind::GlobalAnalytic;
        out << "beta=2 finds " << to_string(rep.found) << " (" << to_string(rep.certificate) << "); ";
        bool d4 = true;
        for (unsigned k = 1; k <= 12; ++k) d4 = d4 && slope_d_poly(m, 4, k)(Rational(2)).sign() < 0;
        ok = ok && d4;
        out << "D(4,k)<0 for k<=12: " << (d4 ? "yes" : "no") << "; ";

        const auto star = slopeline_star_witness(m, 9, width);
        const auto found = enumerate_box(star.y, star.beta, box, opt.engine);
        bool contains = true;
        for (Point p : {Point{1, 2}, Point{2, 4}, Point{3, 6}, Point{4, 9}})
            contains = contains && std::binary_search(found.begin(), found.end(), p);
        const auto& iv = star.beta.interval();
        const bool inside = iv.lo > 1 && iv.hi < b0.lo;
        ok = ok && contains && inside && found.size() < box.J * box.K;
        out << "beta* in [" << to_double(iv.lo) << ", " << to_double(iv.hi) << "] finds " << to_string(found);
        return ok;
    });
}

/// 5. Four points on k = 2j force independence.
inline CriterionResult independence_line(const Options&) {
    return detail::timed(5, "four points on a line", [&](std::ostringstream& out) {
        const PointList pts{{1, 2}, {2, 4}, {3, 6}, {4, 8}};
        const BetaSupport bs(1, 2);
        const auto cert = independence_certificate(std::span<const Point>(pts), bs);
        RationalMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            const Rational bj = pow(bs.beta, pts[i].j);
            const Rational bk = pow(bs.beta, pts[i].k);
            m(i, 0) = 1;
            m(i, 1) = bj;
            m(i, 2) = bk;
            m(i, 3) = bj * bk;
        }
        const auto ns = nullspace(m);
        out << "det = " << cert.det.to_string() << ", G cross-check " << (cert.g_agrees ? "agrees" : "disagrees")
            << ", nullspace dimension " << ns.size();
        return cert.forced_independent && cert.g_agrees && ns.empty();
    });
}

/// 6. Parity-lattice classification on {-1, 0, 1}.
inline CriterionResult symmetric_classification(const Options&) {
    return detail::timed(6, "symmetric classification", [&](std::ostringstream& out) {
        const Support3 s = Support3::symmetric(1);
        bool ok = classify_symmetric(independence_table(s, s)).kind() == SetKind::All;
        ok = ok && classify_symmetric(realize(empty_witness(), s)).kind() == SetKind::Empty;
        unsigned checked = 2;
        for (unsigned mask = 1; mask < 15; ++mask) {
            const int bits = std::popcount(mask);
            if (bits > 2) continue;
            const auto got = classify_symmetric(realize(lattice_witness(mask), s));
            ++checked;
            if (!got.same_set(SetDescriptor::lattice_union(mask))) {
                ok = false;
                out << "mask " << mask << " classified as " << got.to_string() << "; ";
            }
        }
        out << checked << " tables classified";
        return ok;
    });
}

/// 7. Table validity, transposition symmetry, column implication and cross maximality.
inline CriterionResult structural_invariants(const Options& opt) {
    return detail::timed(7, "structural invariants", [&](std::ostringstream& out) {
        const Support3 s = Support3::positive(1, 2, 3);
        const BetaSupport bs(1, 2);
        const Box box{16, 16};
        std::vector<Construction> all{make_empty(s),
                                      make_singleton(s, 1, 1),
                                      make_singleton(s, 2, 3),
                                      make_singleton(s, 5, 7),
                                      make_two_point(s, {1, 2}, {2, 1}),
                                      make_two_point(s, {2, 5}, {4, 3}),
                                      make_cross(s, 2, 3),
                                      make_diagonal(s),
                                      make_antidiagonal(bs, 2),
                                      make_antidiagonal(bs, 4),
                                      make_antidiagonal(bs, 7),
                                      make_slopeline(bs, 2)};
        for (unsigned i = 1; i <= 3; ++i) {
            all.push_back(make_vline(s, i));
            all.push_back(make_hline(s, i));
        }
        bool ok = true;
        for (const auto& c : all) {
            const std::string tag = c.descriptor.to_string();
            if (!detail::table_ok(c.x, c.support)) {
                ok = false;
                out << tag << ": invalid table; ";
            }
            const auto found = enumerate_box(c.x, c.support, box, opt.engine);
            const auto swapped = enumerate_box(c.x.transposed(), c.support, box, opt.engine);
            if (swapped != detail::transpose(found)) {
                ok = false;
                out << tag << ": transposition; ";
            }
            ok = detail::structural_ok(found, box, out, tag) && ok;
        }
        // Two points in a column force the column; a cross plus a point forces everything.
        const ASequence seq(s);
        const PointList col2 = detail::column(2, box.K);
        for (const auto& v : nullspace(detail::condition_matrix({{2, 1}, {2, 5}}, seq))) {
            const auto found = enumerate_box(detail::as_offsets(v), s, box, opt.engine);
            if (!std::includes(found.begin(), found.end(), col2.begin(), col2.end())) {
                ok = false;
                out << "column implication; ";
            }
        }
        const PointList cross_pts{{2, 1}, {2, 2}, {1, 3}, {4, 3}, {5, 7}};
        if (!nullspace(detail::condition_matrix(cross_pts, seq)).empty()) {
            ok = false;
            out << "cross maximality; ";
        }
        out << all.size() << " witnesses checked";
        return ok;
    });
}

inline std::vector<CriterionResult> run_all(const Options& opt = {}) {
    return {oracle_equivalence(opt),      golden_sets(opt),        determinant_identities(opt),
            slope_line_m2(opt),           independence_line(opt),  symmetric_classification(opt),
            structural_invariants(opt)};
}

}  // namespace uncorrset::selftest
