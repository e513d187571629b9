#pragma once

// Claim verification: box enumeration against a descriptor, plus an exact
// global check of the zero set where one is available.

#include <optional>
#include <string>
#include <utility>

#include "uncorrset/engine/a_sequence.hpp"
#include "uncorrset/engine/enumerate.hpp"
#include "uncorrset/engine/set_descriptor.hpp"
#include "uncorrset/engine/slope_line.hpp"
#include "uncorrset/error.hpp"
#include "uncorrset/model.hpp"

namespace uncorrset {

enum class Verdict { Match, Mismatch };

inline std::string to_string(Verdict v) { return v == Verdict::Match ? "Match" : "Mismatch"; }

struct UncorrReport {
    OffsetVector witness;
    Support3 support;
    SetDescriptor claimed;
    Box box;
    PointList found;
    PointList missing;  // in claimed ∩ box, not found
    PointList extra;    // found, not claimed
    Verdict verdict = Verdict::Mismatch;
    CertificateKind certificate = CertificateKind::BoxVerified;
    std::string note;
};

/// Zero set of the rational descriptor w1 + A_j w2 + A_k w3 + A_j A_k w4 when it is a line union.
struct AnalyticZeroSet {
    SetDescriptor set;
    std::string reason;
};

namespace detail {

inline std::optional<LineUnion> rational_zero_set(const std::array<Rational, 4>& w, const ASequence& seq,
                                                  std::string& why) {
    const auto& [w1, w2, w3, w4] = w;
    LineUnion u;
    if (w1 == 0 && w2 == 0 && w3 == 0 && w4 == 0) {
        u.everything = true;
        why += "identically zero; ";
        return u;
    }
    if (w4 == 0) {
        if (w2 == 0 && w3 == 0) {
            why += "nonzero constant " + to_string(w1) + "; ";
            return u;
        }
        if (w3 == 0) {
            if (unsigned j = seq.index_of(-w1 / w2)) u.vlines.insert(j);
            why += "w2 (A_j - " + to_string(-w1 / w2) + "); ";
            return u;
        }
        if (w2 == 0) {
            if (unsigned k = seq.index_of(-w1 / w3)) u.hlines.insert(k);
            why += "w3 (A_k - " + to_string(-w1 / w3) + "); ";
            return u;
        }
        if (w1 == 0 && w2 == -w3) {
            u.diagonal = true;
            why += "w2 (A_j - A_k); ";
            return u;
        }
        return std::nullopt;
    }
    if (w1 * w4 != w2 * w3) return std::nullopt;
    const Rational p = -w3 / w4;
    const Rational q = -w2 / w4;
    if (unsigned j = seq.index_of(p)) u.vlines.insert(j);
    if (unsigned k = seq.index_of(q)) u.hlines.insert(k);
    why += "w4 (A_j - " + to_string(p) + ")(A_k - " + to_string(q) + "); ";
    return u;
}

inline bool rational_parts(const OffsetVector& x, std::array<Rational, 4>& r, std::array<Rational, 4>& s,
                           std::uint64_t& d) {
    d = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        r[i] = x[i].rational_part();
        s[i] = x[i].radical_part();
        if (!x[i].is_rational()) {
            if (d != 0 && d != x[i].radicand()) return false;
            d = x[i].radicand();
        }
    }
    return true;
}

}  // namespace detail

/// Exact zero set over all of N^2 for a positive support, when it is a union of
/// lines and points reachable from the factorisations above. Offsets in Q(sqrt d)
/// split into rational and radical parts, whose zero sets are intersected.
inline std::optional<AnalyticZeroSet> analyze_zero_set(const OffsetVector& x, const ASequence& seq) {
    std::array<Rational, 4> r;
    std::array<Rational, 4> s;
    std::uint64_t d = 0;
    if (!detail::rational_parts(x, r, s, d)) return std::nullopt;
    std::string why;
    auto zr = detail::rational_zero_set(r, seq, why);
    if (!zr) return std::nullopt;
    if (d != 0) {
        why += "sqrt(" + std::to_string(d) + ") part: ";
        auto zs = detail::rational_zero_set(s, seq, why);
        if (!zs) return std::nullopt;
        zr = zr->intersect(*zs);
    }
    auto desc = zr->to_descriptor();
    if (!desc) return std::nullopt;
    return AnalyticZeroSet{*desc, why};
}

/// Parity values: A_j = 0 for even j and 2 for odd j on {-a, 0, a}.
inline ExactScalar symmetric_lhs(const OffsetVector& x, unsigned lattice) {
    const ExactScalar two(2);
    switch (lattice) {
        case 1: return x[0];
        case 2: return x[0] + two * x[2];
        case 3: return x[0] + two * x[1];
        case 4: return x[0] + two * x[1] + two * x[2] + ExactScalar(4) * x[3];
        default: throw PreconditionViolated("lattice index must be 1..4");
    }
}

inline unsigned symmetric_mask(const OffsetVector& x) {
    unsigned mask = 0;
    for (unsigned i = 1; i <= 4; ++i)
        if (symmetric_lhs(x, i).is_zero()) mask |= 1u << (i - 1);
    return mask;
}

namespace detail {

/// Anti-diagonal and slope-triple arguments in the y-form on a geometric support.
inline std::optional<AnalyticZeroSet> beta_zero_set(const OffsetVector& x, const BetaSupport& bs,
                                                    const SetDescriptor& claimed) {
    const YVector yv = to_y(x);
    std::array<Rational, 4> y;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!yv[i].is_rational()) return std::nullopt;
        y[i] = yv[i].as_rational();
    }
    const Rational& beta = bs.beta;
    if (y[1] == 0 && y[2] == 0 && y[3] != 0) {
        // y1 + beta^(j+k) y4 = 0.
        const Rational target = -y[0] / y[3];
        Rational p = beta * beta;
        for (unsigned m = 2; p <= target; ++m, p *= beta) {
            if (p == target) {
                return AnalyticZeroSet{SetDescriptor::anti_diagonal(m),
                                       "y4 (beta^(j+k) - beta^" + std::to_string(m) + ")"};
            }
        }
        return AnalyticZeroSet{SetDescriptor::empty(), "y4 beta^(j+k) + y1 never vanishes"};
    }
    if (claimed.kind() != SetKind::SlopeLine) return std::nullopt;
    const unsigned m = claimed.m();
    if (m < 2) return std::nullopt;
    const YVector sol = slope_solution(m, beta);
    std::size_t piv = 0;
    while (piv < 4 && sol[piv].is_zero()) ++piv;
    if (piv == 4 || y[piv] == 0) return std::nullopt;
    const Rational gamma = y[piv] / sol[piv].as_rational();
    for (std::size_t i = 0; i < 4; ++i)
        if (y[i] != gamma * sol[i].as_rational()) return std::nullopt;
    if (beta0_poly(m)(beta).sign() < 0) return std::nullopt;
    // D(j,k) vanishes at k = jm for j <= 3 only; for j >= 4 D(j,k) <= D(4,k) = (1-b) b^2 P < 0.
    const Rational tail = (pow(beta, m + 2) + pow(beta, m + 1) + pow(beta, m) - beta);
    if (tail.sign() <= 0) return std::nullopt;
    return AnalyticZeroSet{SetDescriptor::slope_triple(m),
                           "gamma D(j,k), gamma = " + to_string(gamma) +
                               "; beta^(m+1)-beta^2-beta-1 >= 0 and the beta^j coefficient is negative"};
}

}  // namespace detail

inline void check_compatible(const SetDescriptor& d, const Support3& s) {
    if (d.kind() == SetKind::LatticeUnion && s.kind() != SupportKind::SymmetricZero) {
        throw IncompatibleDescriptor("lattice unions need a symmetric support {-a, 0, a}");
    }
    if (s.kind() == SupportKind::SymmetricZero && d.kind() != SetKind::Empty && d.kind() != SetKind::All &&
        d.kind() != SetKind::LatticeUnion) {
        throw IncompatibleDescriptor("on {-a, 0, a} only Empty, All and lattice unions occur, not " +
                                     to_string(d.kind()));
    }
}

/// Global zero set of the witness on this support, if an exact argument covers it.
inline std::optional<AnalyticZeroSet> analytic_zero_set(const OffsetVector& x, const Support3& s,
                                                        const SetDescriptor& claimed) {
    switch (s.kind()) {
        case SupportKind::SymmetricZero:
            return AnalyticZeroSet{SetDescriptor::lattice_union(symmetric_mask(x)),
                                   "membership depends on the parities of j and k only"};
        case SupportKind::GeneralOrdered: return std::nullopt;
        case SupportKind::PositiveOrdered: break;
    }
    if (auto bs = as_beta_support(s)) {
        if (auto z = detail::beta_zero_set(x, *bs, claimed)) return z;
    }
    return analyze_zero_set(x, ASequence(s));
}

inline UncorrReport verify_claim(const OffsetVector& x, const Support3& s, const SetDescriptor& d, const Box& box,
                                 const EngineConfig& cfg = {}) {
    check_compatible(d, s);
    UncorrReport rep{x, s, d, box, enumerate_box(x, s, box, cfg), {}, {}, Verdict::Mismatch,
                     CertificateKind::BoxVerified, {}};
    const PointList expected = d.within(box);
    std::set_difference(expected.begin(), expected.end(), rep.found.begin(), rep.found.end(),
                        std::back_inserter(rep.missing));
    std::set_difference(rep.found.begin(), rep.found.end(), expected.begin(), expected.end(),
                        std::back_inserter(rep.extra));
    rep.verdict = rep.missing.empty() && rep.extra.empty() ? Verdict::Match : Verdict::Mismatch;
    if (rep.verdict == Verdict::Match && d.certificate() == CertificateKind::GlobalAnalytic) {
        if (auto z = analytic_zero_set(x, s, d)) {
            if (z->set.same_set(d)) {
                rep.certificate = CertificateKind::GlobalAnalytic;
                rep.note = z->reason;
            } else {
                rep.note = "exact zero set is " + z->set.to_string();
            }
        } else {
            rep.note = "no global argument; checked inside the box";
        }
    } else if (rep.verdict == Verdict::Match) {
        rep.note = "checked inside the box";
    }
    return rep;
}

}  // namespace uncorrset
