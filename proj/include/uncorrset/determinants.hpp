#pragma once

// sigma_k algebra and the generalized Vandermonde determinants F_{m,n}, G_{m,n}.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uncorrset/engine/a_sequence.hpp"
#include "uncorrset/engine/set_descriptor.hpp"
#include "uncorrset/error.hpp"
#include "uncorrset/model.hpp"
#include "uncorrset/numeric/matrix.hpp"
#include "uncorrset/numeric/multi_poly.hpp"

namespace uncorrset {

/// Variable order of the four-variable determinants.
inline constexpr std::size_t kX = 0, kY = 1, kZ = 2, kT = 3;

/// sigma_k(v_a, v_b) = sum_{i=0}^{k} v_a^(k-i) v_b^i in a polynomial ring of the given arity.
inline MultiPoly sigma_in(std::size_t arity, std::size_t a, std::size_t b, unsigned k) {
    MultiPoly p(arity);
    for (unsigned i = 0; i <= k; ++i) {
        Exponents e(arity, 0);
        e[a] += k - i;
        e[b] += i;
        p.add_term(e, 1);
    }
    return p;
}

struct SigmaPoly {
    unsigned k;
    MultiPoly poly;  // in (x, y)
};

inline SigmaPoly sigma(unsigned k) { return {k, sigma_in(2, 0, 1, k)}; }

/// sigma_k(x,y) - sigma_k(x,z) == (y - z) sum_{j<k} x^(k-j-1) sigma_j(y,z), over (x, y, z).
inline bool sigma_diff_identity(unsigned k) {
    const MultiPoly lhs = sigma_in(3, 0, 1, k) - sigma_in(3, 0, 2, k);
    MultiPoly sum(3);
    for (unsigned j = 0; j < k; ++j) sum += MultiPoly::variable(3, 0, k - j - 1) * sigma_in(3, 1, 2, j);
    const MultiPoly rhs = (MultiPoly::variable(3, 1) - MultiPoly::variable(3, 2)) * sum;
    return mp_eq(lhs, rhs);
}

/// A closed form kept as product * sum; `expanded` multiplies out.
struct ClosedForm {
    MultiPoly product;
    MultiPoly sum;

    MultiPoly expanded() const { return product * sum; }

    template <class T>
    T eval(std::span<const T> point) const {
        return product.eval(point) * sum.eval(point);
    }
};

struct DetResult {
    unsigned m = 0;
    unsigned n = 0;
    MultiPoly direct;
    MultiPoly closed;
    bool equal = false;
};

struct Det2Result {
    DetResult det;
    MultiPoly double_sum;
    bool positive_coefficients = false;
    bool symmetric = false;
};

namespace detail {

inline MultiPoly var(std::size_t arity, std::size_t i, unsigned p = 1) { return MultiPoly::variable(arity, i, p); }

inline MultiPoly mono4(unsigned x, unsigned y, unsigned z, unsigned t) {
    return MultiPoly::monomial(1, Exponents{x, y, z, t});
}

/// det by cofactor expansion along the first row.
inline MultiPoly cofactor_det(const std::vector<std::vector<MultiPoly>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    MultiPoly acc(a[0][0].arity());
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            row.reserve(n - 1);
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(a[r][cc]);
            minor.push_back(std::move(row));
        }
        const MultiPoly term = a[0][c] * cofactor_det(minor);
        if (c % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

/// det[v_i^e_c] for the four variables and four column exponents.
inline MultiPoly power_det(const std::array<unsigned, 4>& exps) {
    std::vector<std::vector<MultiPoly>> a(4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) a[r].push_back(var(4, r, exps[c]));
    return cofactor_det(a);
}

inline void check_mn(unsigned m, unsigned n) {
    if (!(1 <= m && m < n)) throw PreconditionViolated("need 1 <= m < n");
}

}  // namespace detail

/// (y-x)(z-x)(t-x)(z-y)(t-y)(t-z).
inline MultiPoly vandermonde_product() {
    using detail::var;
    MultiPoly p = MultiPoly::constant(4, 1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) p = p * (var(4, j) - var(4, i));
    return p;
}

/// Double sum of the 2x2 sigma determinant, in (x, y, z).
inline MultiPoly det2_double_sum(unsigned j, unsigned m) {
    MultiPoly s(3);
    for (unsigned r = 0; r <= j; ++r) {
        for (unsigned q = j + 1; q <= m; ++q) {
            const MultiPoly mono = MultiPoly::monomial(1, Exponents{j + m - r - q, r, r});
            s += mono * sigma_in(3, 1, 2, q - r - 1);
        }
    }
    return s;
}

inline Det2Result det2_sigma(unsigned j, unsigned m) {
    if (j > m) throw PreconditionViolated("need 0 <= j <= m");
    Det2Result res;
    res.det.m = j;
    res.det.n = m;
    res.det.direct = sigma_in(3, 0, 1, j) * sigma_in(3, 0, 2, m) - sigma_in(3, 0, 2, j) * sigma_in(3, 0, 1, m);
    res.double_sum = det2_double_sum(j, m);
    res.det.closed = (detail::var(3, 2) - detail::var(3, 1)) * res.double_sum;
    res.det.equal = mp_eq(res.det.direct, res.det.closed);
    res.positive_coefficients = true;
    for (const auto& [e, c] : res.double_sum.terms())
        if (c <= 0) res.positive_coefficients = false;
    const std::array<std::size_t, 3> swap_yz{0, 2, 1};
    res.symmetric = mp_eq(res.double_sum.permuted(swap_yz), res.double_sum);
    return res;
}

/// det[1, v, v^m, v^n] over v = x, y, z, t.
inline MultiPoly f_direct(unsigned m, unsigned n) {
    detail::check_mn(m, n);
    return detail::power_det({0, 1, m, n});
}

inline ClosedForm f_closed_form(unsigned m, unsigned n) {
    detail::check_mn(m, n);
    MultiPoly sum(4);
    for (unsigned j = 0; j + 2 <= m; ++j) {
        for (unsigned k = 0; k + m + 1 <= n; ++k) {
            for (unsigned r = 0; r <= j; ++r) {
                for (unsigned s = j + 1; s + 1 <= m + k; ++s) {
                    sum += detail::mono4(n - 3 - j - k, m + j + k - r - s - 1, r, r) *
                           sigma_in(4, kZ, kT, s - r - 1);
                }
            }
        }
    }
    return {vandermonde_product(), std::move(sum)};
}

inline MultiPoly f_closed(unsigned m, unsigned n) { return f_closed_form(m, n).expanded(); }

/// det[1, v^m, v^n, v^(m+n)] over v = x, y, z, t.
inline MultiPoly g_direct(unsigned m, unsigned n) {
    detail::check_mn(m, n);
    return detail::power_det({0, m, n, m + n});
}

inline ClosedForm g_closed_form(unsigned m, unsigned n) {
    detail::check_mn(m, n);
    MultiPoly sum(4);
    for (unsigned k = m; k <= n - 1; ++k)
        for (unsigned j = 0; j <= m - 1; ++j)
            for (unsigned p = 0; p <= m - 1; ++p)
                for (unsigned s = k - p; s <= n - 1; ++s)
                    for (unsigned r = 0; r + j + 1 <= k; ++r)
                        sum += detail::mono4(2 * m + n - 3 - k - p - j, n + k - 2 - r - s, j + r, j + r) *
                               sigma_in(4, kZ, kT, p + s - j - r - 1);
    return {vandermonde_product(), std::move(sum)};
}

inline MultiPoly g_closed(unsigned m, unsigned n) { return g_closed_form(m, n).expanded(); }

inline DetResult f_result(unsigned m, unsigned n) {
    DetResult r{m, n, f_direct(m, n), f_closed(m, n), false};
    r.equal = mp_eq(r.direct, r.closed);
    return r;
}

inline DetResult g_result(unsigned m, unsigned n) {
    DetResult r{m, n, g_direct(m, n), g_closed(m, n), false};
    r.equal = mp_eq(r.direct, r.closed);
    return r;
}

struct IndependenceCertificate {
    bool forced_independent = false;
    ExactScalar det;
    bool y_form = false;
    unsigned a = 0;  // slope b/a in lowest terms
    unsigned b = 0;
    /// y-form only: the G_{min(a,b),max(a,b)} closed form at beta^(j_i/a), with the column-order sign.
    std::optional<ExactScalar> g_value;
    bool g_agrees = false;
};

namespace detail {

inline std::pair<unsigned, unsigned> common_slope(std::span<const Point> pts) {
    if (pts.size() != 4) throw PreconditionViolated("exactly four points are needed");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (pts[i] == pts[j]) throw PreconditionViolated("points must be distinct");
    const unsigned g = std::gcd(pts[0].j, pts[0].k);
    const unsigned a = pts[0].j / g;
    const unsigned b = pts[0].k / g;
    for (const auto& p : pts) {
        if (static_cast<unsigned long long>(p.k) * a != static_cast<unsigned long long>(p.j) * b) {
            throw NotOnLine(to_string(p) + " is not on k = (" + std::to_string(b) + "/" + std::to_string(a) +
                            ") j");
        }
    }
    if (a == b) throw SlopeOne("four points on the diagonal do not force independence");
    return {a, b};
}

}  // namespace detail

/// Rows (1, b^j, b^k, b^(j+k)) on a geometric support.
inline IndependenceCertificate independence_certificate(std::span<const Point> pts, const BetaSupport& bs) {
    const auto [a, b] = detail::common_slope(pts);
    RationalMatrix mat(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        const Rational bj = pow(bs.beta, pts[i].j);
        const Rational bk = pow(bs.beta, pts[i].k);
        mat(i, 0) = 1;
        mat(i, 1) = bj;
        mat(i, 2) = bk;
        mat(i, 3) = bj * bk;
    }
    IndependenceCertificate c;
    c.y_form = true;
    c.a = a;
    c.b = b;
    c.det = ExactScalar(determinant(mat));
    c.forced_independent = !c.det.is_zero();
    // With X_i = beta^(j_i/a) the rows read (1, X^a, X^b, X^(a+b)).
    const unsigned lo = std::min(a, b);
    const unsigned hi = std::max(a, b);
    std::array<Rational, 4> args;
    for (std::size_t i = 0; i < 4; ++i) args[i] = pow(bs.beta, pts[i].j / a);
    Rational g = g_closed_form(lo, hi).eval<Rational>(std::span<const Rational>(args));
    if (a > b) g = -g;
    c.g_value = ExactScalar(g);
    c.g_agrees = ExactScalar(g) == c.det;
    return c;
}

/// Rows (1, A_j, A_k, A_j A_k) on any positive support.
inline IndependenceCertificate independence_certificate(std::span<const Point> pts, const Support3& s) {
    const auto [a, b] = detail::common_slope(pts);
    const ASequence seq(s);
    RationalMatrix mat(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        const Rational aj = seq(pts[i].j);
        const Rational ak = seq(pts[i].k);
        mat(i, 0) = 1;
        mat(i, 1) = aj;
        mat(i, 2) = ak;
        mat(i, 3) = aj * ak;
    }
    IndependenceCertificate c;
    c.a = a;
    c.b = b;
    c.det = ExactScalar(determinant(mat));
    c.forced_independent = !c.det.is_zero();
    return c;
}

}  // namespace uncorrset
