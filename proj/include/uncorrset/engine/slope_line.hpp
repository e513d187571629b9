#pragma once

// Polynomials in beta behind the three points {(1,m), (2,2m), (3,3m)} on the
// geometric support {alpha, alpha beta, alpha beta^2}.

#include <array>

#include "uncorrset/engine/enumerate.hpp"
#include "uncorrset/error.hpp"
#include "uncorrset/model.hpp"
#include "uncorrset/numeric/int_poly.hpp"

namespace uncorrset {

namespace detail {

inline IntPoly t_pow(unsigned e) { return IntPoly::monomial(1, e); }

inline void check_slope(unsigned m) {
    if (m < 2) throw PreconditionViolated("slope m must be at least 2");
}

}  // namespace detail

/// beta^(m+1) - beta^2 - beta - 1; its root in (1, 2) is the threshold beta_0(m).
inline IntPoly beta0_poly(unsigned m) {
    detail::check_slope(m);
    return detail::t_pow(m + 1) - IntPoly{1, 1, 1};
}

/// The y-form null vector (gamma = 1) of the three equations at (1,m), (2,2m), (3,3m).
inline YPolyVector slope_solution_polys(unsigned m) {
    detail::check_slope(m);
    using detail::t_pow;
    return {
        (t_pow(m) - t_pow(1)) * t_pow(2 * m + 2),
        (IntPoly{1} - t_pow(m + 1)) * t_pow(2 * m),
        (t_pow(m + 1) - IntPoly{1}) * t_pow(2),
        t_pow(1) - t_pow(m),
    };
}

inline YVector slope_solution(unsigned m, const Rational& beta) {
    const auto polys = slope_solution_polys(m);
    YVector y;
    for (std::size_t i = 0; i < 4; ++i) y[i] = ExactScalar(polys[i](beta));
    return y;
}

/// D(j,k) = (b^m - b)(b^(2m+2) - b^(j+k)) + (b^(m+1) - 1)(b^(k+2) - b^(j+2m)).
inline IntPoly slope_d_poly(unsigned m, unsigned j, unsigned k) {
    detail::check_slope(m);
    using detail::t_pow;
    return (t_pow(m) - t_pow(1)) * (t_pow(2 * m + 2) - t_pow(j + k)) +
           (t_pow(m + 1) - IntPoly{1}) * (t_pow(k + 2) - t_pow(j + 2 * m));
}

/// Factored D(i,k) for i = 1, 2, 3; each vanishes only at k = i m when beta > 1.
inline IntPoly slope_d_factored(unsigned m, unsigned i, unsigned k) {
    detail::check_slope(m);
    using detail::t_pow;
    switch (i) {
        case 1: return (t_pow(2) - IntPoly{1}) * t_pow(m + 1) * (t_pow(k) - t_pow(m));
        case 2: return t_pow(2) * (t_pow(1) - IntPoly{1}) * (t_pow(m) + IntPoly{1}) * (t_pow(k) - t_pow(2 * m));
        case 3: return t_pow(2) * (t_pow(2) - IntPoly{1}) * (t_pow(k) - t_pow(3 * m));
        default: throw PreconditionViolated("factored form exists for rows 1..3 only");
    }
}

/// P(beta) = (b^(m+1) - b^2 - b - 1) b^k + (b^(m+2) + b^(m+1) + b^m - b) b^(2m), with D(4,k) = (1 - b) b^2 P.
inline IntPoly slope_p_poly(unsigned m, unsigned k) {
    detail::check_slope(m);
    using detail::t_pow;
    return beta0_poly(m) * t_pow(k) + (t_pow(m + 2) + t_pow(m + 1) + t_pow(m) - t_pow(1)) * t_pow(2 * m);
}

/// The coefficient of beta^j in D(j,k): -(b^m - b) b^k - (b^(m+1) - 1) b^(2m).
inline IntPoly slope_j_coefficient(unsigned m, unsigned k) {
    using detail::t_pow;
    return -((t_pow(m) - t_pow(1)) * t_pow(k)) - (t_pow(m + 1) - IntPoly{1}) * t_pow(2 * m);
}

}  // namespace uncorrset
