#pragma once

// Witnesses for the realizable uncorrelatedness sets.

#include <string>
#include <utility>
#include <vector>

#include "uncorrset/engine/a_sequence.hpp"
#include "uncorrset/engine/enumerate.hpp"
#include "uncorrset/engine/set_descriptor.hpp"
#include "uncorrset/engine/slope_line.hpp"
#include "uncorrset/error.hpp"
#include "uncorrset/model.hpp"
#include "uncorrset/numeric/int_poly.hpp"
#include "uncorrset/numeric/matrix.hpp"
#include "uncorrset/numeric/quad_ext.hpp"

namespace uncorrset {

/// A witness together with the set it realizes and the support it lives on.
struct Construction {
    OffsetVector x;
    Support3 support;
    SetDescriptor descriptor;
};

inline OffsetVector empty_witness() { return {{ExactScalar(1), 0, 0, 0}}; }

/// (A_j0 + sqrt2 A_k0, -1, -sqrt2, 0); the lhs is (A_j0 - A_j) + sqrt2 (A_k0 - A_k).
inline OffsetVector singleton_witness(unsigned j0, unsigned k0, const ASequence& seq) {
    const ExactScalar r2 = ExactScalar::sqrt_of(2);
    return {{ExactScalar(seq(j0)) + r2 * ExactScalar(seq(k0)), ExactScalar(-1), -r2, 0}};
}

/// Row (1, A_j, A_k, A_j A_k) of the linear condition at (j, k).
inline std::array<Rational, 4> condition_row(const ASequence& seq, const Point& p) {
    const Rational aj = seq(p.j);
    const Rational ak = seq(p.k);
    return {Rational(1), aj, ak, aj * ak};
}

/// Rational basis of the offsets vanishing at both points.
inline std::vector<std::vector<Rational>> two_point_basis(const Point& p1, const Point& p2, const ASequence& seq) {
    RationalMatrix m(2, 4);
    const auto r1 = condition_row(seq, p1);
    const auto r2 = condition_row(seq, p2);
    for (std::size_t c = 0; c < 4; ++c) {
        m(0, c) = r1[c];
        m(1, c) = r2[c];
    }
    auto basis = nullspace(m);
    if (basis.size() != 2) throw DegenerateSystem("the two conditions are linearly dependent");
    return basis;
}

/// v1 + sqrt2 v2 for a rational basis {v1, v2} of the two-point solution space.
inline OffsetVector two_point_witness(const Point& p1, const Point& p2, const ASequence& seq) {
    if (p1.j == p2.j || p1.k == p2.k) {
        throw PreconditionViolated("two points on a common row or column force the whole line");
    }
    const auto basis = two_point_basis(p1, p2, seq);
    OffsetVector x;
    for (std::size_t i = 0; i < 4; ++i) x[i] = ExactScalar(basis[0][i], basis[1][i], 2);
    return x;
}

/// (0, 0, -A_j, 1); the lhs is A_n (A_m - A_j).
inline OffsetVector vline_witness(unsigned j, const ASequence& seq) {
    return {{0, 0, ExactScalar(-seq(j)), ExactScalar(1)}};
}

/// (0, -A_k, 0, 1); the lhs is A_m (A_n - A_k).
inline OffsetVector hline_witness(unsigned k, const ASequence& seq) {
    return {{0, ExactScalar(-seq(k)), 0, ExactScalar(1)}};
}

/// (A_j A_k, -A_k, -A_j, 1); the lhs is (A_m - A_j)(A_n - A_k).
inline OffsetVector cross_witness(unsigned j, unsigned k, const ASequence& seq) {
    const Rational aj = seq(j);
    const Rational ak = seq(k);
    return {{ExactScalar(aj * ak), ExactScalar(-ak), ExactScalar(-aj), ExactScalar(1)}};
}

inline OffsetVector diagonal_witness() { return {{0, ExactScalar(1), ExactScalar(-1), 0}}; }

/// y = (beta^m, 0, 0, -1); the y-form lhs is beta^m - beta^(j+k).
inline YVector antidiagonal_witness(unsigned m, const BetaSupport& bs) {
    if (m < 2) throw PreconditionViolated("anti-diagonal needs m >= 2");
    return {{ExactScalar(pow(bs.beta, m)), 0, 0, ExactScalar(-1)}};
}

/// Isolating interval for the root of beta^(m+1) - beta^2 - beta - 1 in (1, 2).
inline RootInterval beta0(unsigned m, const Rational& width = default_width()) {
    return isolate_root(beta0_poly(m), Rational(1), Rational(2), width);
}

enum class SlopeMode { AtOrAboveBeta0, BetaStar };

struct SlopeLineParams {
    unsigned m = 2;
    Rational beta = 2;
    RootInterval beta0_interval{Rational(1), Rational(2)};
    SlopeMode mode = SlopeMode::AtOrAboveBeta0;
    unsigned k = 0;  // BetaStar only
};

/// The y-form solution with gamma = 1 at a rational beta >= beta_0(m).
inline YVector slopeline_witness(const SlopeLineParams& p) {
    if (p.mode != SlopeMode::AtOrAboveBeta0) {
        throw PreconditionViolated("beta* is irrational; use slopeline_star_witness");
    }
    if (p.beta < p.beta0_interval.hi) {
        throw BetaTooSmall("beta = " + to_string(p.beta) + " is below the beta_0 bound " +
                           to_string(p.beta0_interval.hi));
    }
    return slope_solution(p.m, p.beta);
}

/// Isolating interval for a root of P in (1, beta_0(m)), where P(1) = 0 and P'(1) = 8m - 2k < 0.
inline RootInterval beta_star(unsigned m, unsigned k, const Rational& width = default_width()) {
    if (k <= 4 * m) throw PreconditionViolated("beta* needs k > 4m");
    const IntPoly p = slope_p_poly(m, k);
    const RootInterval b0 = beta0(m, width);
    Rational delta(1, 2);
    for (unsigned i = 1; i <= 64; ++i, delta /= 2) {
        const Rational lo = 1 + delta;
        if (lo >= b0.lo) continue;
        if (p(lo).sign() < 0) return isolate_root(p, lo, b0.hi, width);
    }
    throw BracketNotFound("P stayed non-negative down to 1 + 2^-64");
}

/// The slope-line solution at the algebraic beta*, which also vanishes at (4, k).
struct SlopeStarWitness {
    YPolyVector y;
    AlgebraicRoot beta;
    SetDescriptor descriptor;
};

inline SlopeStarWitness slopeline_star_witness(unsigned m, unsigned k, const Rational& width = default_width()) {
    const RootInterval iv = beta_star(m, k, width);
    AlgebraicRoot root(slope_p_poly(m, k), iv);
    PointList pts{{1, m}, {2, 2 * m}, {3, 3 * m}, {4, k}};
    return {slope_solution_polys(m), std::move(root), SetDescriptor::slope_line(m, std::move(pts))};
}

/// Offsets on {-a, 0, a} whose uncorrelatedness set is exactly the lattices in `mask`.
///
/// The four parity conditions are independent, so x solves L x = b with b_i = 0
/// on the chosen lattices and 1 elsewhere.
inline OffsetVector lattice_witness(unsigned mask) {
    if (mask > 0xF) throw PreconditionViolated("lattice mask out of range");
    std::array<Rational, 4> b;
    for (unsigned i = 0; i < 4; ++i) b[i] = ((mask >> i) & 1u) ? 0 : 1;
    // L1 = x1, L2 = x1 + 2x3, L3 = x1 + 2x2, L4 = x1 + 2x2 + 2x3 + 4x4.
    const Rational x1 = b[0];
    const Rational x3 = (b[1] - x1) / 2;
    const Rational x2 = (b[2] - x1) / 2;
    const Rational x4 = (b[3] - x1 - 2 * x2 - 2 * x3) / 4;
    return {{ExactScalar(x1), ExactScalar(x2), ExactScalar(x3), ExactScalar(x4)}};
}

/// Every family with its descriptor, on the given positive support.
inline Construction make_empty(const Support3& s) { return {empty_witness(), s, SetDescriptor::empty()}; }
inline Construction make_singleton(const Support3& s, unsigned j0, unsigned k0) {
    return {singleton_witness(j0, k0, ASequence(s)), s, SetDescriptor::finite({{j0, k0}})};
}
inline Construction make_two_point(const Support3& s, Point p1, Point p2) {
    return {two_point_witness(p1, p2, ASequence(s)), s, SetDescriptor::finite({p1, p2})};
}
inline Construction make_vline(const Support3& s, unsigned j) {
    return {vline_witness(j, ASequence(s)), s, SetDescriptor::vline(j)};
}
inline Construction make_hline(const Support3& s, unsigned k) {
    return {hline_witness(k, ASequence(s)), s, SetDescriptor::hline(k)};
}
inline Construction make_cross(const Support3& s, unsigned j, unsigned k) {
    return {cross_witness(j, k, ASequence(s)), s, SetDescriptor::cross(j, k)};
}
inline Construction make_diagonal(const Support3& s) { return {diagonal_witness(), s, SetDescriptor::diagonal()}; }
inline Construction make_antidiagonal(const BetaSupport& bs, unsigned m) {
    return {from_y(antidiagonal_witness(m, bs)), bs.support(), SetDescriptor::anti_diagonal(m)};
}
inline Construction make_slopeline(const BetaSupport& bs, unsigned m, const Rational& width = default_width()) {
    SlopeLineParams p{m, bs.beta, beta0(m, width), SlopeMode::AtOrAboveBeta0, 0};
    return {from_y(slopeline_witness(p)), bs.support(), SetDescriptor::slope_triple(m)};
}
inline Construction make_lattice(const Rational& alpha, unsigned mask) {
    return {lattice_witness(mask), Support3::symmetric(alpha), SetDescriptor::lattice_union(mask)};
}

}  // namespace uncorrset
