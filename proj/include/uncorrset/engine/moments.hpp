#pragma once

// Exact moments of a joint table and the uncorrelatedness test.

#include <array>

#include "uncorrset/engine/a_sequence.hpp"
#include "uncorrset/model.hpp"
#include "uncorrset/numeric/quad_ext.hpp"
#include "uncorrset/numeric/rational.hpp"

namespace uncorrset {

/// E[X^j Y^k] as the sum over the nine cells.
inline ExactScalar moment(const JointTable& t, unsigned j, unsigned k) {
    std::array<Rational, 3> xp;
    std::array<Rational, 3> yp;
    for (std::size_t i = 0; i < 3; ++i) {
        xp[i] = pow(t.support_x()[i], j);
        yp[i] = pow(t.support_y()[i], k);
    }
    ExactScalar sum = 0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) sum += ExactScalar(xp[c] * yp[r]) * t(r, c);
    return sum;
}

/// E[S^j] for S uniform on the support.
inline Rational marginal_moment(const Support3& s, unsigned j) {
    return (pow(s[0], j) + pow(s[1], j) + pow(s[2], j)) / 3;
}

/// E[X^j Y^k] == E[X^j] E[Y^k], exactly.
inline bool is_uncorrelated(const JointTable& t, unsigned j, unsigned k) {
    if (j == 0 || k == 0) throw PreconditionViolated("exponents start at 1");
    const ExactScalar lhs = moment(t, j, k);
    const Rational rhs = marginal_moment(t.support_x(), j) * marginal_moment(t.support_y(), k);
    return lhs == ExactScalar(rhs);
}

/// x1 + A_j x2 + A_k x3 + A_j A_k x4; zero exactly when (j, k) is in the uncorrelatedness set.
inline ExactScalar condition_lhs(const OffsetVector& x, const ASequence& seq, unsigned j, unsigned k) {
    const ExactScalar aj(seq(j));
    const ExactScalar ak(seq(k));
    return x[0] + aj * x[1] + ak * x[2] + aj * ak * x[3];
}

/// The same condition for a rational offset vector.
inline Rational condition_lhs(const std::array<Rational, 4>& w, const ASequence& seq, unsigned j, unsigned k) {
    const Rational aj = seq(j);
    const Rational ak = seq(k);
    return w[0] + aj * w[1] + ak * w[2] + aj * ak * w[3];
}

/// y1 + beta^j y2 + beta^k y3 + beta^(j+k) y4, the condition in the geometric parametrisation.
inline ExactScalar beta_lhs(const YVector& y, const Rational& beta, unsigned j, unsigned k) {
    const Rational bj = pow(beta, j);
    const Rational bk = pow(beta, k);
    return y[0] + ExactScalar(bj) * y[1] + ExactScalar(bk) * y[2] + ExactScalar(bj * bk) * y[3];
}

}  // namespace uncorrset
