#pragma once

// Three-point supports and joint pmfs with uniform marginals.
//
// A joint pmf with both marginals uniform on three points is determined by four
// offsets (x1, x2, x3, x4) from the independence table. With rows indexed by
// the Y support point and columns by the X support point:
//
//            X=s1          X=s2          X=s3
//   Y=s1   1/9+x4        1/9+x3        1/9-x3-x4
//   Y=s2   1/9+x2        1/9+x1        1/9-x1-x2
//   Y=s3   1/9-x2-x4     1/9-x1-x3     1/9+x1+x2+x3+x4
//
// Every row and column of this table sums to 1/3 whatever the offsets are.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "uncorrset/error.hpp"
#include "uncorrset/numeric/quad_ext.hpp"
#include "uncorrset/numeric/rational.hpp"

namespace uncorrset {

enum class SupportKind { PositiveOrdered, SymmetricZero, GeneralOrdered };

inline std::string to_string(SupportKind k) {
    switch (k) {
        case SupportKind::PositiveOrdered: return "PositiveOrdered";
        case SupportKind::SymmetricZero: return "SymmetricZero";
        case SupportKind::GeneralOrdered: return "GeneralOrdered";
    }
    return "?";
}

inline SupportKind parse_support_kind(const std::string& s) {
    if (s == "PositiveOrdered") return SupportKind::PositiveOrdered;
    if (s == "SymmetricZero") return SupportKind::SymmetricZero;
    if (s == "GeneralOrdered") return SupportKind::GeneralOrdered;
    throw ParseError("unknown support kind '" + s + "'");
}

/// Ordered support {s1 < s2 < s3} of a uniform three-point distribution.
class Support3 {
public:
    Support3(std::array<Rational, 3> points, SupportKind kind) : p_(std::move(points)), kind_(kind) {
        if (!(p_[0] < p_[1] && p_[1] < p_[2])) throw InvalidSupport("points must be strictly increasing");
        switch (kind_) {
            case SupportKind::PositiveOrdered:
                if (p_[0].sign() <= 0) throw InvalidSupport("positive support needs 0 < s1");
                break;
            case SupportKind::SymmetricZero:
                if (p_[1] != 0 || p_[0] != -p_[2]) throw InvalidSupport("symmetric support must be {-a, 0, a}");
                break;
            case SupportKind::GeneralOrdered:
                break;
        }
    }

    static Support3 positive(Rational a, Rational b, Rational c) {
        return Support3({std::move(a), std::move(b), std::move(c)}, SupportKind::PositiveOrdered);
    }
    static Support3 symmetric(const Rational& alpha) {
        return Support3({-alpha, Rational(0), alpha}, SupportKind::SymmetricZero);
    }
    static Support3 general(Rational a, Rational b, Rational c) {
        return Support3({std::move(a), std::move(b), std::move(c)}, SupportKind::GeneralOrdered);
    }
    /// Picks the most specific kind the points satisfy.
    static Support3 classify(std::array<Rational, 3> p) {
        if (p[0].sign() > 0) return Support3(std::move(p), SupportKind::PositiveOrdered);
        if (p[1] == 0 && p[0] == -p[2]) return Support3(std::move(p), SupportKind::SymmetricZero);
        return Support3(std::move(p), SupportKind::GeneralOrdered);
    }

    const std::array<Rational, 3>& points() const noexcept { return p_; }
    const Rational& operator[](std::size_t i) const { return p_.at(i); }
    SupportKind kind() const noexcept { return kind_; }

    friend bool operator==(const Support3&, const Support3&) = default;

private:
    std::array<Rational, 3> p_;
    SupportKind kind_;
};

/// Geometric support {alpha, alpha*beta, alpha*beta^2}; here A_j = 1 + beta^-j.
struct BetaSupport {
    Rational alpha;
    Rational beta;

    BetaSupport(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha.sign() <= 0) throw InvalidSupport("alpha must be positive");
        if (beta <= 1) throw InvalidSupport("beta must exceed 1");
    }

    Support3 support() const { return Support3::positive(alpha, alpha * beta, alpha * beta * beta); }

    friend bool operator==(const BetaSupport&, const BetaSupport&) = default;
};

struct OffsetVector {
    std::array<ExactScalar, 4> x{};

    const ExactScalar& operator[](std::size_t i) const { return x.at(i); }
    ExactScalar& operator[](std::size_t i) { return x.at(i); }

    bool is_zero() const {
        for (const auto& v : x)
            if (!v.is_zero()) return false;
        return true;
    }

    /// x2 <-> x3, the offsets of the transposed pmf.
    OffsetVector transposed() const { return {{x[0], x[2], x[1], x[3]}}; }

    friend bool operator==(const OffsetVector&, const OffsetVector&) = default;
};

/// y1 = x4, y2 = x3 + x4, y3 = x2 + x4, y4 = x1 + x2 + x3 + x4.
struct YVector {
    std::array<ExactScalar, 4> y{};

    const ExactScalar& operator[](std::size_t i) const { return y.at(i); }
    ExactScalar& operator[](std::size_t i) { return y.at(i); }

    bool is_zero() const {
        for (const auto& v : y)
            if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const YVector&, const YVector&) = default;
};

inline YVector to_y(const OffsetVector& x) {
    return {{x[3], x[2] + x[3], x[1] + x[3], x[0] + x[1] + x[2] + x[3]}};
}

inline OffsetVector from_y(const YVector& y) {
    return {{y[3] - y[1] - y[2] + y[0], y[2] - y[0], y[1] - y[0], y[0]}};
}

using Matrix3 = std::array<std::array<ExactScalar, 3>, 3>;

/// The nine deviations from 1/9 induced by the offsets, indexed [Y row][X column].
inline Matrix3 deviation_matrix(const OffsetVector& x) {
    return {{
        {x[3], x[2], -x[2] - x[3]},
        {x[1], x[0], -x[0] - x[1]},
        {-x[1] - x[3], -x[0] - x[2], x[0] + x[1] + x[2] + x[3]},
    }};
}

/// Joint pmf; entries[r][c] = P(Y = support_y[r], X = support_x[c]).
class JointTable {
public:
    /// Validates non-negativity and the 1/3 row and column sums.
    JointTable(Matrix3 entries, Support3 sx, Support3 sy)
        : e_(std::move(entries)), sx_(std::move(sx)), sy_(std::move(sy)) {
        const ExactScalar third(Rational(1, 3));
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) {
                if (quad_sign(e_[r][c]) < 0) throw NegativeEntry(r, c);
            }
        }
        for (std::size_t i = 0; i < 3; ++i) {
            if (e_[i][0] + e_[i][1] + e_[i][2] != third) {
                throw PreconditionViolated("row " + std::to_string(i) + " does not sum to 1/3");
            }
            if (e_[0][i] + e_[1][i] + e_[2][i] != third) {
                throw PreconditionViolated("column " + std::to_string(i) + " does not sum to 1/3");
            }
        }
    }

    const Matrix3& entries() const noexcept { return e_; }
    const ExactScalar& operator()(std::size_t r, std::size_t c) const { return e_.at(r).at(c); }
    const Support3& support_x() const noexcept { return sx_; }
    const Support3& support_y() const noexcept { return sy_; }

    ExactScalar total() const {
        ExactScalar s = 0;
        for (const auto& row : e_)
            for (const auto& v : row) s += v;
        return s;
    }

    /// Offsets of this table relative to the independence table.
    OffsetVector offsets() const {
        const ExactScalar ninth(Rational(1, 9));
        return {{e_[1][1] - ninth, e_[1][0] - ninth, e_[0][1] - ninth, e_[0][0] - ninth}};
    }

    friend bool operator==(const JointTable&, const JointTable&) = default;

private:
    Matrix3 e_;
    Support3 sx_;
    Support3 sy_;
};

/// The table of the offsets in the layout above; NegativeEntry if any induced entry is negative.
inline JointTable table_from_offsets(const OffsetVector& x, const Support3& sx, const Support3& sy) {
    const ExactScalar ninth(Rational(1, 9));
    Matrix3 e = deviation_matrix(x);
    for (auto& row : e)
        for (auto& v : row) v += ninth;
    return JointTable(std::move(e), sx, sy);
}

inline JointTable table_from_offsets(const OffsetVector& x, const Support3& s) {
    return table_from_offsets(x, s, s);
}

inline JointTable independence_table(const Support3& sx, const Support3& sy) {
    return table_from_offsets(OffsetVector{}, sx, sy);
}

/// lambda = (1/9) / (2 M), M the largest absolute deviation; every rescaled entry lies in [1/18, 1/6].
inline ExactScalar rescale_factor(const OffsetVector& x) {
    if (x.is_zero()) throw ZeroVector("cannot rescale the zero offset vector");
    ExactScalar m = 0;
    for (const auto& row : deviation_matrix(x))
        for (const auto& v : row) m = std::max(m, abs_value(v));
    return ExactScalar(Rational(1, 18)) / m;
}

inline OffsetVector rescale(const OffsetVector& x) {
    const ExactScalar lambda = rescale_factor(x);
    OffsetVector r = x;
    for (auto& v : r.x) v *= lambda;
    return r;
}

}  // namespace uncorrset
