#pragma once

// Elements a + b*sqrt(d) of a real quadratic field Q(sqrt d).
//
// A value with b == 0 is an ordinary rational and carries no radicand
// (d == 0); it combines freely with elements of any field. Two irrational
// operands must share the same radicand, otherwise MixedRadicand is thrown.

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "uncorrset/error.hpp"
#include "uncorrset/numeric/rational.hpp"

namespace uncorrset {

inline bool is_square_free(std::uint64_t d) {
    if (d < 2) return false;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)

    QuadExt(Rational a, Rational b, std::uint64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_ == 0) {
            d_ = 0;
        } else if (!is_square_free(d_)) {
            throw PreconditionViolated("radicand " + std::to_string(d_) + " is not square-free");
        }
    }

    /// sqrt(d) itself.
    static QuadExt sqrt_of(std::uint64_t d) { return QuadExt(0, 1, d); }

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& radical_part() const noexcept { return b_; }
    /// 0 for rational values.
    std::uint64_t radicand() const noexcept { return d_; }

    bool is_rational() const noexcept { return b_ == 0; }
    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    /// Throws unless the value is rational.
    const Rational& as_rational() const {
        if (!is_rational()) throw PreconditionViolated("value " + to_string() + " is irrational");
        return a_;
    }

    QuadExt operator-() const { return make(-a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return make(x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y));
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return make(x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y));
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        const std::uint64_t d = common_radicand(x, y);
        if (d == 0) return QuadExt(x.a_ * y.a_);
        return make(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    /// 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - d b^2); the norm is nonzero since d is not a square.
    QuadExt inverse() const {
        if (is_zero()) throw PreconditionViolated("division by zero");
        if (is_rational()) return QuadExt(Rational(1) / a_);
        const Rational norm = a_ * a_ - Rational(d_) * b_ * b_;
        return make(a_ / norm, -b_ / norm, d_);
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }

    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

    std::string to_string() const {
        if (is_rational()) return uncorrset::to_string(a_);
        return uncorrset::to_string(a_) + (b_.sign() < 0 ? " - " : " + ") +
               uncorrset::to_string(abs_value(b_)) + "*sqrt(" + std::to_string(d_) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.to_string(); }

private:
    static QuadExt make(Rational a, Rational b, std::uint64_t d) {
        QuadExt r;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        r.d_ = r.b_ == 0 ? 0 : d;
        return r;
    }

    static std::uint64_t common_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        throw MixedRadicand("sqrt(" + std::to_string(x.d_) + ") and sqrt(" + std::to_string(y.d_) + ")");
    }

    Rational a_ = 0;
    Rational b_ = 0;
    std::uint64_t d_ = 0;
};

/// Exact sign of a + b sqrt(d): when a and b disagree in sign, compare a^2 with d b^2.
inline int quad_sign(const QuadExt& v) {
    const int sa = v.rational_part().sign();
    const int sb = v.radical_part().sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const Rational a2 = v.rational_part() * v.rational_part();
    const Rational db2 = Rational(v.radicand()) * v.radical_part() * v.radical_part();
    const int cmp = a2 > db2 ? 1 : (a2 < db2 ? -1 : 0);
    return sa > 0 ? cmp : -cmp;
}

inline std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    const int s = quad_sign(x - y);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline QuadExt abs_value(const QuadExt& v) { return quad_sign(v) < 0 ? -v : v; }

inline double to_double(const QuadExt& v) {
    return to_double(v.rational_part()) +
           to_double(v.radical_part()) * std::sqrt(static_cast<double>(v.radicand()));
}

/// Every probability, moment and condition value is one of these.
using ExactScalar = QuadExt;

}  // namespace uncorrset
