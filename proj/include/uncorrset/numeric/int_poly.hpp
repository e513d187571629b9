#pragma once

// Univariate polynomials with integer coefficients, exact evaluation at
// rationals, bisection root isolation and Sturm root counting.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "uncorrset/error.hpp"
#include "uncorrset/numeric/rational.hpp"

namespace uncorrset {

class IntPoly {
public:
    IntPoly() = default;
    /// Coefficients in increasing degree: {c0, c1, ...}.
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long long> coeffs) {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }

    /// c * t^e.
    static IntPoly monomial(const BigInt& c, unsigned e) {
        std::vector<BigInt> v(e + 1, BigInt(0));
        v[e] = c;
        return IntPoly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& leading() const { return c_.back(); }

    Rational operator()(const Rational& t) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + Rational(*it);
        return acc;
    }

    friend IntPoly operator+(const IntPoly& p, const IntPoly& q) {
        std::vector<BigInt> r(std::max(p.c_.size(), q.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
        for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& p) {
        std::vector<BigInt> r = p.c_;
        for (auto& v : r) v = -v;
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q) { return p + (-q); }
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<BigInt> r(p.c_.size() + q.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        return IntPoly(std::move(r));
    }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned>(i);
        return IntPoly(std::move(r));
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) g = mp::gcd(g, v);
        return g;
    }

    /// Divided by the content, with positive leading coefficient.
    IntPoly primitive() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (leading().sign() < 0) g = -g;
        std::vector<BigInt> r = c_;
        for (auto& v : r) v /= g;
        return IntPoly(std::move(r));
    }

    std::string to_string(char var = 't') const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            const bool neg = v.sign() < 0;
            const BigInt mag = neg ? BigInt(-v) : v;
            if (s.empty()) {
                if (neg) s += '-';
            } else {
                s += neg ? " - " : " + ";
            }
            if (mag != 1 || i == 0) s += mag.str();
            if (i > 0) {
                if (mag != 1) s += '*';
                s += var;
                if (i > 1) s += '^' + std::to_string(i);
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// An interval [lo, hi] with p(lo) * p(hi) < 0.
struct RootInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

/// 10^-12, the default isolation width.
inline Rational default_width() { return Rational(1, pow(BigInt(10), 12)); }

/// Bisection with exact endpoint evaluation. Caller guarantees a single root in (lo, hi).
inline RootInterval isolate_root(const IntPoly& p, Rational lo, Rational hi, const Rational& width) {
    if (width.sign() <= 0) throw PreconditionViolated("width must be positive");
    if (lo > hi) std::swap(lo, hi);
    int s_lo = p(lo).sign();
    const int s_hi = p(hi).sign();
    if (s_lo * s_hi >= 0) {
        throw NoSignChange(p.to_string() + " on [" + to_string(lo) + ", " + to_string(hi) + "]");
    }
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        const int s_mid = p(mid).sign();
        if (s_mid == 0) {
            // Exact rational root: step just off it on both sides.
            Rational delta = std::min<Rational>(width / 4, (hi - lo) / 4);
            while (true) {
                const Rational l = mid - delta;
                const Rational h = mid + delta;
                if (p(l).sign() * p(h).sign() < 0) return {l, h};
                delta /= 2;
                if (delta < width / Rational(pow(BigInt(2), 64))) {
                    throw NoSignChange("root at " + to_string(mid) + " does not change sign");
                }
            }
        }
        if (s_mid == s_lo) {
            lo = mid;
            s_lo = s_mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

namespace detail {

using RatPoly = std::vector<Rational>;  // increasing degree, trimmed

inline void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly to_rat(const IntPoly& p) {
    RatPoly r;
    r.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) r.emplace_back(c);
    return r;
}

inline IntPoly to_primitive_int(const RatPoly& p) {
    BigInt l = 1;
    for (const auto& c : p) l = mp::lcm(l, denominator_of(c));
    std::vector<BigInt> v;
    v.reserve(p.size());
    for (const auto& c : p) v.push_back(numerator_of(c * Rational(l)));
    return IntPoly(std::move(v)).primitive();
}

/// Remainder of a divided by b over Q.
inline RatPoly remainder(RatPoly a, const RatPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

/// Quotient of a divided by b over Q.
inline RatPoly quotient(RatPoly a, const RatPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    const std::size_t db = b.size() - 1;
    RatPoly q(a.size() - db, Rational(0));
    while (a.size() >= b.size()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        q[shift] = f;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return q;
}

}  // namespace detail

/// Primitive gcd over Q; zero only if both inputs are zero.
inline IntPoly gcd(const IntPoly& p, const IntPoly& q) {
    detail::RatPoly a = detail::to_rat(p);
    detail::RatPoly b = detail::to_rat(q);
    while (!b.empty()) {
        detail::RatPoly r = detail::remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return detail::to_primitive_int(a);
}

/// p / gcd(p, p'), primitive: the same real roots, each simple.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() < 1) return p;
    const IntPoly g = gcd(p, p.derivative());
    return detail::to_primitive_int(detail::quotient(detail::to_rat(p), detail::to_rat(g)));
}

/// Sturm sequence p, p', -rem(p, p'), ... with each element made primitive (positive scaling keeps signs).
inline std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
    std::vector<IntPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    IntPoly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        const detail::RatPoly r = detail::remainder(detail::to_rat(seq[seq.size() - 2]),
                                                    detail::to_rat(seq.back()));
        if (r.empty()) break;
        IntPoly next = detail::to_primitive_int(r);
        // to_primitive_int normalises the sign to a positive leading coefficient; restore -r.
        const bool r_positive = r.back().sign() > 0;
        if (r_positive) next = -next;
        seq.push_back(std::move(next));
    }
    return seq;
}

inline int sign_variations(const std::vector<IntPoly>& seq, const Rational& t) {
    int count = 0;
    int prev = 0;
    for (const auto& p : seq) {
        const int s = p(t).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

/// Number of distinct real roots in (lo, hi].
inline int count_roots(const IntPoly& p, const Rational& lo, const Rational& hi) {
    const auto seq = sturm_sequence(p);
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

/// A real algebraic number: the unique root of `defining` inside `interval`.
class AlgebraicRoot {
public:
    /// Throws PreconditionViolated unless `defining` has exactly one root in (lo, hi) and changes sign there.
    /// The squarefree part of `defining` is kept.
    AlgebraicRoot(const IntPoly& defining, RootInterval interval)
        : poly_(squarefree_part(defining)), iv_(std::move(interval)) {
        if (poly_(iv_.lo).sign() * poly_(iv_.hi).sign() >= 0) {
            throw PreconditionViolated("interval does not bracket a sign change");
        }
        if (count_roots(poly_, iv_.lo, iv_.hi) != 1) {
            throw PreconditionViolated("interval does not isolate a single root of " + poly_.to_string());
        }
    }

    const IntPoly& defining() const noexcept { return poly_; }
    const RootInterval& interval() const noexcept { return iv_; }

    /// True iff e vanishes at the root: gcd(e, defining) must change sign on the isolating interval.
    bool is_root_of(const IntPoly& e) const {
        if (e.is_zero()) return true;
        const IntPoly g = gcd(e, poly_);
        if (g.degree() < 1) return false;
        return g(iv_.lo).sign() * g(iv_.hi).sign() < 0;
    }

    /// Exact sign of e at the root.
    int sign_of(const IntPoly& e) const {
        if (is_root_of(e)) return 0;
        RootInterval iv = iv_;
        const int s_lo = poly_(iv.lo).sign();
        while (count_roots(e, iv.lo, iv.hi) != 0) {
            const Rational mid = iv.midpoint();
            const int s_mid = poly_(mid).sign();
            if (s_mid == 0) return e(mid).sign();
            if (s_mid == s_lo) {
                iv.lo = mid;
            } else {
                iv.hi = mid;
            }
        }
        return e(iv.hi).sign();
    }

private:
    IntPoly poly_;
    RootInterval iv_;
};

}  // namespace uncorrset
