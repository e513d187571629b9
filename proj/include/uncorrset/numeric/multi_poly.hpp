#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients. Terms are stored in a map ordered graded-lexicographically, so
// two polynomials are equal exactly when their term maps are equal.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uncorrset/error.hpp"
#include "uncorrset/numeric/quad_ext.hpp"
#include "uncorrset/numeric/rational.hpp"

namespace uncorrset {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
        const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) return da < db;
        return a < b;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, BigInt, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t arity) : arity_(arity) {}

    static MultiPoly constant(std::size_t arity, const BigInt& c) {
        MultiPoly p(arity);
        if (c != 0) p.terms_.emplace(Exponents(arity, 0u), c);
        return p;
    }

    /// The i-th variable raised to `power`.
    static MultiPoly variable(std::size_t arity, std::size_t i, unsigned power = 1) {
        if (i >= arity) throw ArityMismatch("variable index " + std::to_string(i) + " out of range");
        Exponents e(arity, 0u);
        e[i] = power;
        MultiPoly p(arity);
        p.terms_.emplace(std::move(e), BigInt(1));
        return p;
    }

    static MultiPoly monomial(const BigInt& c, Exponents exps) {
        MultiPoly p(exps.size());
        if (c != 0) p.terms_.emplace(std::move(exps), c);
        return p;
    }

    std::size_t arity() const noexcept { return arity_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    BigInt coeff(const Exponents& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
        return d;
    }

    /// Adds c * monomial(e) in place.
    void add_term(const Exponents& e, const BigInt& c) {
        if (e.size() != arity_) throw ArityMismatch("exponent vector has wrong arity");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& q) {
        check_arity(q);
        for (const auto& [e, c] : q.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& q) {
        check_arity(q);
        for (const auto& [e, c] : q.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

    friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
    friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
    friend MultiPoly operator-(const MultiPoly& p) {
        MultiPoly r(p.arity_);
        for (const auto& [e, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
        p.check_arity(q);
        MultiPoly r(p.arity_);
        Exponents e(p.arity_);
        for (const auto& [ep, cp] : p.terms_) {
            for (const auto& [eq, cq] : q.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
                r.add_term(e, cp * cq);
            }
        }
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& p, const BigInt& s) {
        MultiPoly r(p.arity_);
        if (s == 0) return r;
        for (const auto& [e, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
        return r;
    }

    friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
        p.check_arity(q);
        return p.terms_ == q.terms_;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly result = constant(arity_, 1);
        MultiPoly base = *this;
        while (e != 0) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e != 0) base *= base;
        }
        return result;
    }

    /// Renames variables: variable i of *this becomes variable perm[i].
    MultiPoly permuted(std::span<const std::size_t> perm) const {
        if (perm.size() != arity_) throw ArityMismatch("permutation has wrong arity");
        MultiPoly r(arity_);
        Exponents f(arity_);
        for (const auto& [e, c] : terms_) {
            for (std::size_t i = 0; i < arity_; ++i) f[perm[i]] = e[i];
            r.terms_.emplace(f, c);
        }
        return r;
    }

    /// Exact evaluation; T is Rational or ExactScalar.
    template <class T>
    T eval(std::span<const T> point) const {
        if (point.size() != arity_) {
            throw ArityMismatch("point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                std::to_string(arity_) + " variables");
        }
        std::vector<std::vector<T>> powers(arity_);
        for (const auto& [e, c] : terms_) {
            for (std::size_t i = 0; i < arity_; ++i) {
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(T(1));
                while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
            }
        }
        T sum = T(0);
        for (const auto& [e, c] : terms_) {
            T term = T(Rational(c));
            for (std::size_t i = 0; i < arity_; ++i) {
                if (e[i] != 0) term *= powers[i][e[i]];
            }
            sum += term;
        }
        return sum;
    }

    template <class T>
    T eval(std::initializer_list<T> point) const {
        return eval(std::span<const T>(point.begin(), point.size()));
    }

    std::string to_string(std::span<const std::string> names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool neg = c.sign() < 0;
            const BigInt mag = neg ? BigInt(-c) : c;
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mono;
            for (std::size_t i = 0; i < arity_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += i < names.size() ? names[i] : "v" + std::to_string(i);
                if (e[i] > 1) mono += '^' + std::to_string(e[i]);
            }
            if (mono.empty()) {
                s += mag.str();
            } else {
                if (mag != 1) s += mag.str() + '*';
                s += mono;
            }
        }
        return s;
    }

private:
    void check_arity(const MultiPoly& q) const {
        if (arity_ != q.arity_) {
            throw ArityMismatch(std::to_string(arity_) + " vs " + std::to_string(q.arity_) + " variables");
        }
    }

    std::size_t arity_ = 0;
    TermMap terms_;
};

inline MultiPoly mp_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
inline MultiPoly mp_sub(const MultiPoly& p, const MultiPoly& q) { return p - q; }
inline MultiPoly mp_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
inline bool mp_eq(const MultiPoly& p, const MultiPoly& q) { return p == q; }

inline ExactScalar mp_eval(const MultiPoly& p, std::span<const ExactScalar> point) {
    return p.eval<ExactScalar>(point);
}

}  // namespace uncorrset
