#pragma once

// Arbitrary-precision integers and rationals.
//
// Both are Boost.Multiprecision numbers with expression templates disabled so
// that `auto` and ternaries behave like ordinary value types. Rationals are
// always kept in lowest terms with a positive denominator; zero is 0/1.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "uncorrset/error.hpp"

namespace uncorrset {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline BigInt numerator_of(const Rational& r) { return mp::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return mp::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const BigInt& n) { return n.sign(); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw PreconditionViolated("zero denominator");
    return Rational(num, den);
}

inline Rational abs_value(const Rational& r) { return r.sign() < 0 ? Rational(-r) : r; }

/// r^e for e >= 0, by repeated squaring.
inline Rational pow(const Rational& base, unsigned e) {
    Rational result = 1;
    Rational b = base;
    while (e != 0) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e != 0) b *= b;
    }
    return result;
}

inline BigInt pow(const BigInt& base, unsigned e) { return mp::pow(base, e); }

/// "p/q", with "/q" omitted when q == 1.
inline std::string to_string(const Rational& r) {
    const BigInt den = denominator_of(r);
    std::string s = numerator_of(r).str();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

inline std::string to_string(const BigInt& n) { return n.str(); }

namespace detail {

inline BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw ParseError("malformed number '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9') throw ParseError("malformed number '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace detail

/// Parses "p", "p/q" or a finite decimal such as "-1.25".
inline Rational parse_rational(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty number");

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = detail::parse_integer(text.substr(0, slash), text);
        const BigInt den = detail::parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view frac = text.substr(dot + 1);
        std::string digits(text.substr(0, dot));
        if (digits.empty() || digits == "-" || digits == "+") digits += '0';
        digits += frac;
        const BigInt num = detail::parse_integer(digits, text);
        return Rational(num, pow(BigInt(10), static_cast<unsigned>(frac.size())));
    }
    return Rational(detail::parse_integer(text, text));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace uncorrset
