#include "catch_amalgamated.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "uncorrset/numeric/int_poly.hpp"
#include "uncorrset/numeric/multi_poly.hpp"
#include "uncorrset/numeric/quad_ext.hpp"
#include "uncorrset/numeric/rational.hpp"

using namespace uncorrset;

namespace {

Rational random_rational(std::mt19937_64& rng, long long range = 50) {
    std::uniform_int_distribution<long long> num(-range, range);
    std::uniform_int_distribution<long long> den(1, range);
    return Rational(num(rng), den(rng));
}

MultiPoly random_poly(std::mt19937_64& rng, std::size_t arity, int terms, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<long long> coef(-9, 9);
    MultiPoly p(arity);
    for (int t = 0; t < terms; ++t) {
        Exponents e(arity);
        for (auto& v : e) v = exp(rng);
        p.add_term(e, BigInt(coef(rng)));
    }
    return p;
}

// sigma_k(x, y) straight from its definition, for a 2-variable ring.
MultiPoly sigma_by_definition(unsigned k) {
    MultiPoly s(2);
    for (unsigned i = 0; i <= k; ++i) s.add_term({k - i, i}, BigInt(1));
    return s;
}

// Plain floating bisection, used only as an independent oracle.
double float_bisect(double (*f)(double), double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((f(lo) < 0) == (f(mid) < 0)) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("rationals parse and print in p/q form", "[numeric][rational]") {
    CHECK(to_string(Rational(2, 4)) == "1/2");
    CHECK(to_string(Rational(-6, 3)) == "-2");
    CHECK(to_string(Rational(0, 5)) == "0");
    CHECK(denominator_of(Rational(0, 7)) == 1);
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("1.25") == Rational(5, 4));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("17") == Rational(17));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rational field laws on random values", "[numeric][rational][property]") {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 500; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK(a + (-a) == 0);
        if (a != 0) CHECK(a * (Rational(1) / a) == 1);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(denominator_of(a).sign() > 0);
        CHECK(mp::gcd(mp::abs(numerator_of(a)), denominator_of(a)) == 1);
        CHECK(parse_rational(to_string(a)) == a);
    }
}

TEST_CASE("quad_sign examples", "[numeric][quad]") {
    CHECK(quad_sign(QuadExt(0, 0, 2)) == 0);
    CHECK(quad_sign(QuadExt(-1, 1, 2)) == 1);
    CHECK(quad_sign(QuadExt(3, -2, 2)) == 1);
    CHECK(quad_sign(QuadExt(-3, 2, 2)) == -1);
    CHECK(quad_sign(QuadExt(2, -2, 2)) == -1);
}

TEST_CASE("quadratic extension arithmetic", "[numeric][quad]") {
    const QuadExt r2 = QuadExt::sqrt_of(2);
    CHECK(r2 * r2 == QuadExt(2));
    CHECK((r2 - r2).is_rational());
    CHECK((QuadExt(1) + r2) * (QuadExt(1) - r2) == QuadExt(-1));
    CHECK((QuadExt(3) + r2).inverse() * (QuadExt(3) + r2) == QuadExt(1));
    CHECK(r2 > QuadExt(Rational(141, 100)));
    CHECK(r2 < QuadExt(Rational(142, 100)));
    CHECK_THROWS_AS(r2 + QuadExt::sqrt_of(3), MixedRadicand);
    CHECK_NOTHROW(QuadExt::sqrt_of(3) * QuadExt(Rational(1, 2)));
    CHECK_THROWS_AS(QuadExt(1, 1, 4), PreconditionViolated);
    CHECK_THROWS_AS(QuadExt(0).inverse(), PreconditionViolated);
}

TEST_CASE("quad_sign agrees with a 100-digit float on random values", "[numeric][quad][property]") {
    using Big = mp::cpp_dec_float_100;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 4);
    const std::uint64_t radicands[] = {2, 3, 5, 6, 7};
    int near_zero = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t d = radicands[pick(rng)];
        Rational a = random_rational(rng, 1000);
        const Rational b = random_rational(rng, 1000);
        // Every fourth value sits very close to zero: a ~ -b sqrt d.
        if (i % 4 == 0) {
            const Big approx = -Big(b.convert_to<Big>()) * mp::sqrt(Big(d));
            a = Rational(BigInt(mp::floor(approx * 1000000)).convert_to<BigInt>(), BigInt(1000000));
            ++near_zero;
        }
        const QuadExt v(a, b, d);
        const Big f = a.convert_to<Big>() + b.convert_to<Big>() * mp::sqrt(Big(d));
        const int expected = f > 0 ? 1 : (f < 0 ? -1 : 0);
        CHECK(quad_sign(v) == expected);
    }
    CHECK(near_zero == 250);
}

TEST_CASE("isolate_root on the tribonacci cubic", "[numeric][roots]") {
    const IntPoly p{-1, -1, -1, 1};  // t^3 - t^2 - t - 1
    const Rational w(1, 1000000000);
    const auto iv = isolate_root(p, 1, 2, w);
    CHECK(iv.width() <= w);
    CHECK(p(iv.lo).sign() * p(iv.hi).sign() < 0);
    const double oracle = float_bisect([](double t) { return t * t * t - t * t - t - 1; }, 1.0, 2.0);
    CHECK(oracle == Catch::Approx(1.839286755214161).epsilon(1e-14));
    CHECK(to_double(iv.lo) <= oracle + 1e-15);
    CHECK(to_double(iv.hi) >= oracle - 1e-15);
    CHECK(iv.lo > 1);
    CHECK(iv.hi < 2);
}

TEST_CASE("isolate_root edge cases", "[numeric][roots]") {
    const IntPoly linear{-2, 1};  // t - 2, exact rational root hit by the first midpoint
    const auto iv = isolate_root(linear, 1, 3, Rational(1, 1000));
    CHECK(iv.contains(2));
    CHECK(iv.width() <= Rational(1, 1000));
    CHECK(linear(iv.lo).sign() * linear(iv.hi).sign() < 0);

    const IntPoly trib{-1, -1, -1, 1};
    CHECK_THROWS_AS(isolate_root(trib, 2, 3, Rational(1, 1000)), NoSignChange);
    CHECK_THROWS_AS(isolate_root(trib, 1, 2, Rational(0)), PreconditionViolated);
}

TEST_CASE("isolate_root produces nested intervals as the width shrinks", "[numeric][roots][property]") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> mdist(2, 8);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = mdist(rng);
        IntPoly p = IntPoly::monomial(1, static_cast<unsigned>(m + 1)) - IntPoly{1, 1, 1};
        RootInterval prev{1, 2};
        for (int e = 1; e <= 30; e += 3) {
            const auto iv = isolate_root(p, 1, 2, Rational(1, pow(BigInt(2), static_cast<unsigned>(e))));
            CHECK(p(iv.lo).sign() * p(iv.hi).sign() < 0);
            CHECK(prev.lo <= iv.lo);
            CHECK(iv.hi <= prev.hi);
            prev = iv;
        }
    }
}

TEST_CASE("Sturm counting and algebraic zero tests", "[numeric][roots]") {
    const IntPoly p = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{-3, 1};  // roots 1, 2, 3
    CHECK(count_roots(p, 0, 4) == 3);
    CHECK(count_roots(p, Rational(3, 2), 4) == 2);
    CHECK(count_roots(p, Rational(1, 2), Rational(3, 2)) == 1);
    CHECK(count_roots(IntPoly{1, 0, 1}, -10, 10) == 0);

    // sqrt 2 as the root of t^2 - 2 in (1, 2).
    const AlgebraicRoot root(IntPoly{-2, 0, 1}, {1, 2});
    CHECK(root.is_root_of(IntPoly{-2, 0, 1} * IntPoly{5, 1}));
    CHECK_FALSE(root.is_root_of(IntPoly{2, 0, 1}));
    CHECK(root.sign_of(IntPoly{-141, 100}) == 1);   // 100 t - 141 > 0 at sqrt 2
    CHECK(root.sign_of(IntPoly{-142, 100}) == -1);
    CHECK_THROWS_AS(AlgebraicRoot(p, {0, 4}), PreconditionViolated);

    CHECK(gcd(p, IntPoly{-2, 1} * IntPoly{7, 1}) == IntPoly{-2, 1});
}

TEST_CASE("MultiPoly ring operations", "[numeric][multipoly]") {
    const auto x = MultiPoly::variable(2, 0);
    const auto y = MultiPoly::variable(2, 1);
    const MultiPoly zero(2);

    CHECK(mp_eq(mp_mul(x - y, sigma_by_definition(1)), x.pow(2) - y.pow(2)));
    CHECK(mp_eq(mp_add(x + y, zero), x + y));
    CHECK((x - x).is_zero());
    CHECK(sigma_by_definition(2).eval<Rational>({Rational(2), Rational(3)}) == 19);

    const auto p = x * y + MultiPoly::constant(2, 7);
    CHECK(p.eval<Rational>({Rational(0), Rational(0)}) == 7);

    CHECK_THROWS_AS(x + MultiPoly::variable(3, 0), ArityMismatch);
    const std::vector<ExactScalar> bad{ExactScalar(1)};
    CHECK_THROWS_AS(mp_eval(x, bad), ArityMismatch);

    const std::vector<ExactScalar> at_sqrt2{QuadExt::sqrt_of(2), ExactScalar(1)};
    CHECK(mp_eval(x.pow(2) - y, at_sqrt2) == ExactScalar(1));
}

TEST_CASE("MultiPoly ring laws on random sparse polynomials", "[numeric][multipoly][property]") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 60; ++i) {
        const auto a = random_poly(rng, 4, 6, 3);
        const auto b = random_poly(rng, 4, 6, 3);
        const auto c = random_poly(rng, 4, 6, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());

        std::vector<Rational> pt;
        for (int v = 0; v < 4; ++v) pt.push_back(random_rational(rng, 9));
        const std::span<const Rational> s(pt);
        CHECK((a * b).eval(s) == a.eval(s) * b.eval(s));
    }
}

TEST_CASE("(x - y) sigma_{k-1} = x^k - y^k for k <= 12", "[numeric][multipoly][property]") {
    const auto x = MultiPoly::variable(2, 0);
    const auto y = MultiPoly::variable(2, 1);
    for (unsigned k = 1; k <= 12; ++k) {
        CHECK((x - y) * sigma_by_definition(k - 1) == x.pow(k) - y.pow(k));
    }
}
