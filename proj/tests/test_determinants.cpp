#include <catch_amalgamated.hpp>

#include <random>

#include "uncorrset/determinants.hpp"

using namespace uncorrset;

namespace {

Rational q(long long p, long long d = 1) { return Rational(p, d); }

/// det[v_i^e_c] by exact Gaussian elimination on the numbers.
Rational power_det_at(const std::array<unsigned, 4>& exps, const std::array<Rational, 4>& v) {
    RationalMatrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = pow(v[r], exps[c]);
    return determinant(m);
}

Rational eval4(const MultiPoly& p, const std::array<Rational, 4>& v) {
    return p.eval<Rational>(std::span<const Rational>(v));
}

std::array<Rational, 4> random_point(std::mt19937_64& g) {
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 5);
    std::array<Rational, 4> v;
    for (auto& x : v) x = Rational(num(g), den(g));
    return v;
}

}  // namespace

TEST_CASE("sigma examples", "[determinants]") {
    CHECK(mp_eq(sigma(0).poly, MultiPoly::constant(2, 1)));
    const MultiPoly x = MultiPoly::variable(2, 0);
    const MultiPoly y = MultiPoly::variable(2, 1);
    CHECK(mp_eq(sigma(1).poly, x + y));
    CHECK(mp_eq(sigma(2).poly, x * x + x * y + y * y));
    // (x - y) sigma_k = x^(k+1) - y^(k+1)
    for (unsigned k = 0; k <= 8; ++k)
        CHECK(mp_eq((x - y) * sigma(k).poly, MultiPoly::variable(2, 0, k + 1) - MultiPoly::variable(2, 1, k + 1)));
    CHECK(sigma(3).poly.eval<Rational>({q(2), q(1)}) == 15);
}

TEST_CASE("sigma difference identity", "[determinants]") {
    for (unsigned k = 0; k <= 6; ++k) CHECK(sigma_diff_identity(k));
}

TEST_CASE("2x2 sigma determinant", "[determinants]") {
    const auto a = det2_sigma(0, 1);
    CHECK(a.det.equal);
    const MultiPoly y = MultiPoly::variable(3, 1);
    const MultiPoly z = MultiPoly::variable(3, 2);
    CHECK(mp_eq(a.det.direct, z - y));
    for (unsigned m = 0; m <= 5; ++m) {
        const auto d = det2_sigma(m, m);
        CHECK(d.det.direct.term_count() == 0);
        CHECK(d.det.equal);
    }
    const auto b = det2_sigma(2, 4);
    CHECK(b.det.equal);
    CHECK(b.positive_coefficients);
    CHECK(b.symmetric);
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned j = 0; j < m; ++j) {
            const auto d = det2_sigma(j, m);
            CHECK(d.det.equal);
            CHECK(d.positive_coefficients);
            CHECK(d.symmetric);
        }
    CHECK_THROWS_AS(det2_sigma(3, 2), PreconditionViolated);
}

TEST_CASE("F closed form matches the determinant", "[determinants]") {
    for (unsigned n = 3; n <= 7; ++n)
        for (unsigned m = 2; m < n; ++m) {
            INFO("F " << m << " " << n);
            CHECK(f_result(m, n).equal);
        }
    CHECK_THROWS_AS(f_direct(3, 3), PreconditionViolated);
}

TEST_CASE("G closed form matches the determinant", "[determinants]") {
    for (unsigned n = 2; n <= 6; ++n)
        for (unsigned m = 1; m < n; ++m) {
            INFO("G " << m << " " << n);
            CHECK(g_result(m, n).equal);
        }
    CHECK_THROWS_AS(g_direct(0, 2), PreconditionViolated);
}

TEST_CASE("the lowest cases reduce to the Vandermonde determinant", "[determinants]") {
    const std::array<Rational, 4> v{1, 2, 3, 4};
    CHECK(eval4(f_direct(2, 3), v) == 12);
    CHECK(eval4(g_direct(1, 2), v) == 12);
    CHECK(mp_eq(f_direct(2, 3), vandermonde_product()));
    CHECK(mp_eq(g_closed(1, 2), vandermonde_product()));
}

TEST_CASE("F and G are alternating", "[determinants][property]") {
    const MultiPoly f = f_closed(2, 5);
    const MultiPoly g = g_closed(2, 4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) {
            std::array<std::size_t, 4> perm{0, 1, 2, 3};
            std::swap(perm[a], perm[b]);
            CHECK(mp_eq(f.permuted(perm), -f));
            CHECK(mp_eq(g.permuted(perm), -g));
        }
}

TEST_CASE("closed forms agree with numeric determinants at random points", "[determinants][property]") {
    std::mt19937_64 g(99);
    for (int i = 0; i < 60; ++i) {
        const auto v = random_point(g);
        const unsigned m = 2 + i % 4;
        const unsigned n = m + 1 + i % 3;
        CHECK(f_closed_form(m, n).eval<Rational>(std::span<const Rational>(v)) == power_det_at({0, 1, m, n}, v));
        const unsigned gm = 1 + i % 3;
        const unsigned gn = gm + 1 + i % 3;
        CHECK(g_closed_form(gm, gn).eval<Rational>(std::span<const Rational>(v)) ==
              power_det_at({0, gm, gn, gm + gn}, v));
    }
}

TEST_CASE("closed-form sums are positive at distinct positive points", "[determinants][property]") {
    std::mt19937_64 g(5);
    std::uniform_int_distribution<long long> num(1, 40);
    const ClosedForm gf = g_closed_form(2, 5);
    for (int i = 0; i < 40; ++i) {
        std::array<Rational, 4> v;
        for (auto& x : v) x = Rational(num(g), 7);
        CHECK(eval4(gf.sum, v) > 0);
    }
}

TEST_CASE("independence certificates on a geometric support", "[determinants]") {
    const PointList pts{{1, 2}, {2, 4}, {3, 6}, {4, 8}};
    const auto c = independence_certificate(pts, BetaSupport(1, 2));
    CHECK(c.forced_independent);
    CHECK(c.y_form);
    CHECK(c.a == 1);
    CHECK(c.b == 2);
    CHECK(c.det == ExactScalar(64512));
    CHECK(c.g_agrees);
    const PointList steep{{2, 1}, {4, 2}, {6, 3}, {8, 4}};
    const auto s = independence_certificate(steep, BetaSupport(q(1, 2), q(3, 2)));
    CHECK(s.forced_independent);
    CHECK(s.g_agrees);
    const PointList slope32{{2, 3}, {4, 6}, {6, 9}, {8, 12}};
    CHECK(independence_certificate(slope32, BetaSupport(1, q(5, 4))).g_agrees);
}

TEST_CASE("independence certificates on a general positive support", "[determinants]") {
    const PointList pts{{1, 3}, {2, 6}, {3, 9}, {4, 12}};
    const auto c = independence_certificate(pts, Support3::positive(1, 2, 3));
    CHECK(c.forced_independent);
    CHECK_FALSE(c.y_form);
    CHECK_FALSE(c.g_value.has_value());
}

TEST_CASE("certificate preconditions", "[determinants]") {
    const PointList diag{{1, 1}, {2, 2}, {3, 3}, {4, 4}};
    CHECK_THROWS_AS(independence_certificate(diag, BetaSupport(1, 2)), SlopeOne);
    const PointList off{{1, 2}, {2, 4}, {3, 6}, {4, 9}};
    CHECK_THROWS_AS(independence_certificate(off, BetaSupport(1, 2)), NotOnLine);
    const PointList three{{1, 2}, {2, 4}, {3, 6}};
    CHECK_THROWS_AS(independence_certificate(three, BetaSupport(1, 2)), PreconditionViolated);
    const PointList dup{{1, 2}, {2, 4}, {2, 4}, {3, 6}};
    CHECK_THROWS_AS(independence_certificate(dup, BetaSupport(1, 2)), PreconditionViolated);
}

TEST_CASE("four points on a line through the origin are never all members", "[determinants][property]") {
    std::mt19937_64 g(17);
    std::uniform_int_distribution<unsigned> small(1, 4);
    std::uniform_int_distribution<long long> num(11, 40);
    for (int i = 0; i < 40; ++i) {
        unsigned a = small(g);
        unsigned b = small(g);
        if (a == b) b = a + 1;
        const unsigned d = std::gcd(a, b);
        a /= d;
        b /= d;
        PointList pts;
        for (unsigned t = 1; t <= 4; ++t) pts.push_back({a * t, b * t});
        const BetaSupport bs(1, Rational(num(g), 10));
        const auto c = independence_certificate(pts, bs);
        CHECK(c.forced_independent);
        CHECK(c.g_agrees);
    }
}
