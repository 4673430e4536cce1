#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jue/numkit.hpp"
#include "jue/specfun.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

using namespace jue;

namespace {
BigReal R(double x, int bits = 192) { return BigReal(x, bits); }
}

TEST_CASE("make_context accepts achievable tolerances") {
    auto a = make_context(256, 1e-30);
    CHECK(a.mantissa_bits == 256);
    CHECK(a.target_rel_tol == doctest::Approx(1e-30));
    CHECK_NOTHROW(make_context(512, 1e-60));
}

TEST_CASE("make_context rejects tolerance below the precision floor and tiny mantissas") {
    CHECK_THROWS_AS(make_context(64, 1e-40), std::invalid_argument);
    CHECK_THROWS_AS(make_context(32, 1e-5), std::invalid_argument);
    // floor is 2^(-bits+8)
    CHECK(PrecisionContext::tolerance_floor(64) == doctest::Approx(std::ldexp(1.0, -56)));
}

TEST_CASE("escalated doubles the mantissa and keeps the tolerance") {
    auto c = make_context(128, 1e-20);
    auto e = c.escalated();
    CHECK(e.mantissa_bits == 256);
    CHECK(e.target_rel_tol == c.target_rel_tol);
}

TEST_CASE("integrate_weighted examples") {
    auto ctx = make_context(192, 1e-40);
    auto one = [](const BigReal& x) { return BigReal(1L, x.prec()); };
    CHECK(integrate_weighted(one, 0, 0, R(0), ctx).to_double() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(integrate_weighted(one, 1, 2, R(0), ctx).to_double() == doctest::Approx(1.0 / 12).epsilon(1e-15));
    BigReal v = integrate_weighted(one, 0, 0, R(1), ctx);
    BigReal want = 1L - exp(R(-1));
    CHECK(abs(v - want).to_double() < 1e-38);
}

TEST_CASE("integrate_weighted with complex lambda matches the closed form") {
    auto ctx = make_context(192, 1e-40);
    // ∫ e^{-λx} dx = (1 - e^{-λ})/λ with λ = 2i
    ComplexIntegrand one = [](const BigReal& x) { return BigComplex(BigReal(1L, x.prec()), BigReal(x.prec())); };
    BigComplex lam(R(0), R(2));
    auto q = integrate_weighted(one, 0, 0, lam, ctx);
    // (1 - cos 2 + i sin 2)/(2i) = sin2/2 + i (cos2 - 1)/2
    CHECK(q.value.re.to_double() == doctest::Approx(std::sin(2.0) / 2).epsilon(1e-14));
    CHECK(q.value.im.to_double() == doctest::Approx((std::cos(2.0) - 1) / 2).epsilon(1e-14));
}

TEST_CASE("Gauss-Jacobi with m nodes integrates x^k exactly for k <= 2m-1") {
    const int m = 6;
    for (auto [a, b] : {std::pair{0.0, 0.0}, {0.5, 1.5}, {-0.5, 2.0}}) {
        auto rule = gauss_jacobi(m, a, b, 192);
        REQUIRE(rule.nodes.size() == size_t(m));
        for (int k = 0; k <= 2 * m - 1; ++k) {
            BigReal s(192);
            for (int i = 0; i < m; ++i) s += rule.weights[i] * pow(rule.nodes[i], k);
            BigReal exact = beta_fn(k + a + 1, b + 1, 192);
            CHECK(abs(s / exact - 1L).to_double() < 1e-50);
        }
    }
}

TEST_CASE("quadrature at doubled precision agrees with the base precision") {
    auto lo = make_context(128, 1e-30), hi = make_context(256, 1e-60);
    auto f = [](const BigReal& x) { return cos(x * 3L) + x * x; };
    for (auto [a, b, l] : {std::tuple{0.3, 1.2, 0.7}, {-0.4, 0.0, 2.5}, {2.0, 0.5, -1.0}}) {
        BigReal p = integrate_weighted(f, a, b, BigReal(l, 128), lo);
        BigReal q = integrate_weighted(f, a, b, BigReal(l, 256), hi);
        CHECK(abs((p - q) / q).to_double() < 1e-29);
    }
}

TEST_CASE("derivative examples") {
    auto ctx = make_context(192, 1e-40);
    auto sq = [](const BigReal& x) { return x * x; };
    auto d1 = derivative(sq, R(3), 1, ctx);
    auto d2 = derivative(sq, R(3), 2, ctx);
    CHECK(abs(d1.value - 6L).to_double() < 1e-30);
    CHECK(abs(d2.value - 2L).to_double() < 1e-20);
    auto e = derivative([](const BigReal& x) { return exp(x); }, R(0), 1, ctx);
    CHECK(abs(e.value - 1L).to_double() < 1e-25);
    CHECK(e.error.to_double() < 1e-20);
}

TEST_CASE("least_squares recovers an exact polynomial fit") {
    std::vector<std::vector<BigReal>> A;
    std::vector<BigReal> y;
    for (int i = 0; i < 7; ++i) {
        BigReal x(0.1 * i - 0.3, 192);
        A.push_back({BigReal(1L, 192), x, x * x});
        y.push_back(2L - x * 3L + x * x * 5L);
    }
    auto c = least_squares(A, y);
    CHECK(abs(c[0] - 2L).to_double() < 1e-40);
    CHECK(abs(c[1] + 3L).to_double() < 1e-40);
    CHECK(abs(c[2] - 5L).to_double() < 1e-40);
}

TEST_CASE("solve_linear reports a singular system") {
    std::vector<std::vector<BigReal>> A{{R(1), R(2)}, {R(2), R(4)}};
    CHECK_THROWS_AS(solve_linear(A, {R(1), R(2)}), NumericError);
}

TEST_CASE("parallel_for visits every index once for any thread count") {
    for (unsigned t : {1u, 2u, 5u}) {
        std::vector<int> hit(97, 0);
        parallel_for(hit.size(), t, [&](size_t i) { hit[i] += 1; });
        for (int h : hit) CHECK(h == 1);
    }
}

TEST_CASE("LambdaMemo evaluates each exact point once") {
    int calls = 0;
    LambdaMemo<BigReal> m([&](const BigReal& x) {
        ++calls;
        return x * 2L;
    });
    m.at(R(0.5));
    m.at(R(0.5));
    m.at(R(0.25));
    CHECK(calls == 2);
}

TEST_CASE("JUE_PRECISION_BITS overrides the default mantissa") {
    setenv("JUE_PRECISION_BITS", "320", 1);
    CHECK(default_context().mantissa_bits == 320);
    unsetenv("JUE_PRECISION_BITS");
    CHECK(default_context().mantissa_bits == 192);
}
