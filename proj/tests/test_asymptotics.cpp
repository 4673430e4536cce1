#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jue/asymptotics.hpp"
#include "jue/specfun.hpp"

#include <cmath>
#include <stdexcept>

using namespace jue;

namespace {
constexpr mpfr_prec_t P = 192;
BigReal L(double x) { return BigReal(x, P); }
PrecisionContext ctx() { return make_context(192, 1e-30); }
}  // namespace

TEST_CASE("closed-form b_m against Taylor coefficients of log D_n") {
    // mpmath taylor() of log det of the moment matrix, 60 digits
    struct Row { int n; mpq_class a, b; double want[5]; };
    const Row rows[] = {
        {3, 1, 2, {-1.3333333333333333333, 0.055555555555555555556, -0.00024050024050024050024,
                   -0.00002004168670835337502, -5.1388940277829166718e-7}},
        {2, mpq_class(1, 2), mpq_class(3, 2), {-0.83333333333333333333, 0.055555555555555555556,
                   -0.0005787037037037037037, -0.000048225308641975308642, -4.0187757201646090535e-6}},
    };
    for (const auto& r : rows) {
        auto b = b_closed_exact(r.n, r.a, r.b);
        REQUIRE(b.size() >= 5);
        for (int m = 1; m <= 5; ++m) CHECK(b[m - 1].get_d() == doctest::Approx(r.want[m - 1]).epsilon(1e-14));
    }
}

TEST_CASE("Legendre b_m exact rationals") {
    auto b = b_closed_exact_legendre(2);
    REQUIRE(b.size() == 8);
    CHECK(b[0] == -1);
    CHECK(b[1] == mpq_class(1, 15));
    CHECK(b[3] == mpq_class(1, 6300));
    for (int m : {3, 5, 7}) CHECK(b[m - 1] == 0);
    auto g = b_closed_exact(2, 0, 0);
    for (int m = 1; m <= 5; ++m) CHECK(g[m - 1] == b[m - 1]);
}

TEST_CASE("b_1 is minus the mean n(n+α)/(2n+α+β)") {
    for (int n : {1, 2, 5})
        for (auto [a, b] : {std::pair{mpq_class(0), mpq_class(0)}, {mpq_class(1, 2), mpq_class(1, 2)}, {mpq_class(5, 2), mpq_class(1, 3)}}) {
            mpq_class want = -mpq_class(n) * (n + a) / (2 * n + a + b);
            CHECK(b_closed_exact(n, a, b)[0] == want);
        }
    CHECK(b_closed_exact(1, mpq_class(1, 2), mpq_class(1, 2))[0] == mpq_class(-1, 2));
}

TEST_CASE("odd b_m vanish when α = β") {
    for (int n : {2, 3, 4}) {
        auto b = b_closed_exact(n, mpq_class(3, 2), mpq_class(3, 2));
        CHECK(b[2] == 0);
        CHECK(b[4] == 0);
    }
}

TEST_CASE("b_2(n,0,0) tends to 1/16") {
    double prev = 1;
    for (int n : {2, 4, 8, 16, 64, 256}) {
        double g = std::abs(b_closed_exact(n, 0, 0)[1].get_d() - 1.0 / 16);
        CHECK(g < prev);
        prev = g;
    }
    CHECK(prev < 1e-5);
}

TEST_CASE("vanishing denominator is reported") {
    // inside the weight range every 0/0 is removable and gets its limit
    CHECK_NOTHROW(b_closed_exact(1, mpq_class(-1, 2), mpq_class(-1, 2)));
    CHECK(b_closed_exact(2, mpq_class(-1, 4), mpq_class(-3, 4))[3] == mpq_class(259, 663552));   // mpmath taylor() agrees
    // α = -3, β = 0, n = 2: 2n+α+β-1 = 0 with a nonzero numerator
    CHECK_THROWS_AS(b_closed_exact(2, -3, 0), std::domain_error);
}

TEST_CASE("extracted coefficients agree with the closed form") {
    auto c = ctx();
    for (auto [n, a, b] : {std::tuple{2, 0.0, 0.0}, {3, 1.0, 2.0}, {4, 0.5, 1.5}}) {
        auto ex = b_extracted(n, a, b, 6, c);
        auto cl = closed_form_coeffs(n, a, b, 4, P);
        CHECK(ex.source == CoeffSource::extracted);
        for (int m = 1; m <= 4; ++m) {
            if (cl.b[m].is_zero()) CHECK(abs(ex.b[m]).to_double() < 1e-9);
            else CHECK(abs(ex.b[m] / cl.b[m] - 1L).to_double() < 1e-6);
        }
    }
}

TEST_CASE("cumulants from b_m") {
    auto cl = closed_form_coeffs(2, 0, 0, 4, P);
    auto k = cumulants(cl);
    CHECK(k[1].to_double() == doctest::Approx(1.0));          // mean n/2
    CHECK(k[2].to_double() == doctest::Approx(1.0 / 15));     // variance b_2
    CHECK(k[4].to_double() == doctest::Approx(6.0 / 6300));   // 3! b_4
}

TEST_CASE("truncated expansion tracks log D_n near λ = 0") {
    auto c = ctx();
    for (double lam : {0.05, -0.1}) {
        BigReal exact = hankel_det_log(3, L(lam), 1, 2, c);
        BigReal e4 = dn_expansion_log(3, 1, 2, lam, 4, P), e5 = dn_expansion_log(3, 1, 2, lam, 5, P);
        CHECK(abs(e5 - exact) < abs(e4 - exact));
        CHECK(abs(e5 - exact).to_double() < 1e-9);
    }
    CHECK(abs(dn_expansion_log(3, 1, 2, 0.0, 5, P) - log_d0(3, 1, 2, P)).to_double() < 1e-40);
}

TEST_CASE("σ series residual shrinks with the order") {
    auto c = ctx();
    auto r3 = sigma_series_residual(2, 1, 2, 0.1, 3, c);
    auto r5 = sigma_series_residual(2, 1, 2, 0.1, 5, c);
    CHECK(r5.difference < r3.difference);
    CHECK(r5.difference.to_double() < 1e-6);
}

TEST_CASE("fluid data at α = β = 0") {
    auto f = fluid_data(0, 0, 10);
    CHECK(f.a == doctest::Approx(0));
    CHECK(f.b == doctest::Approx(1));
    CHECK(f.J1 == doctest::Approx(1.0 / 8));
    CHECK(f.J1_alt == doctest::Approx(-1.0 / 16));
    CHECK(f.J2 == doctest::Approx(5.0));
    // corrected log M = λ²/32 - nλ/2
    CHECK(log_mgf_fluid(1, f, MgfVariant::corrected) == doctest::Approx(1.0 / 32 - 5));
    CHECK_THROWS_AS(fluid_data(-0.1, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(fluid_data(0, 0, 0), std::invalid_argument);
}

TEST_CASE("fluid densities integrate to one and zero") {
    auto f = fluid_data(0.5, 1.0, 4);
    double s0 = 0, s1 = 0;
    const int N = 200000;
    for (int i = 0; i < N; ++i) {
        double x = (i + 0.5) / N;
        s0 += sigma0_density(x, f) / N;
        s1 += varrho_density(x, f) / N;
    }
    CHECK(s0 == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(std::abs(s1) < 1e-3);
    CHECK(sigma0_density(-0.1, f) == 0);
}
