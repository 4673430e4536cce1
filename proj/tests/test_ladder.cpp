#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jue/ladder.hpp"

#include <stdexcept>
#include <tuple>

using namespace jue;

namespace {
constexpr mpfr_prec_t P = 192;
BigReal S(const char* s) { return BigReal(std::string(s), P); }
BigReal L(double x) { return BigReal(x, P); }
PrecisionContext ctx() { return make_context(192, 1e-30); }
}  // namespace

TEST_CASE("integral route frozen values") {
    auto c = ctx();
    // mpmath quadrature of the defining integrals; at α = 1/2 its x^(-1/2) endpoint limits it to ~1e-21
    struct Row { int n; double lam, a, b; const char *R, *r; };
    const Row rows[] = {
        {3, 2.0, 1, 1, "10.00445816978818315289471", "-1.737668512670141411149943"},
        {1, 1.0, 0.5, 0.5, "4.500639022453351641909194", "-0.6224555402773093413419549"},
        {0, 1.0, 1, 2, "4.638700487196159783566975", nullptr},
        {2, 0.8, 1, 2, "8.422089048944898581454853", "-1.223447998773379889937225"},
    };
    for (const auto& w : rows) {
        auto p = aux_by_integral(w.n, L(w.lam), w.a, w.b, c);
        CHECK(abs(p.R - S(w.R)).to_double() < 1e-20);
        if (w.r) CHECK(abs(p.r - S(w.r)).to_double() < 1e-20);
        else CHECK(p.r.is_zero());
        // and the recursion route lands on the same numbers
        auto t = aux_by_recursion(std::max(w.n, 1), L(w.lam), w.a, w.b, c);
        CHECK(abs(t.R[w.n] - S(w.R)).to_double() < 1e-20);
        if (w.r) CHECK(abs(t.r[w.n] - S(w.r)).to_double() < 1e-20);
    }
}

TEST_CASE("integral route needs α > 0") {
    CHECK_THROWS_AS(aux_by_integral(2, L(1), 0, 1, ctx()), std::domain_error);
    CHECK_THROWS_AS(aux_by_integral(2, L(1), -0.5, 1, ctx()), std::domain_error);
}

TEST_CASE("λ = 0 gives the closed limits") {
    auto t = aux_by_recursion(4, L(0), 1, 2, ctx());
    CHECK(t.lambda_zero_limit);
    for (int n = 0; n <= 4; ++n) {
        CHECK(t.R[n].to_double() == doctest::Approx(2 * n + 4.0));
        CHECK(t.r[n].to_double() == doctest::Approx(-n * (n + 2.0) / (2 * n + 3.0)));
    }
}

TEST_CASE("recurrence coefficients from R, r match the Hankel table") {
    auto c = ctx();
    for (auto [lam, a, b] : {std::tuple{0.25, 0.0, 0.0}, {2.5, 1.0, 2.0}, {1.0, 0.5, 1.5}}) {
        auto aux = aux_by_recursion(6, L(lam), a, b, c);
        auto t = ortho_table(6, L(lam), a, b, c);
        for (int n = 1; n <= 5; ++n) {
            auto rp = recurrence_from_aux(n, aux);
            CHECK(abs(rp.alpha_n - t.a_rec[n]).to_double() < 1e-25);
            CHECK(abs(rp.beta_n - t.b_rec[n]).to_double() < 1e-25);
        }
    }
}

TEST_CASE("Riccati, second-order and sum-rule residuals vanish") {
    auto c = ctx();
    for (int n : {1, 2, 5})
        for (auto [lam, a, b] : {std::tuple{0.25, 0.0, 0.0}, {1.0, 1.0, 2.0}, {2.5, 2.5, 0.5}}) {
            CHECK(riccati_residuals(n, L(lam), a, b, c).max() < 1e-20);
            CHECK(second_order_residuals(n, L(lam), a, b, c).max() < 1e-15);
            auto aux = aux_by_recursion(6, L(lam), a, b, c);
            CHECK(sum_rule_residuals(n, aux).max() < 1e-20);
        }
    CHECK_THROWS_AS(riccati_residuals(2, L(0), 1, 1, c), std::domain_error);
}

TEST_CASE("r_1 Kummer quotient: swapped form and difference equation agree, printed form does not") {
    for (auto [lam, a, b] : {std::tuple{0.5, 1.0, 1.0}, {2.0, 0.5, 1.5}, {1.0, 2.5, 0.5}}) {
        BigReal sw = r1_kummer_form_swapped(L(lam), a, b, P);
        BigReal df = r1_from_difference(L(lam), a, b, P);
        auto aux = aux_by_recursion(2, L(lam), a, b, ctx());
        CHECK(abs(sw - df).to_double() < 1e-30);
        CHECK(abs(sw - aux.r[1]).to_double() < 1e-30);
        CHECK(abs(r1_kummer_form(L(lam), a, b, P) - aux.r[1]).to_double() > 1e-3);
    }
}

TEST_CASE("Bessel forms at α = β = 1/2") {
    auto f = bessel_forms(L(1));
    CHECK(abs(f.R0_printed - S("1.280929482069580182646213")).to_double() < 1e-22);
    CHECK(abs(f.R0_doubled - S("2.561858964139160365292426")).to_double() < 1e-22);
    for (double lam : {0.5, 1.0, 2.0}) {
        auto g = bessel_forms(L(lam));
        auto aux = aux_by_recursion(2, L(lam), 0.5, 0.5, ctx());
        CHECK(abs(g.R0_doubled - aux.R[0]).to_double() < 1e-30);
        CHECK(abs(g.r1 - aux.r[1]).to_double() < 1e-30);
        CHECK(abs(g.R1 - aux.R[1]).to_double() < 1e-30);
        CHECK(abs(g.R0_printed / aux.R[0] - 0.5).to_double() < 1e-30);
    }
}

TEST_CASE("complex recursion reduces to the real one on the real axis") {
    auto c = ctx();
    auto z = aux_by_recursion(4, BigComplex(1.5, 0.0, P), 1, 0.5, c);
    auto r = aux_by_recursion(4, L(1.5), 1, 0.5, c);
    for (int n = 0; n <= 4; ++n) {
        CHECK(abs(z.R[n].re - r.R[n]).to_double() < 1e-30);
        CHECK(abs(z.R[n].im).to_double() < 1e-30);
    }
}
