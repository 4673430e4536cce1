#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jue/orthopoly.hpp"
#include "jue/specfun.hpp"

#include <cmath>
#include <stdexcept>

using namespace jue;

namespace {
constexpr mpfr_prec_t P = 192;
BigReal S(const char* s) { return BigReal(std::string(s), P); }
BigReal L(double x) { return BigReal(x, P); }
PrecisionContext ctx() { return make_context(192, 1e-30); }
}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((EnsembleParams{0, 0, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((EnsembleParams{2, -1.0, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((EnsembleParams{2, 0, -1.5}.validate()), std::invalid_argument);
    CHECK_NOTHROW((EnsembleParams{2, -0.9, 3}.validate()));
    CHECK_THROWS_AS(ortho_table(kOrthoCap + 1, L(1), 0, 0, ctx()), std::invalid_argument);
    CHECK_THROWS_AS(moment(-1, L(1), 0, 0, P), std::invalid_argument);
}

TEST_CASE("moment frozen value and the λ = 0 Beta reduction") {
    // mpmath: beta(4.5, 2.5) * hyp1f1(4.5, 7, -2)
    CHECK(abs(moment(3, L(2), 0.5, 1.5, P) - S("0.006301406453083354366308797")).to_double() < 1e-26);
    for (int j = 0; j < 5; ++j)
        CHECK(abs(moment(j, L(0), 1, 2, P) - beta_fn(j + 2.0, 3.0, P)).to_double() < 1e-50);
}

TEST_CASE("moment agrees with direct weighted quadrature") {
    auto c = ctx();
    for (auto [j, lam, a, b] : {std::tuple{0, 0.5, 0.0, 0.0}, {4, 3.0, -0.5, 2.0}, {7, 1.2, 2.5, 0.3}}) {
        BigReal mu = moment(j, L(lam), a, b, P);
        BigReal q = integrate_weighted([j](const BigReal& x) { return pow(x, long(j)); }, a, b, L(lam), c);
        CHECK(abs((mu - q) / mu).to_double() < 1e-25);
    }
}

TEST_CASE("Legendre recurrence coefficients at λ = 0") {
    auto t = ortho_table(5, L(0), 0, 0, ctx());
    const double want[] = {0, 1.0 / 12, 1.0 / 15, 9.0 / 140, 4.0 / 63};
    for (int n = 1; n <= 4; ++n) CHECK(t.b_rec[n].to_double() == doctest::Approx(want[n]).epsilon(1e-15));
    for (int n = 0; n <= 5; ++n) CHECK(t.a_rec[n].to_double() == doctest::Approx(0.5).epsilon(1e-15));
    // β_4 exactly 4/63
    CHECK(abs(t.b_rec[4] - BigReal(4L, P) / 63L).to_double() < 1e-50);
}

TEST_CASE("Hankel determinant and sub-leading coefficient frozen values") {
    auto c = ctx();
    CHECK(abs(hankel_det_log(3, S("0.7"), 1, 2, c) - S("-17.78775210596126400617942")).to_double() < 1e-22);
    CHECK(abs(sub_leading(3, S("0.7"), 1, 2, c) - S("-1.294569295224678825679783")).to_double() < 1e-22);
}

TEST_CASE("Hankel at λ = 0 matches the Gamma product") {
    auto c = ctx();
    for (auto [a, b] : {std::pair{0.0, 0.0}, {1.0, 2.0}, {2.5, 0.5}})
        for (int n : {1, 4, 9})
            CHECK(abs(hankel_det_log(n, L(0), a, b, c) - log_d0(n, a, b, P)).to_double() < 1e-25);
}

TEST_CASE("orthogonality of the monic polynomials") {
    auto c = ctx();
    auto t = ortho_table(5, L(1.7), 0.5, 1.5, c);
    for (int j = 0; j <= 5; ++j)
        for (int k = j; k <= 5; ++k) {
            BigReal ip = integrate_weighted(
                [&](const BigReal& x) { return eval_poly(j, x, t) * eval_poly(k, x, t); }, 0.5, 1.5, L(1.7), c);
            if (j == k) CHECK(abs(ip / t.h[j] - 1L).to_double() < 1e-25);
            else CHECK(abs(ip / t.h[j]).to_double() < 1e-25);
        }
}

TEST_CASE("recurrence and monomial routes give the same P_n") {
    auto t = ortho_table(6, L(0.9), 1, 1, ctx());
    for (double x : {0.1, 0.55, 0.93}) {
        BigReal X = L(x);
        auto d = eval_poly_derivs(6, X, t);
        CHECK(abs(d[0] - eval_poly(6, X, t)).to_double() < 1e-40);
    }
}

TEST_CASE("D_n(conj λ) = conj D_n(λ) and real λ match the real route") {
    auto c = ctx();
    BigComplex lam(1.3, 0.8, P), lamc(1.3, -0.8, P);
    auto d = hankel_det_log(3, lam, 1, 0.5, c), e = hankel_det_log(3, lamc, 1, 0.5, c);
    CHECK(abs(d.re - e.re).to_double() < 1e-30);
    CHECK(abs(d.im + e.im).to_double() < 1e-30);
    auto r = hankel_det_log(3, BigComplex(2.0, 0.0, P), 1, 0.5, c);
    CHECK(abs(r.re - hankel_det_log(3, L(2.0), 1, 0.5, c)).to_double() < 1e-30);
    CHECK(abs(r.im).to_double() < 1e-30);
}

TEST_CASE("Toda residuals vanish") {
    auto c = ctx();
    for (int n : {1, 3, 5})
        for (double lam : {0.25, 2.5}) CHECK(toda_residuals(n, L(lam), 1, 2, c).max() < 1e-20);
}

TEST_CASE("table precision escalates as n grows") {
    auto t = ortho_table(20, L(1), 0, 0, ctx());
    CHECK(t.prec >= 24 * 20);
}
