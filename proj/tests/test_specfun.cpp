#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jue/specfun.hpp"

#include <cmath>
#include <stdexcept>

using namespace jue;

namespace {
constexpr mpfr_prec_t P = 192;
BigReal S(const char* s) { return BigReal(std::string(s), P); }
double rel(const BigReal& got, const BigReal& want) { return abs((got - want) / want).to_double(); }
}  // namespace

TEST_CASE("log_gamma at half-integers and integers") {
    BigReal sqrtpi = sqrt(BigReal::pi(P));
    CHECK(rel(log_gamma(0.5, P), log(sqrtpi)) < 1e-50);
    CHECK(rel(log_gamma(10.0, P), log(BigReal(362880L, P))) < 1e-50);
    // Γ(7/2) = 15√π/8
    CHECK(rel(log_gamma(3.5, P), log(sqrtpi * 15L / 8L)) < 1e-50);
    CHECK_THROWS_AS(log_gamma(-1.0, P), std::domain_error);
    CHECK_THROWS_AS(log_gamma(0.0, P), std::domain_error);
}

TEST_CASE("beta_fn examples") {
    CHECK(rel(beta_fn(1.5, 1.5, P), BigReal::pi(P) / 8L) < 1e-50);
    CHECK(rel(beta_fn(2.0, 3.0, P), BigReal(1L, P) / 12L) < 1e-50);
    CHECK_THROWS(beta_fn(-0.5, 1.0, P));
}

TEST_CASE("kummer_m frozen complex value") {
    // mpmath hyp1f1(1.3, 2.7, -3.1+0.4j) at 30 digits
    BigComplex z(-3.1, 0.4, P);
    auto m = kummer_m(BigReal(1.3, P), BigReal(2.7, P), z, P);
    CHECK(abs(m.re - S("0.301094690256569888979057")).to_double() < 1e-23);
    CHECK(abs(m.im - S("0.03586520663667211744316048")).to_double() < 1e-23);
}

TEST_CASE("kummer_m elementary cases") {
    for (double x : {-7.0, -0.3, 0.0, 2.5}) {
        BigReal z(x, P);
        CHECK(abs(kummer_m_real(BigReal(2.25, P), BigReal(2.25, P), z, P) - exp(z)).to_double() <
              1e-40 * std::max(1.0, std::exp(x)));
        if (x != 0) {
            BigReal want = (exp(z) - 1L) / z;
            CHECK(rel(kummer_m_real(BigReal(1L, P), BigReal(2L, P), z, P), want) < 1e-40);
        }
    }
}

TEST_CASE("Kummer transformation holds under heavy cancellation") {
    // M(a;b;z) = e^z M(b-a;b;-z); at z = -30 the direct series cancels ~13 digits
    for (auto [a, b] : {std::pair{1.5, 3.25}, {0.7, 4.2}, {3.0, 5.5}}) {
        BigReal z(-30.0, P), A(a, P), B(b, P);
        BigReal lhs = kummer_m_real(A, B, z, P);
        BigReal rhs = exp(z) * kummer_m_real(B - A, B, -z, P);
        CHECK(rel(lhs, rhs) < 1e-40);
    }
}

TEST_CASE("Kummer contiguous relation in a") {
    // (b-a)M(a-1) + (2a-b+z)M(a) - aM(a+1) = 0
    const double b = 3.4;
    for (double a : {1.2, 2.7}) {
        for (double x : {-4.0, 0.8}) {
            BigReal z(x, P), A(a, P), B(b, P);
            auto M = [&](const BigReal& s) { return kummer_m_real(s, B, z, P); };
            BigReal res = (B - A) * M(A - 1L) + (2L * A - B + z) * M(A) - A * M(A + 1L);
            CHECK(abs(res).to_double() < 1e-40);
        }
    }
}

TEST_CASE("bessel_i frozen values and the half-order closed form") {
    BigReal x(0.5, P);
    CHECK(abs(bessel_i(0, x) - S("1.063483370741323519263184")).to_double() < 1e-23);
    CHECK(abs(bessel_i(1, x) - S("0.2578943053908963163624797")).to_double() < 1e-23);
    // I_{1/2}(x) = √(2/(πx)) sinh x
    for (double v : {0.3, 2.0, 7.5}) {
        BigReal t(v, P);
        BigReal sh = (exp(t) - exp(-t)) / 2L;
        CHECK(rel(bessel_i(0.5, t), sqrt(2L / (BigReal::pi(P) * t)) * sh) < 1e-40);
    }
}

TEST_CASE("log_d0 frozen value and the n = 1 reduction") {
    CHECK(abs(log_d0(5, 2.5, 0.5, P) - S("-41.75152960623204729441643")).to_double() < 1e-22);
    // D_1(0) = μ_0 = B(α+1, β+1)
    for (auto [a, b] : {std::pair{0.0, 0.0}, {1.0, 2.0}, {-0.5, 0.5}}) {
        CHECK(abs(log_d0(1, a, b, P) - log(beta_fn(a + 1, b + 1, P))).to_double() < 1e-45);
    }
}
