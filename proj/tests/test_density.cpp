#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jue/density.hpp"

#include <cmath>
#include <stdexcept>

using namespace jue;

TEST_CASE("ten tabulated cases are available") {
    CHECK(appendix_cases().size() == 10);
    for (int n = 2; n <= 5; ++n) CHECK(has_exact_density(n, 0, 0));
    for (int n = 2; n <= 4; ++n) {
        CHECK(has_exact_density(n, 1, 1));
        CHECK(has_exact_density(n, 1, 2));
    }
    CHECK_FALSE(has_exact_density(6, 0, 0));
    CHECK_FALSE(has_exact_density(2, 0.5, 0.5));
    CHECK_THROWS_AS(exact_piecewise(6, 0, 0), std::invalid_argument);
}

TEST_CASE("point values by hand") {
    // 2c³ on [0,1]
    CHECK(exact_piecewise(2, 0, 0).eval(mpq_class(1, 2)) == mpq_class(1, 4));
    // (12/7)(2-c)⁵(c²+3c-3) at c = 3/2
    CHECK(exact_piecewise(2, 1, 1).eval(mpq_class(3, 2)) == mpq_class(45, 224));
    auto p = exact_piecewise(3, 0, 0);
    CHECK(p(-0.5) == 0);
    CHECK(p(3.5) == 0);
}

TEST_CASE("every stored density passes its invariants") {
    for (const auto& cs : appendix_cases()) {
        CAPTURE(cs.n);
        CAPTURE(cs.alpha);
        CAPTURE(cs.beta);
        auto p = exact_piecewise(cs.n, cs.alpha, cs.beta);
        auto inv = check_invariants(p);
        CHECK(inv.mass == 1);
        CHECK(inv.continuous);
        CHECK(inv.endpoints_zero);
        CHECK(inv.min_on_scan >= 0);
        if (cs.alpha == cs.beta) CHECK(inv.symmetric);
        CHECK(inv.ok());
    }
}

TEST_CASE("mean and variance equal -b_1 and b_2 exactly") {
    for (auto [n, a, b] : {std::tuple{2, 0, 0}, {3, 0, 0}, {2, 1, 1}, {2, 1, 2}, {4, 1, 2}}) {
        auto p = exact_piecewise(n, a, b);
        auto bc = b_closed_exact(n, a, b);
        CHECK(p.mean() == -bc[0]);
        CHECK(p.variance() == bc[1]);
    }
}

TEST_CASE("printed orientation of the (1,1,4) middle factor breaks the mass") {
    auto p = exact_piecewise(4, 1, 1, true);
    CHECK(p.mass() != 1);
    CHECK(std::abs(p.mass().get_d() - 1) < 1e-3);
}

TEST_CASE("exact CDF") {
    auto p = exact_piecewise(2, 0, 0);
    ExactCdf F(p);
    CHECK(F(-1) == 0);
    CHECK(F(0) == 0);
    CHECK(F(2) == doctest::Approx(1).epsilon(1e-15));
    CHECK(F(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(F(0.5) == doctest::Approx(0.5 * std::pow(0.5, 4)).epsilon(1e-15));
    double prev = 0;
    for (int i = 1; i <= 100; ++i) {
        double v = F(0.02 * i);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("grids") {
    auto g = exact_grid(exact_piecewise(3, 1, 2), 301);
    CHECK(g.c.size() == 301);
    CHECK(g.c.front() == 0);
    CHECK(g.c.back() == 3);
    CHECK(g.trapezoid_mass() == doctest::Approx(1).epsilon(1e-4));
    auto e = edgeworth_grid(3, 1, 2, 4, 301);
    CHECK(e.method == DensityMethod::edgeworth);
    CHECK(e.trapezoid_mass() == doctest::Approx(1).epsilon(2e-2));
    CHECK(std::string(method_name(DensityMethod::monte_carlo)) == "monte-carlo");
}

TEST_CASE("Edgeworth order 4 is within 2% of the peak at n = 4") {
    for (auto [a, b] : {std::pair{0, 0}, {1, 1}}) {
        auto p = exact_piecewise(4, a, b);
        double sup = 0, peak = 0;
        for (int i = 0; i <= 900; ++i) {
            double c = 0.2 + 3.6 * i / 900.0;
            peak = std::max(peak, p(c));
            sup = std::max(sup, std::abs(edgeworth_density(c, 4, a, b, 4) - p(c)));
        }
        CHECK(sup < 0.02 * peak);
    }
}

TEST_CASE("Edgeworth mean and variance come from b_1, b_2") {
    // order 2 is the Gaussian N(-b_1, b_2)
    double m = 1.0, v = 1.0 / 15;
    for (double c : {0.4, 1.0, 1.7})
        CHECK(edgeworth_density(c, 2, 0, 0, 2) ==
              doctest::Approx(std::exp(-(c - m) * (c - m) / (2 * v)) / std::sqrt(2 * M_PI * v)).epsilon(1e-12));
}

TEST_CASE("Fourier inversion reproduces tabulated values") {
    FourierInverter f2(2, 0, 0);
    CHECK(std::abs(f2.at(0.5).value - 0.25) < 1e-4);
    auto p = exact_piecewise(3, 1, 2);
    FourierInverter f3(3, 1, 2);
    for (double c : {0.7, 1.5, 2.2}) {
        auto r = f3.at(c);
        CHECK(std::abs(r.value - p(c)) < 1e-4);
        CHECK(r.tail_bound < 1e-4);
    }
}

TEST_CASE("Paley-Wiener bound along horizontal lines") {
    auto ctx = make_context(128, 1e-20);
    for (double y : {-2.0, 1.0}) {
        auto s = support_check(2, 1, 1, y, ctx);
        CHECK(s.pass);
        CHECK(s.worst_ratio <= 1.0);
    }
}

TEST_CASE("log-concavity where α, β > 0") {
    for (auto [n, a, b] : {std::tuple{2, 1, 1}, {3, 1, 2}, {4, 1, 1}}) {
        auto lc = log_concavity_check(exact_piecewise(n, a, b), 1e-3);
        CHECK(lc.asserted);
        CHECK(lc.pass);
    }
    CHECK_FALSE(log_concavity_check(exact_piecewise(2, 0, 0), 1e-3).asserted);
}

TEST_CASE("printed Legendre Edgeworth form differs from the type-A expansion") {
    auto r = compare_legendre_edgeworth(3);
    CHECK(r.sup_vs_order4 > 0);
    CHECK(r.sup_vs_exact > 0);
}
