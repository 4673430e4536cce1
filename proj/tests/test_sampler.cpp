#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jue/density.hpp"
#include "jue/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

using namespace jue;

TEST_CASE("counter RNG is a pure function of its counters") {
    CounterRng a{42}, b{42}, c{43};
    CHECK(a.bits(1, 2, 3) == b.bits(1, 2, 3));
    CHECK(a.bits(1, 2, 3) != c.bits(1, 2, 3));
    CHECK(a.bits(1, 2, 3) != a.bits(1, 2, 4));
    double s = 0, s2 = 0, lo = 1, hi = 0;
    const int N = 200000;
    for (int i = 0; i < N; ++i) {
        double u = a.uniform(0, i, 0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        double z = a.normal(0, i, 1);
        s += z;
        s2 += z * z;
    }
    CHECK(lo > 0);
    CHECK(hi < 1);
    CHECK(std::abs(s / N) < 0.01);
    CHECK(s2 / N == doctest::Approx(1).epsilon(0.01));
}

TEST_CASE("KS helpers") {
    std::vector<double> u(20000);
    CounterRng r{7};
    for (size_t i = 0; i < u.size(); ++i) u[i] = r.uniform(0, i, 0);
    double d = ks_statistic(u, [](double x) { return std::clamp(x, 0.0, 1.0); });
    CHECK(d < ks_threshold(20000));
    CHECK(ks_threshold(100000) == doctest::Approx(1.628 / std::sqrt(1e5)));
    CHECK(ks_threshold_two_sample(10000, 40000) == doctest::Approx(1.628 * std::sqrt(5e4 / 4e8)));
    CHECK_THROWS_AS(ks_threshold(9999), std::invalid_argument);
    std::vector<double> shifted(u);
    for (double& x : shifted) x += 0.05;
    CHECK(ks_two_sample(u, shifted) == doctest::Approx(0.05).epsilon(0.1));
}

TEST_CASE("autocorrelation time of iid and AR(1) sequences") {
    CounterRng r{3};
    const int N = 200000;
    std::vector<double> iid(N), ar(N);
    double x = 0;
    for (int i = 0; i < N; ++i) {
        iid[i] = r.normal(0, i, 0);
        x = 0.5 * x + r.normal(1, i, 0);
        ar[i] = x;
    }
    CHECK(autocorrelation_time(iid) == doctest::Approx(1).epsilon(0.1));
    // (1+φ)/(1-φ) = 3
    CHECK(autocorrelation_time(ar) == doctest::Approx(3).epsilon(0.1));
}

TEST_CASE("empirical cumulants of a normal sample") {
    CounterRng r{11};
    std::vector<double> v(100000);
    for (size_t i = 0; i < v.size(); ++i) v[i] = 2 + 3 * r.normal(0, i, 0);
    auto k = empirical_cumulants(v, 4);
    CHECK(std::abs(k.k[1] - 2) < 4 * k.se[1]);
    CHECK(std::abs(k.k[2] - 9) < 4 * k.se[2]);
    CHECK(std::abs(k.k[3]) < 4 * k.se[3]);
    CHECK(std::abs(k.k[4]) < 4 * k.se[4]);
    CHECK_THROWS_AS(empirical_cumulants(std::vector<double>(999, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(empirical_cumulants(v, 5), std::invalid_argument);
}

TEST_CASE("MCMC at n = 1 samples the Beta marginal") {
    auto b = mcmc_sample(1, 1, 2, 20000, 5);
    double m = std::accumulate(b.values.begin(), b.values.end(), 0.0) / b.values.size();
    // Beta(2,3) mean 2/5
    CHECK(m == doctest::Approx(0.4).epsilon(0.02));
    CHECK(std::all_of(b.values.begin(), b.values.end(), [](double v) { return v > 0 && v < 1; }));
}

TEST_CASE("MCMC matches the exact CDF at n = 2") {
    auto b = mcmc_sample(2, 1, 2, 10000, 2024);
    CHECK(b.values.size() == 10000);
    CHECK(b.thin == 20);
    CHECK(b.acceptance_rate > 0.2);
    CHECK(b.acceptance_rate < 0.9);
    ExactCdf F(exact_piecewise(2, 1, 2));
    CHECK(ks_statistic(b.values, F) < ks_threshold(10000));
    auto k = empirical_cumulants(b);
    double mean = 2.0 * 3 / 7;   // n(n+α)/(2n+α+β)
    CHECK(std::abs(k.k[1] - mean) < 4 * k.se[1]);
}

TEST_CASE("batches do not depend on the thread count") {
    McmcOptions one, three;
    one.threads = 1;
    three.threads = 3;
    one.burn_in = three.burn_in = 500;
    auto a = mcmc_sample(3, 0.5, 1, 2000, 99, one), b = mcmc_sample(3, 0.5, 1, 2000, 99, three);
    CHECK(a.values == b.values);
    auto c = mcmc_sample(3, 0.5, 1, 2000, 100, one);
    CHECK(a.values != c.values);
    auto m1 = matrix_model_sample(2, 3, 4, 1000, 8, 1), m3 = matrix_model_sample(2, 3, 4, 1000, 8, 3);
    CHECK(m1.values == m3.values);
}

TEST_CASE("matrix model matches the exact CDF") {
    auto b = matrix_model_sample(2, 2, 2, 10000, 17);
    CHECK(b.method == SampleMethod::matrix_model);
    CHECK(b.alpha == 0);
    CHECK(b.beta == 0);
    ExactCdf F(exact_piecewise(2, 0, 0));
    CHECK(ks_statistic(b.values, F) < ks_threshold(10000));
    CHECK_THROWS(matrix_model_sample(3, 2, 4, 10, 1));
    CHECK(std::string(sample_method_name(SampleMethod::matrix_model)) == "matrix-model");
}
