#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace jue {

// Counter-based generator: every draw is a pure function of (seed, chain, step, slot),
// so batches do not depend on thread count or scheduling.
struct CounterRng {
    std::uint64_t seed = 0;
    static std::uint64_t mix(std::uint64_t x);
    std::uint64_t bits(std::uint64_t chain, std::uint64_t step, std::uint64_t slot) const;
    double uniform(std::uint64_t chain, std::uint64_t step, std::uint64_t slot) const;   // (0,1)
    // standard normal from slots (2·slot, 2·slot+1) by Box-Muller
    double normal(std::uint64_t chain, std::uint64_t step, std::uint64_t slot) const;
};

enum class SampleMethod { mcmc, matrix_model };

struct SampleBatch {
    std::vector<double> values;
    int n = 0;
    double alpha = 0, beta = 0;
    std::uint64_t seed = 0;
    SampleMethod method = SampleMethod::mcmc;
    double acceptance_rate = 0;   // mcmc only
    double ess = 0;               // effective sample size estimate
    int chains = 1;
    long burn_in = 0, thin = 0;   // in sweeps
};

struct McmcOptions {
    long burn_in = -1;    // sweeps per chain; -1 = 10^4 n
    long thin = -1;       // sweeps between retained states; -1 = 10 n
    int chains = 16;
    unsigned threads = 0;
    double proposal_scale = -1;   // -1 = 0.5/n
};

// Random-walk Metropolis on (0,1)^n for Δ(x)² ∏ x^α (1-x)^β, c = Σ x_j per retained state.
SampleBatch mcmc_sample(int n, double alpha, double beta, long count, std::uint64_t seed,
                        const McmcOptions& opt = {});

// c = tr((W1+W2)^{-1} W1), W1 = G1 G1*, W2 = G2 G2*, G1 n×p and G2 n×q complex Gaussian;
// α = p - n, β = q - n.
SampleBatch matrix_model_sample(int n, int p, int q, long count, std::uint64_t seed, unsigned threads = 0);

struct CumulantEstimate {
    std::vector<double> k;    // k[1..m_max]
    std::vector<double> se;   // delete-a-block jackknife standard errors
};

// k-statistics; std::invalid_argument for fewer than 1000 values or m_max outside 1..4
CumulantEstimate empirical_cumulants(const std::vector<double>& values, int m_max = 4, int blocks = 100);
CumulantEstimate empirical_cumulants(const SampleBatch& b, int m_max = 4);

// integrated autocorrelation time of a sequence (initial positive sequence)
double autocorrelation_time(const std::vector<double>& x);

// sup |F_n - F| against a CDF
double ks_statistic(std::vector<double> values, const std::function<double(double)>& cdf);
double ks_two_sample(std::vector<double> a, std::vector<double> b);
// asymptotic 1% points; require at least 10^4 values per sample
double ks_threshold(long count);
double ks_threshold_two_sample(long m, long n);

const char* sample_method_name(SampleMethod m);

}  // namespace jue
