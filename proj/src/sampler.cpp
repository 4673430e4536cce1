#include "jue/sampler.hpp"

#include "jue/numkit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jue {

std::uint64_t CounterRng::mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t chain, std::uint64_t step, std::uint64_t slot) const {
    std::uint64_t h = mix(seed);
    h = mix(h ^ chain);
    h = mix(h ^ step);
    return mix(h ^ slot);
}

double CounterRng::uniform(std::uint64_t chain, std::uint64_t step, std::uint64_t slot) const {
    return (double(bits(chain, step, slot) >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t chain, std::uint64_t step, std::uint64_t slot) const {
    double u1 = uniform(chain, step, 2 * slot), u2 = uniform(chain, step, 2 * slot + 1);
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * u2);
}

const char* sample_method_name(SampleMethod m) { return m == SampleMethod::mcmc ? "mcmc" : "matrix-model"; }

namespace {

double reflect(double x) {
    // fold onto (0,1); proposals are small so this loops at most a couple of times
    for (int i = 0; i < 8 && (x <= 0 || x >= 1); ++i) {
        if (x <= 0) x = -x;
        if (x >= 1) x = 2 - x;
    }
    return std::clamp(x, 1e-300, 1 - 1e-16);
}

}  // namespace

SampleBatch mcmc_sample(int n, double alpha, double beta, long count, std::uint64_t seed, const McmcOptions& opt) {
    if (n < 1) throw std::invalid_argument("mcmc_sample needs n >= 1");
    if (!(alpha > -1) || !(beta > -1)) throw std::invalid_argument("mcmc_sample needs alpha, beta > -1");
    if (count < 1) throw std::invalid_argument("mcmc_sample needs count >= 1");
    if (opt.chains < 1) throw std::invalid_argument("mcmc_sample needs chains >= 1");
    SampleBatch out;
    out.n = n;
    out.alpha = alpha;
    out.beta = beta;
    out.seed = seed;
    out.method = SampleMethod::mcmc;
    out.chains = static_cast<int>(std::min<long>(opt.chains, count));
    out.burn_in = opt.burn_in >= 0 ? opt.burn_in : 10000L * n;
    out.thin = opt.thin > 0 ? opt.thin : 10L * n;
    const double scale = opt.proposal_scale > 0 ? opt.proposal_scale : 0.5 / n;
    const long per = (count + out.chains - 1) / out.chains;
    CounterRng rng{seed};

    std::vector<std::vector<double>> chain_vals(out.chains);
    std::vector<long> accepted(out.chains, 0), proposed(out.chains, 0);
    parallel_for(out.chains, opt.threads ? opt.threads : default_threads(), [&](size_t ch) {
        std::vector<double> x(n);
        for (int j = 0; j < n; ++j) x[j] = (j + 0.5) / n;
        // jitter only matters if a caller hands in coincident points; kept for n = 1 symmetry
        for (int j = 0; j < n; ++j) x[j] = reflect(x[j] + 1e-3 * (rng.uniform(ch, 0, j) - 0.5) / n);
        std::uint64_t step = 1;
        long acc = 0, prop = 0;
        auto sweep = [&]() {
            for (int i = 0; i < n; ++i, ++step) {
                double y = reflect(x[i] + scale * rng.normal(ch, step, 0));
                double d = alpha * (std::log(y) - std::log(x[i])) + beta * (std::log1p(-y) - std::log1p(-x[i]));
                for (int k = 0; k < n; ++k)
                    if (k != i) d += 2 * (std::log(std::abs(y - x[k])) - std::log(std::abs(x[i] - x[k])));
                ++prop;
                if (d >= 0 || rng.uniform(ch, step, 2) < std::exp(d)) {
                    x[i] = y;
                    ++acc;
                }
            }
        };
        for (long s = 0; s < out.burn_in; ++s) sweep();
        auto& vals = chain_vals[ch];
        vals.reserve(per);
        for (long r = 0; r < per; ++r) {
            for (long s = 0; s < out.thin; ++s) sweep();
            double c = 0;
            for (double v : x) c += v;
            vals.push_back(c);
        }
        accepted[ch] = acc;
        proposed[ch] = prop;
    });
    long acc = 0, prop = 0;
    double tau = 0;
    for (int ch = 0; ch < out.chains; ++ch) {
        acc += accepted[ch];
        prop += proposed[ch];
        tau += autocorrelation_time(chain_vals[ch]);
        for (double v : chain_vals[ch])
            if (long(out.values.size()) < count) out.values.push_back(v);
    }
    tau /= out.chains;
    out.acceptance_rate = prop ? double(acc) / prop : 0;
    out.ess = out.values.size() / std::max(tau, 1.0);
    return out;
}

SampleBatch matrix_model_sample(int n, int p, int q, long count, std::uint64_t seed, unsigned threads) {
    if (n < 1 || p < n || q < n) throw std::invalid_argument("matrix_model_sample needs p, q >= n >= 1");
    if (count < 1) throw std::invalid_argument("matrix_model_sample needs count >= 1");
    SampleBatch out;
    out.n = n;
    out.alpha = p - n;
    out.beta = q - n;
    out.seed = seed;
    out.method = SampleMethod::matrix_model;
    out.values.assign(count, 0);
    CounterRng rng{seed};
    const double s = std::sqrt(0.5);
    parallel_for(count, threads ? threads : default_threads(), [&](size_t i) {
        auto gauss = [&](int rows, int cols, std::uint64_t which) {
            Eigen::MatrixXcd G(rows, cols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) {
                    std::uint64_t slot = (which << 32) | std::uint64_t(r * cols + c);
                    G(r, c) = {s * rng.normal(i, slot, 0), s * rng.normal(i, slot, 1)};
                }
            return G;
        };
        Eigen::MatrixXcd G1 = gauss(n, p, 1), G2 = gauss(n, q, 2);
        Eigen::MatrixXcd W1 = G1 * G1.adjoint();
        Eigen::MatrixXcd S = W1 + G2 * G2.adjoint();
        Eigen::MatrixXcd M = S.llt().solve(W1);
        out.values[i] = M.trace().real();
    });
    out.ess = double(count);
    out.chains = 1;
    return out;
}

namespace {

struct Sums {
    double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    double m = 0;
};

std::vector<double> kstats(const Sums& S, int m_max) {
    const double N = S.m, s1 = S.s1, s2 = S.s2, s3 = S.s3, s4 = S.s4;
    std::vector<double> k(m_max + 1, 0);
    k[1] = s1 / N;
    if (m_max >= 2) k[2] = (N * s2 - s1 * s1) / (N * (N - 1));
    if (m_max >= 3) k[3] = (2 * s1 * s1 * s1 - 3 * N * s1 * s2 + N * N * s3) / (N * (N - 1) * (N - 2));
    if (m_max >= 4)
        k[4] = (-6 * std::pow(s1, 4) + 12 * N * s1 * s1 * s2 - 3 * N * (N - 1) * s2 * s2 - 4 * N * (N + 1) * s1 * s3 +
                N * N * (N + 1) * s4) /
               (N * (N - 1) * (N - 2) * (N - 3));
    return k;
}

void add(Sums& S, double x, double w) {
    double x2 = x * x;
    S.s1 += w * x;
    S.s2 += w * x2;
    S.s3 += w * x2 * x;
    S.s4 += w * x2 * x2;
    S.m += w;
}

}  // namespace

CumulantEstimate empirical_cumulants(const std::vector<double>& values, int m_max, int blocks) {
    if (values.size() < 1000) throw std::invalid_argument("empirical_cumulants needs >= 1000 values");
    if (m_max < 1 || m_max > 4) throw std::invalid_argument("empirical_cumulants: m_max must be in 1..4");
    if (blocks < 2) throw std::invalid_argument("empirical_cumulants needs >= 2 jackknife blocks");
    // k-statistics are shift-equivariant past k_1; centring keeps the power sums tame
    double shift = 0;
    for (double v : values) shift += v;
    shift /= values.size();
    const size_t N = values.size();
    std::vector<Sums> part(blocks);
    Sums all;
    for (size_t i = 0; i < N; ++i) {
        double x = values[i] - shift;
        add(all, x, 1);
        add(part[i * blocks / N], x, 1);
    }
    CumulantEstimate est;
    est.k = kstats(all, m_max);
    est.k[1] += shift;
    std::vector<std::vector<double>> loo(blocks);
    for (int b = 0; b < blocks; ++b) {
        Sums s = all;
        s.s1 -= part[b].s1;
        s.s2 -= part[b].s2;
        s.s3 -= part[b].s3;
        s.s4 -= part[b].s4;
        s.m -= part[b].m;
        loo[b] = kstats(s, m_max);
    }
    est.se.assign(m_max + 1, 0);
    for (int m = 1; m <= m_max; ++m) {
        double mean = 0;
        for (int b = 0; b < blocks; ++b) mean += loo[b][m];
        mean /= blocks;
        double v = 0;
        for (int b = 0; b < blocks; ++b) v += (loo[b][m] - mean) * (loo[b][m] - mean);
        est.se[m] = std::sqrt(v * (blocks - 1) / blocks);
    }
    return est;
}

CumulantEstimate empirical_cumulants(const SampleBatch& b, int m_max) { return empirical_cumulants(b.values, m_max); }

double autocorrelation_time(const std::vector<double>& x) {
    const size_t N = x.size();
    if (N < 4) return 1;
    double mean = 0;
    for (double v : x) mean += v;
    mean /= N;
    double c0 = 0;
    for (double v : x) c0 += (v - mean) * (v - mean);
    if (c0 == 0) return 1;
    auto rho = [&](size_t lag) {
        double s = 0;
        for (size_t i = 0; i + lag < N; ++i) s += (x[i] - mean) * (x[i + lag] - mean);
        return s / c0;
    };
    double tau = 1;
    // Geyer: sum adjacent pairs while they stay positive
    for (size_t k = 1; 2 * k + 1 < N && k < 1000; ++k) {
        double pair = rho(2 * k - 1) + rho(2 * k);
        if (pair <= 0) break;
        tau += 2 * pair;
    }
    return tau;
}

double ks_statistic(std::vector<double> values, const std::function<double(double)>& cdf) {
    if (values.empty()) throw std::invalid_argument("ks_statistic needs values");
    std::sort(values.begin(), values.end());
    const double N = values.size();
    double d = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        double F = cdf(values[i]);
        d = std::max({d, (i + 1) / N - F, F - i / N});
    }
    return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample needs two non-empty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size()) {
        double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) ++i;
        while (j < b.size() && b[j] <= v) ++j;
        d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    return d;
}

double ks_threshold(long count) {
    if (count < 10000) throw std::invalid_argument("KS threshold needs at least 10^4 samples");
    return 1.628 / std::sqrt(double(count));
}

double ks_threshold_two_sample(long m, long n) {
    if (m < 10000 || n < 10000) throw std::invalid_argument("KS threshold needs at least 10^4 samples per side");
    return 1.628 * std::sqrt(double(m + n) / (double(m) * double(n)));
}

}  // namespace jue
