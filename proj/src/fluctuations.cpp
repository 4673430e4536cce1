#include "jue/fluctuations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jue {

double cheb_t(int k, double x) {
    if (k == 0) return 1;
    double t0 = 1, t1 = x;
    for (int j = 1; j < k; ++j) {
        double t2 = 2 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

double cheb_u(int k, double x) {
    if (k == 0) return 1;
    double u0 = 1, u1 = 2 * x;
    for (int j = 1; j < k; ++j) {
        double u2 = 2 * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

double cheb_eval(const ChebSeries& s, double x) {
    // Clenshaw on h = a_0 + Σ 2 a_k T_k
    double b1 = 0, b2 = 0;
    for (int k = s.M(); k >= 1; --k) {
        double b0 = 2 * s.a[k] + 2 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return s.a.empty() ? 0 : s.a[0] + x * b1 - b2;
}

ChebSeries cheb_coeffs(const std::function<double(double)>& h, int M, const PrecisionContext& ctx) {
    if (M < 1) throw std::invalid_argument("cheb_coeffs needs M >= 1");
    const int N = 4 * M;
    std::vector<double> th(N), hv(N);
    for (int i = 0; i < N; ++i) {
        th[i] = (i + 0.5) * M_PI / N;
        hv[i] = h(std::cos(th[i]));
        if (!std::isfinite(hv[i])) throw std::domain_error("cheb_coeffs: h is not finite at a node");
    }
    ChebSeries s;
    s.a.assign(M + 1, 0);
    for (int k = 0; k <= M; ++k) {
        long double acc = 0;
        for (int i = 0; i < N; ++i) acc += hv[i] * std::cos(k * th[i]);
        s.a[k] = double(acc / N);
    }
    double scale = 0;
    for (double v : s.a) scale = std::max(scale, std::abs(v));
    s.tail = std::max(std::abs(s.a[M]), M >= 2 ? std::abs(s.a[M - 1]) : 0.0);
    double tol = std::max(ctx.target_rel_tol, 1e-13) * std::max(scale, 1.0);
    s.slow_decay = s.tail > tol;
    return s;
}

ChebSeries density_series(const std::function<double(double)>& p, int M, const PrecisionContext& ctx) {
    return cheb_coeffs([&](double x) { return M_PI * p(x) * std::sqrt(std::max(0.0, 1 - x * x)); }, M, ctx);
}

double log_energy_distance(const ChebSeries& p, const ChebSeries& q) {
    if (p.a.empty() || q.a.empty()) throw std::invalid_argument("log_energy_distance: empty series");
    if (std::abs(p.a[0] - q.a[0]) > 1e-10 * std::max(1.0, std::abs(p.a[0])))
        throw std::invalid_argument("log_energy_distance: a_0 differ (unequal masses)");
    const int M = std::max(p.M(), q.M());
    double s = 0;
    for (int k = 1; k <= M; ++k) {
        double d = (k <= p.M() ? p.a[k] : 0) - (k <= q.M() ? q.a[k] : 0);
        s += d * d / (2 * k);
    }
    return s;
}

double phi(const ChebSeries& f) {
    if (f.a.empty()) return 0;
    if (std::abs(f.a[0]) > 1e-12) throw std::invalid_argument("phi: input is not centred (a_0 != 0)");
    double s = 0;
    for (int j = 1; j <= f.M(); ++j) s += j * f.a[j] * f.a[j] / 2;
    return s;
}

double phi_star(const ChebSeries& sigma) {
    double s = 0;
    for (int j = 1; j <= sigma.M(); ++j) s += sigma.a[j] * sigma.a[j] / (2 * j);
    return s;
}

double KappaExample::a(int n) const {
    double s = std::sqrt(1 - K * K);
    if (n == 0) return pi_kappa * (1 - s) / (K * K);
    return -pi_kappa * s / std::pow(K, n + 2) * std::pow(-1 + s, n);
}

double KappaExample::phi_star_closed() const {
    double s = std::sqrt(1 - K * K);
    double r = (-1 + s) / K;
    return -pi_kappa * pi_kappa * (1 - K * K) / (2 * std::pow(K, 4)) * std::log1p(-r * r);
}

double KappaExample::phi_star_series(double tol) const {
    long double sum = 0;
    for (int n = 1; n < 100000; ++n) {
        double an = a(n);
        long double term = (long double)an * an / (2 * n);
        sum += term;
        if (term < tol * sum) break;
    }
    return double(sum);
}

double KappaExample::density(double x) const {
    if (x <= -1 || x >= 1) return 0;
    return pi_kappa / M_PI * std::sqrt(1 - x * x) / (1 - K * K * x * x);
}

double KappaExample::h(double x) const { return pi_kappa * (1 - x * x) / (1 - K * K * x * x); }

KappaExample kappa_example(double K) {
    if (!(K > 0 && K < 1)) throw std::invalid_argument("kappa_example needs 0 < K < 1");
    KappaExample e;
    e.K = K;
    // K²/(1 - √(1-K²)) without the cancellation
    e.pi_kappa = 1 + std::sqrt(1 - K * K);
    return e;
}

double linear_statistic_variance(const std::function<double(double)>& f, double a, double b,
                                 const PrecisionContext& ctx, int M) {
    if (!(b > a)) throw std::invalid_argument("linear_statistic_variance needs a < b");
    const double m = (a + b) / 2, r = (b - a) / 2;
    ChebSeries s = cheb_coeffs([&](double t) { return f(m + r * t); }, M, ctx);
    long double v = 0;
    for (int k = 1; k <= s.M(); ++k) v += (long double)k * s.a[k] * s.a[k];
    return double(v);
}

namespace {

// f'(y) for f = a_0 + Σ 2 a_k T_k, using T_k' = k U_{k-1}
double series_derivative(const ChebSeries& f, double y) {
    double d = 0;
    for (int k = 1; k <= f.M(); ++k) d += 2 * f.a[k] * k * cheb_u(k - 1, y);
    return d;
}

int default_nodes(const ChebSeries& s) { return 2 * s.M() + 17; }

}  // namespace

double tricomi_forward(const ChebSeries& f, double x, int nodes) {
    int N = nodes > 0 ? nodes : default_nodes(f);
    const double fx = series_derivative(f, x);
    for (;; ++N) {
        // second-kind Gauss-Chebyshev: ∫ ψ √(1-y²) dy ≈ Σ π/(N+1) sin²θ_i ψ(cos θ_i)
        long double acc = 0;
        bool hit = false;
        for (int i = 1; i <= N; ++i) {
            double th = i * M_PI / (N + 1), y = std::cos(th);
            if (std::abs(x - y) < 1e-12) {
                hit = true;
                break;
            }
            double s = std::sin(th);
            acc += s * s * (series_derivative(f, y) - fx) / (x - y);
        }
        if (hit) continue;
        double regular = double(acc) * M_PI / (N + 1);
        // PV∫ √(1-y²)/(x-y) dy = π x on (-1,1)
        return (regular + fx * M_PI * x) / M_PI;
    }
}

double tricomi_inverse(const ChebSeries& g, double x, int nodes) {
    int N = nodes > 0 ? nodes : default_nodes(g);
    const double gx = cheb_eval(g, x);
    for (;; ++N) {
        long double acc = 0;
        bool hit = false;
        for (int i = 0; i < N; ++i) {
            double y = std::cos((i + 0.5) * M_PI / N);
            if (std::abs(x - y) < 1e-12) {
                hit = true;
                break;
            }
            acc += (cheb_eval(g, y) - gx) / (y - x);
        }
        if (hit) continue;
        // PV∫ dy / ((y-x)√(1-y²)) vanishes on (-1,1)
        return double(acc) / N;
    }
}

double tricomi_round_trip(const ChebSeries& f) {
    const int M = f.M();
    PrecisionContext ctx = default_context();
    ChebSeries fwd = cheb_coeffs([&](double x) { return tricomi_forward(f, x); }, M + 2, ctx);
    // fwd.a[j] = j a_j; centre it and send it back
    ChebSeries g = fwd;
    g.a[0] = 0;
    // project (1/π)PV∫ g/((y-x)√) = Σ 2 g_j U_{j-1} onto U_{j-1} with the second-kind rule
    const int N = 4 * (M + 2);
    std::vector<double> th(N), val(N);
    for (int i = 0; i < N; ++i) {
        th[i] = (i + 1) * M_PI / (N + 1);
        val[i] = tricomi_inverse(g, std::cos(th[i]));
    }
    double worst = 0;
    for (int j = 1; j <= g.M(); ++j) {
        long double acc = 0;
        for (int i = 0; i < N; ++i) acc += val[i] * std::sin(th[i]) * std::sin(j * th[i]);
        double coef = double(acc) * 2 / (N + 1);   // coefficient of U_{j-1}
        double aj = coef / 2 / j;
        double want = j <= M ? f.a[j] : 0.0;
        worst = std::max(worst, std::abs(aj - want));
    }
    return worst;
}

}  // namespace jue
