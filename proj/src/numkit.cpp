#include "jue/numkit.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

namespace jue {

double PrecisionContext::tolerance_floor(int bits) { return std::ldexp(1.0, -bits + 8); }

PrecisionContext PrecisionContext::escalated() const {
    PrecisionContext c = *this;
    c.mantissa_bits *= 2;
    return c;
}

PrecisionContext make_context(int mantissa_bits, double target_rel_tol, int max_escalations) {
    if (mantissa_bits < 64)
        throw std::invalid_argument("mantissa_bits must be at least 64");
    if (!(target_rel_tol > 0))
        throw std::invalid_argument("target_rel_tol must be positive");
    if (target_rel_tol < PrecisionContext::tolerance_floor(mantissa_bits)) {
        std::ostringstream os;
        os << "tolerance " << target_rel_tol << " is below the floor "
           << PrecisionContext::tolerance_floor(mantissa_bits) << " for " << mantissa_bits << " bits";
        throw std::invalid_argument(os.str());
    }
    if (max_escalations < 0) throw std::invalid_argument("max_escalations must be >= 0");
    return PrecisionContext{mantissa_bits, target_rel_tol, max_escalations};
}

PrecisionContext default_context() {
    int bits = 192;
    if (const char* env = std::getenv("JUE_PRECISION_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 64 && v <= 1 << 20) bits = static_cast<int>(v);
    }
    double tol = std::max(1e-30, PrecisionContext::tolerance_floor(bits) * 16);
    return make_context(bits, tol);
}

void shifted_jacobi_recurrence(int m, double alpha, double beta, mpfr_prec_t prec,
                               std::vector<BigReal>& a, std::vector<BigReal>& b) {
    // Jacobi on [-1,1] with (1-t)^A (1+t)^B, A = beta, B = alpha, then x = (1+t)/2.
    BigReal A(beta, prec), B(alpha, prec);
    a.assign(m, BigReal(prec));
    b.assign(m, BigReal(prec));
    for (int k = 0; k < m; ++k) {
        BigReal s = A + B + 2L * k;
        BigReal at = (k == 0) ? (B - A) / (s + 2L) : (B * B - A * A) / (s * (s + 2L));
        a[k] = (at + 1L) / 2L;
        if (k == 0) {
            b[0] = exp(lgamma_pos(B + 1L) + lgamma_pos(A + 1L) - lgamma_pos(A + B + 2L));
        } else if (k == 1) {
            // the general formula is 0/0 here when A + B = -1
            BigReal s2 = A + B + 2L;
            b[1] = (A + 1L) * (B + 1L) * 4L / (s2 * s2 * (s2 + 1L)) / 4L;
        } else {
            BigReal num = (A + long(k)) * (B + long(k)) * (A + B + long(k)) * long(4 * k);
            BigReal den = s * s * (s + 1L) * (s - 1L);
            b[k] = num / den / 4L;
        }
    }
}

GaussJacobiRule gauss_jacobi(int m, double alpha, double beta, mpfr_prec_t prec) {
    if (m < 1) throw std::invalid_argument("gauss_jacobi needs m >= 1");
    if (!(alpha > -1 && beta > -1)) throw std::invalid_argument("Jacobi exponents must exceed -1");
    std::vector<BigReal> a, b;
    shifted_jacobi_recurrence(m, alpha, beta, prec, a, b);

    Eigen::VectorXd diag(m), off(std::max(m - 1, 0));
    for (int k = 0; k < m; ++k) diag[k] = a[k].to_double();
    for (int k = 1; k < m; ++k) off[k - 1] = std::sqrt(b[k].to_double());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    Eigen::VectorXd guess = es.eigenvalues();

    BigReal hm1 = b[0];
    for (int k = 1; k < m; ++k) hm1 *= b[k];

    GaussJacobiRule rule;
    rule.m = m;
    rule.alpha = alpha;
    rule.beta = beta;
    rule.nodes.reserve(m);
    rule.weights.reserve(m);
    for (int i = 0; i < m; ++i) {
        BigReal x(std::clamp(guess[i], 1e-300, 1.0 - 1e-16), prec);
        BigReal pm(prec), pm1(prec), dpm(prec);
        for (int it = 0; it < 200; ++it) {
            // monic p_k and p_k' by the recurrence
            BigReal p0(1L, prec), p1 = x - a[0], d0(prec), d1(1L, prec);
            if (m == 1) { pm1 = p0; pm = p1; dpm = d1; }
            for (int k = 1; k < m; ++k) {
                BigReal p2 = (x - a[k]) * p1 - b[k] * p0;
                BigReal d2 = p1 + (x - a[k]) * d1 - b[k] * d0;
                p0 = std::move(p1); p1 = std::move(p2);
                d0 = std::move(d1); d1 = std::move(d2);
            }
            if (m > 1) { pm1 = p0; pm = p1; dpm = d1; }
            BigReal dx = pm / dpm;
            x -= dx;
            if (dx.is_zero() || dx.log2_abs() < x.log2_abs() - double(prec) + 4) break;
        }
        // final evaluation at the converged node
        BigReal p0(1L, prec), p1 = x - a[0], d0(prec), d1(1L, prec);
        for (int k = 1; k < m; ++k) {
            BigReal p2 = (x - a[k]) * p1 - b[k] * p0;
            BigReal d2 = p1 + (x - a[k]) * d1 - b[k] * d0;
            p0 = std::move(p1); p1 = std::move(p2);
            d0 = std::move(d1); d1 = std::move(d2);
        }
        rule.weights.push_back(hm1 / (p0 * d1));
        rule.nodes.push_back(std::move(x));
    }
    return rule;
}

std::shared_ptr<const GaussJacobiRule> QuadratureCache::get(int m, double alpha, double beta,
                                                            mpfr_prec_t prec) {
    auto key = std::make_tuple(m, alpha, beta, static_cast<long>(prec));
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = rules_.find(key);
        if (it != rules_.end()) return it->second;
    }
    auto rule = std::make_shared<const GaussJacobiRule>(gauss_jacobi(m, alpha, beta, prec));
    std::lock_guard<std::mutex> lk(mu_);
    return rules_.emplace(key, rule).first->second;
}

QuadratureResult integrate_weighted(const ComplexIntegrand& f, double alpha, double beta,
                                    const BigComplex& lambda, const PrecisionContext& ctx,
                                    QuadratureCache* cache, int start_nodes, int max_doublings) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    const BigComplex lam = set_precision(lambda, prec);
    BigReal tol(ctx.target_rel_tol, prec);

    auto level = [&](int m, BigReal& scale) {
        std::shared_ptr<const GaussJacobiRule> rule =
            cache ? cache->get(m, alpha, beta, prec)
                  : std::make_shared<const GaussJacobiRule>(gauss_jacobi(m, alpha, beta, prec));
        BigComplex s(prec);
        scale = BigReal(prec);
        for (int i = 0; i < m; ++i) {
            const BigReal& x = rule->nodes[i];
            BigComplex term = f(x) * exp(-(lam * x)) * rule->weights[i];
            scale += abs(term);
            s += term;
        }
        return s;
    };

    BigReal scale(prec);
    int m = start_nodes;
    BigComplex prev = level(m, scale);
    for (int d = 0; d < max_doublings; ++d) {
        m *= 2;
        BigComplex cur = level(m, scale);
        BigReal diff = abs(cur - prev);
        if (diff <= tol * scale) return QuadratureResult{cur, prev, m};
        prev = std::move(cur);
    }
    std::ostringstream os;
    os << "integrate_weighted did not converge after " << max_doublings << " doublings";
    throw NumericError(os.str());
}

BigReal integrate_weighted(const RealIntegrand& f, double alpha, double beta, const BigReal& lambda,
                           const PrecisionContext& ctx, QuadratureCache* cache) {
    ComplexIntegrand g = [&](const BigReal& x) { return BigComplex(f(x)); };
    return integrate_weighted(g, alpha, beta, BigComplex(lambda), ctx, cache).value.re;
}

namespace {

template <class V>
struct DiffKernel {
    static V central(const std::function<V(const BigReal&)>& g, const BigReal& x, const BigReal& h,
                     int order, const V* mid) {
        if (order == 1) return (g(x + h) - g(x - h)) / (h * 2L);
        return (g(x + h) - (*mid) * 2L + g(x - h)) / (h * h);
    }
};

template <class V>
std::pair<V, BigReal> richardson(const std::function<V(const BigReal&)>& g, const BigReal& x0,
                                 int order, const PrecisionContext& ctx) {
    if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(x0.prec(), ctx.mantissa_bits + 64);
    BigReal x(x0, prec);
    BigReal h = max(abs(x), BigReal(1L, prec));
    h = ldexp(h, -static_cast<long>(ctx.mantissa_bits / (order + 2)));
    V mid = g(x);
    V d1 = DiffKernel<V>::central(g, x, h, order, &mid);
    V d2 = DiffKernel<V>::central(g, x, h / 2L, order, &mid);
    V d3 = DiffKernel<V>::central(g, x, h / 4L, order, &mid);
    V r1 = (d2 * 4L - d1) / 3L;
    V r2 = (d3 * 4L - d2) / 3L;
    V r = (r2 * 16L - r1) / 15L;
    BigReal err = abs(r - r2);
    return {std::move(r), std::move(err)};
}

}  // namespace

DerivativeResult derivative(const std::function<BigReal(const BigReal&)>& g, const BigReal& x0,
                            int order, const PrecisionContext& ctx) {
    auto [v, e] = richardson<BigReal>(g, x0, order, ctx);
    return DerivativeResult{std::move(v), std::move(e)};
}

ComplexDerivativeResult derivative_complex(const std::function<BigComplex(const BigReal&)>& g,
                                   const BigReal& x0, int order, const PrecisionContext& ctx) {
    auto [v, e] = richardson<BigComplex>(g, x0, order, ctx);
    return ComplexDerivativeResult{std::move(v), std::move(e)};
}

std::vector<BigReal> solve_linear(std::vector<std::vector<BigReal>> A, std::vector<BigReal> y) {
    const size_t n = y.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; ++r)
            if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
        if (A[piv][c].is_zero()) throw NumericError("singular linear system");
        std::swap(A[piv], A[c]);
        std::swap(y[piv], y[c]);
        for (size_t r = c + 1; r < n; ++r) {
            BigReal f = A[r][c] / A[c][c];
            for (size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            y[r] -= f * y[c];
        }
    }
    std::vector<BigReal> x(n, BigReal(y.empty() ? 64 : y[0].prec()));
    for (size_t i = n; i-- > 0;) {
        BigReal s = y[i];
        for (size_t k = i + 1; k < n; ++k) s -= A[i][k] * x[k];
        x[i] = s / A[i][i];
    }
    return x;
}

std::vector<BigReal> least_squares(const std::vector<std::vector<BigReal>>& A,
                                   const std::vector<BigReal>& y) {
    const size_t rows = A.size(), cols = A.empty() ? 0 : A[0].size();
    const mpfr_prec_t prec = y.empty() ? 64 : y[0].prec();
    std::vector<std::vector<BigReal>> N(cols, std::vector<BigReal>(cols, BigReal(prec)));
    std::vector<BigReal> r(cols, BigReal(prec));
    for (size_t i = 0; i < cols; ++i) {
        for (size_t j = 0; j < cols; ++j)
            for (size_t k = 0; k < rows; ++k) N[i][j] += A[k][i] * A[k][j];
        for (size_t k = 0; k < rows; ++k) r[i] += A[k][i] * y[k];
    }
    return solve_linear(std::move(N), std::move(r));
}

std::string exact_key(const BigReal& x) {
    std::vector<char> buf(x.prec() / 3 + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%Ra", x.get());
    return std::string(buf.data()) + "/" + std::to_string(x.prec());
}

unsigned default_threads() {
    unsigned t = std::thread::hardware_concurrency();
    return t == 0 ? 1 : t;
}

void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& body) {
    if (threads == 0) threads = default_threads();
    threads = static_cast<unsigned>(std::min<size_t>(threads, count));
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace jue
