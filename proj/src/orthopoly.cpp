#include "jue/orthopoly.hpp"

#include "jue/specfun.hpp"

#include <cmath>
#include <sstream>

namespace jue {

void validate_weight(double alpha, double beta) {
    if (!(alpha > -1) || !(beta > -1) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw std::invalid_argument("weight exponents must satisfy alpha, beta > -1");
}

void EnsembleParams::validate() const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    validate_weight(alpha, beta);
}

namespace {

BigComplex to_t(const BigReal& x, const BigComplex*) { return BigComplex(x); }
BigReal to_t(const BigReal& x, const BigReal*) { return x; }

template <class T>
T from_real(const BigReal& x) { return to_t(x, static_cast<const T*>(nullptr)); }

BigComplex kummer_t(const BigReal& a, const BigReal& b, const BigComplex& z, mpfr_prec_t p) {
    return kummer_m(a, b, z, p);
}
BigReal kummer_t(const BigReal& a, const BigReal& b, const BigReal& z, mpfr_prec_t p) {
    return kummer_m_real(a, b, z, p);
}

template <class T>
T moment_direct(int j, const T& lambda, double alpha, double beta, mpfr_prec_t prec) {
    BigReal a(alpha, prec), b(beta, prec);
    BigReal B = beta_fn(a + long(j + 1), b + 1L);
    if (abs(lambda).is_zero()) return from_real<T>(B);
    return kummer_t(a + long(j + 1), a + b + long(j + 2), -lambda, prec) * B;
}

// μ_0..μ_{count-1}; forward recurrence when |λ| dominates the index range,
// where λμ_{j+2} = (j+α+β+2+λ)μ_{j+1} - (j+α+1)μ_j is stable
template <class T>
std::vector<T> moments(int count, const T& lambda, double alpha, double beta, mpfr_prec_t prec) {
    std::vector<T> mu;
    mu.reserve(count);
    const double lam_abs = abs(lambda).to_double();
    if (count > 2 && lam_abs >= 2.0 * count) {
        const mpfr_prec_t wp = prec + 32;
        T lam = set_precision(lambda, wp);
        BigReal a(alpha, wp), b(beta, wp);
        std::vector<T> w;
        w.push_back(moment_direct(0, lam, alpha, beta, wp));
        w.push_back(moment_direct(1, lam, alpha, beta, wp));
        for (int j = 0; j + 2 < count; ++j)
            w.push_back(((lam + (a + b + long(j + 2))) * w[j + 1] - w[j] * (a + long(j + 1))) / lam);
        for (auto& v : w) mu.push_back(set_precision(v, prec));
        return mu;
    }
    for (int j = 0; j < count; ++j) mu.push_back(moment_direct(j, lambda, alpha, beta, prec));
    return mu;
}

struct Breakdown {
    int index;
};

template <class T>
OrthoTableT<T> build_once(int N, const T& lambda_in, double alpha, double beta, mpfr_prec_t W) {
    using jue::abs;
    using jue::log;
    const int M = N + 2;
    OrthoTableT<T> t;
    t.N = N;
    t.alpha = alpha;
    t.beta = beta;
    t.prec = W;
    t.lambda = set_precision(lambda_in, W);
    t.mu = moments<T>(2 * M - 1, t.lambda, alpha, beta, W);

    std::vector<std::vector<T>> L(M, std::vector<T>(M, from_real<T>(BigReal(W))));
    std::vector<T> D(M, from_real<T>(BigReal(W)));
    for (int i = 0; i < M; ++i) {
        for (int j = 0; j <= i; ++j) {
            T s = t.mu[i + j];
            for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k] * D[k];
            if (i == j) {
                if constexpr (is_complex_scalar<T>::value) {
                    if (s.is_zero() || abs(s).log2_abs() < abs(t.mu[2 * i]).log2_abs() - double(W) + 16)
                        throw Breakdown{i};
                } else {
                    if (s.sign() <= 0) throw Breakdown{i};
                }
                D[i] = s;
                L[i][i] = from_real<T>(BigReal(1L, W));
            } else {
                L[i][j] = s / D[j];
            }
        }
    }
    t.coeff.assign(M, std::vector<T>(M, from_real<T>(BigReal(W))));
    for (int i = 0; i < M; ++i) {
        t.coeff[i][i] = from_real<T>(BigReal(1L, W));
        for (int j = i - 1; j >= 0; --j) {
            T s = from_real<T>(BigReal(W));
            for (int k = j + 1; k <= i; ++k) s += L[k][j] * t.coeff[i][k];
            t.coeff[i][j] = -s;
        }
    }
    t.h = D;
    t.p_sub.resize(M, from_real<T>(BigReal(W)));
    for (int k = 1; k < M; ++k) t.p_sub[k] = t.coeff[k][k - 1];
    for (int k = 0; k <= N; ++k) t.a_rec.push_back(t.p_sub[k] - t.p_sub[k + 1]);
    t.b_rec.push_back(t.h[0]);
    for (int k = 1; k < M; ++k) t.b_rec.push_back(t.h[k] / t.h[k - 1]);
    t.logD.push_back(from_real<T>(BigReal(W)));
    for (int k = 0; k < M; ++k) t.logD.push_back(t.logD.back() + log(t.h[k]));
    return t;
}

template <class T>
double logd_gap(const OrthoTableT<T>& x, const OrthoTableT<T>& y) {
    double worst = 0;
    for (size_t k = 1; k < x.logD.size(); ++k) {
        double d = abs(x.logD[k] - y.logD[k]).to_double();
        worst = std::max(worst, d);
    }
    return worst;
}

template <class T>
OrthoTableT<T> build_table(int N, const T& lambda, double alpha, double beta,
                           const PrecisionContext& ctx, bool check) {
    validate_weight(alpha, beta);
    if (N < 0 || N > kOrthoCap) {
        std::ostringstream os;
        os << "ortho_table: N=" << N << " outside [0," << kOrthoCap << "]";
        throw std::invalid_argument(os.str());
    }
    mpfr_prec_t W = std::max<mpfr_prec_t>(ctx.mantissa_bits, 24L * N);
    int last_pivot = -1;
    double last_gap = 0;
    for (int e = 0; e <= ctx.max_escalations; ++e, W *= 2) {
        try {
            if (!check) {
                auto t = build_once<T>(N, lambda, alpha, beta, W);
                t.escalations = e;
                return t;
            }
            auto lo = build_once<T>(N, lambda, alpha, beta, W);
            auto hi = build_once<T>(N, lambda, alpha, beta, W + W / 2);
            last_gap = logd_gap(lo, hi);
            if (last_gap <= ctx.target_rel_tol) {
                hi.escalations = e;
                return hi;
            }
        } catch (const Breakdown& b) {
            last_pivot = b.index;
        }
    }
    std::ostringstream os;
    os << "ortho_table: factorization unstable at " << W / 2 << " bits";
    if (last_pivot >= 0) os << " (pivot " << last_pivot << " lost)";
    else os << " (logD gap " << last_gap << ")";
    throw NumericError(os.str());
}

}  // namespace

BigComplex moment(int j, const BigComplex& lambda, double alpha, double beta, mpfr_prec_t prec) {
    validate_weight(alpha, beta);
    if (j < 0) throw std::invalid_argument("moment index must be >= 0");
    return moment_direct<BigComplex>(j, lambda, alpha, beta, prec);
}

BigReal moment(int j, const BigReal& lambda, double alpha, double beta, mpfr_prec_t prec) {
    validate_weight(alpha, beta);
    if (j < 0) throw std::invalid_argument("moment index must be >= 0");
    return moment_direct<BigReal>(j, lambda, alpha, beta, prec);
}

OrthoTable ortho_table(int N, const BigReal& lambda, double alpha, double beta,
                       const PrecisionContext& ctx, bool check_stability) {
    return build_table<BigReal>(N, lambda, alpha, beta, ctx, check_stability);
}

ComplexOrthoTable ortho_table(int N, const BigComplex& lambda, double alpha, double beta,
                              const PrecisionContext& ctx, bool check_stability) {
    return build_table<BigComplex>(N, lambda, alpha, beta, ctx, check_stability);
}

BigReal hankel_det_log(int n, const BigReal& lambda, double alpha, double beta,
                       const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("hankel_det_log needs n >= 1");
    return ortho_table(n - 1, lambda, alpha, beta, ctx).logD[n];
}

BigComplex hankel_det_log(int n, const BigComplex& lambda, double alpha, double beta,
                          const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("hankel_det_log needs n >= 1");
    return ortho_table(n - 1, lambda, alpha, beta, ctx).logD[n];
}

BigReal sub_leading(int n, const BigReal& lambda, double alpha, double beta,
                    const PrecisionContext& ctx) {
    if (n < 0) throw std::invalid_argument("sub_leading needs n >= 0");
    if (n == 0) return BigReal(ctx.mantissa_bits);
    return ortho_table(n - 1, lambda, alpha, beta, ctx).p_sub[n];
}

BigReal eval_poly(int n, const BigReal& x, const OrthoTable& t) {
    if (n < 0 || n > t.N + 1) throw std::invalid_argument("eval_poly: degree outside the table");
    const mpfr_prec_t p = std::max(t.prec, x.prec());
    BigReal p0(1L, p);
    if (n == 0) return p0;
    BigReal p1 = x - t.a_rec[0];
    for (int k = 1; k < n; ++k) {
        BigReal p2 = (x - t.a_rec[k]) * p1 - t.b_rec[k] * p0;
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}

std::array<BigReal, 3> eval_poly_derivs(int n, const BigReal& x, const OrthoTable& t) {
    if (n < 0 || n > t.N + 1) throw std::invalid_argument("eval_poly_derivs: degree outside the table");
    const mpfr_prec_t p = std::max(t.prec, x.prec());
    BigReal v(p), d1(p), d2(p);
    for (int i = n; i >= 0; --i) {
        d2 = d2 * x + d1 * 2L;
        d1 = d1 * x + v;
        v = v * x + t.coeff[n][i];
    }
    return {v, d1, d2};
}

double TodaResiduals::max() const {
    return std::max({beta_eq.to_double(), alpha_eq.to_double(), molecule.to_double()});
}

TodaResiduals toda_residuals(int n, const BigReal& lambda, double alpha, double beta,
                             const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("toda_residuals needs n >= 1");
    LambdaMemo<OrthoTable> memo([&](const BigReal& l) { return ortho_table(n, l, alpha, beta, ctx); });
    auto fb = [&](const BigReal& l) { return memo.at(l).b_rec[n]; };
    auto fa = [&](const BigReal& l) { return memo.at(l).a_rec[n]; };
    auto fl = [&](const BigReal& l) { return memo.at(l).logD[n]; };
    const OrthoTable& t = memo.at(BigReal(lambda, ctx.mantissa_bits + 64));
    BigReal bn = t.b_rec[n], bn1 = t.b_rec[n + 1];
    BigReal an = t.a_rec[n], an1 = t.a_rec[n - 1];
    BigReal ratio = exp(t.logD[n + 1] + t.logD[n - 1] - t.logD[n] * 2L);
    TodaResiduals r;
    r.beta_eq = abs(derivative(fb, lambda, 1, ctx).value - bn * (an1 - an));
    r.alpha_eq = abs(derivative(fa, lambda, 1, ctx).value - (bn - bn1));
    r.molecule = abs(derivative(fl, lambda, 2, ctx).value - ratio);
    return r;
}

}  // namespace jue
