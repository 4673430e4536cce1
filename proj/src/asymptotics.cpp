#include "jue/asymptotics.hpp"

#include "jue/specfun.hpp"

#include <cmath>
#include <sstream>

namespace jue {

FluidData fluid_data(double alpha_scaled, double beta_scaled, int n) {
    if (!(alpha_scaled >= 0) || !(beta_scaled >= 0))
        throw std::invalid_argument("fluid_data: scaled exponents must be >= 0");
    if (n < 1) throw std::invalid_argument("fluid_data: n must be >= 1");
    const double al = alpha_scaled, be = beta_scaled;
    FluidData f;
    f.alpha_scaled = al;
    f.beta_scaled = be;
    f.n = n;
    double root = 4 * std::sqrt((1 + al) * (1 + be) * (1 + al + be));
    double den = (2 + al + be) * (2 + al + be);
    f.A = (be * be - al * al - root) / den;
    f.B = (be * be - al * al + root) / den;
    f.a = (1 - f.B) / 2;
    f.b = (1 - f.A) / 2;
    // round-off can leave |a| ~ 1e-17 at α = β = 0
    if (std::abs(f.a) < 1e-15) f.a = 0;
    if (std::abs(f.b - 1) < 1e-15) f.b = 1;
    const double a = f.a, b = f.b;
    f.J1 = -(a * a + 2 * a * b - b * b) / 8;
    f.J1_alt = -(b - a) * (b - a) / 16;
    const double alpha = n * al, beta = n * be;
    f.J2 = (2 * n + alpha + beta) / 2 * (std::sqrt((a - 1) * (b - 1)) - (a + b) / 2 + 1);
    return f;
}

double sigma0_density(double x, const FluidData& f) {
    if (!(x > f.a && x < f.b)) return 0;
    return (1 + (f.alpha_scaled + f.beta_scaled) / 2) * std::sqrt((f.b - x) * (x - f.a)) /
           (M_PI * x * (1 - x));
}

double varrho_density(double x, const FluidData& f) {
    if (!(x > f.a && x < f.b)) return 0;
    return ((f.a + f.b) / 2 - x) / (2 * M_PI * std::sqrt((f.b - x) * (x - f.a)));
}

double log_mgf_fluid(double lambda, const FluidData& f, MgfVariant v) {
    if (v == MgfVariant::printed) {
        const double a = f.a, b = f.b;
        return (a * a + 2 * a * b - b * b) / 16 * lambda * lambda - f.J2 * lambda;
    }
    return -lambda * lambda * f.J1_alt / 2 - lambda * f.J2;
}

double mgf_fluid(double lambda, const FluidData& f, MgfVariant v) {
    return std::exp(log_mgf_fluid(lambda, f, v));
}

namespace {

[[noreturn]] void denominator_zero(int m, int n) {
    std::ostringstream os;
    os << "b_" << m << " closed form: denominator vanishes at n=" << n;
    throw std::domain_error(os.str());
}

mpq_class legendre_b(int m, int n) {
    mpq_class N(n), N2 = N * N;
    mpq_class q = 4 * N2 - 1, t = 4 * N2 - 9;
    switch (m) {
    case 1: return -N / 2;
    case 2: return N2 / (4 * q);
    case 4: return N2 / (16 * t * q * q);
    case 6: {
        mpq_class d = 32 * q * q * q * (16 * N2 * N2 - 136 * N2 + 225);
        return N2 * (2 * N2 + 1) / d;
    }
    case 8: {
        mpq_class N4 = N2 * N2;
        mpq_class num = N2 * (64 * N4 * N2 - 32 * N4 - 392 * N2 - 45);
        mpq_class d = 256 * q * q * q * q * t * t * (16 * N4 - 296 * N2 + 1225);
        return num / d;
    }
    default: return 0;
    }
}

}  // namespace

std::vector<mpq_class> b_closed_exact_legendre(int n) {
    if (n < 1) throw std::invalid_argument("b_closed_exact_legendre needs n >= 1");
    std::vector<mpq_class> out;
    for (int m = 1; m <= 8; ++m) out.push_back(legendre_b(m, n));
    return out;
}

namespace {

struct Ratio {
    mpq_class num, den;
};

// b_m = num/den as transcribed, m = 1..5
Ratio b_ratio(int m, const mpq_class& N, const mpq_class& a, const mpq_class& b) {
    const mpq_class s = a + b + 2 * N;
    auto sh = [&](int k) { return mpq_class(s + k); };
    const mpq_class common = N * (a + N) * (b + N) * (a + b + N);
    const mpq_class ab = a + b, a2 = a * a, b2 = b * b;
    const mpq_class N2 = N * N, N3 = N2 * N, N4 = N3 * N, N5 = N4 * N, N6 = N5 * N;
    switch (m) {
    case 1: return {-N * (a + N), s};
    case 2: return {common, sh(-1) * s * s * sh(1)};
    case 3: return {common * (a - b) * ab, sh(-2) * sh(-1) * s * s * s * sh(1) * sh(2)};
    case 4: {
        mpq_class poly = (ab - 1) * ab * ab * (ab + 1) * (a2 - 3 * a * b + b2 + 1) -
                         N4 * (8 * a2 + 8 * b2 - 4) - 8 * N3 * ab * (2 * a2 + 2 * b2 - 1) -
                         2 * N2 * (3 * a2 * a2 + 12 * a2 * a * b + a2 * (18 * b2 - 7) + 6 * a * b * (2 * b2 - 1) +
                                   3 * b2 * b2 - 7 * b2 + 2) +
                         2 * N * ab * (a2 * a2 - 4 * a2 * a * b + a2 * (5 - 10 * b2) + a * (2 * b - 4 * b2 * b) +
                                       b2 * b2 + 5 * b2 - 2);
        mpq_class s4 = s * s * s * s;
        return {poly * common, s4 * sh(-3) * sh(-2) * sh(-1) * sh(-1) * sh(1) * sh(1) * sh(2) * sh(3)};
    }
    default: {
        mpq_class poly = (ab - 1) * ab * ab * (ab + 1) * (a2 - 5 * a * b + b2 + 5) + 16 * N6 + 48 * N5 * ab +
                         4 * N4 * (7 * a2 + 30 * a * b + 7 * b2 - 6) -
                         8 * N3 * ((3 * a - b) * (a - 3 * b) + 6) * ab -
                         2 * N2 * ((14 * a2 - 11) * b2 + 18 * a * (a2 + 2) * b + 11 * a2 * (a2 - 1) +
                                   18 * a * b2 * b + 11 * b2 * b2 + 10) -
                         2 * N * ab * (a2 * a2 + 10 * a2 * a * b + a2 * (18 * b2 - 23) + 2 * a * b * (5 * b2 + 6) +
                                       b2 * b2 - 23 * b2 + 10);
        mpq_class s5 = s * s * s * s * s;
        return {poly * common * (a - b) * ab,
                sh(-4) * s5 * sh(-3) * sh(-2) * sh(-1) * sh(-1) * sh(1) * sh(1) * sh(2) * sh(3) * sh(4)};
    }
    }
}

// coefficients in t of the polynomial through (t_k, y_k), t_k = 1..K
std::vector<mpq_class> interpolate(const std::vector<mpq_class>& y) {
    const int K = static_cast<int>(y.size());
    std::vector<mpq_class> dd = y;
    for (int j = 1; j < K; ++j)
        for (int i = K - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / mpq_class(j);
    // Newton form to monomials, nodes 1..K
    std::vector<mpq_class> c(K, 0);
    for (int i = K - 1; i >= 0; --i) {
        for (int k = K - 1; k >= 1; --k) c[k] = c[k - 1] - c[k] * (i + 1);
        c[0] = dd[i] - c[0] * (i + 1);
    }
    return c;
}

// limit along a → a + t, t → 0, when the printed fraction is 0/0 at the point
mpq_class b_limit(int m, int n, const mpq_class& a, const mpq_class& b) {
    constexpr int K = 28;   // both sides have degree below this in a
    std::vector<mpq_class> yn, yd;
    for (int k = 1; k <= K; ++k) {
        mpq_class t(k, 1 << 20);
        t.canonicalize();
        auto r = b_ratio(m, mpq_class(n), a + t, b);
        yn.push_back(r.num);
        yd.push_back(r.den);
    }
    auto cn = interpolate(yn), cd = interpolate(yd);
    int j = 0;
    while (j < K && cd[j] == 0) ++j;
    if (j == K) denominator_zero(m, n);
    for (int i = 0; i < j; ++i)
        if (cn[i] != 0) denominator_zero(m, n);
    // t was scaled by 2^-20 in the samples; the ratio of equal-order terms is scale free
    return cn[j] / cd[j];
}

}  // namespace

std::vector<mpq_class> b_closed_exact(int n, const mpq_class& a, const mpq_class& b) {
    if (n < 1) throw std::invalid_argument("b_closed_exact needs n >= 1");
    std::vector<mpq_class> out(5);
    for (int m = 1; m <= 5; ++m) {
        if ((m == 3 || m == 5) && a == b) {
            out[m - 1] = 0;
            continue;
        }
        auto r = b_ratio(m, mpq_class(n), a, b);
        out[m - 1] = r.den != 0 ? mpq_class(r.num / r.den) : b_limit(m, n, a, b);
    }
    return out;
}

namespace {

BigReal to_big(const mpq_class& q, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

}  // namespace

BigReal b_closed_form(int n, double alpha, double beta, int m, mpfr_prec_t prec) {
    const bool legendre = alpha == 0 && beta == 0;
    if (m < 1 || m > (legendre ? 8 : 5)) throw std::invalid_argument("b_closed_form: m outside the tabulated range");
    if (legendre && m != 3 && m != 5) return to_big(legendre_b(m, n), prec);
    validate_weight(alpha, beta);
    return to_big(b_closed_exact(n, mpq_class(alpha), mpq_class(beta))[m - 1], prec);
}

SeriesCoeffs closed_form_coeffs(int n, double alpha, double beta, int m_max, mpfr_prec_t prec) {
    SeriesCoeffs c;
    c.n = n;
    c.alpha = alpha;
    c.beta = beta;
    c.source = CoeffSource::closed_form;
    c.b.push_back(BigReal(prec));
    for (int m = 1; m <= m_max; ++m) c.b.push_back(b_closed_form(n, alpha, beta, m, prec));
    return c;
}

SeriesCoeffs b_extracted(int n, double alpha, double beta, int m_max, const PrecisionContext& ctx,
                         double radius, unsigned threads) {
    if (n < 1) throw std::invalid_argument("b_extracted needs n >= 1");
    if (m_max < 1 || m_max > 6) throw std::invalid_argument("b_extracted: m_max must be in 1..6");
    if (!(radius > 0)) throw std::invalid_argument("b_extracted: radius must be positive");
    validate_weight(alpha, beta);
    const int deg = m_max + 2;
    const int K = 3 * deg;
    PrecisionContext c = ctx;
    c.mantissa_bits = ctx.mantissa_bits + 64;
    const mpfr_prec_t p = c.mantissa_bits;

    for (int attempt = 0;; ++attempt) {
        BigReal r(radius, p);
        std::vector<BigReal> xs(K, BigReal(p)), ys(K, BigReal(p));
        BigReal pi = BigReal::pi(p);
        for (int j = 0; j < K; ++j) xs[j] = r * cos(pi * (2L * j + 1L) / long(2 * K));
        BigReal base = hankel_det_log(n, BigReal(p), alpha, beta, c);
        parallel_for(K, threads ? threads : default_threads(), [&](size_t j) {
            BigReal v = hankel_det_log(n, xs[j], alpha, beta, c);
            ys[j] = set_precision(v - base, p);
        });
        // columns scaled by radius^m to keep the normal equations tame
        std::vector<std::vector<BigReal>> A(K, std::vector<BigReal>(deg, BigReal(p)));
        for (int j = 0; j < K; ++j) {
            BigReal u = xs[j] / r, pw(1L, p);
            for (int m = 0; m < deg; ++m) {
                pw = pw * u;
                A[j][m] = pw;
            }
        }
        std::vector<BigReal> coef;
        try {
            coef = least_squares(A, ys);
        } catch (const NumericError&) {
            if (attempt >= ctx.max_escalations) throw;
            radius /= 2;
            c = c.escalated();
            continue;
        }
        SeriesCoeffs out;
        out.n = n;
        out.alpha = alpha;
        out.beta = beta;
        out.source = CoeffSource::extracted;
        out.b.push_back(BigReal(p));
        BigReal rp(1L, p);
        for (int m = 1; m <= m_max; ++m) {
            rp = rp * r;
            out.b.push_back(coef[m - 1] / rp * long(m));
        }
        return out;
    }
}

std::vector<BigReal> cumulants(const SeriesCoeffs& c) {
    std::vector<BigReal> k;
    if (c.b.empty()) return k;
    const mpfr_prec_t p = c.b.back().prec();
    k.push_back(BigReal(p));
    BigReal fact(1L, p);
    for (int m = 1; m <= c.m_max(); ++m) {
        if (m > 1) fact = fact * long(m - 1);
        BigReal v = fact * c.b[m];
        k.push_back(m % 2 ? -v : v);
    }
    return k;
}

SigmaSeriesReport sigma_series_residual(int n, double alpha, double beta, double lambda, int m_max,
                                        const PrecisionContext& ctx) {
    if (m_max < 1) throw std::invalid_argument("sigma_series_residual needs m_max >= 1");
    const mpfr_prec_t p = ctx.mantissa_bits;
    const bool legendre = alpha == 0 && beta == 0;
    const int cap = legendre ? 8 : 5;
    auto coeffs = closed_form_coeffs(n, alpha, beta, std::min(m_max, cap), p);
    BigReal L(lambda, p), a(alpha, p), b(beta, p), nn(long(n), p);
    SigmaPoint sp;
    sp.n = n;
    sp.lambda = L;
    sp.sigma = nn * L - nn * (nn + b);
    sp.dsigma = nn;
    sp.d2sigma = BigReal(p);
    BigReal negL = -L;
    BigReal last(p);
    for (int m = 1; m <= coeffs.m_max(); ++m) {
        const BigReal& bm = coeffs.b[m];
        // -b_m (-λ)^m and its λ-derivatives
        BigReal t0 = bm * pow(negL, m);
        sp.sigma -= t0;
        last = abs(t0);
        if (m >= 1) sp.dsigma += bm * long(m) * pow(negL, m - 1);
        if (m >= 2) sp.d2sigma -= bm * long(m * (m - 1)) * pow(negL, m - 2);
    }
    SigmaSeriesReport rep;
    rep.series = sp.sigma;
    rep.exact = sigma_point(n, L, alpha, beta, ctx).sigma;
    rep.difference = abs(rep.series - rep.exact);
    // odd coefficients can vanish, so look two orders ahead
    rep.truncation = BigReal(p);
    for (int m = m_max + 1; m <= std::min(m_max + 2, cap); ++m)
        rep.truncation = max(rep.truncation, abs(b_closed_form(n, alpha, beta, m, p) * pow(L, m)));
    if (m_max + 1 > cap) rep.truncation = last;
    rep.sigma_form = sigma_form_residual(sp, alpha, beta);
    return rep;
}

BigReal dn_expansion_log(int n, double alpha, double beta, double lambda, int m_max, mpfr_prec_t prec) {
    if (m_max < 0) throw std::invalid_argument("dn_expansion needs m_max >= 0");
    BigReal out = log_d0(n, alpha, beta, prec);
    BigReal L(lambda, prec);
    for (int m = 1; m <= m_max; ++m) {
        if (alpha == 0 && beta == 0 && m > 8) break;
        if (!(alpha == 0 && beta == 0) && m > 5) break;
        out += b_closed_form(n, alpha, beta, m, prec) * pow(L, m) / long(m);
    }
    return out;
}

BigReal dn_expansion(int n, double alpha, double beta, double lambda, int m_max, mpfr_prec_t prec) {
    return exp(dn_expansion_log(n, alpha, beta, lambda, m_max, prec));
}

}  // namespace jue
