#include "jue/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace jue {

BigReal log_gamma(const BigReal& x) { return lgamma_pos(x); }
BigReal log_gamma(double x, mpfr_prec_t prec) { return lgamma_pos(BigReal(x, prec)); }

BigReal beta_fn(const BigReal& a, const BigReal& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw std::domain_error("beta needs positive arguments");
    return exp(lgamma_pos(a) + lgamma_pos(b) - lgamma_pos(a + b));
}

BigReal beta_fn(double a, double b, mpfr_prec_t prec) {
    return beta_fn(BigReal(a, prec), BigReal(b, prec));
}

namespace {

double mag2(const BigComplex& z) { return std::max(z.re.log2_abs(), z.im.log2_abs()); }

bool nonpositive_integer(const BigReal& b) {
    if (b.sign() > 0) return false;
    return mpfr_integer_p(b.get()) != 0;
}

}  // namespace

BigComplex kummer_m(const BigReal& a0, const BigReal& b0, const BigComplex& z0, mpfr_prec_t prec) {
    if (nonpositive_integer(b0)) throw std::invalid_argument("kummer_m: b is a non-positive integer");
    const double zabs = abs(z0).to_double();
    const bool positive_real = z0.im.is_zero() && z0.re.sign() >= 0;
    long guard = positive_real ? 16 : 16 + static_cast<long>(std::ceil(1.443 * zabs));
    if (z0.is_zero()) return BigComplex(BigReal(1L, prec));

    for (int attempt = 0; attempt < 4; ++attempt) {
        const mpfr_prec_t wp = prec + guard;
        BigReal a(a0, wp), b(b0, wp);
        BigComplex z = set_precision(z0, wp);
        BigComplex term(BigReal(1L, wp)), sum(BigReal(1L, wp));
        double max_term = 0;
        bool done = false;
        for (long k = 0; k < 200000; ++k) {
            BigReal ak = a + k;
            if (ak.is_zero()) { done = true; break; }   // terminating series
            term *= z;
            term *= ak / ((b + k) * (k + 1));
            sum += term;
            const double tm = mag2(term);
            max_term = std::max(max_term, tm);
            if (k + 1 > zabs && tm < mag2(sum) - double(wp) - 2) { done = true; break; }
        }
        if (!done) throw NumericError("kummer_m: series did not converge within the iteration cap");
        const double cancel = max_term - mag2(sum);
        if (cancel > double(guard) - 8) {
            guard = static_cast<long>(cancel) + 32;
            continue;
        }
        return set_precision(sum, prec);
    }
    throw NumericError("kummer_m: cancellation persists after precision escalation");
}

BigComplex kummer_m(const KummerArgs& args, const PrecisionContext& ctx) {
    return kummer_m(args.a, args.b, args.z, ctx.mantissa_bits);
}

BigReal kummer_m_real(const BigReal& a, const BigReal& b, const BigReal& z, mpfr_prec_t prec) {
    return kummer_m(a, b, BigComplex(z), prec).re;
}

BigReal bessel_i(double nu, const BigReal& x) {
    if (nu < 0) throw std::domain_error("bessel_i: order must be >= 0");
    const mpfr_prec_t wp = x.prec() + 16;
    BigReal h = BigReal(x, wp) / 2L;
    BigReal h2 = h * h;
    BigReal v(nu, wp);
    if (x.is_zero()) return BigReal(nu == 0 ? 1L : 0L, x.prec());
    // (x/2)^nu / Γ(nu+1)
    BigReal term = exp(log(abs(h)) * v - lgamma_pos(v + 1L));
    if (h.sign() < 0 && std::fmod(nu, 2.0) == 1.0) term = -term;
    BigReal sum = term;
    for (long k = 1; k < 100000; ++k) {
        term *= h2 / ((v + k) * k);
        sum += term;
        if (term.is_zero() || term.log2_abs() < sum.log2_abs() - double(wp)) break;
    }
    return BigReal(sum, x.prec());
}

BigReal log_d0(int n, double alpha, double beta, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("log_d0 needs n >= 1");
    BigReal a(alpha, prec), b(beta, prec), s(prec);
    for (int j = 0; j < n; ++j) {
        s += lgamma_pos(BigReal(long(j + 2), prec)) + lgamma_pos(a + long(j + 1)) +
             lgamma_pos(b + long(j + 1)) - lgamma_pos(a + b + long(n + j + 1));
    }
    return s - lgamma_pos(BigReal(long(n + 1), prec));
}

}  // namespace jue
