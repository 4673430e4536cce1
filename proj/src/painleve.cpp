#include "jue/painleve.hpp"

#include <cmath>

namespace jue {

namespace {

struct SigmaRaw {
    BigReal s, ds, d2s;
};

// σ and its analytic derivatives from one table at -λ (N = n)
SigmaRaw sigma_raw(int n, const BigReal& lambda, const OrthoTable& t) {
    const mpfr_prec_t p = t.prec;
    BigReal L(lambda, p), b(t.beta, p), nn(long(n), p);
    const BigReal &pn = t.p_sub[n], &bn = t.b_rec[n];
    SigmaRaw out;
    out.s = nn * L + L * pn - nn * (nn + b);
    out.ds = nn + pn - L * bn;
    out.d2s = -(bn * 2L) + L * bn * (t.a_rec[n - 1] - t.a_rec[n]);
    return out;
}

BigReal sigma_only(int n, const BigReal& lambda, double alpha, double beta, const PrecisionContext& ctx) {
    auto t = ortho_table(n - 1, argmap::p_argument_for_sigma(lambda), alpha, beta, ctx);
    BigReal L(lambda, t.prec), b(beta, t.prec);
    return L * long(n) + L * t.p_sub[n] - (b + long(n)) * long(n);
}

}  // namespace

SigmaPoint sigma_point(int n, const BigReal& lambda, double alpha, double beta,
                       const PrecisionContext& ctx, Derivation d) {
    if (n < 1) throw std::invalid_argument("sigma_point needs n >= 1");
    SigmaPoint sp;
    sp.n = n;
    sp.lambda = lambda;
    sp.derivation = d;
    if (d == Derivation::analytic_toda) {
        auto t = ortho_table(n, argmap::p_argument_for_sigma(lambda), alpha, beta, ctx);
        auto raw = sigma_raw(n, lambda, t);
        sp.sigma = raw.s;
        sp.dsigma = raw.ds;
        sp.d2sigma = raw.d2s;
        return sp;
    }
    LambdaMemo<BigReal> memo([&](const BigReal& l) { return sigma_only(n, l, alpha, beta, ctx); });
    BigReal L(lambda, ctx.mantissa_bits + 64);
    auto f = [&](const BigReal& l) { return memo.at(l); };
    sp.sigma = memo.at(L);
    sp.dsigma = derivative(f, L, 1, ctx).value;
    sp.d2sigma = derivative(f, L, 2, ctx).value;
    return sp;
}

std::vector<BigReal> sigma_values(int kmax, const BigReal& lambda, double alpha, double beta,
                                  const PrecisionContext& ctx) {
    if (kmax < 0) throw std::invalid_argument("sigma_values needs kmax >= 0");
    auto t = ortho_table(std::max(kmax - 1, 0), argmap::p_argument_for_sigma(lambda), alpha, beta, ctx);
    BigReal L(lambda, t.prec), b(beta, t.prec);
    std::vector<BigReal> out;
    for (int k = 0; k <= kmax; ++k) out.push_back(L * long(k) + L * t.p_sub[k] - (b + long(k)) * long(k));
    return out;
}

BigReal sigma_form_residual(const SigmaPoint& sp, double alpha, double beta) {
    const mpfr_prec_t p = sp.sigma.prec();
    BigReal L(sp.lambda, p), a(alpha, p), b(beta, p), nn(long(sp.n), p);
    const BigReal &s = sp.sigma, &s1 = sp.dsigma, &s2 = sp.d2sigma;
    BigReal lhs = pow(L * s2, 2);
    BigReal first = pow(s - L * s1 + (nn * 2L + a + b) * s1, 2);
    BigReal second = (s1 * s1 + a * s1) * (L * s1 - s - nn * (nn + b)) * 4L;
    return abs(lhs - first - second);
}

BigReal sigma_form_residual(int n, const BigReal& lambda, double alpha, double beta,
                            const PrecisionContext& ctx) {
    return sigma_form_residual(sigma_point(n, lambda, alpha, beta, ctx), alpha, beta);
}

SigmaTildeReport sigma_tilde_residuals(const SigmaPoint& sp, double alpha, double beta) {
    const mpfr_prec_t p = sp.sigma.prec();
    BigReal L(sp.lambda, p), a(alpha, p), b(beta, p), nn(long(sp.n), p);
    BigReal s = -sp.sigma, s1 = -sp.dsigma, s2 = -sp.d2sigma;
    BigReal c = nn * 2L - a + b;
    BigReal base = s - L * s1 + s1 * s1 * 2L;
    BigReal quartic = s1 * (s1 - a) * (s1 + nn) * (s1 + nn + b) * 4L;
    BigReal lhs = pow(L * s2, 2);
    return {abs(lhs - pow(base - c * s1, 2) + quartic), abs(lhs - pow(base + c * s1, 2) + quartic)};
}

BigReal y_from_R(int n, const BigReal& lambda, const AuxTable& aux) {
    if (n < 0 || n > aux.N) throw std::invalid_argument("y_from_R: n outside the table");
    const BigReal& R = aux.R[n];
    if (R.is_zero()) throw std::domain_error("y_from_R: R_n = 0");
    return 1L - BigReal(lambda, aux.prec) / R;
}

BigReal y_value(int n, const BigReal& t, double alpha, double beta, const PrecisionContext& ctx) {
    BigReal lam = argmap::r_argument_for_y(t);
    auto aux = aux_by_recursion(n, lam, alpha, beta, ctx);
    // Y_n(t) = Y_n(-lam)
    return y_from_R(n, lam, aux);
}

BigReal pv_residual(int n, const BigReal& lambda, double alpha, double beta, const PrecisionContext& ctx) {
    if (lambda.is_zero()) throw std::domain_error("pv_residual needs λ != 0");
    LambdaMemo<BigReal> memo([&](const BigReal& l) { return y_value(n, l, alpha, beta, ctx); });
    BigReal L(lambda, ctx.mantissa_bits + 64);
    auto f = [&](const BigReal& l) { return memo.at(l); };
    BigReal y = memo.at(L);
    BigReal y1 = derivative(f, L, 1, ctx).value, y2 = derivative(f, L, 2, ctx).value;
    double yd = y.to_double();
    if (std::abs(yd) < 1e-12 || std::abs(yd - 1) < 1e-12)
        throw std::domain_error("pv_residual: Y_n degenerate (0 or 1)");
    const mpfr_prec_t p = y.prec();
    BigReal a(alpha, p), b(beta, p);
    BigReal rhs = (y * 3L - 1L) / (y * (y - 1L) * 2L) * y1 * y1 - y1 / L +
                  pow(y - 1L, 2) / (L * L) * (a * a * y / 2L - b * b / (y * 2L)) +
                  (a + b + long(2 * n + 1)) * y / L - y * (y + 1L) / ((y - 1L) * 2L);
    return abs(y2 - rhs);
}

ChazyCoefficients chazy_coefficients(int n, double alpha, double beta, ChazyVariant v, mpfr_prec_t prec) {
    BigReal a(alpha, prec), b(beta, prec), nn(long(n), prec);
    const bool fix = v == ChazyVariant::corrected;
    ChazyCoefficients c;
    BigReal half_shift = (nn * 2L - a + b) / 2L;
    c.shift = BigComplex(BigReal(prec), fix ? half_shift : -half_shift);
    BigReal b_term = fix ? b * b * 3L : pow(b, 3) * 3L;
    c.alpha1 = BigComplex((nn * nn * 4L + nn * a * 4L + a * a * 3L + nn * b * 4L + a * b * 2L + b_term) / 2L);
    BigReal bb = (nn * 2L + a + b) * (a + b) * (a - b) / 2L;
    c.beta1 = BigComplex(BigReal(prec), fix ? bb : -bb);
    BigReal third = fix ? nn * 2L + a * 3L + b : nn * 2L + a * 3L + b * 2L;
    c.gamma1 = BigComplex((nn * 2L + a - b) * (nn * 2L - a + b) * third * (nn * 2L + a + b * 3L) / 16L);
    return c;
}

BigReal chazy_residual(int n, const BigReal& z, double alpha, double beta, const PrecisionContext& ctx,
                       ChazyVariant v) {
    if (n < 1) throw std::invalid_argument("chazy_residual needs n >= 1");
    const mpfr_prec_t p = ctx.mantissa_bits + 64;
    auto cf = chazy_coefficients(n, alpha, beta, v, p);
    std::map<std::string, BigComplex> memo;
    auto theta = [&](const BigReal& zz) -> BigComplex {
        std::string key = exact_key(zz);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        BigReal e = exp(zz) * 2L;
        BigComplex lam(BigReal(zz.prec()), e);
        auto aux = aux_by_recursion(n, lam, alpha, beta, ctx);
        BigComplex th = BigComplex(BigReal(aux.prec), BigReal(2L, aux.prec)) * aux.r[n] + cf.shift;
        return memo.emplace(key, th).first->second;
    };
    BigReal Z(z, p);
    BigComplex t = theta(Z);
    BigComplex t1 = derivative_complex(theta, Z, 1, ctx).value;
    BigComplex t2 = derivative_complex(theta, Z, 2, ctx).value;
    BigComplex ez(exp(Z));
    BigComplex lhs = t2 - pow(t, 3) * 2L - cf.alpha1 * t - cf.beta1;
    BigComplex quart = t1 * t1 - pow(t, 4) - cf.alpha1 * t * t - cf.beta1 * t * 2L - cf.gamma1;
    return abs(lhs * lhs + (t - ez) * (t - ez) * quart * 4L);
}

namespace {

BigReal discrete_from(int n, const BigReal& lambda, const std::vector<BigReal>& sig, double alpha, double beta) {
    const mpfr_prec_t p = sig[n].prec();
    BigReal a(alpha, p), b(beta, p), nn(long(n), p), l(lambda, p);
    const BigReal &sm = sig[n - 1], &s = sig[n], &sp = sig[n + 1];
    BigReal n2 = nn * nn + nn * b;
    BigReal tail = nn * 2L - a + b - l - sm + sp;
    BigReal G = nn * a * (nn + b) * 2L + (a * 2L + l) * s + (n2 + s) * (sm - sp);
    BigReal e = (s - sm - a) * ((nn * 2L + a + b) * (s + n2) - nn * l * (nn + b)) * (s - sp + a) * tail +
                G * (G - a * l * tail);
    return abs(e);
}

}  // namespace

BigReal discrete_sigma_residual(int n, const BigReal& lambda, double alpha, double beta,
                                const PrecisionContext& ctx) {
    if (n < 2) throw std::invalid_argument("discrete_sigma_residual needs n >= 2");
    return discrete_from(n, lambda, sigma_values(n + 1, lambda, alpha, beta, ctx), alpha, beta);
}

BigReal discrete_sigma_residual_negated(int n, const BigReal& lambda, double alpha, double beta,
                                        const PrecisionContext& ctx) {
    if (n < 2) throw std::invalid_argument("discrete_sigma_residual needs n >= 2");
    return discrete_from(n, lambda, sigma_values(n + 1, -lambda, alpha, beta, ctx), alpha, beta);
}

ResidualPair sigma_link_residuals(int n, const BigReal& lambda, double alpha, double beta,
                                  const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("sigma_link_residuals needs n >= 1");
    auto aux = aux_by_recursion(n, lambda, alpha, beta, ctx);
    auto sig = sigma_values(n + 1, -lambda, alpha, beta, ctx);
    const mpfr_prec_t p = aux.prec;
    BigReal L(lambda, p), a(alpha, p), b(beta, p);
    BigReal first = L * L * aux.b_rec[n] + L * aux.r[n] - sig[n] - (b + long(n)) * long(n);
    BigReal second = aux.R[n] - (a + sig[n] - sig[n + 1]);
    return {abs(first), abs(second)};
}

BigReal pn_ode_residual(int n, const BigReal& z, const BigReal& lambda, double alpha, double beta,
                        const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("pn_ode_residual needs n >= 1");
    if (lambda.is_zero()) throw std::domain_error("pn_ode_residual needs λ != 0");
    auto aux = aux_by_recursion(n, lambda, alpha, beta, ctx);
    auto t = ortho_table(n, lambda, alpha, beta, ctx);
    const mpfr_prec_t p = std::max(aux.prec, t.prec);
    BigReal Z(z, p), L(lambda, p), a(alpha, p), b(beta, p), nn(long(n), p);
    BigReal ym1 = -L / aux.R[n];   // Y_n(-λ) - 1
    BigReal pole = Z + 1L / ym1;
    const double zd = Z.to_double();
    if (std::abs(zd) < 1e-6 || std::abs(zd - 1) < 1e-6 || abs(pole).to_double() < 1e-6)
        throw std::domain_error("pn_ode_residual: z too close to a singular point");
    auto P = eval_poly_derivs(n, Z, t);
    const BigReal& pn = t.p_sub[n];
    // σ_n(-λ) and d/dλ[σ_n(-λ)], which only need data at +λ
    BigReal s = -(nn * L) - L * pn - nn * (nn + b);
    BigReal ds = -(nn + pn + L * t.b_rec[n]);
    BigReal Rz = (a + 1L) / Z + (b + 1L) / (Z - 1L) - L - 1L / pole;
    BigReal Qz = (nn * (a + 1L) - s) / Z + (nn * (L - a - 1L) + s) / (Z - 1L) +
                 ((nn + ds) / (Z - 1L) - ds / Z) / pole;
    return abs(P[2] + Rz * P[1] + Qz * P[0]);
}

SigmaFromYReport sigma_from_y_check(int n, const BigReal& lambda, double alpha, double beta,
                                    const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("sigma_from_y_check needs n >= 1");
    LambdaMemo<BigReal> memo([&](const BigReal& l) { return y_value(n, l, alpha, beta, ctx); });
    BigReal L(lambda, ctx.mantissa_bits + 64);
    BigReal Y = memo.at(L);
    BigReal Y1 = derivative([&](const BigReal& l) { return memo.at(l); }, L, 1, ctx).value;
    const mpfr_prec_t p = Y.prec();
    BigReal a(alpha, p), b(beta, p), nn(long(n), p);
    BigReal br = b * b - pow(L * Y1, 2) + a * a * pow(Y, 4) +
                 (a * a + pow(b - L, 2) - a * (b + nn * 2L) * 4L + L * (a + nn * 6L) * 2L) * Y * Y +
                 (a * (nn * 2L - a + b - L) - nn * L * 4L) * pow(Y, 3) * 2L +
                 (nn * (a - L) * 2L + b * (a - b + L)) * Y * 2L;
    SigmaFromYReport rep;
    rep.sigma = sigma_point(n, lambda, alpha, beta, ctx).sigma;
    rep.printed = br / (Y * pow(Y * 4L - 1L, 2) * 4L);
    rep.variant = br / (Y * pow(Y - 1L, 2) * 4L);
    rep.variant_plus = rep.variant + nn * L * 2L;
    return rep;
}

BigReal xi_check(int n, const BigReal& lambda, double alpha, double beta, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("xi_check needs n >= 1");
    // log D_n(-λ) and its λ-derivative come from the same FD machinery
    PrecisionContext inner = ctx;
    inner.mantissa_bits = ctx.mantissa_bits + 64;
    PrecisionContext deep = ctx;
    deep.mantissa_bits = ctx.mantissa_bits + 192;
    LambdaMemo<BigReal> logd([&](const BigReal& l) { return hankel_det_log(n, -l, alpha, beta, deep); });
    auto g = [&](const BigReal& l) { return logd.at(l); };
    auto xi = [&](const BigReal& l) {
        BigReal L(l, l.prec() + 64);
        BigReal bb(beta, L.prec());
        return L * derivative(g, L, 1, inner).value - L * long(n) + (bb + long(n)) * long(n);
    };
    BigReal L(lambda, ctx.mantissa_bits + 64);
    BigReal dxi = derivative(xi, L, 1, ctx).value;
    auto aux = aux_by_recursion(n, argmap::r_argument_for_xi(lambda), alpha, beta, ctx);
    return abs(dxi - aux.r[n]);
}

}  // namespace jue
