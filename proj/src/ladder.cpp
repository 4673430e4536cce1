#include "jue/ladder.hpp"

#include "jue/specfun.hpp"

#include <sstream>

namespace jue {

namespace {

BigComplex kummer_any(const BigReal& a, const BigReal& b, const BigComplex& z, mpfr_prec_t p) {
    return kummer_m(a, b, z, p);
}
BigReal kummer_any(const BigReal& a, const BigReal& b, const BigReal& z, mpfr_prec_t p) {
    return kummer_m_real(a, b, z, p);
}

template <class T>
T zero_like(mpfr_prec_t p) {
    if constexpr (is_complex_scalar<T>::value) return BigComplex(p);
    else return BigReal(p);
}

template <class T>
AuxTableT<T> recursion(int N, const T& lambda_in, double alpha, double beta,
                       const PrecisionContext& ctx) {
    validate_weight(alpha, beta);
    if (N < 0) throw std::invalid_argument("aux_by_recursion needs N >= 0");
    AuxTableT<T> aux;
    aux.N = N;
    aux.alpha = alpha;
    aux.beta = beta;
    aux.route = AuxRoute::recursion;

    if (abs(lambda_in).is_zero()) {
        const mpfr_prec_t p = ctx.mantissa_bits;
        BigReal a(alpha, p), b(beta, p);
        aux.lambda = zero_like<T>(p);
        aux.prec = p;
        aux.lambda_zero_limit = true;
        for (int n = 0; n <= N; ++n) {
            aux.R.push_back(make_scalar<T>(a + b + long(2 * n + 1)));
            aux.r.push_back(n == 0 ? zero_like<T>(p)
                                   : make_scalar<T>(-(b + long(n)) * long(n) / (a + b + long(2 * n))));
            aux.diff2_residual.push_back(zero_like<T>(p));
        }
        return aux;
    }

    PrecisionContext c = ctx;
    for (int e = 0;; ++e) {
        auto table = ortho_table(N, lambda_in, alpha, beta, c);
        const mpfr_prec_t W = table.prec;
        const T& lam = table.lambda;
        BigReal a(alpha, W), b(beta, W);
        aux.lambda = lam;
        aux.prec = W;
        aux.a_rec = table.a_rec;
        aux.b_rec = table.b_rec;
        aux.R.clear();
        aux.r.clear();
        aux.diff2_residual.clear();

        BigReal s0 = a + b + 1L;
        if (s0.is_zero()) {
            aux.R.push_back(lam - lam * table.a_rec[0]);
        } else {
            T m0 = kummer_any(a, s0, -lam, W);
            T m1 = kummer_any(a + 1L, s0 + 1L, -lam, W);
            aux.R.push_back(m0 * s0 / m1);
        }
        for (int n = 1; n <= N; ++n)
            aux.R.push_back(lam + (a + b + long(2 * n + 1)) - lam * table.a_rec[n]);

        const double floor_bits = -double(W) / 2;
        bool degenerate = false;
        for (const auto& v : aux.R)
            if (abs(v).log2_abs() < floor_bits) degenerate = true;
        if (degenerate) {
            if (e >= ctx.max_escalations)
                throw NumericError("aux_by_recursion: R_n vanishes to working precision");
            c = c.escalated();
            continue;
        }

        aux.r.push_back(zero_like<T>(W));
        for (int n = 0; n < N; ++n) {
            const T& R = aux.R[n];
            T rhs = R * R - R * (lam + (a + b + long(2 * n + 1))) + lam * a;
            aux.r.push_back(rhs / lam - aux.r[n]);
        }
        aux.diff2_residual.push_back(zero_like<T>(W));
        for (int n = 1; n <= N; ++n) {
            const T &R = aux.R[n], &Rm = aux.R[n - 1], &r = aux.r[n];
            T lhs = (b + long(n)) * long(n) + (a + b + long(2 * n)) * r;
            T q = r * r - r * a;
            T bracket = lam * lam / (R * Rm) - lam / R - lam / Rm;
            aux.diff2_residual.push_back(lhs - q * bracket);
        }
        return aux;
    }
}

}  // namespace

AuxTable aux_by_recursion(int N, const BigReal& lambda, double alpha, double beta,
                          const PrecisionContext& ctx) {
    return recursion<BigReal>(N, lambda, alpha, beta, ctx);
}

ComplexAuxTable aux_by_recursion(int N, const BigComplex& lambda, double alpha, double beta,
                                 const PrecisionContext& ctx) {
    return recursion<BigComplex>(N, lambda, alpha, beta, ctx);
}

AuxPoint aux_by_integral(int n, const BigReal& lambda, double alpha, double beta,
                         const PrecisionContext& ctx) {
    validate_weight(alpha, beta);
    if (!(alpha > 0)) throw std::domain_error("aux_by_integral needs alpha > 0 (use the recursion route)");
    if (n < 0) throw std::invalid_argument("aux_by_integral needs n >= 0");
    auto t = ortho_table(std::max(n, 1), lambda, alpha, beta, ctx);
    PrecisionContext qc = ctx;
    qc.mantissa_bits = static_cast<int>(t.prec);
    QuadratureCache cache;
    auto pn = [&](const BigReal& y) { return eval_poly(n, y, t); };
    BigReal lam(lambda, t.prec);
    BigReal iR = integrate_weighted([&](const BigReal& y) { BigReal v = pn(y); return v * v; },
                                    alpha - 1, beta, lam, qc, &cache);
    AuxPoint out{iR * alpha / t.h[n], BigReal(t.prec)};
    if (n >= 1) {
        BigReal ir = integrate_weighted([&](const BigReal& y) { return pn(y) * eval_poly(n - 1, y, t); },
                                        alpha - 1, beta, lam, qc, &cache);
        out.r = ir * alpha / t.h[n - 1];
    }
    return out;
}

RecurrencePair recurrence_from_aux(int n, const AuxTable& aux) {
    if (n < 0 || n > aux.N) throw std::invalid_argument("recurrence_from_aux: n outside the table");
    const BigReal& lam = aux.lambda;
    if (lam.is_zero()) throw std::domain_error("recurrence_from_aux: λ = 0");
    const BigReal &R = aux.R[n], &r = aux.r[n];
    if (R.is_zero()) throw std::domain_error("recurrence_from_aux: R_n = 0");
    BigReal den = lam * lam - lam * R;
    if (den.is_zero()) throw std::domain_error("recurrence_from_aux: R_n = λ");
    BigReal a(aux.alpha, aux.prec), b(aux.beta, aux.prec);
    RecurrencePair out{((a + b + long(2 * n + 1)) + lam - R) / lam, BigReal(aux.prec)};
    out.beta_n = ((b + long(n)) * long(n) + (a + b + long(2 * n)) * r + lam / R * (r * r - a * r)) / den;
    return out;
}

namespace {

struct AuxAt {
    BigReal R, r;
};

}  // namespace

ResidualPair riccati_residuals(int n, const BigReal& lambda, double alpha, double beta,
                               const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("riccati_residuals needs n >= 1");
    if (lambda.is_zero()) throw std::domain_error("riccati_residuals needs λ != 0");
    LambdaMemo<AuxAt> memo([&](const BigReal& l) {
        auto t = aux_by_recursion(n, l, alpha, beta, ctx);
        return AuxAt{t.R[n], t.r[n]};
    });
    BigReal L(lambda, ctx.mantissa_bits + 64);
    const AuxAt& v = memo.at(L);
    BigReal dR = derivative([&](const BigReal& l) { return memo.at(l).R; }, L, 1, ctx).value;
    BigReal dr = derivative([&](const BigReal& l) { return memo.at(l).r; }, L, 1, ctx).value;
    const BigReal &R = v.R, &r = v.r;
    BigReal a(alpha, L.prec()), b(beta, L.prec());
    BigReal s = a + b + long(2 * n + 1);
    BigReal e1 = L * dR - (-(a * L) + R * (s + L) - R * R + L * r * 2L);
    BigReal q = r * r - a * r;
    BigReal e2 = dr - (R / (L * R - L * L) * ((b + long(n)) * long(n) + (a + b + long(2 * n)) * r + L / R * q) + q / R);
    return {abs(e1), abs(e2)};
}

ResidualPair second_order_residuals(int n, const BigReal& lambda, double alpha, double beta,
                                    const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("second_order_residuals needs n >= 1");
    if (lambda.is_zero()) throw std::domain_error("second_order_residuals needs λ != 0");
    LambdaMemo<AuxAt> memo([&](const BigReal& l) {
        auto t = aux_by_recursion(n, l, alpha, beta, ctx);
        return AuxAt{t.R[n], t.r[n]};
    });
    BigReal L(lambda, ctx.mantissa_bits + 64);
    const AuxAt& v = memo.at(L);
    auto fR = [&](const BigReal& l) { return memo.at(l).R; };
    auto fr = [&](const BigReal& l) { return memo.at(l).r; };
    BigReal R1 = derivative(fR, L, 1, ctx).value, R2 = derivative(fR, L, 2, ctx).value;
    BigReal r1 = derivative(fr, L, 1, ctx).value, r2 = derivative(fr, L, 2, ctx).value;
    const BigReal &R = v.R, &r = v.r;
    BigReal a(alpha, L.prec()), b(beta, L.prec());
    BigReal s = a + b + long(2 * n + 1);
    BigReal LR1 = L * R1;
    BigReal num = (R * 2L - L) * LR1 * LR1 - L * R * R * R1 * 2L + pow(R, 5) * 2L - a * a * L * L * R * 2L +
                  a * a * pow(L, 3) - (s * 2L + L * 5L) * pow(R, 4) + L * (s + L) * pow(R, 3) * 4L -
                  (pow(L, 3) - L * (a * a - b * b + 1L) + L * L * s * 2L) * R * R;
    BigReal e1 = R2 - num / (L * L * (R - L) * R * 2L);
    BigReal nn(long(n), L.prec());
    BigReal c = nn * 2L - a + b;
    BigReal lhs = L * L * r2 + pow(r, 3) * 8L + c * r * r * 6L +
                  (nn * nn - nn * a * 2L + nn * b - a * b) * r * 4L - nn * (nn + b) * a * 2L + L * r1;
    BigReal rhs = pow(r * 4L + L + c, 2) * (r * (r - a) * (r + nn) * (r + nn + b) * 4L + pow(L * r1, 2));
    BigReal e2 = lhs * lhs - rhs;
    return {abs(e1), abs(e2)};
}

double SumRuleResiduals::max() const {
    return std::max({s1.to_double(), s2.to_double(), s3.to_double()});
}

SumRuleResiduals sum_rule_residuals(int n, const AuxTable& aux) {
    if (n < 1 || n > aux.N) throw std::invalid_argument("sum_rule_residuals: n outside the table");
    if (aux.lambda_zero_limit) throw std::domain_error("sum_rule_residuals needs λ != 0");
    const mpfr_prec_t p = aux.prec;
    BigReal a(aux.alpha, p), b(aux.beta, p), nn(long(n), p);
    const BigReal &lam = aux.lambda, &R = aux.R[n], &Rm = aux.R[n - 1], &r = aux.r[n];
    const BigReal& bn = aux.b_rec[n];
    SumRuleResiduals s;
    s.s1 = abs(r * r - a * r - bn * R * Rm);
    s.s2 = abs((r + nn) * (r + nn) + b * (r + nn) - bn * (R - lam) * (Rm - lam));
    BigReal sumR(p);
    for (int j = 0; j < n; ++j) sumR += aux.R[j];
    BigReal lhs = r * (r + nn) * 2L - a * r + b * r - a * nn + lam * r + sumR;
    s.s3 = abs(lhs - bn * (R * (Rm - lam) + Rm * (R - lam)));
    return s;
}

namespace {

BigReal r1_quotient(const BigReal& lambda, double alpha, double beta, mpfr_prec_t prec, bool swapped) {
    BigReal a(alpha, prec), b(beta, prec), z = -BigReal(lambda, prec);
    BigReal s = a + b + 1L;
    BigReal m0 = kummer_m_real(a, s, z, prec);
    BigReal m1 = kummer_m_real(a + 1L, s + 1L, z, prec);
    BigReal m2 = kummer_m_real(a + 2L, s + 2L, z, prec);
    BigReal ratio = swapped ? s / (s + 1L) : (s + 1L) / s;
    return a - (a + 1L) * ratio * m0 * m2 / (m1 * m1);
}

}  // namespace

BigReal r1_kummer_form(const BigReal& lambda, double alpha, double beta, mpfr_prec_t prec) {
    return r1_quotient(lambda, alpha, beta, prec, false);
}

BigReal r1_kummer_form_swapped(const BigReal& lambda, double alpha, double beta, mpfr_prec_t prec) {
    return r1_quotient(lambda, alpha, beta, prec, true);
}

BigReal r1_from_difference(const BigReal& lambda, double alpha, double beta, mpfr_prec_t prec) {
    BigReal a(alpha, prec), b(beta, prec), lam(lambda, prec);
    BigReal s = a + b + 1L;
    BigReal m0 = kummer_m_real(a, s, -lam, prec);
    BigReal m1 = kummer_m_real(a + 1L, s + 1L, -lam, prec);
    BigReal q = m0 / m1;
    return s * s * q * q / lam - s * s * q / lam + a - s * q;
}

BesselForms bessel_forms(const BigReal& lambda) {
    BigReal L = lambda;
    BigReal x = L / 2L;
    BigReal i0 = bessel_i(0, x), i1 = bessel_i(1, x), i2 = bessel_i(2, x);
    BesselForms f;
    f.R0_printed = L / 4L * (i0 / i1 + 1L);
    f.R0_doubled = L / 2L * (i0 / i1 + 1L);
    f.r1 = (L * i0 * i2 / (i1 * i1) - L - 2L) / 4L;
    BigReal num = L * ((L + 4L) * i1 - L * i0) * (-(L * i0 * i0) + i1 * i0 * 4L + (L + 2L) * i1 * i1);
    BigReal den = i1 * 2L * (-(L * L * i0 * i0) + (L * L + 8L) * i1 * i1 + L * i1 * i0 * 2L);
    f.R1 = num / den;
    return f;
}

}  // namespace jue
