#pragma once

#include "jue/orthopoly.hpp"

namespace jue {

enum class AuxRoute { integral, recursion };

// R_j(λ), r_j(λ) for j = 0..N, plus the recurrence data they were built with.
template <class T>
struct AuxTableT {
    T lambda;
    int N = 0;
    double alpha = 0, beta = 0;
    AuxRoute route = AuxRoute::recursion;
    bool lambda_zero_limit = false;   // values are the λ→0 limits
    mpfr_prec_t prec = 0;
    std::vector<T> R, r;
    std::vector<T> a_rec, b_rec;      // α_j, β_j (b_rec[0] unused by the ladder)
    std::vector<T> diff2_residual;    // second difference equation at j = 1..N (index j)
};

using AuxTable = AuxTableT<BigReal>;
using ComplexAuxTable = AuxTableT<BigComplex>;

// r_0 = 0, R_0 from the Kummer ratio, R_n = 2n+1+α+β+λ-λα_n, and
// λ(r_{n+1}+r_n) = R_n² - R_n(2n+1+α+β+λ) + λα.
// λ = 0 returns the limits R_n = 2n+1+α+β, r_n = -n(n+β)/(2n+α+β).
AuxTable aux_by_recursion(int N, const BigReal& lambda, double alpha, double beta,
                          const PrecisionContext& ctx);
ComplexAuxTable aux_by_recursion(int N, const BigComplex& lambda, double alpha, double beta,
                                 const PrecisionContext& ctx);

struct AuxPoint {
    BigReal R, r;   // r is zero for n = 0
};

// Weighted integrals with exponents (α-1, β); needs α > 0.
AuxPoint aux_by_integral(int n, const BigReal& lambda, double alpha, double beta,
                         const PrecisionContext& ctx);

struct RecurrencePair {
    BigReal alpha_n, beta_n;
};

// α_n, β_n from R_n, r_n; std::domain_error on a vanishing denominator
RecurrencePair recurrence_from_aux(int n, const AuxTable& aux);

struct ResidualPair {
    BigReal first, second;
    double max() const { return std::max(first.to_double(), second.to_double()); }
};

ResidualPair riccati_residuals(int n, const BigReal& lambda, double alpha, double beta,
                               const PrecisionContext& ctx);
ResidualPair second_order_residuals(int n, const BigReal& lambda, double alpha, double beta,
                                    const PrecisionContext& ctx);

struct SumRuleResiduals {
    BigReal s1, s2, s3;   // the two product rules and the summed rule
    double max() const;
};

// needs 1 <= n <= aux.N
SumRuleResiduals sum_rule_residuals(int n, const AuxTable& aux);

// r_1 from the Kummer quotient α - (α+1)(α+β+2)M_0M_2/((α+β+1)M_1²) as printed,
// the same with (α+β+1) and (α+β+2) exchanged (which is what the recursion
// gives), and from feeding R_0 into the first difference equation
BigReal r1_kummer_form(const BigReal& lambda, double alpha, double beta, mpfr_prec_t prec);
BigReal r1_kummer_form_swapped(const BigReal& lambda, double alpha, double beta, mpfr_prec_t prec);
BigReal r1_from_difference(const BigReal& lambda, double alpha, double beta, mpfr_prec_t prec);

// α = β = 1/2 closed forms in I_ν(λ/2). The R_0 printed form is
// (λ/4)[I_0/I_1 + 1]; doubled = (λ/2)[I_0/I_1 + 1].
struct BesselForms {
    BigReal R0_printed, R0_doubled, r1, R1;
};
BesselForms bessel_forms(const BigReal& lambda);

}  // namespace jue
