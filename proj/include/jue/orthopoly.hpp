#pragma once

#include "jue/numkit.hpp"

#include <array>

namespace jue {

// (n, α, β) of the ensemble; the weight is x^α (1-x)^β e^{-λx} on [0,1]
struct EnsembleParams {
    int n = 1;
    double alpha = 0, beta = 0;
    void validate() const;   // std::invalid_argument unless n >= 1, α, β > -1
};

void validate_weight(double alpha, double beta);

// μ_j(λ) = B(j+α+1, β+1) M(j+α+1; j+α+β+2; -λ)
BigComplex moment(int j, const BigComplex& lambda, double alpha, double beta, mpfr_prec_t prec);
BigReal moment(int j, const BigReal& lambda, double alpha, double beta, mpfr_prec_t prec);

// Orthogonalization data of the deformed weight at one λ. Vectors are sized so
// that everything up to degree N+1 is available:
//   h[0..N+1], p_sub[0..N+1], a_rec[0..N], b_rec[0..N+1] (b_rec[0] = h_0),
//   logD[0..N+2] with logD[k] = log D_k (logD[0] = 0), coeff[k][i] = [x^i] P_k.
template <class T>
struct OrthoTableT {
    T lambda;
    int N = 0;
    double alpha = 0, beta = 0;
    mpfr_prec_t prec = 0;   // precision the table was finally built at
    int escalations = 0;
    std::vector<T> mu, h, a_rec, b_rec, p_sub, logD;
    std::vector<std::vector<T>> coeff;
};

using OrthoTable = OrthoTableT<BigReal>;
using ComplexOrthoTable = OrthoTableT<BigComplex>;

constexpr int kOrthoCap = 64;

// Hankel LDLᵀ factorization of the (N+2)x(N+2) moment matrix. Working precision
// starts at max(ctx bits, 24N) and doubles (up to ctx.max_escalations) until
// logD agrees with a build at 1.5x the precision to ctx.target_rel_tol.
// check_stability = false skips the comparison build.
OrthoTable ortho_table(int N, const BigReal& lambda, double alpha, double beta,
                       const PrecisionContext& ctx, bool check_stability = true);
ComplexOrthoTable ortho_table(int N, const BigComplex& lambda, double alpha, double beta,
                              const PrecisionContext& ctx, bool check_stability = true);

BigReal hankel_det_log(int n, const BigReal& lambda, double alpha, double beta,
                       const PrecisionContext& ctx);
BigComplex hankel_det_log(int n, const BigComplex& lambda, double alpha, double beta,
                          const PrecisionContext& ctx);

// p(n,λ)
BigReal sub_leading(int n, const BigReal& lambda, double alpha, double beta,
                    const PrecisionContext& ctx);

// monic P_n(x) by the three-term recurrence
BigReal eval_poly(int n, const BigReal& x, const OrthoTable& t);
// P_n, P_n', P_n'' from the monomial coefficients
std::array<BigReal, 3> eval_poly_derivs(int n, const BigReal& x, const OrthoTable& t);

struct TodaResiduals {
    BigReal beta_eq, alpha_eq, molecule;
    double max() const;
};

TodaResiduals toda_residuals(int n, const BigReal& lambda, double alpha, double beta,
                             const PrecisionContext& ctx);

}  // namespace jue
