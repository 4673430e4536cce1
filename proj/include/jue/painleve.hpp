#pragma once

#include "jue/ladder.hpp"

namespace jue {

// The σ, Y and Ξ quantities switch between argument λ and -λ. Every conversion goes
// through these names so the sign lives in one place.
namespace argmap {
// σ_n(λ) = nλ + λ p(n,-λ) - n(n+β): p is read at -λ
inline BigReal p_argument_for_sigma(const BigReal& lambda) { return -lambda; }
// Y_n(-λ) = 1 - λ/R_n(λ)  <=>  Y_n(t) = 1 + t/R_n(-t)
inline BigReal r_argument_for_y(const BigReal& t) { return -t; }
// Ξ'(λ) = r_n(-λ)
inline BigReal r_argument_for_xi(const BigReal& lambda) { return -lambda; }
}  // namespace argmap

enum class Derivation { analytic_toda, finite_difference };

struct SigmaPoint {
    BigReal lambda;
    int n = 0;
    BigReal sigma, dsigma, d2sigma;
    Derivation derivation = Derivation::analytic_toda;
};

// σ, σ', σ'' at λ. Analytic route: σ' = n + p(n,-λ) - λβ_n(-λ),
// σ'' = -2β_n(-λ) + λ[β_n(α_{n-1} - α_n)](-λ).
SigmaPoint sigma_point(int n, const BigReal& lambda, double alpha, double beta,
                       const PrecisionContext& ctx, Derivation d = Derivation::analytic_toda);

// σ_k(λ) for k = 0..kmax from one table at -λ
std::vector<BigReal> sigma_values(int kmax, const BigReal& lambda, double alpha, double beta,
                                  const PrecisionContext& ctx);

// (λσ'')² - [σ - λσ' + (2n+α+β)σ']² - 4[σ'² + ασ'][λσ' - σ - n(n+β)]
BigReal sigma_form_residual(int n, const BigReal& lambda, double alpha, double beta,
                            const PrecisionContext& ctx);
BigReal sigma_form_residual(const SigmaPoint& s, double alpha, double beta);

// The σ̃ = -σ form with the coefficient of σ̃' taken as -(2n-α+β) (as printed)
// or +(2n-α+β).
struct SigmaTildeReport {
    BigReal printed, plus_sign;
};
SigmaTildeReport sigma_tilde_residuals(const SigmaPoint& s, double alpha, double beta);

// Y_n(-λ) = 1 - λ/R_n(λ)
BigReal y_from_R(int n, const BigReal& lambda, const AuxTable& aux);
// Y_n(t) built from the recursion route at -t
BigReal y_value(int n, const BigReal& t, double alpha, double beta, const PrecisionContext& ctx);

BigReal pv_residual(int n, const BigReal& lambda, double alpha, double beta, const PrecisionContext& ctx);

enum class ChazyVariant { printed, corrected };

struct ChazyCoefficients {
    BigComplex shift, alpha1, beta1, gamma1;
};
ChazyCoefficients chazy_coefficients(int n, double alpha, double beta, ChazyVariant v, mpfr_prec_t prec);

// |LHS - RHS| of the Chazy II relation for ϑ(z) = 2i r_n(2i e^z) + shift
BigReal chazy_residual(int n, const BigReal& z, double alpha, double beta, const PrecisionContext& ctx,
                       ChazyVariant v = ChazyVariant::printed);

// discrete relation among σ_{n-1}(λ), σ_n(λ), σ_{n+1}(λ); n >= 2
BigReal discrete_sigma_residual(int n, const BigReal& lambda, double alpha, double beta,
                                const PrecisionContext& ctx);
// same relation fed with σ_k(-λ), kept to document the argument convention
BigReal discrete_sigma_residual_negated(int n, const BigReal& lambda, double alpha, double beta,
                                        const PrecisionContext& ctx);

// λ²β_n + λr_n = σ_n(-λ) + n(n+β) and R_n = α + σ_n(-λ) - σ_{n+1}(-λ)
ResidualPair sigma_link_residuals(int n, const BigReal& lambda, double alpha, double beta,
                                  const PrecisionContext& ctx);

// P_n'' + R(z)P_n' + Q(z)P_n with exact polynomial derivatives. std::domain_error
// when z is within 1e-6 of 0, 1 or the moving pole -1/(Y_n(-λ)-1).
BigReal pn_ode_residual(int n, const BigReal& z, const BigReal& lambda, double alpha, double beta,
                        const PrecisionContext& ctx);

// σ_n(λ) against the Y-form: prefactor 1/(4Y(4Y-1)²) as printed, the 1/(4Y(Y-1)²)
// variant, and that variant plus 2nλ. Y = Y_n(λ) = 1 + λ/R_n(-λ).
struct SigmaFromYReport {
    BigReal sigma, printed, variant, variant_plus;
    BigReal printed_gap() const { return abs(sigma - printed); }
    BigReal variant_gap() const { return abs(sigma - variant); }
    BigReal variant_plus_gap() const { return abs(sigma - variant_plus); }
};
SigmaFromYReport sigma_from_y_check(int n, const BigReal& lambda, double alpha, double beta,
                                    const PrecisionContext& ctx);

// |Ξ'(λ) - r_n(-λ)| with Ξ(λ) = λ d/dλ log D_n(-λ) - nλ + n(n+β) differentiated numerically
BigReal xi_check(int n, const BigReal& lambda, double alpha, double beta, const PrecisionContext& ctx);

}  // namespace jue
