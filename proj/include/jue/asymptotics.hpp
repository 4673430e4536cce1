#pragma once

#include "jue/painleve.hpp"

#include <gmpxx.h>

namespace jue {

// Coulomb-fluid data. A, B on [-1,1]; a = (1-B)/2, b = (1-A)/2 on [0,1].
struct FluidData {
    double alpha_scaled = 0, beta_scaled = 0;
    int n = 0;
    double A = 0, B = 0, a = 0, b = 0;
    double J1 = 0;       // -(a² + 2ab - b²)/8 as printed
    double J1_alt = 0;   // -(b-a)²/16, what ∫ x ϱ(x) dx gives
    double J2 = 0;       // ((2n+α+β)/2)(√((a-1)(b-1)) - (a+b)/2 + 1), α = nα_scaled
};

// throws std::invalid_argument for negative scaled exponents or n < 1
FluidData fluid_data(double alpha_scaled, double beta_scaled, int n);

// equilibrium density σ₀ and the linear-response ϱ for f(x) = x; zero outside (a, b)
double sigma0_density(double x, const FluidData& f);
double varrho_density(double x, const FluidData& f);

enum class MgfVariant { printed, corrected };

// printed: exp[(a²+2ab-b²)λ²/16 - J₂λ];  corrected: exp(-λ²J1_alt/2 - λJ₂)
double mgf_fluid(double lambda, const FluidData& f, MgfVariant v);
double log_mgf_fluid(double lambda, const FluidData& f, MgfVariant v);

enum class CoeffSource { closed_form, extracted };

struct SeriesCoeffs {
    int n = 0;
    double alpha = 0, beta = 0;
    std::vector<BigReal> b;   // b[0] unused, b[1..m_max]
    CoeffSource source = CoeffSource::closed_form;
    int m_max() const { return static_cast<int>(b.size()) - 1; }
};

// b_1..b_5 exactly (index m-1 holds b_m); b_3 = b_5 = 0 when α = β. std::domain_error on a vanishing
// denominator (α+β+2n±k = 0).
std::vector<mpq_class> b_closed_exact(int n, const mpq_class& alpha, const mpq_class& beta);
// b_1..b_8 at α = β = 0 (odd ones vanish)
std::vector<mpq_class> b_closed_exact_legendre(int n);

// m in 1..5, or m in 1..8 when α = β = 0
BigReal b_closed_form(int n, double alpha, double beta, int m, mpfr_prec_t prec);
SeriesCoeffs closed_form_coeffs(int n, double alpha, double beta, int m_max, mpfr_prec_t prec);

// log D_n(λ)/D_n(0) fitted by Σ_{m ≤ m_max+2} c_m λ^m on Chebyshev points of
// [-radius, radius]; b_m = m·c_m. m_max ≤ 6.
SeriesCoeffs b_extracted(int n, double alpha, double beta, int m_max, const PrecisionContext& ctx,
                         double radius = 0.25, unsigned threads = 0);

// κ_m = (-1)^m (m-1)! b_m
std::vector<BigReal> cumulants(const SeriesCoeffs& c);

struct SigmaSeriesReport {
    BigReal series, exact;
    BigReal difference;         // |series - exact|
    BigReal truncation;         // |b_{m_max+1}| |λ|^{m_max+1} when available, else the last kept term
    BigReal sigma_form;         // σ-form residual of the truncated series
};

// σ_n(λ) ≈ -n(n+β) + nλ - Σ b_m (-λ)^m against the Hankel-route σ_n(λ)
SigmaSeriesReport sigma_series_residual(int n, double alpha, double beta, double lambda, int m_max,
                                        const PrecisionContext& ctx);

// log of D_n(0)·exp(Σ_{m ≤ m_max} b_m λ^m/m)
BigReal dn_expansion_log(int n, double alpha, double beta, double lambda, int m_max, mpfr_prec_t prec);
BigReal dn_expansion(int n, double alpha, double beta, double lambda, int m_max, mpfr_prec_t prec);

}  // namespace jue
