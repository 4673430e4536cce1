#pragma once

#include "jue/numkit.hpp"

namespace jue {

// log Γ(x) for x > 0; std::domain_error otherwise
BigReal log_gamma(const BigReal& x);
BigReal log_gamma(double x, mpfr_prec_t prec);

// B(a,b), a, b > 0
BigReal beta_fn(const BigReal& a, const BigReal& b);
BigReal beta_fn(double a, double b, mpfr_prec_t prec);

struct KummerArgs {
    BigReal a, b;
    BigComplex z;
};

// M(a;b;z) by the Taylor series. The working precision carries guard bits for
// the expected cancellation and is raised again if the summed series shows more.
// Result is returned at `prec` bits.
BigComplex kummer_m(const BigReal& a, const BigReal& b, const BigComplex& z, mpfr_prec_t prec);
BigComplex kummer_m(const KummerArgs& args, const PrecisionContext& ctx);
BigReal kummer_m_real(const BigReal& a, const BigReal& b, const BigReal& z, mpfr_prec_t prec);

// I_nu(x) by the ascending series, nu >= 0
BigReal bessel_i(double nu, const BigReal& x);

// log D_n(0,α,β) from the finite Gamma product
BigReal log_d0(int n, double alpha, double beta, mpfr_prec_t prec);

}  // namespace jue
