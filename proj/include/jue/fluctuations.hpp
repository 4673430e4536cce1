#pragma once

#include "jue/numkit.hpp"

#include <functional>
#include <vector>

namespace jue {

// Coefficients a_k = ∫ h T_k dx / (π√(1-x²)) on [-1,1]. This is the integral form: for k ≥ 1
// it is half the expansion coefficient of h = Σ A_k T_k (a_0 = A_0).
struct ChebSeries {
    std::vector<double> a;   // a[0..M]
    double tail = 0;         // max(|a_{M-1}|, |a_M|)
    bool slow_decay = false; // tail above the tolerance used at construction
    int M() const { return static_cast<int>(a.size()) - 1; }
};

// Gauss-Chebyshev with 4M nodes
ChebSeries cheb_coeffs(const std::function<double(double)>& h, int M, const PrecisionContext& ctx = default_context());
// series of h = π p(x) √(1-x²) for a density p on [-1,1]
ChebSeries density_series(const std::function<double(double)>& p, int M, const PrecisionContext& ctx = default_context());

// Σ_{k≥1} (a_k - b_k)²/(2k); std::invalid_argument if a_0 differ (unequal masses)
double log_energy_distance(const ChebSeries& p, const ChebSeries& q);
// Σ j a_j²/2; std::invalid_argument unless a_0 = 0
double phi(const ChebSeries& f);
// Σ_{j≥1} b_j²/(2j); the constant term is removed by the centring g = h - a_0
double phi_star(const ChebSeries& sigma);

struct KappaExample {
    double K = 0, pi_kappa = 0;
    double a(int n) const;        // printed closed form; n = 0 uses the a_0 formula
    double phi_star_closed() const;
    double phi_star_series(double tol = 1e-17) const;   // Σ a_n²/(2n) over the closed-form a_n
    double density(double x) const;                      // σ(x) = κ√(1-x²)/(1-K²x²)
    double h(double x) const;                            // π√(1-x²) σ(x)
};
// std::invalid_argument unless 0 < K < 1
KappaExample kappa_example(double K);

// Σ k a_k² for f mapped from [a,b] onto [-1,1]
double linear_statistic_variance(const std::function<double(double)>& f, double a, double b,
                                 const PrecisionContext& ctx = default_context(), int M = 64);

// Principal-value transforms, evaluated by subtracting the singular part and Gauss-Chebyshev on the rest.
// forward:  (1/π) PV∫ f'(y) √(1-y²) / (x-y) dy  for f = Σ a_j T_j  (integral-convention a)
// inverse:  (1/π) PV∫ g(y) / ((y-x) √(1-y²)) dy  for g = Σ b_j T_j
double tricomi_forward(const ChebSeries& f, double x, int nodes = 0);
double tricomi_inverse(const ChebSeries& g, double x, int nodes = 0);

// Round trip: forward transform sampled and projected onto T gives j a_j (integral convention),
// the inverse transform of that projected onto U_{j-1} gives back j a_j; returns max |recovered a_j - a_j|.
double tricomi_round_trip(const ChebSeries& f);

// helpers
double cheb_eval(const ChebSeries& s, double x);   // h(x) from integral-convention coefficients
double cheb_t(int k, double x);
double cheb_u(int k, double x);

}  // namespace jue
