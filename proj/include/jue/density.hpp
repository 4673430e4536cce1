#pragma once

#include "jue/asymptotics.hpp"

#include <complex>

namespace jue {

struct AppendixPiece {
    int shift = 0, power = 0;
    bool reflected = false;   // (shift - c)^power instead of (c - shift)^power
    const char* inner = "1";  // integer coefficients, constant term first
};

struct AppendixCase {
    int alpha, beta, n;
    const char* normalizer;
    std::vector<AppendixPiece> pieces;   // piece k lives on [k, k+1]
    int printed_flip = -1;               // piece whose printed factor has the opposite orientation
};

const std::vector<AppendixCase>& appendix_cases();

// Exact piecewise density on [0, n] with integer knots.
struct PiecewisePoly {
    int n = 0;
    int alpha = 0, beta = 0;
    mpq_class normalizer;
    std::vector<std::vector<mpq_class>> pieces;   // expanded, normalizer folded in, constant term first

    // 0 outside [0, n]; at an interior knot the left piece is used
    mpq_class eval(const mpq_class& c) const;
    double operator()(double c) const;
    mpq_class moment(int k) const;   // ∫ c^k P(c) dc
    mpq_class mass() const { return moment(0); }
    mpq_class mean() const;
    mpq_class variance() const;
};

// CDF of a PiecewisePoly; antiderivatives are exact, evaluation at 192 bits
class ExactCdf {
public:
    explicit ExactCdf(const PiecewisePoly& p);
    double operator()(double c) const;

private:
    int n_;
    std::vector<std::vector<BigReal>> anti_;   // ∫_k^c of piece k, constant term first
    std::vector<double> below_;                // mass of [0, k]
};

struct PiecewiseInvariants {
    mpq_class mass;
    bool continuous = false;     // exact agreement of neighbouring pieces at every knot
    bool endpoints_zero = false;
    bool symmetric = false;      // P(c) = P(n-c) coefficientwise; only meaningful when α = β
    double min_on_scan = 0;      // over 10^4 + 1 equispaced points
    bool ok() const;
};

PiecewiseInvariants check_invariants(const PiecewisePoly& p, int scan_points = 10000);

bool has_exact_density(int n, double alpha, double beta);
// std::invalid_argument for untabulated cases; std::logic_error if the stored data
// fail their invariants. as_printed keeps the printed factor orientation (no check).
PiecewisePoly exact_piecewise(int n, double alpha, double beta, bool as_printed = false);

enum class DensityMethod { edgeworth, exact, fourier, monte_carlo };
const char* method_name(DensityMethod m);

struct DensityGrid {
    std::vector<double> c, value;
    DensityMethod method = DensityMethod::exact;
    double trapezoid_mass() const;
};

// Gaussian in u = c + b_1 times the type-A bracket up to `order` (2..5; 5 adds the
// b_5 He_5 term, which is not part of the printed expansion)
double edgeworth_density(double c, int n, double alpha, double beta, int order);

// Printed α = β = 0 form with its η terms, for comparison only.
double edgeworth_legendre_printed(double c, int n);
struct LegendreEdgeworthReport {
    double prefactor_gap = 0;   // |printed prefactor - 1/√(2πb₂)|
    double exponent_gap = 0;    // |printed Gaussian exponent - (-(c+b₁)²/(2b₂))| at c = 0
    double sup_vs_order4 = 0;   // sup over [0,n] of |printed - edgeworth order 4|
    double sup_vs_exact = 0;    // same against the exact density (0 when untabulated)
};
LegendreEdgeworthReport compare_legendre_edgeworth(int n);

struct FourierOptions {
    double lambda_max = 0;       // 0 = 40 n
    int nodes_per_panel = 8;
    bool filter = true;          // exp(-36 (λ/Λ)^filter_order)
    int filter_order = 8;
    unsigned threads = 0;
    int mantissa_bits = 128;
};

struct FourierResult {
    double value = 0;
    double tail_bound = 0;   // envelope estimate of the discarded ∫_Λ^∞
    double decay_exponent = 0;
    int points = 0;
};

// Holds D_n(-iλ)/D_n(0) on the panel grid so many c reuse one evaluation.
class FourierInverter {
public:
    FourierInverter(int n, double alpha, double beta, const FourierOptions& opt = {});
    FourierResult at(double c) const;
    int points() const { return static_cast<int>(lam_.size()); }

private:
    int n_;
    double Lam_;
    bool filter_;
    int filter_order_;
    std::vector<double> lam_, w_;
    std::vector<std::complex<double>> d_;
    double tail_ = 0, decay_ = 0;
};

FourierResult fourier_inversion(double c, int n, double alpha, double beta, const FourierOptions& opt = {});

struct SupportCheck {
    bool pass = false;
    double worst_ratio = 0;   // max |e^{inz/2} D(z)| / (C e^{n|y|/2}), C = D(0)
    double y = 0;
};

// the Paley-Wiener bound along z = x + iy, x ∈ [-x_extent, x_extent]; D(z) = D_n(λ = iz)
SupportCheck support_check(int n, double alpha, double beta, double y, const PrecisionContext& ctx,
                           double x_extent = 0, int samples = 41);

struct LogConcavity {
    bool pass = false;
    bool asserted = false;     // α, β > 0: the hypothesis under which it is claimed
    double worst = 0;          // min second difference of -log P
};

LogConcavity log_concavity_check(const PiecewisePoly& p, double grid_step, double tol = 1e-12);

DensityGrid exact_grid(const PiecewisePoly& p, int points);
DensityGrid edgeworth_grid(int n, double alpha, double beta, int order, int points);

}  // namespace jue
