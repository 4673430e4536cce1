#pragma once

#include "jue/bigfloat.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace jue {

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionContext {
    int mantissa_bits = 192;
    double target_rel_tol = 1e-30;
    int max_escalations = 3;

    // same tolerance, doubled mantissa
    PrecisionContext escalated() const;
    // tolerance reachable with `bits` of mantissa: 2^(-bits+8)
    static double tolerance_floor(int bits);
};

// throws std::invalid_argument: bits < 64, or tol below the precision floor
PrecisionContext make_context(int mantissa_bits, double target_rel_tol, int max_escalations = 3);

// Working precision for a context, honouring the JUE_PRECISION_BITS override when set.
PrecisionContext default_context();

// Nodes/weights on [0,1] for x^a (1-x)^b.
struct GaussJacobiRule {
    int m = 0;
    double alpha = 0, beta = 0;
    std::vector<BigReal> nodes, weights;
};

GaussJacobiRule gauss_jacobi(int m, double alpha, double beta, mpfr_prec_t prec);

// Monic recurrence for the shifted Jacobi weight x^a (1-x)^b on [0,1]:
// a_k for k = 0..m-1, b_k for k = 0..m-1 (b_0 = total mass).
void shifted_jacobi_recurrence(int m, double alpha, double beta, mpfr_prec_t prec,
                               std::vector<BigReal>& a, std::vector<BigReal>& b);

// Rule memo keyed by (m, alpha, beta, prec); thread-safe.
class QuadratureCache {
public:
    std::shared_ptr<const GaussJacobiRule> get(int m, double alpha, double beta, mpfr_prec_t prec);

private:
    std::mutex mu_;
    std::map<std::tuple<int, double, double, long>, std::shared_ptr<const GaussJacobiRule>> rules_;
};

struct QuadratureResult {
    BigComplex value;
    BigComplex previous;   // estimate at the preceding level
    int nodes = 0;         // node count that met the tolerance
};

using RealIntegrand = std::function<BigReal(const BigReal&)>;
using ComplexIntegrand = std::function<BigComplex(const BigReal&)>;

// ∫_0^1 f(x) x^a (1-x)^b e^{-λx} dx by Gauss-Jacobi with node doubling.
// Throws NumericError carrying the last two estimates when doublings run out.
QuadratureResult integrate_weighted(const ComplexIntegrand& f, double alpha, double beta,
                                    const BigComplex& lambda, const PrecisionContext& ctx,
                                    QuadratureCache* cache = nullptr, int start_nodes = 16,
                                    int max_doublings = 7);
BigReal integrate_weighted(const RealIntegrand& f, double alpha, double beta, const BigReal& lambda,
                           const PrecisionContext& ctx, QuadratureCache* cache = nullptr);

struct DerivativeResult {
    BigReal value;
    BigReal error;   // |difference of the last two Richardson levels|
};
struct ComplexDerivativeResult {
    BigComplex value;
    BigReal error;
};

// Richardson-extrapolated central differences, order 1 or 2.
// Step: max(|λ0|,1)·2^(-bits/(order+2)) with bits = ctx.mantissa_bits.
DerivativeResult derivative(const std::function<BigReal(const BigReal&)>& g, const BigReal& x0,
                            int order, const PrecisionContext& ctx);
ComplexDerivativeResult derivative_complex(const std::function<BigComplex(const BigReal&)>& g,
                                           const BigReal& x0, int order, const PrecisionContext& ctx);

// Least-squares solve of the overdetermined system A c = y (rows x cols), normal
// equations with partial pivoting at the inputs' precision.
std::vector<BigReal> least_squares(const std::vector<std::vector<BigReal>>& A,
                                   const std::vector<BigReal>& y);

// Dense solve with partial pivoting; throws NumericError on a zero pivot.
std::vector<BigReal> solve_linear(std::vector<std::vector<BigReal>> A, std::vector<BigReal> y);

// Runs body(i) for i in [0,count) on up to `threads` workers (0 = hardware).
// Order of side effects inside body is the caller's concern; results written
// to distinct slots stay deterministic.
void parallel_for(size_t count, unsigned threads, const std::function<void(size_t)>& body);

unsigned default_threads();

// exact binary value and precision of x as a string
std::string exact_key(const BigReal& x);

// Memo of f(λ) keyed by the exact binary value of λ; a Richardson stencil shared
// by several derivatives then evaluates each point once. Not thread-safe.
template <class V>
class LambdaMemo {
public:
    explicit LambdaMemo(std::function<V(const BigReal&)> make) : make_(std::move(make)) {}
    const V& at(const BigReal& x) {
        std::string key = exact_key(x);
        auto it = memo_.find(key);
        if (it == memo_.end()) it = memo_.emplace(key, make_(x)).first;
        return it->second;
    }

private:
    std::function<V(const BigReal&)> make_;
    std::map<std::string, V> memo_;
};

}  // namespace jue
