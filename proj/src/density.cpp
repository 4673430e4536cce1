#include "jue/density.hpp"

#include "jue/specfun.hpp"

#include <cmath>
#include <sstream>

namespace jue {

namespace {

using Poly = std::vector<mpq_class>;

Poly parse_coeffs(const char* s) {
    Poly out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.emplace_back(mpz_class(tok));
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// (c - s)^p, or (s - c)^p when reflected
Poly linear_power(int s, int p, bool reflected) {
    Poly base = reflected ? Poly{mpq_class(s), mpq_class(-1)} : Poly{mpq_class(-s), mpq_class(1)};
    Poly r{mpq_class(1)};
    for (int i = 0; i < p; ++i) r = mul(r, base);
    return r;
}

mpq_class horner(const Poly& p, const mpq_class& x) {
    mpq_class v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

mpq_class ratio(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class qpow(const mpq_class& x, int k) {
    mpq_class r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

BigReal to_big(const mpq_class& q, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

}  // namespace

mpq_class PiecewisePoly::eval(const mpq_class& c) const {
    if (c < 0 || c > n) return 0;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    long k = fl.get_si();
    if (k > 0 && mpq_class(k) == c) --k;   // knot: left piece
    if (k >= n) k = n - 1;
    return horner(pieces[k], c);
}

double PiecewisePoly::operator()(double c) const {
    if (!std::isfinite(c)) return 0;
    return eval(mpq_class(c)).get_d();
}

mpq_class PiecewisePoly::moment(int k) const {
    mpq_class total = 0;
    for (int j = 0; j < n; ++j) {
        const Poly& p = pieces[j];
        for (size_t i = 0; i < p.size(); ++i) {
            int e = static_cast<int>(i) + k + 1;
            total += p[i] * (qpow(mpq_class(j + 1), e) - qpow(mpq_class(j), e)) / e;
        }
    }
    return total;
}

mpq_class PiecewisePoly::mean() const { return moment(1) / mass(); }

mpq_class PiecewisePoly::variance() const {
    mpq_class m = mean();
    return moment(2) / mass() - m * m;
}

ExactCdf::ExactCdf(const PiecewisePoly& p) : n_(p.n) {
    const mpfr_prec_t prec = 192;
    mpq_class acc = 0;
    for (int k = 0; k < p.n; ++k) {
        const Poly& pc = p.pieces[k];
        Poly a(pc.size() + 1, 0);
        for (size_t i = 0; i < pc.size(); ++i) a[i + 1] = pc[i] / mpq_class(long(i + 1));
        a[0] = -horner(a, k);
        std::vector<BigReal> big;
        for (const auto& v : a) big.push_back(to_big(v, prec));
        anti_.push_back(std::move(big));
        below_.push_back(acc.get_d());
        acc += horner(a, k + 1);
    }
}

double ExactCdf::operator()(double c) const {
    if (!(c > 0)) return 0;
    if (c >= n_) return 1;
    int k = std::min(static_cast<int>(std::floor(c)), n_ - 1);
    const auto& a = anti_[k];
    BigReal x(c, a[0].prec()), v(a[0].prec());
    for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
    return below_[k] + v.to_double();
}

bool PiecewiseInvariants::ok() const {
    return mass == 1 && continuous && endpoints_zero && min_on_scan >= 0;
}

PiecewiseInvariants check_invariants(const PiecewisePoly& p, int scan_points) {
    PiecewiseInvariants inv;
    inv.mass = p.mass();
    inv.continuous = true;
    for (int k = 1; k < p.n; ++k)
        if (horner(p.pieces[k - 1], k) != horner(p.pieces[k], k)) inv.continuous = false;
    inv.endpoints_zero = horner(p.pieces[0], 0) == 0 && horner(p.pieces[p.n - 1], p.n) == 0;
    // mirror: piece n-1-k at n-c equals piece k at c; degree+1 sample points decide it
    inv.symmetric = true;
    for (int k = 0; k < p.n && inv.symmetric; ++k) {
        const Poly &a = p.pieces[k], &b = p.pieces[p.n - 1 - k];
        size_t pts = std::max(a.size(), b.size()) + 1;
        for (size_t i = 0; i < pts; ++i) {
            mpq_class c = mpq_class(k) + ratio(long(i), long(pts));
            if (horner(a, c) != horner(b, mpq_class(p.n) - c)) {
                inv.symmetric = false;
                break;
            }
        }
    }
    inv.min_on_scan = 0;
    bool first = true;
    for (int i = 0; i <= scan_points; ++i) {
        double v = p.eval(ratio(long(i) * p.n, long(scan_points))).get_d();
        if (first || v < inv.min_on_scan) inv.min_on_scan = v;
        first = false;
    }
    return inv;
}

namespace {

const AppendixCase* find_case(int n, double alpha, double beta) {
    for (const auto& c : appendix_cases())
        if (c.n == n && double(c.alpha) == alpha && double(c.beta) == beta) return &c;
    return nullptr;
}

}  // namespace

bool has_exact_density(int n, double alpha, double beta) { return find_case(n, alpha, beta) != nullptr; }

PiecewisePoly exact_piecewise(int n, double alpha, double beta, bool as_printed) {
    const AppendixCase* cs = find_case(n, alpha, beta);
    if (!cs) {
        std::ostringstream os;
        os << "no tabulated exact density for (alpha,beta,n)=(" << alpha << "," << beta << "," << n
           << "); use fourier_inversion";
        throw std::invalid_argument(os.str());
    }
    PiecewisePoly p;
    p.n = cs->n;
    p.alpha = cs->alpha;
    p.beta = cs->beta;
    p.normalizer = mpq_class(cs->normalizer);
    p.normalizer.canonicalize();
    for (size_t k = 0; k < cs->pieces.size(); ++k) {
        const auto& pc = cs->pieces[k];
        bool refl = pc.reflected;
        if (as_printed && int(k) == cs->printed_flip) refl = !refl;
        Poly poly = mul(linear_power(pc.shift, pc.power, refl), parse_coeffs(pc.inner));
        for (auto& v : poly) v *= p.normalizer;
        p.pieces.push_back(std::move(poly));
    }
    if (!as_printed) {
        auto inv = check_invariants(p, 2000);
        if (!inv.ok() || (p.alpha == p.beta && !inv.symmetric))
            throw std::logic_error("exact_piecewise: stored table fails its invariants");
    }
    return p;
}

const char* method_name(DensityMethod m) {
    switch (m) {
    case DensityMethod::edgeworth: return "edgeworth";
    case DensityMethod::exact: return "exact";
    case DensityMethod::fourier: return "fourier";
    default: return "monte-carlo";
    }
}

double DensityGrid::trapezoid_mass() const {
    double s = 0;
    for (size_t i = 1; i < c.size(); ++i) s += (c[i] - c[i - 1]) * (value[i] + value[i - 1]) / 2;
    return s;
}

double edgeworth_density(double c, int n, double alpha, double beta, int order) {
    if (order < 2 || order > 5) throw std::invalid_argument("edgeworth order must be in 2..5");
    const mpfr_prec_t p = 128;
    double b[6] = {0, 0, 0, 0, 0, 0};
    for (int m = 1; m <= std::max(2, order); ++m) b[m] = b_closed_form(n, alpha, beta, m, p).to_double();
    const double b2 = b[2];
    if (!(b2 > 0)) throw std::domain_error("edgeworth_density needs b_2 > 0");
    const double u = c + b[1];
    double bracket = 1;
    if (order >= 3) bracket -= u * (u * u - 3 * b2) * b[3] / (3 * b2 * b2 * b2);
    if (order >= 4) bracket += (u * u * u * u - 6 * b2 * u * u + 3 * b2 * b2) * b[4] / (4 * std::pow(b2, 4));
    if (order >= 5) {
        double he5 = std::pow(u, 5) - 10 * b2 * std::pow(u, 3) + 15 * b2 * b2 * u;
        bracket -= he5 * b[5] / (5 * std::pow(b2, 5));
    }
    return std::exp(-u * u / (2 * b2)) / std::sqrt(2 * M_PI * b2) * bracket;
}

double edgeworth_legendre_printed(double c, int n) {
    const double N = n, N2 = N * N, N4 = N2 * N2, N6 = N4 * N2, N8 = N6 * N2, N10 = N8 * N2;
    const double h = c - N / 2, q = c - N / 4;
    const double h2 = h * h, h4 = h2 * h2, h6 = h4 * h2, q2 = q * q, q4 = q2 * q2, q6 = q4 * q2;
    double eta1 = 4 * h4 / N6 - 2 * h2 * (16 * h2 - 3) / N4 + (64 * h4 - 24 * h2 + 0.75) / N2;
    double eta2 = -(64 * q6 / 3) / N10 + (8192 * h6 / 3 - 2560 * h4 + 480 * h2 - 10) / N2 +
                  80 * q4 * (8 * q2 / 3 - 1) / N8 - 4 * q2 * (128 * q4 + 120 * h2 - 15) / N6 -
                  (2048 * q6 / 3 - 120 * h2 + 5) / N4;
    double pref = std::sqrt(2 * (4 * N2 - 1) / (N2 * M_PI));
    double gauss = std::exp(2 * (1 / N2 - 4) * h2);
    return pref * gauss * (1 + eta1 / (4 * N2 - 9) + eta2 / (16 * N4 - 136 * N2 + 225));
}

LegendreEdgeworthReport compare_legendre_edgeworth(int n) {
    LegendreEdgeworthReport r;
    const double N = n;
    const double b1 = -N / 2, b2 = N * N / (4 * (4 * N * N - 1));
    r.prefactor_gap = std::abs(std::sqrt(2 * (4 * N * N - 1) / (N * N * M_PI)) - 1 / std::sqrt(2 * M_PI * b2));
    r.exponent_gap = std::abs(2 * (1 / (N * N) - 4) * (N / 2) * (N / 2) + b1 * b1 / (2 * b2));
    const bool have = has_exact_density(n, 0, 0);
    PiecewisePoly ex;
    if (have) ex = exact_piecewise(n, 0, 0);
    for (int i = 0; i <= 400; ++i) {
        double c = N * i / 400;
        double pr = edgeworth_legendre_printed(c, n);
        r.sup_vs_order4 = std::max(r.sup_vs_order4, std::abs(pr - edgeworth_density(c, n, 0, 0, 4)));
        if (have) r.sup_vs_exact = std::max(r.sup_vs_exact, std::abs(pr - ex(c)));
    }
    return r;
}

FourierInverter::FourierInverter(int n, double alpha, double beta, const FourierOptions& opt)
    : n_(n), filter_(opt.filter), filter_order_(opt.filter_order) {
    if (n < 1) throw std::invalid_argument("fourier inversion needs n >= 1");
    validate_weight(alpha, beta);
    Lam_ = opt.lambda_max > 0 ? opt.lambda_max : 40.0 * n;
    if (opt.nodes_per_panel < 2) throw std::invalid_argument("fourier inversion needs >= 2 nodes per panel");
    // e^{-icλ}D(-iλ) oscillates at frequency at most n on c ∈ [0,n]: one period per panel
    const double width = 2 * M_PI / n;
    const int panels = static_cast<int>(std::ceil(Lam_ / width));
    const double h = Lam_ / panels;
    auto rule = gauss_jacobi(opt.nodes_per_panel, 0, 0, 64);
    for (int k = 0; k < panels; ++k)
        for (int i = 0; i < rule.m; ++i) {
            lam_.push_back(h * (k + rule.nodes[i].to_double()));
            w_.push_back(h * rule.weights[i].to_double());
        }
    PrecisionContext ctx;
    ctx.mantissa_bits = opt.mantissa_bits;
    ctx.target_rel_tol = std::max(1e-20, 16 * PrecisionContext::tolerance_floor(opt.mantissa_bits));
    ctx.max_escalations = 3;
    const mpfr_prec_t p = opt.mantissa_bits;
    BigReal ld0 = log_d0(n, alpha, beta, p);
    d_.resize(lam_.size());
    parallel_for(lam_.size(), opt.threads ? opt.threads : default_threads(), [&](size_t j) {
        BigComplex z(BigReal(p), BigReal(-lam_[j], p));
        BigComplex v = exp(hankel_det_log(n, z, alpha, beta, ctx) - ld0);
        d_[j] = {v.re.to_double(), v.im.to_double()};
    });
    // envelope |d| ~ C λ^{-p}: compare the top decile against the neighbourhood of Λ/2
    double top = 0, mid = 0;
    for (size_t j = 0; j < lam_.size(); ++j) {
        double a = std::abs(d_[j]);
        if (lam_[j] >= 0.9 * Lam_) top = std::max(top, a);
        if (lam_[j] >= 0.45 * Lam_ && lam_[j] <= 0.55 * Lam_) mid = std::max(mid, a);
    }
    if (top > 0 && mid > 0) {
        decay_ = std::log(mid / top) / std::log(0.95 / 0.5);
        tail_ = decay_ > 1 ? top * Lam_ / (M_PI * (decay_ - 1)) : std::numeric_limits<double>::infinity();
    }
}

FourierResult FourierInverter::at(double c) const {
    double s = 0;
    for (size_t j = 0; j < lam_.size(); ++j) {
        double f = w_[j];
        if (filter_) {
            f *= std::exp(-36 * std::pow(lam_[j] / Lam_, filter_order_));
        }
        s += f * std::real(std::polar(1.0, -c * lam_[j]) * d_[j]);
    }
    FourierResult r;
    r.value = s / M_PI;
    r.tail_bound = tail_;
    r.decay_exponent = decay_;
    r.points = points();
    return r;
}

FourierResult fourier_inversion(double c, int n, double alpha, double beta, const FourierOptions& opt) {
    return FourierInverter(n, alpha, beta, opt).at(c);
}

SupportCheck support_check(int n, double alpha, double beta, double y, const PrecisionContext& ctx,
                           double x_extent, int samples) {
    if (samples < 1) throw std::invalid_argument("support_check needs samples >= 1");
    if (x_extent <= 0) x_extent = 4.0 * n;
    const mpfr_prec_t p = ctx.mantissa_bits;
    BigReal ld0 = log_d0(n, alpha, beta, p);
    SupportCheck out;
    out.y = y;
    for (int i = 0; i < samples; ++i) {
        double x = samples == 1 ? 0 : -x_extent + 2 * x_extent * i / (samples - 1);
        // λ = iz = -y + ix
        BigComplex lam(BigReal(-y, p), BigReal(x, p));
        BigComplex ld = hankel_det_log(n, lam, alpha, beta, ctx);
        // log|e^{inz/2}| = -ny/2
        double lr = (ld.re - ld0).to_double() - n * y / 2 - n * std::abs(y) / 2;
        out.worst_ratio = std::max(out.worst_ratio, std::exp(lr));
    }
    out.pass = out.worst_ratio <= 1 + 1e-12;
    return out;
}

LogConcavity log_concavity_check(const PiecewisePoly& p, double grid_step, double tol) {
    if (!(grid_step > 0) || grid_step >= p.n / 2.0)
        throw std::invalid_argument("log_concavity_check: bad grid step");
    LogConcavity out;
    out.asserted = p.alpha > 0 && p.beta > 0;
    const int m = static_cast<int>(std::floor(p.n / grid_step));
    std::vector<BigReal> f;
    mpq_class h(grid_step);
    for (int j = 1; j < m; ++j) {
        mpq_class c = h * j;
        if (c >= p.n) break;
        mpq_class v = p.eval(c);
        if (v <= 0) throw std::domain_error("log_concavity_check: density vanishes inside the support");
        f.push_back(-log(to_big(v, 128)));
    }
    out.worst = std::numeric_limits<double>::infinity();
    for (size_t j = 1; j + 1 < f.size(); ++j)
        out.worst = std::min(out.worst, (f[j - 1] - f[j] * 2L + f[j + 1]).to_double());
    out.pass = out.worst >= -tol;
    return out;
}

DensityGrid exact_grid(const PiecewisePoly& p, int points) {
    if (points < 2) throw std::invalid_argument("grid needs >= 2 points");
    DensityGrid g;
    g.method = DensityMethod::exact;
    for (int i = 0; i < points; ++i) {
        mpq_class c = ratio(long(i) * p.n, long(points - 1));
        g.c.push_back(c.get_d());
        g.value.push_back(p.eval(c).get_d());
    }
    return g;
}

DensityGrid edgeworth_grid(int n, double alpha, double beta, int order, int points) {
    if (points < 2) throw std::invalid_argument("grid needs >= 2 points");
    DensityGrid g;
    g.method = DensityMethod::edgeworth;
    for (int i = 0; i < points; ++i) {
        double c = double(n) * i / (points - 1);
        g.c.push_back(c);
        g.value.push_back(edgeworth_density(c, n, alpha, beta, order));
    }
    return g;
}

}  // namespace jue
