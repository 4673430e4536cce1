#include "jue/verify.hpp"

#include "jue/asymptotics.hpp"
#include "jue/density.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace jue {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> s{"toda",  "riccati", "difference", "painleve",
                                            "sigma", "chazy",   "discrete",   "appendix"};
    return s;
}

const std::vector<std::pair<double, double>>& identity_pairs() {
    static const std::vector<std::pair<double, double>> p{{0, 0}, {1, 1}, {1, 2}, {0.5, 1.5}, {2.5, 0.5}};
    return p;
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        default: return "INFO";
    }
}

bool all_passed(const std::vector<CheckResult>& rs) {
    for (auto& r : rs)
        if (r.status == CheckStatus::fail) return false;
    return true;
}

std::string format_check(const CheckResult& r) {
    char buf[512];
    if (r.status == CheckStatus::info)
        std::snprintf(buf, sizeof buf, "INFO %s/%s value=%.6e [%s]", r.suite.c_str(), r.name.c_str(), r.value,
                      r.params.c_str());
    else
        std::snprintf(buf, sizeof buf, "%s %s/%s residual=%.3e tol=%.1e [%s]", status_name(r.status), r.suite.c_str(),
                      r.name.c_str(), r.value, r.tol, r.params.c_str());
    std::string s = buf;
    if (!r.note.empty()) s += " " + r.note;
    return s;
}

namespace {

using Checks = std::vector<CheckResult>;
using Task = std::function<Checks()>;

struct Point {
    int n;
    double alpha, beta, lambda;
};

std::string params_of(int n, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "n=%d alpha=%g beta=%g", n, a, b);
    return buf;
}

std::string params_of(const Point& p) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=%d alpha=%g beta=%g lambda=%g", p.n, p.alpha, p.beta, p.lambda);
    return buf;
}

CheckResult check(const std::string& suite, const std::string& name, const std::string& params, double value,
                  double tol) {
    CheckResult r;
    r.suite = suite;
    r.name = name;
    r.params = params;
    r.value = value;
    r.tol = tol;
    r.status = (std::isfinite(value) && value < tol) ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

CheckResult info(const std::string& suite, const std::string& name, const std::string& params, double value,
                 const std::string& note = "") {
    CheckResult r;
    r.suite = suite;
    r.name = name;
    r.params = params;
    r.value = value;
    r.status = CheckStatus::info;
    r.note = note;
    return r;
}

std::vector<Point> identity_grid(const VerifyConfig& cfg, int n_min = 1) {
    std::vector<int> ns;
    std::vector<std::pair<double, double>> pairs;
    std::vector<double> lams;
    if (cfg.quick) {
        ns = {2, 3};
        pairs = {{1, 2}, {0.5, 1.5}};
        lams = {1};
    } else {
        ns = {1, 2, 3, 4, 5};
        pairs = identity_pairs();
        lams = {0.25, 1, 2.5};
    }
    if (cfg.n) ns = {*cfg.n};
    if (cfg.alpha && cfg.beta) pairs = {{*cfg.alpha, *cfg.beta}};
    std::vector<Point> g;
    for (int n : ns) {
        if (n < n_min) continue;
        for (auto [a, b] : pairs)
            for (double l : lams) g.push_back({n, a, b, l});
    }
    return g;
}

BigReal big(double x, const PrecisionContext& ctx) { return BigReal(x, ctx.mantissa_bits); }

double relgap(const BigReal& x, const BigReal& y) {
    BigReal d = abs(x - y);
    BigReal s = abs(y);
    return (s > 1L) ? (d / s).to_double() : d.to_double();
}

// ---- identity suites, one task per grid point ----

void toda_tasks(const VerifyConfig& cfg, std::vector<Task>& t) {
    for (auto p : identity_grid(cfg))
        t.push_back([p, ctx = cfg.ctx]() -> Checks {
            auto r = toda_residuals(p.n, big(p.lambda, ctx), p.alpha, p.beta, ctx);
            return {check("toda", "toda_equations", params_of(p), r.max(), 1e-6)};
        });
}

void riccati_tasks(const VerifyConfig& cfg, std::vector<Task>& t) {
    for (auto p : identity_grid(cfg))
        t.push_back([p, ctx = cfg.ctx]() -> Checks {
            BigReal L = big(p.lambda, ctx);
            return {check("riccati", "riccati", params_of(p), riccati_residuals(p.n, L, p.alpha, p.beta, ctx).max(),
                          1e-6),
                    check("riccati", "second_order", params_of(p),
                          second_order_residuals(p.n, L, p.alpha, p.beta, ctx).max(), 1e-5)};
        });
}

void difference_tasks(const VerifyConfig& cfg, std::vector<Task>& t) {
    for (auto p : identity_grid(cfg))
        t.push_back([p, ctx = cfg.ctx]() -> Checks {
            BigReal L = big(p.lambda, ctx);
            Checks out;
            auto aux = aux_by_recursion(p.n, L, p.alpha, p.beta, ctx);
            if (p.alpha > 0) {
                auto ip = aux_by_integral(p.n, L, p.alpha, p.beta, ctx);
                double g = relgap(aux.R[p.n], ip.R);
                if (p.n > 0) g = std::max(g, relgap(aux.r[p.n], ip.r));
                out.push_back(check("difference", "recursion_vs_integral", params_of(p), g, 1e-8));
            }
            out.push_back(check("difference", "sum_rules", params_of(p), sum_rule_residuals(p.n, aux).max(), 1e-8));
            return out;
        });
    // r_1 closed forms depend on (α, β, λ) only
    std::vector<Point> r1pts;
    for (auto p : identity_grid(cfg))
        if (p.n == identity_grid(cfg).front().n) r1pts.push_back(p);
    for (auto p : r1pts)
        t.push_back([p, ctx = cfg.ctx]() -> Checks {
            BigReal L = big(p.lambda, ctx);
            auto aux = aux_by_recursion(1, L, p.alpha, p.beta, ctx);
            Point q = p;
            q.n = 1;
            std::string ps = params_of(q);
            BigReal printed = r1_kummer_form(L, p.alpha, p.beta, ctx.mantissa_bits);
            BigReal swapped = r1_kummer_form_swapped(L, p.alpha, p.beta, ctx.mantissa_bits);
            BigReal diff = r1_from_difference(L, p.alpha, p.beta, ctx.mantissa_bits);
            return {check("difference", "r1_kummer_swapped_vs_recursion", ps, abs(swapped - aux.r[1]).to_double(),
                          1e-12),
                    check("difference", "r1_from_difference_vs_recursion", ps, abs(diff - aux.r[1]).to_double(),
                          1e-12),
                    info("difference", "r1_kummer_printed_gap", ps, abs(printed - aux.r[1]).to_double(),
                         "printed factor order (a+b+1),(a+b+2) exchanged")};
        });
    std::vector<double> bl = cfg.quick ? std::vector<double>{1} : std::vector<double>{0.5, 1, 2};
    for (double l : bl)
        t.push_back([l, ctx = cfg.ctx]() -> Checks {
            BigReal L = big(l, ctx);
            auto aux = aux_by_recursion(1, L, 0.5, 0.5, ctx);
            auto bf = bessel_forms(L);
            std::string ps = params_of(Point{1, 0.5, 0.5, l});
            return {check("difference", "bessel_R0_doubled", ps, abs(bf.R0_doubled - aux.R[0]).to_double(), 1e-10),
                    check("difference", "bessel_r1", ps, abs(bf.r1 - aux.r[1]).to_double(), 1e-10),
                    check("difference", "bessel_R1", ps, abs(bf.R1 - aux.R[1]).to_double(), 1e-10),
                    info("difference", "bessel_R0_printed_over_recursion", ps, (bf.R0_printed / aux.R[0]).to_double(),
                         "printed prefactor lambda/4 gives half of R_0")};
        });
}

void painleve_tasks(const VerifyConfig& cfg, std::vector<Task>& t) {
    for (auto p : identity_grid(cfg))
        t.push_back([p, ctx = cfg.ctx]() -> Checks {
            BigReal L = big(p.lambda, ctx);
            Checks out;
            std::string ps = params_of(p);
            out.push_back(check("painleve", "painleve_v", ps, pv_residual(p.n, L, p.alpha, p.beta, ctx).to_double(),
                                1e-5));
            double worst = 0;
            for (double z : {0.3, 0.7, 0.45}) {
                try {
                    worst = std::max(worst, pn_ode_residual(p.n, big(z, ctx), L, p.alpha, p.beta, ctx).to_double());
                } catch (const std::domain_error&) {
                    // z next to the moving singular point; the other z values cover it
                }
            }
            out.push_back(check("painleve", "pn_ode", ps, worst, 1e-8));
            out.push_back(check("painleve", "xi_derivative", ps, xi_check(p.n, L, p.alpha, p.beta, ctx).to_double(),
                                1e-8));
            auto y = sigma_from_y_check(p.n, L, p.alpha, p.beta, ctx);
            out.push_back(check("painleve", "sigma_from_Y_plus_2n_lambda", ps, y.variant_plus_gap().to_double(), 1e-8));
            out.push_back(info("painleve", "sigma_from_Y_printed_gap", ps, y.printed_gap().to_double(),
                               "printed 1/(4Y(4Y-1)^2) form"));
            char note[96];
            std::snprintf(note, sizeof note, "1/(4Y(Y-1)^2) form; gap equals 2n*lambda=%g", 2 * p.n * p.lambda);
            out.push_back(info("painleve", "sigma_from_Y_variant_gap", ps, y.variant_gap().to_double(), note));
            return out;
        });
}

void sigma_tasks(const VerifyConfig& cfg, std::vector<Task>& t) {
    for (auto p : identity_grid(cfg))
        t.push_back([p, ctx = cfg.ctx, quick = cfg.quick]() -> Checks {
            BigReal L = big(p.lambda, ctx);
            std::string ps = params_of(p);
            auto s = sigma_point(p.n, L, p.alpha, p.beta, ctx, Derivation::analytic_toda);
            auto tr = sigma_tilde_residuals(s, p.alpha, p.beta);
            auto lk = sigma_link_residuals(p.n, L, p.alpha, p.beta, ctx);
            Checks out{check("sigma", "sigma_form_analytic", ps, sigma_form_residual(s, p.alpha, p.beta).to_double(),
                             1e-8),
                       check("sigma", "sigma_tilde_plus_sign", ps, tr.plus_sign.to_double(), 1e-8),
                       info("sigma", "sigma_tilde_printed", ps, tr.printed.to_double(),
                            "printed coefficient -(2n-alpha+beta)"),
                       check("sigma", "sigma_links", ps, lk.max(), 1e-8)};
            if (!quick && p.lambda == 1) {
                auto f = sigma_point(p.n, L, p.alpha, p.beta, ctx, Derivation::finite_difference);
                out.push_back(check("sigma", "sigma_form_finite_difference", ps,
                                    sigma_form_residual(f, p.alpha, p.beta).to_double(), 1e-8));
            }
            return out;
        });
}

void chazy_tasks(const VerifyConfig& cfg, std::vector<Task>& t) {
    struct Z {
        int n;
        double a, b, z;
    };
    std::vector<Z> pts{{1, 0, 0, 0}, {2, 1, 2, -1}, {1, 0.5, 0.5, 0.5}};
    if (cfg.quick) pts.resize(1);
    if (cfg.n || cfg.alpha) {
        int n = cfg.n.value_or(2);
        double a = cfg.alpha.value_or(1), b = cfg.beta.value_or(2);
        pts = {{n, a, b, -1}, {n, a, b, 0}, {n, a, b, 0.5}};
    }
    for (auto p : pts)
        t.push_back([p, ctx = cfg.ctx]() -> Checks {
            char ps[128];
            std::snprintf(ps, sizeof ps, "n=%d alpha=%g beta=%g z=%g", p.n, p.a, p.b, p.z);
            BigReal z = big(p.z, ctx);
            return {check("chazy", "chazy_corrected", ps,
                          chazy_residual(p.n, z, p.a, p.b, ctx, ChazyVariant::corrected).to_double(), 1e-4),
                    info("chazy", "chazy_printed", ps,
                         chazy_residual(p.n, z, p.a, p.b, ctx, ChazyVariant::printed).to_double(),
                         "printed coefficients")};
        });
}

void discrete_tasks(const VerifyConfig& cfg, std::vector<Task>& t) {
    PrecisionContext deep = make_context(std::max(256, cfg.ctx.mantissa_bits),
                                         std::max(cfg.ctx.target_rel_tol, PrecisionContext::tolerance_floor(256)));
    for (auto p : identity_grid(cfg, 2))
        t.push_back([p, deep]() -> Checks {
            BigReal L = big(p.lambda, deep);
            std::string ps = params_of(p);
            return {check("discrete", "discrete_sigma", ps,
                          discrete_sigma_residual(p.n, L, p.alpha, p.beta, deep).to_double(), 1e-15),
                    info("discrete", "discrete_sigma_at_minus_lambda", ps,
                         discrete_sigma_residual_negated(p.n, L, p.alpha, p.beta, deep).to_double(),
                         "same relation fed sigma_k(-lambda)")};
        });
}

mpq_class exact_q(double x) {
    mpq_class q(x);
    q.canonicalize();
    return q;
}

void appendix_tasks(const VerifyConfig& cfg, std::vector<Task>& t) {
    for (const auto& c : appendix_cases()) {
        if (cfg.n && *cfg.n != c.n) continue;
        if (cfg.alpha && cfg.beta && (*cfg.alpha != c.alpha || *cfg.beta != c.beta)) continue;
        t.push_back([c, ctx = cfg.ctx, quick = cfg.quick]() -> Checks {
            std::string ps = params_of(c.n, c.alpha, c.beta);
            Checks out;
            PiecewisePoly p = exact_piecewise(c.n, c.alpha, c.beta, false);
            auto iv = check_invariants(p);
            auto flag = [&](const std::string& name, bool ok) { out.push_back(check("appendix", name, ps, ok ? 0 : 1, 0.5)); };
            flag("mass_equals_one", iv.mass == 1);
            flag("knot_continuity", iv.continuous);
            flag("support_endpoints_zero", iv.endpoints_zero);
            flag("nonnegative", iv.min_on_scan >= 0);
            if (c.alpha == c.beta) flag("symmetric", iv.symmetric);
            auto b = b_closed_exact(c.n, exact_q(c.alpha), exact_q(c.beta));
            flag("mean_equals_minus_b1", p.mean() == -b[0]);
            flag("variance_equals_b2", p.variance() == b[1]);
            if (c.alpha > 0 && c.beta > 0) {
                auto lc = log_concavity_check(p, 1.0 / 200, 1e-9);
                out.push_back(check("appendix", "log_concavity", ps, std::max(0.0, -lc.worst), 1e-9));
            }
            if (!quick) {
                auto sc = support_check(c.n, c.alpha, c.beta, 1.0, ctx);
                out.push_back(check("appendix", "paley_wiener_bound", ps, std::max(0.0, sc.worst_ratio - 1), 1e-12));
            }
            if (c.printed_flip >= 0) {
                PiecewisePoly pr = exact_piecewise(c.n, c.alpha, c.beta, true);
                out.push_back(info("appendix", "printed_orientation_mass", ps, pr.mass().get_d(),
                                   "piece " + std::to_string(c.printed_flip) + " factor as printed"));
            }
            return out;
        });
    }
    // documented discrepancies of the asymptotic formulas
    t.push_back([]() -> Checks {
        auto f = fluid_data(0, 0, 10);
        return {info("appendix", "fluid_J1_printed", "alpha=0 beta=0 a=0 b=1", f.J1, "-(a^2+2ab-b^2)/8"),
                info("appendix", "fluid_J1_from_density", "alpha=0 beta=0 a=0 b=1", f.J1_alt, "-(b-a)^2/16")};
    });
    std::vector<int> ns = cfg.quick ? std::vector<int>{2} : std::vector<int>{2, 3, 4, 5};
    for (int n : ns)
        t.push_back([n]() -> Checks {
            auto r = compare_legendre_edgeworth(n);
            std::string ps = params_of(n, 0, 0);
            return {info("appendix", "legendre_edgeworth_printed_vs_order4_sup", ps, r.sup_vs_order4),
                    info("appendix", "legendre_edgeworth_printed_vs_exact_sup", ps, r.sup_vs_exact)};
        });
}

}  // namespace

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyConfig& cfg) {
    if ((cfg.alpha.has_value()) != (cfg.beta.has_value()))
        throw std::invalid_argument("verify: give both alpha and beta or neither");
    if (cfg.n && (*cfg.n < 1 || *cfg.n > 20)) throw std::invalid_argument("verify: n must be in 1..20");
    if (cfg.alpha) validate_weight(*cfg.alpha, *cfg.beta);
    std::vector<std::string> which;
    if (suite == "all")
        which = suite_names();
    else {
        bool known = false;
        for (auto& s : suite_names()) known = known || s == suite;
        if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
        which = {suite};
    }
    std::vector<Task> tasks;
    std::vector<std::string> owner;
    for (auto& s : which) {
        size_t before = tasks.size();
        if (s == "toda") toda_tasks(cfg, tasks);
        else if (s == "riccati") riccati_tasks(cfg, tasks);
        else if (s == "difference") difference_tasks(cfg, tasks);
        else if (s == "painleve") painleve_tasks(cfg, tasks);
        else if (s == "sigma") sigma_tasks(cfg, tasks);
        else if (s == "chazy") chazy_tasks(cfg, tasks);
        else if (s == "discrete") discrete_tasks(cfg, tasks);
        else if (s == "appendix") appendix_tasks(cfg, tasks);
        owner.resize(tasks.size(), s);
        (void)before;
    }
    std::vector<Checks> results(tasks.size());
    parallel_for(tasks.size(), cfg.threads ? cfg.threads : default_threads(), [&](size_t i) {
        try {
            results[i] = tasks[i]();
        } catch (const std::exception& e) {
            CheckResult r;
            r.suite = owner[i];
            r.name = "exception";
            r.status = CheckStatus::fail;
            r.value = NAN;
            r.note = e.what();
            results[i] = {r};
        }
    });
    std::vector<CheckResult> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    return out;
}

}  // namespace jue
