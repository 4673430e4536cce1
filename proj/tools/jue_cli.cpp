// jue: tables, densities, samples and verification runs for the trace of the Jacobi unitary ensemble.
#include "jue/asymptotics.hpp"
#include "jue/density.hpp"
#include "jue/sampler.hpp"
#include "jue/specfun.hpp"
#include "jue/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace jue;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Common {
    int n = 2;
    double alpha = 0, beta = 0;
    int precision_bits = 0;   // 0 = environment / built-in default
    double tol = 0;           // 0 = context default
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string format = "csv";
    std::string output;
    bool quick = false;
    PrecisionContext ctx;
};

void add_common(CLI::App* s, Common& c, bool ensemble = true) {
    if (ensemble) {
        s->add_option("--n", c.n, "number of eigenvalues")->check(CLI::Range(1, 64));
        s->add_option("--alpha", c.alpha, "exponent of x");
        s->add_option("--beta", c.beta, "exponent of 1-x");
    }
    s->add_option("--precision-bits", c.precision_bits, "MPFR mantissa bits (default: JUE_PRECISION_BITS or 192)");
    s->add_option("--tol", c.tol, "target relative tolerance");
    s->add_option("--seed", c.seed, "RNG seed");
    s->add_option("--threads", c.threads, "worker threads (0 = machine parallelism)");
    s->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--output,-o", c.output, "output file (default stdout)");
    s->add_flag("--quick", c.quick, "reduced grids");
}

void resolve(Common& c) {
    PrecisionContext d = default_context();
    int bits = c.precision_bits ? c.precision_bits : d.mantissa_bits;
    double tol = c.tol > 0 ? c.tol : std::max(d.target_rel_tol, PrecisionContext::tolerance_floor(bits));
    if (c.tol < 0) throw UsageError("--tol must be positive");
    try {
        c.ctx = make_context(bits, tol, d.max_escalations);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!(c.alpha > -1) || !(c.beta > -1)) throw UsageError("--alpha and --beta must exceed -1");
    if (c.threads == 0) c.threads = default_threads();
}

std::string num(double x) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", x);
    return b;
}

std::string short_num(double x) {
    char b[40];
    auto r = std::to_chars(b, b + sizeof b, x);
    return std::string(b, r.ptr);
}

std::string rational(const mpq_class& q) { return q.get_str(); }

// decimal text (shortest round-trip form of the double) read as an exact rational
mpq_class decimal_rational(double x) {
    std::string s = short_num(x);
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    long exp10 = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
        exp10 = std::stol(s.substr(e + 1));
        s.erase(e);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        exp10 -= long(s.size() - dot - 1);
        s.erase(dot, 1);
    }
    mpz_class m(s);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, std::abs(exp10));
    mpq_class q = exp10 >= 0 ? mpq_class(m * p10) : mpq_class(m, p10);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

json config_json(const std::string& cmd, const Common& c, const json& extra) {
    json j;
    j["command"] = cmd;
    j["n"] = c.n;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["precision_bits"] = c.ctx.mantissa_bits;
    j["tol"] = c.ctx.target_rel_tol;
    j["seed"] = c.seed;
    j["threads"] = c.threads;
    j["format"] = c.format;
    j["quick"] = c.quick;
    for (auto& [k, v] : extra.items()) j[k] = v;
    return j;
}

std::string metadata_lines(const json& cfg) {
    std::string s = "# jue " + cfg["command"].get<std::string>() + "\n";
    for (auto& [k, v] : cfg.items()) {
        if (k == "command") continue;
        s += "# " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
    return s;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;   // already formatted cells
};

std::string csv_of(const json& cfg, const Table& t, const std::vector<std::string>& extra_meta = {}) {
    std::string s = metadata_lines(cfg);
    for (auto& m : extra_meta) s += "# " + m + "\n";
    for (size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
    s += "\n";
    for (auto& r : t.rows) {
        for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i];
        s += "\n";
    }
    return s;
}

json rows_json(const Table& t) {
    json rows = json::array();
    for (auto& r : t.rows) {
        json o;
        for (size_t i = 0; i < r.size(); ++i) {
            const std::string& cell = r[i];
            if (cell.empty())
                o[t.columns[i]] = nullptr;
            else {
                char* end = nullptr;
                double v = std::strtod(cell.c_str(), &end);
                if (end && *end == 0 && std::isfinite(v))
                    o[t.columns[i]] = v;
                else
                    o[t.columns[i]] = cell;
            }
        }
        rows.push_back(o);
    }
    return rows;
}

void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + c.output);
    f << text;
}

std::string json_doc(const json& cfg, json body) {
    json j;
    j["schema"] = 1;
    j["config"] = cfg;
    for (auto& [k, v] : body.items()) j[k] = v;
    return j.dump(2) + "\n";
}

// ---------------- mgf ----------------

struct MgfArgs {
    double lambda = NAN;
    std::string grid;
    std::string compare = "none";
};

std::vector<double> parse_grid(const std::string& g) {
    double a = 0, b = 0, st = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(g);
    bool ok = bool(is >> a >> c1 >> b >> c2 >> st) && c1 == ':' && c2 == ':' && st > 0 && b >= a;
    if (ok) {
        is >> std::ws;
        ok = is.eof();
    }
    if (!ok) throw UsageError("--lambda-grid expects start:stop:step with step > 0 and stop >= start");
    long k = std::lround(std::floor((b - a) / st + 1e-9));
    if (k > 100000) throw UsageError("--lambda-grid has too many points");
    std::vector<double> v;
    for (long i = 0; i <= k; ++i) v.push_back(a + i * st);
    return v;
}

int cmd_mgf(Common& c, const MgfArgs& m) {
    resolve(c);
    std::vector<double> lams;
    if (!m.grid.empty())
        lams = parse_grid(m.grid);
    else if (std::isfinite(m.lambda))
        lams = {m.lambda};
    else
        lams = parse_grid("0:5:0.1");
    const bool fluid = m.compare == "fluid" || m.compare == "all";
    const int mser = (c.alpha == 0 && c.beta == 0) ? 8 : 5;
    Table t;
    t.columns = {"lambda", "M_exact", "M_series"};
    if (fluid) t.columns.insert(t.columns.end(), {"M_fluid_printed", "M_fluid_corrected"});
    std::optional<FluidData> fd;
    if (fluid) fd = fluid_data(c.alpha / c.n, c.beta / c.n, c.n);
    const mpfr_prec_t prec = c.ctx.mantissa_bits;
    BigReal ld0 = log_d0(c.n, c.alpha, c.beta, prec);
    t.rows.assign(lams.size(), {});
    parallel_for(lams.size(), c.threads, [&](size_t i) {
        double L = lams[i];
        BigReal lg = hankel_det_log(c.n, BigReal(L, prec), c.alpha, c.beta, c.ctx) - ld0;
        double series = NAN;
        try {
            series = exp(dn_expansion_log(c.n, c.alpha, c.beta, L, mser, prec) - ld0).to_double();
        } catch (const std::domain_error&) {
            // closed forms have a pole at these parameters
        }
        std::vector<std::string> r{short_num(L), num(exp(lg).to_double()), std::isfinite(series) ? num(series) : ""};
        if (fluid) {
            r.push_back(num(mgf_fluid(L, *fd, MgfVariant::printed)));
            r.push_back(num(mgf_fluid(L, *fd, MgfVariant::corrected)));
        }
        t.rows[i] = r;
    });
    json cfg = config_json("mgf", c, {{"lambda_grid", m.grid.empty() ? (std::isfinite(m.lambda) ? short_num(m.lambda) : "0:5:0.1") : m.grid},
                                      {"compare", m.compare},
                                      {"series_order", mser}});
    if (c.format == "json") {
        json body;
        body["columns"] = t.columns;
        body["rows"] = rows_json(t);
        if (fluid) body["fluid"] = {{"a", fd->a}, {"b", fd->b}, {"J1_printed", fd->J1}, {"J1_from_density", fd->J1_alt}, {"J2", fd->J2}};
        emit(c, json_doc(cfg, body));
    } else
        emit(c, csv_of(cfg, t));
    return 0;
}

// ---------------- density ----------------

struct DensityArgs {
    std::string method = "exact";
    int order = 4;
    int points = 101;
    long count = 100000;
    int bins = 50;
    std::string sampler = "mcmc";
};

std::string available_cases() {
    std::string s;
    for (auto& k : appendix_cases())
        s += "  n=" + std::to_string(k.n) + " alpha=" + std::to_string(k.alpha) + " beta=" + std::to_string(k.beta) + "\n";
    return s;
}

int cmd_density(Common& c, const DensityArgs& d) {
    resolve(c);
    if (d.points < 2) throw UsageError("--points must be >= 2");
    if (d.method == "edgeworth" && (d.order < 2 || d.order > 5)) throw UsageError("--order must be in 2..5");
    if (d.method == "exact" && !has_exact_density(c.n, c.alpha, c.beta))
        throw UsageError("no exact density for n=" + std::to_string(c.n) + " alpha=" + short_num(c.alpha) +
                         " beta=" + short_num(c.beta) + "; tabulated cases:\n" + available_cases());
    if (d.method == "mc") {
        if (d.count < 1000) throw UsageError("--count must be >= 1000");
        if (d.bins < 1) throw UsageError("--bins must be >= 1");
        if (d.sampler == "matrix" && (c.alpha != std::floor(c.alpha) || c.beta != std::floor(c.beta) || c.alpha < 0 || c.beta < 0))
            throw UsageError("--sampler matrix needs nonnegative integer alpha, beta");
    }
    Table t;
    t.columns = {"c", "value", "method"};
    std::vector<std::string> extra;
    json body;
    json cfgx{{"method", d.method}};
    if (d.method == "mc") {
        cfgx["count"] = d.count;
        cfgx["bins"] = d.bins;
        cfgx["sampler"] = d.sampler;
        SampleBatch b;
        if (d.sampler == "matrix")
            b = matrix_model_sample(c.n, c.n + int(c.alpha), c.n + int(c.beta), d.count, c.seed, c.threads);
        else {
            McmcOptions o;
            o.threads = c.threads;
            b = mcmc_sample(c.n, c.alpha, c.beta, d.count, c.seed, o);
        }
        std::vector<long> h(d.bins, 0);
        for (double v : b.values) h[std::min<long>(d.bins - 1, long(v / c.n * d.bins))]++;
        const double w = double(c.n) / d.bins;
        for (int i = 0; i < d.bins; ++i)
            t.rows.push_back({num((i + 0.5) * w), num(h[i] / (w * b.values.size())), "monte_carlo"});
        if (has_exact_density(c.n, c.alpha, c.beta) && d.count >= 10000) {
            ExactCdf F(exact_piecewise(c.n, c.alpha, c.beta));
            double ks = ks_statistic(b.values, [&](double x) { return F(x); });
            double thr = ks_threshold(d.count);
            extra = {"ks_statistic=" + num(ks), "ks_threshold=" + num(thr), std::string("ks_pass=") + (ks < thr ? "true" : "false")};
            body["ks"] = {{"statistic", ks}, {"threshold", thr}, {"pass", ks < thr}};
        }
        extra.push_back("acceptance_rate=" + num(b.acceptance_rate));
        extra.push_back("ess=" + num(b.ess));
    } else {
        cfgx["points"] = d.points;
        std::vector<double> cs(d.points);
        for (int i = 0; i < d.points; ++i) cs[i] = double(c.n) * i / (d.points - 1);
        std::vector<double> vals(d.points);
        if (d.method == "exact") {
            auto p = exact_piecewise(c.n, c.alpha, c.beta);
            for (int i = 0; i < d.points; ++i) vals[i] = p(cs[i]);
            json pieces = json::array();
            for (auto& pc : p.pieces) {
                json a = json::array();
                for (auto& q : pc) a.push_back(rational(q));
                pieces.push_back(a);
            }
            body["pieces"] = pieces;
            body["piece_basis"] = "coefficients of c^k on [j, j+1], k ascending";
        } else if (d.method == "edgeworth") {
            cfgx["order"] = d.order;
            for (int i = 0; i < d.points; ++i) vals[i] = edgeworth_density(cs[i], c.n, c.alpha, c.beta, d.order);
        } else {
            FourierOptions o;
            o.threads = c.threads;
            o.mantissa_bits = std::max(128, c.ctx.mantissa_bits / 2 + 32);
            cfgx["fourier_bits"] = o.mantissa_bits;
            FourierInverter inv(c.n, c.alpha, c.beta, o);
            double tail = 0;
            for (int i = 0; i < d.points; ++i) {
                auto r = inv.at(cs[i]);
                vals[i] = r.value;
                tail = std::max(tail, r.tail_bound);
            }
            extra.push_back("tail_bound=" + num(tail));
            body["tail_bound"] = tail;
        }
        for (int i = 0; i < d.points; ++i) t.rows.push_back({num(cs[i]), num(vals[i]), d.method});
    }
    json cfg = config_json("density", c, cfgx);
    if (c.format == "json") {
        body["columns"] = t.columns;
        body["rows"] = rows_json(t);
        emit(c, json_doc(cfg, body));
    } else
        emit(c, csv_of(cfg, t, extra));
    return 0;
}

// ---------------- verify ----------------

int cmd_verify(Common& c, const std::string& suite, bool have_n, bool have_a, bool have_b) {
    resolve(c);
    if (have_a != have_b) throw UsageError("give both --alpha and --beta or neither");
    VerifyConfig v;
    if (have_n) v.n = c.n;
    if (have_a) {
        v.alpha = c.alpha;
        v.beta = c.beta;
    }
    v.quick = c.quick;
    v.ctx = c.ctx;
    v.threads = c.threads;
    std::vector<CheckResult> rs;
    try {
        rs = run_verify(suite, v);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    int np = 0, nf = 0, ni = 0;
    for (auto& r : rs) (r.status == CheckStatus::pass ? np : r.status == CheckStatus::fail ? nf : ni)++;
    json cfg = config_json("verify", c, {{"suite", suite}});
    if (c.format == "json") {
        json arr = json::array();
        for (auto& r : rs)
            arr.push_back({{"status", status_name(r.status)}, {"suite", r.suite}, {"name", r.name}, {"params", r.params},
                           {"value", r.value}, {"tol", r.tol}, {"note", r.note}});
        emit(c, json_doc(cfg, {{"checks", arr}, {"pass", np}, {"fail", nf}, {"info", ni}}));
    } else {
        std::string s = metadata_lines(cfg);
        for (auto& r : rs) s += format_check(r) + "\n";
        s += "SUMMARY pass=" + std::to_string(np) + " fail=" + std::to_string(nf) + " info=" + std::to_string(ni) + "\n";
        emit(c, s);
    }
    return nf ? 1 : 0;
}

// ---------------- cumulants ----------------

int cmd_cumulants(Common& c, int mmax) {
    resolve(c);
    if (mmax < 1 || mmax > 6) throw UsageError("--mmax must be in 1..6 (extraction reaches 6, closed forms 5)");
    const mpq_class qa = decimal_rational(c.alpha), qb = decimal_rational(c.beta);
    std::vector<mpq_class> exact;
    std::string closed_note;
    try {
        exact = (c.alpha == 0 && c.beta == 0) ? b_closed_exact_legendre(c.n) : b_closed_exact(c.n, qa, qb);
    } catch (const std::domain_error& e) {
        closed_note = e.what();
    }
    SeriesCoeffs ex = b_extracted(c.n, c.alpha, c.beta, 6, c.ctx, 0.25, c.threads);
    auto kx = cumulants(ex);
    Table t;
    t.columns = {"m", "b_closed", "b_extracted", "kappa_closed", "kappa_extracted", "rel_diff", "agree"};
    json rows = json::array();
    for (int m = 1; m <= mmax; ++m) {
        bool have = m <= int(exact.size());
        double bc = have ? exact[m - 1].get_d() : NAN;
        double be = ex.b[m].to_double();
        double fact = std::tgamma(double(m));   // (m-1)!
        double kc = have ? ((m % 2) ? -1 : 1) * fact * bc + 0.0 : NAN;
        double scale = std::max(std::abs(bc), 1e-300);
        double rd = have ? std::abs(be - bc) / scale : NAN;
        if (have && bc == 0) rd = std::abs(be);
        bool agree = have && rd < 1e-6;
        t.rows.push_back({std::to_string(m), have ? num(bc) : "", num(be), have ? num(kc) : "", num(kx[m].to_double()),
                          have ? num(rd) : "", have ? (agree ? "yes" : "no") : ""});
        json r{{"m", m}, {"b_extracted", be}, {"kappa_extracted", kx[m].to_double()}};
        if (have) {
            r["b_closed"] = rational(exact[m - 1]);
            r["b_closed_value"] = bc;
            mpq_class f = 1;
            for (int i = 2; i < m; ++i) f *= i;
            mpq_class kq = ((m % 2) ? -1 : 1) * f * exact[m - 1];
            r["kappa_closed"] = rational(kq);
            r["rel_diff"] = rd;
            r["agree"] = agree;
        }
        rows.push_back(r);
    }
    json cfg = config_json("cumulants", c, {{"mmax", mmax}, {"alpha_exact", rational(qa)}, {"beta_exact", rational(qb)}});
    std::vector<std::string> extra;
    if (!closed_note.empty()) extra.push_back("closed_form_unavailable=" + closed_note);
    if (c.format == "json") {
        json body{{"rows", rows}};
        if (!closed_note.empty()) body["closed_form_unavailable"] = closed_note;
        emit(c, json_doc(cfg, body));
    } else
        emit(c, csv_of(cfg, t, extra));
    return 0;
}

// ---------------- sample ----------------

struct SampleArgs {
    long count = 100000;
    std::string method = "mcmc";
    long burn_in = -1, thin = -1;
    int chains = 16;
};

int cmd_sample(Common& c, const SampleArgs& a) {
    resolve(c);
    if (a.count < 1) throw UsageError("--count must be >= 1");
    if (a.chains < 1) throw UsageError("--chains must be >= 1");
    if (a.method == "matrix" && (c.alpha != std::floor(c.alpha) || c.beta != std::floor(c.beta) || c.alpha < 0 || c.beta < 0))
        throw UsageError("--method matrix needs nonnegative integer alpha, beta");
    SampleBatch b;
    if (a.method == "matrix")
        b = matrix_model_sample(c.n, c.n + int(c.alpha), c.n + int(c.beta), a.count, c.seed, c.threads);
    else {
        McmcOptions o;
        o.burn_in = a.burn_in;
        o.thin = a.thin;
        o.chains = a.chains;
        o.threads = c.threads;
        b = mcmc_sample(c.n, c.alpha, c.beta, a.count, c.seed, o);
    }
    json cfgx{{"count", a.count}, {"method", sample_method_name(b.method)}};
    if (b.method == SampleMethod::mcmc) {
        cfgx["burn_in"] = b.burn_in;
        cfgx["thin"] = b.thin;
        cfgx["chains"] = b.chains;
    }
    json cfg = config_json("sample", c, cfgx);
    if (c.format == "json") {
        json body{{"count", b.values.size()}, {"acceptance_rate", b.acceptance_rate}, {"ess", b.ess}};
        if (b.values.size() >= 1000) {
            auto k = empirical_cumulants(b);
            json ks = json::array();
            for (int m = 1; m <= 4; ++m) ks.push_back({{"m", m}, {"k", k.k[m]}, {"se", k.se[m]}});
            body["cumulants"] = ks;
        }
        if (has_exact_density(c.n, c.alpha, c.beta) && a.count >= 10000) {
            ExactCdf F(exact_piecewise(c.n, c.alpha, c.beta));
            double s = ks_statistic(b.values, [&](double x) { return F(x); });
            double thr = ks_threshold(a.count);
            body["ks_exact"] = {{"statistic", s}, {"threshold", thr}, {"pass", s < thr}};
        }
        emit(c, json_doc(cfg, body));
    } else {
        std::string s = metadata_lines(cfg);
        s += "# acceptance_rate=" + num(b.acceptance_rate) + "\n# ess=" + num(b.ess) + "\nc\n";
        for (double v : b.values) s += num(v) + "\n";
        emit(c, s);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trace distribution of the Jacobi unitary ensemble"};
    app.require_subcommand(1);
    Common c;

    MgfArgs ma;
    auto* mgf = app.add_subcommand("mgf", "M(lambda) = D_n(lambda)/D_n(0): exact, series and fluid columns");
    add_common(mgf, c);
    mgf->add_option("--lambda", ma.lambda, "single lambda");
    mgf->add_option("--lambda-grid", ma.grid, "start:stop:step");
    mgf->add_option("--compare", ma.compare, "none, fluid or all")->check(CLI::IsMember({"none", "fluid", "all"}));

    DensityArgs da;
    auto* dens = app.add_subcommand("density", "density grid of c = trace");
    add_common(dens, c);
    dens->add_option("--method", da.method, "edgeworth, exact, fourier or mc")
        ->check(CLI::IsMember({"edgeworth", "exact", "fourier", "mc"}));
    dens->add_option("--order", da.order, "Edgeworth order (2..5)");
    dens->add_option("--points", da.points, "grid points on [0, n]");
    dens->add_option("--count", da.count, "Monte Carlo sample count");
    dens->add_option("--bins", da.bins, "Monte Carlo histogram bins");
    dens->add_option("--sampler", da.sampler, "mcmc or matrix")->check(CLI::IsMember({"mcmc", "matrix"}));

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "identity and invariant suites");
    add_common(ver, c);
    ver->add_option("--suite", suite, "toda, riccati, difference, painleve, sigma, chazy, discrete, appendix or all");

    int mmax = 4;
    auto* cum = app.add_subcommand("cumulants", "b_m and kappa_m, closed form against extraction");
    add_common(cum, c);
    cum->add_option("--mmax", mmax, "highest order (<= 5 closed, <= 6 extracted)");

    SampleArgs sa;
    auto* smp = app.add_subcommand("sample", "sample batches of c");
    add_common(smp, c);
    smp->add_option("--count", sa.count, "number of samples");
    smp->add_option("--method", sa.method, "mcmc or matrix")->check(CLI::IsMember({"mcmc", "matrix"}));
    smp->add_option("--burn-in", sa.burn_in, "burn-in sweeps per chain");
    smp->add_option("--thin", sa.thin, "sweeps between retained states");
    smp->add_option("--chains", sa.chains, "independent chains");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (mgf->parsed()) return cmd_mgf(c, ma);
        if (dens->parsed()) return cmd_density(c, da);
        if (ver->parsed())
            return cmd_verify(c, suite, ver->count("--n") > 0, ver->count("--alpha") > 0, ver->count("--beta") > 0);
        if (cum->parsed()) return cmd_cumulants(c, mmax);
        if (smp->parsed()) return cmd_sample(c, sa);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
