#include "commands.hpp"

#include "cache.hpp"
#include "serialize.hpp"
#include "suite.hpp"

#include "tqc/catalan.hpp"
#include "tqc/freeenergy.hpp"
#include "tqc/gwp1.hpp"
#include "tqc/hurwitz.hpp"
#include "tqc/lattice.hpp"
#include "tqc/trres.hpp"
#include "tqc/wkb.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace tqc::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Params {
    int g = -1;
    int n = -1;
    int d = -1;
    int r = 1;
    int m = -1;
    int m_max = -1;
    int row = -1;
    int xdeg = -1;
    int hdeg = -1;
    int order = -1;
    int laplace = -1;
    bool check = false;
    bool verify = false;
    std::vector<int> mu, p, dvec;
    std::string curve;
    std::string spec_file;
    std::string series_file;
    std::string suite = "all";
    std::string format = "json";
    std::string cache_dir;
};

struct Outcome {
    json doc;
    int code = kExitOk;
};

void require(bool cond, const std::string& msg)
{
    if (!cond)
        throw UsageError(msg);
}

void require_set(int v, const char* flag) { require(v >= 0, std::string(flag) + " is required"); }

void require_stable(int g, int n)
{
    require(g >= 0 && n >= 1, "need g >= 0 and n >= 1");
    require(2 * g - 2 + n > 0, "need 2g-2+n > 0");
}

void require_positive(const std::vector<int>& v, const char* flag)
{
    for (int x : v)
        require(x > 0, std::string(flag) + " entries must be positive");
}

int arity_from(const Params& P, const std::vector<int>& v, const char* flag)
{
    require(!v.empty(), std::string(flag) + " is required");
    const int n = static_cast<int>(v.size());
    require(P.n < 0 || P.n == n, std::string("--n does not match the length of ") + flag);
    return n;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open " + path);
    json j = json::parse(in, nullptr, false);
    require(!j.is_discarded(), path + " is not valid JSON");
    return j;
}

Outcome cmd_catalan(const Params& P)
{
    require_set(P.g, "--g");
    const int n = arity_from(P, P.mu, "--mu");
    require(P.g >= 0, "need g >= 0");
    for (int x : P.mu)
        require(x >= 0, "--mu entries must be non-negative");
    BigRational v = catalan_general(P.g, n, P.mu);
    return {{{"key", {{"g", P.g}, {"n", n}, {"mu", P.mu}}}, {"value", to_string(v)}}};
}

Outcome cmd_freeenergy(const Params& P)
{
    require_set(P.g, "--g");
    require_set(P.n, "--n");
    require_stable(P.g, P.n);
    FreeEnergyC F{P.g, P.n, fC(P.g, P.n)};
    Outcome o{{{"g", P.g}, {"n", P.n}, {"poly", laurent_json(F.poly)}}};
    if (P.check) {
        PropertyReport rep = check_properties(F);
        o.doc["check"] = {{"degree", rep.degree},         {"reciprocity", rep.reciprocity},
                          {"vanishing", rep.vanishing},   {"euler", rep.euler},
                          {"highest", rep.highest},       {"failures", rep.failures},
                          {"ok", rep.ok()}};
        if (!rep.ok())
            o.code = kExitVerifyFailed;
    }
    if (P.laplace >= 0) {
        require(P.laplace >= 1, "--laplace must be >= 1");
        LaplaceReport rep = laplace_match(P.g, P.n, P.laplace);
        json mism = json::array();
        for (const auto& m : rep.mismatches)
            mism.push_back({{"mu", m.mu}, {"expected", to_string(m.expected)}, {"got", to_string(m.got)}});
        o.doc["laplace"] = {
            {"mu_max", P.laplace}, {"checked", rep.checked}, {"mismatches", mism}, {"ok", rep.ok()}};
        if (!rep.ok())
            o.code = kExitVerifyFailed;
    }
    return o;
}

Outcome cmd_tr(const Params& P)
{
    require(P.curve == "airy" || P.curve == "catalan", "--curve must be airy or catalan");
    require_set(P.g, "--g");
    require_set(P.n, "--n");
    require_stable(P.g, P.n);
    TrEngine& eng = P.curve == "airy" ? airy_engine() : catalan_engine();
    return {{{"curve", P.curve}, {"g", P.g}, {"n", P.n}, {"w", laurent_json(eng.W(P.g, P.n))}}};
}

Outcome cmd_intersect(const Params& P)
{
    require_set(P.g, "--g");
    const int n = arity_from(P, P.dvec, "--dvec");
    require_stable(P.g, n);
    for (int x : P.dvec)
        require(x >= 0, "--dvec entries must be >= 0");
    return {{{"value", to_string(intersection_number(P.g, P.dvec))}}};
}

Outcome cmd_wkb_airy_coeffs(const Params& P)
{
    require(P.m_max >= 2, "--m-max must be >= 2");
    require(P.m_max <= 40, "--m-max must be <= 40");
    WkbSeries A = wkb_hierarchy(airy_quantum_curve(), P.m_max);
    Outcome o;
    json rows = json::array();
    bool all = true;
    for (int m = 2; m <= P.m_max; ++m) {
        BigRational gamma = airy_Sm_gamma_side(m - 1);
        json row = {{"m", m}, {"wkb", to_string(A.airy_c[m])}, {"gamma", to_string(gamma)}};
        bool agree = A.airy_c[m] == gamma;
        if (m <= 6) {
            BigRational inter = airy_Sm_intersection_side(m);
            row["intersection"] = to_string(inter);
            agree = agree && inter == gamma;
        }
        row["agree"] = agree;
        all = all && agree;
        rows.push_back(std::move(row));
    }
    o.doc = {{"coefficients", rows}, {"ok", all}};
    o.code = all ? kExitOk : kExitVerifyFailed;
    return o;
}

Outcome cmd_wkb_rainbow(const Params& P)
{
    require(P.m >= 1, "--m must be >= 1");
    RainbowResult r = rainbow_check(P.m);
    return {{{"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"equal", r.equal()}},
            r.equal() ? kExitOk : kExitVerifyFailed};
}

json order_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

Outcome cmd_wkb_table1(const Params& P)
{
    require(P.row >= 1 && P.row <= 5, "--row must be in 1..5");
    Table1Row R = table1_row(P.row);
    json sing = json::array();
    for (const auto& s : R.singularities)
        sing.push_back({{"where", s.where}, {"k", order_json(s.k)}, {"l", order_json(s.l)}, {"class", s.cls.str()}});
    return {{{"row", R.row},
             {"name", R.spec.name},
             {"s1", R.spec.s1.str()},
             {"s2", R.spec.s2.str()},
             {"curve", R.curves.affine.str("x", "y")},
             {"curve_at_infinity", R.curves.infinity.str("u", "w")},
             {"discriminant", {{"zeros", R.discriminant.zeros}, {"poles", R.discriminant.poles}}},
             {"genus", R.genus},
             {"singularities", sing}}};
}

QuantumCurveSpec spec_from_json(const json& j)
{
    require(j.is_object(), "spec file must hold an object");
    if (j.contains("row")) {
        int row = j["row"].get<int>();
        require(row >= 1 && row <= 5, "spec row must be in 1..5");
        return table1_spec(row);
    }
    if (j.contains("curve")) {
        const std::string c = j["curve"].get<std::string>();
        if (c == "airy")
            return airy_quantum_curve();
        if (c == "catalan" || c == "hermite")
            return catalan_quantum_curve();
        throw UsageError("unknown curve '" + c + "'");
    }
    require(j.contains("s1") && j.contains("s2"), "spec needs row, curve, or s1 and s2");
    QuantumCurveSpec s;
    s.name = j.value("name", "custom");
    s.s1 = rational_function_from_json(j["s1"]);
    s.s2 = rational_function_from_json(j["s2"]);
    return s;
}

Outcome cmd_wkb_verify_ode(const Params& P)
{
    require(!P.spec_file.empty() && !P.series_file.empty(), "--spec and --series are required");
    QuantumCurveSpec spec;
    OdeSeries series;
    try {
        spec = spec_from_json(read_json_file(P.spec_file));
        json sj = read_json_file(P.series_file);
        series.descending = sj.value("descending", false);
        for (const auto& c : sj.at("coeffs"))
            series.coeffs.push_back(c.is_number_integer() ? BigRational(c.get<long>()) : rational_from_json(c));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed input: ") + e.what());
    }
    require(!series.coeffs.empty(), "series has no coefficients");

    OdeReport rep;
    int K = P.order;
    if (K >= 0) {
        try {
            rep = verify_ode_series(series, spec, K);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else {
        // deepest order the series supports
        for (K = static_cast<int>(series.coeffs.size()) - 1; K >= 0; --K) {
            try {
                rep = verify_ode_series(series, spec, K);
                break;
            } catch (const std::invalid_argument&) {
            }
        }
        require(K >= 0, "series too short to check any order");
    }
    json bad = json::array();
    for (const auto& [k, v] : rep.nonzero)
        bad.push_back({{"power", k}, {"residual", to_string(v)}});
    return {{{"spec", spec.name},
             {"descending", series.descending},
             {"order", K},
             {"checked", rep.checked},
             {"nonzero", bad},
             {"ok", rep.ok()}},
            rep.ok() ? kExitOk : kExitVerifyFailed};
}

Outcome cmd_lattice(const Params& P)
{
    require_set(P.g, "--g");
    const int n = arity_from(P, P.p, "--p");
    require_stable(P.g, n);
    for (int x : P.p)
        require(x >= 0, "--p entries must be >= 0");
    return {{{"g", P.g}, {"n", n}, {"p", P.p}, {"value", to_string(lattice_N(P.g, n, P.p))}}};
}

Outcome cmd_chi(const Params& P)
{
    require_set(P.g, "--g");
    require_set(P.n, "--n");
    require_stable(P.g, P.n);
    return {{{"g", P.g}, {"n", P.n}, {"value", to_string(harer_zagier_chi(P.g, P.n))}}};
}

Outcome cmd_hurwitz(const Params& P)
{
    require(P.r >= 1, "--r must be >= 1");
    require_set(P.g, "--g");
    const int n = arity_from(P, P.mu, "--mu");
    require_positive(P.mu, "--mu");
    require(P.g >= 0, "--g must be >= 0");
    return {{{"r", P.r}, {"g", P.g}, {"n", n}, {"mu", P.mu}, {"value", to_string(hurwitz(P.r, P.g, n, P.mu))}}};
}

json residuals_json(const QcReport& q)
{
    json out = json::array();
    for (const auto& x : q.nonzero)
        out.push_back({{"x", x.x_power}, {"hbar", x.hbar_power}, {"value", to_string(x.value)}});
    return out;
}

Outcome cmd_hurwitz_qc(const Params& P)
{
    const int K = P.xdeg >= 0 ? P.xdeg : P.order;
    require(P.r >= 1, "--r must be >= 1");
    require(K >= 1, "--xdeg is required");
    require(P.hdeg >= 0, "--hdeg is required");
    QcReport q = qc_series_check(P.r, K, P.hdeg);
    return {{{"r", P.r}, {"xdeg", K}, {"hdeg", P.hdeg}, {"checked", q.checked}, {"nonzero", residuals_json(q)},
             {"ok", q.ok()}},
            q.ok() ? kExitOk : kExitVerifyFailed};
}

Outcome cmd_gwp1(const Params& P)
{
    require(P.d >= 0, "--d must be >= 0");
    require(P.d <= 12, "--d must be <= 12");
    XdFunction X = x_d(P.d);
    Outcome o{{{"d", P.d}, {"vars", {"x", "hbar"}}, {"num", laurent_json(X.value.num)}, {"den", laurent_json(X.value.den)}}};
    if (P.verify) {
        bool rec = P.d == 0 || verify_recursion(P.d).ok();
        bool limit = X.value.at_hbar_zero() == RationalFunction(BigRational(1) / BigRational(factorial(P.d)));
        o.doc["verify"] = {{"recursion", rec}, {"classical_limit", limit}, {"ok", rec && limit}};
        if (!(rec && limit))
            o.code = kExitVerifyFailed;
    }
    return o;
}

Outcome cmd_verify(const Params& P)
{
    std::vector<CheckResult> res;
    try {
        res = run_suite(P.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    json rows = json::array();
    int failed = 0;
    for (const auto& r : res) {
        rows.push_back({{"module", r.module}, {"check", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        failed += r.ok ? 0 : 1;
    }
    return {{{"suite", P.suite},
             {"results", rows},
             {"passed", static_cast<int>(res.size()) - failed},
             {"failed", failed},
             {"ok", failed == 0}},
            failed ? kExitVerifyFailed : kExitOk};
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Params P;
    CLI::App app{"Exact enumerative and quantum-curve computations", "tqc"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", P.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache-dir", P.cache_dir, "Memo cache directory (or set TQC_CACHE_DIR)");

    auto opt_g = [&](CLI::App* s) { s->add_option("--g", P.g, "Genus"); };
    auto opt_n = [&](CLI::App* s) { s->add_option("--n", P.n, "Number of marked points"); };

    // nested subcommands are bound before their parents are consulted
    std::vector<std::pair<CLI::App*, Outcome (*)(const Params&)>> routes;
    auto bind = [&](CLI::App* s, Outcome (*fn)(const Params&)) { routes.emplace_back(s, fn); };

    auto* catalan = app.add_subcommand("catalan", "Generalized Catalan number C_{g,n}(mu)");
    opt_g(catalan);
    opt_n(catalan);
    catalan->add_option("--mu", P.mu, "Comma-separated mu")->delimiter(',');
    bind(catalan, cmd_catalan);

    auto* fe = app.add_subcommand("freeenergy", "Free energy F^C_{g,n}");
    opt_g(fe);
    opt_n(fe);
    fe->add_flag("--check", P.check, "Run the property checks");
    fe->add_option("--laplace", P.laplace, "Compare against Catalan numbers for mu_i <= MU_MAX");
    bind(fe, cmd_freeenergy);

    auto* tr = app.add_subcommand("tr", "Topological recursion W_{g,n}");
    tr->add_option("--curve", P.curve, "airy or catalan")->required();
    opt_g(tr);
    opt_n(tr);
    bind(tr, cmd_tr);

    auto* inter = app.add_subcommand("intersect", "psi-class intersection number");
    opt_g(inter);
    opt_n(inter);
    inter->add_option("--dvec", P.dvec, "Comma-separated d_i")->delimiter(',');
    bind(inter, cmd_intersect);

    auto* wkb = app.add_subcommand("wkb", "WKB analysis of quantum curves");
    wkb->require_subcommand(1);
    auto* ac = wkb->add_subcommand("airy-coeffs", "Coefficients of log Ai, three ways");
    ac->add_option("--m-max", P.m_max, "Largest m")->required();
    bind(ac, cmd_wkb_airy_coeffs);
    auto* rb = wkb->add_subcommand("rainbow", "Rainbow identity at m");
    rb->add_option("--m", P.m, "m")->required();
    bind(rb, cmd_wkb_rainbow);
    auto* t1 = wkb->add_subcommand("table1", "Singularity data of a curve");
    t1->add_option("--row", P.row, "Row 1..5")->required();
    bind(t1, cmd_wkb_table1);
    auto* vo = wkb->add_subcommand("verify-ode", "Check a series solves a quantum curve");
    vo->add_option("--spec", P.spec_file, "Curve JSON")->required();
    vo->add_option("--series", P.series_file, "Series JSON")->required();
    vo->add_option("--order", P.order, "Check through this power");
    bind(vo, cmd_wkb_verify_ode);

    auto* lat = app.add_subcommand("lattice", "Lattice point count N_{g,n}(p)");
    opt_g(lat);
    opt_n(lat);
    lat->add_option("--p", P.p, "Comma-separated p")->delimiter(',');
    bind(lat, cmd_lattice);

    auto* chi = app.add_subcommand("chi", "Orbifold Euler characteristic of M_{g,n}");
    opt_g(chi);
    opt_n(chi);
    bind(chi, cmd_chi);

    auto* hur = app.add_subcommand("hurwitz", "Orbifold Hurwitz numbers");
    hur->add_option("--r", P.r, "Orbifold order");
    opt_g(hur);
    opt_n(hur);
    hur->add_option("--mu", P.mu, "Comma-separated mu")->delimiter(',');
    bind(hur, cmd_hurwitz);
    auto* qc = hur->add_subcommand("qc-check", "Check the quantum curve annihilates Psi");
    qc->add_option("--xdeg", P.xdeg, "x-degree K");
    qc->add_option("--order", P.order, "Alias of --xdeg");
    qc->add_option("--hdeg", P.hdeg, "hbar-degree M");
    bind(qc, cmd_hurwitz_qc);

    auto* gw = app.add_subcommand("gwp1", "X_d for the Gromov-Witten theory of P^1");
    gw->add_option("--d", P.d, "Degree")->required();
    gw->add_flag("--verify", P.verify, "Check the recursion and X_d(x,0) = 1/d!");
    bind(gw, cmd_gwp1);

    auto* ver = app.add_subcommand("verify", "Run the built-in checks");
    ver->add_option("--suite", P.suite, "all or a module name");
    bind(ver, cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Outcome (*handler)(const Params&) = nullptr;
    for (auto it = routes.rbegin(); it != routes.rend() && !handler; ++it)
        if (it->first->parsed())
            handler = it->second;
    if (!handler) {
        err << "error: no command given\n";
        return kExitUsage;
    }

    std::optional<CacheSession> cache;
    if (auto dir = resolve_cache_dir(P.cache_dir))
        cache.emplace(*dir, err);

    Outcome o;
    try {
        o = handler(P);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return kExitVerifyFailed;
    }

    if (cache)
        cache->save();
    out << emit(o.doc, P.format == "csv" ? Format::csv : Format::json);
    return o.code;
}

} // namespace tqc::cli
