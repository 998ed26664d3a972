#include "hecke/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/errors.hpp"
#include "hecke/fibers.hpp"
#include "hecke/hallq.hpp"
#include "hecke/repring.hpp"
#include "hecke/verify.hpp"

namespace hecke {

namespace {

using json = nlohmann::json;

json to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

json to_json(const QPolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_json(c));
    return a;
}

json to_json(const CoweightTuple& mu) {
    json a = json::array();
    for (const auto& f : mu.factors()) a.push_back(f.parts());
    return a;
}

json to_json(const Instance& in) { return json{{"mu", to_json(in.mu)}, {"lambda", in.lambda.parts()}}; }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Flags shared by every subcommand. Values stay unset unless given so that
// config-file settings are only overridden explicitly.
struct Flags {
    std::optional<int> n;
    std::vector<std::string> mu;
    std::string lambda;
    std::optional<int> q;
    bool poly = false;
    std::optional<int> max_total;
    std::optional<int> max_factors;
    std::string fields;
    std::optional<std::uint64_t> budget;
    std::optional<int> workers;
    std::string cache;
    std::string format = "json";
    std::string out;
    std::string config;
    std::string suite;
};

void add_common(CLI::App* app, Flags& f) {
    app->add_option("--n", f.n, "rank n of GL_n");
    app->add_option("--mu", f.mu, "dominant coweight mu_i as CSV (repeatable)");
    app->add_option("--lambda", f.lambda, "dominant coweight lambda as CSV");
    app->add_option("--q", f.q, "field size");
    app->add_flag("--poly", f.poly, "interpolate the polynomial in q");
    app->add_option("--max-total", f.max_total, "sweep bound on |mu|");
    app->add_option("--max-factors", f.max_factors, "sweep bound on the number of factors");
    app->add_option("--fields", f.fields, "field sizes as CSV");
    app->add_option("--budget", f.budget, "state ceiling per enumeration task");
    app->add_option("--workers", f.workers, "worker threads");
    app->add_option("--cache", f.cache, "persistent cache file");
    app->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--out", f.out, "write the report here instead of standard output");
    app->add_option("--config", f.config, "key=value settings file");
}

SweepConfig build_config(const Flags& f) {
    SweepConfig cfg;
    if (!f.config.empty()) cfg.load_file(f.config);
    if (const char* env = std::getenv("CACHE_PATH"); env && *env) cfg.cache_path = env;
    if (f.n) cfg.n = *f.n;
    if (f.max_total) cfg.max_total = *f.max_total;
    if (f.max_factors) cfg.max_factors = *f.max_factors;
    if (!f.fields.empty()) cfg.set("fields", f.fields);
    if (f.budget) cfg.budget = *f.budget;
    if (f.workers) cfg.workers = *f.workers;
    if (!f.cache.empty()) cfg.cache_path = f.cache;
    cfg.validate();
    return cfg;
}

CountContext build_context(const SweepConfig& cfg) {
    CountContext ctx;
    ctx.budget = cfg.budget;
    if (!cfg.cache_path.empty()) ctx.cache = std::make_shared<StructureCache>(cfg.cache_path);
    return ctx;
}

struct SingleInstance {
    CoweightTuple mu;
    DominantCoweight lambda;
};

SingleInstance parse_instance(const Flags& f) {
    if (f.lambda.empty()) throw InvalidInput("--lambda is required");
    const int n = f.n ? *f.n : DominantCoweight::parse(f.lambda).rank();
    if (n < 1) throw InvalidInput("--n must be positive");
    std::vector<DominantCoweight> factors;
    for (const auto& m : f.mu) factors.push_back(DominantCoweight::parse(m, n));
    return {CoweightTuple(n, std::move(factors)), DominantCoweight::parse(f.lambda, n)};
}

json instance_json(const SingleInstance& s) { return json{{"mu", to_json(s.mu)}, {"lambda", s.lambda.parts()}}; }

int cmd_tensor(const Flags& f, std::ostream& out) {
    const auto cfg = build_config(f);
    const auto in = parse_instance(f);
    const Integer m = tensor_multiplicity(in.mu, in.lambda);
    const Integer oracle = schur_product_oracle(in.mu, in.lambda, cfg.budget);
    const bool agree = m == oracle;
    if (f.format == "csv") {
        out << "mu,lambda,multiplicity,oracle,agree\n"
            << csv_quote(to_json(in.mu).dump()) << "," << csv_quote(json(in.lambda.parts()).dump()) << "," << m << ","
            << oracle << "," << (agree ? "true" : "false") << "\n";
    } else {
        out << json{{"multiplicity", to_json(m)}, {"oracle", to_json(oracle)}, {"agree", agree}}.dump() << "\n";
    }
    return agree ? kExitOk : kExitCheckFailed;
}

int cmd_hecke(const Flags& f, std::ostream& out) {
    const auto cfg = build_config(f);
    auto ctx = build_context(cfg);
    const auto in = parse_instance(f);
    if (f.q && !f.poly) {
        const Integer c = hecke_constant_eval(in.mu, in.lambda, *f.q, EvalMethod::Both, ctx);
        if (f.format == "csv")
            out << "mu,lambda,q,count\n"
                << csv_quote(to_json(in.mu).dump()) << "," << csv_quote(json(in.lambda.parts()).dump()) << ","
                << *f.q << "," << c << "\n";
        else
            out << json{{"instance", instance_json(in)}, {"q", *f.q}, {"count", to_json(c)}}.dump() << "\n";
        return kExitOk;
    }
    const auto hp = hecke_constant_poly(in.mu, in.lambda, ctx, EvalMethod::Both);
    if (f.format == "csv") {
        out << "mu,lambda,poly,degree_bound\n"
            << csv_quote(to_json(in.mu).dump()) << "," << csv_quote(json(in.lambda.parts()).dump()) << ","
            << csv_quote(hp.poly.to_string()) << "," << hp.degree_bound << "\n";
    } else {
        json samples = json::array();
        for (const auto& s : hp.samples) samples.push_back(json{{"q", s.q}, {"count", to_json(s.value)}});
        out << json{{"instance", instance_json(in)},
                    {"poly", to_json(hp.poly)},
                    {"degree_bound", hp.degree_bound},
                    {"samples", samples}}
                   .dump()
            << "\n";
    }
    return kExitOk;
}

int cmd_fiber(const Flags& f, std::ostream& out) {
    const auto cfg = build_config(f);
    auto ctx = build_context(cfg);
    const auto in = parse_instance(f);
    const int q = f.q.value_or(2);
    const auto norm = normalize(in.mu, in.lambda);

    const auto table = stratify_fiber(in.mu, in.lambda, q, ctx);
    const auto strata = stratum_degree_check(in.mu, in.lambda, ctx);
    const auto top = top_coefficient_check(in.mu, in.lambda, ctx);
    json checks{{"semismall", strata.ok},
                {"top_coefficient", top.ok},
                {"open_stratum_matches", Integer(table.at(in.mu.factors())) ==
                                             hecke_constant_eval(in.mu, in.lambda, q, EvalMethod::Both, ctx)},
                {"evidence", "degree-level evidence"}};
    bool ok = strata.ok && top.ok && checks["open_stratum_matches"].get<bool>();
    const bool dominated = dominance_leq(norm.lambda, norm.mu.total());
    bool minuscule = dominated;
    bool fundamental = dominated;
    for (const auto& m : norm.mu.factors()) {
        minuscule = minuscule && is_minuscule(m);
        for (int x : m.parts()) fundamental = fundamental && (x == 0 || x == 1);
    }
    if (minuscule) {
        const bool v = minuscule_degree_check(in.mu, in.lambda, ctx).ok;
        checks["minuscule_degree"] = v;
        ok = ok && v;
    }
    if (fundamental) {
        const bool v = ss_bijection_check(norm.mu, norm.lambda, q, ctx).agree;
        checks["spaltenstein_bijection"] = v;
        ok = ok && v;
    }

    if (f.format == "csv") {
        out << "key,poly,bound,within_bound,count_at_q\n";
        for (const auto& st : strata.strata)
            out << csv_quote(to_json(CoweightTuple(norm.mu.rank(), st.key)).dump()) << ","
                << csv_quote(st.poly.to_string()) << "," << st.bound << "," << (st.within_bound ? "true" : "false")
                << "," << table.at(st.key) << "\n";
    } else {
        json rows = json::array();
        for (const auto& st : strata.strata)
            rows.push_back(json{{"key", to_json(CoweightTuple(norm.mu.rank(), st.key))},
                                {"poly", to_json(st.poly)},
                                {"bound", st.bound},
                                {"count", table.at(st.key)}});
        out << json{{"instance", json{{"mu", to_json(in.mu)}, {"lambda", in.lambda.parts()}, {"q", q}}},
                    {"fiber_count", table.total()},
                    {"fiber_poly", to_json(top.fiber_poly)},
                    {"multiplicity", to_json(top.multiplicity)},
                    {"strata", rows},
                    {"checks", checks}}
                   .dump()
            << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Flags& f, std::ostream& out, std::ostream& err) {
    const Suite suite = parse_suite(f.suite);
    const auto cfg = build_config(f);
    auto ctx = build_context(cfg);
    const auto report = run_suite(suite, cfg, ctx);
    const std::string name = suite_name(suite);
    if (f.format == "csv") out << "suite,mu,lambda,pass,detail\n";
    for (const auto& v : report.verdicts) {
        if (f.format == "csv")
            out << name << "," << csv_quote(to_json(v.instance.mu).dump()) << ","
                << csv_quote(json(v.instance.lambda.parts()).dump()) << "," << (v.pass ? "true" : "false") << ","
                << csv_quote(v.detail) << "\n";
        else
            out << json{{"suite", name}, {"instance", to_json(v.instance)}, {"pass", v.pass}, {"detail", v.detail}}
                       .dump()
                << "\n";
        if (!v.pass) err << "FAILED " << name << " " << v.instance.to_string() << ": " << v.detail << "\n";
    }
    const json summary{{"suite", name},
                       {"checked", report.verdicts.size()},
                       {"passed", report.passed()},
                       {"failed", report.verdicts.size() - report.passed()},
                       {"all_passed", report.all_passed()}};
    if (f.format == "csv") err << summary.dump() << "\n";
    else out << json{{"summary", summary}}.dump() << "\n";
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const Flags& f, std::ostream& out) {
    const auto cfg = build_config(f);
    auto ctx = build_context(cfg);
    const auto rows = run_sweep(cfg, ctx);
    bool ok = true;
    if (f.format == "csv") {
        out << "mu,lambda,poly,multiplicity,predicted_degree,degree,leading_coefficient,leading_term,hall\n";
        for (const auto& r : rows) {
            out << csv_quote(to_json(r.instance.mu).dump()) << "," << csv_quote(json(r.instance.lambda.parts()).dump())
                << "," << csv_quote(r.poly.to_string()) << "," << r.multiplicity << ","
                << (r.predicted_degree ? std::to_string(*r.predicted_degree) : "") << "," << r.poly.degree() << ","
                << r.poly.leading_coefficient() << "," << (r.leading_term ? "true" : "false") << ","
                << (r.hall ? "true" : "false") << "\n";
            ok = ok && r.leading_term && r.hall;
        }
    } else {
        json a = json::array();
        for (const auto& r : rows) {
            a.push_back(json{{"instance", to_json(r.instance)},
                             {"poly", to_json(r.poly)},
                             {"multiplicity", to_json(r.multiplicity)},
                             {"predicted_degree", r.predicted_degree ? json(*r.predicted_degree) : json(nullptr)},
                             {"degree", r.poly.degree()},
                             {"leading_coefficient", to_json(r.poly.leading_coefficient())},
                             {"leading_term", r.leading_term},
                             {"hall", r.hall}});
            ok = ok && r.leading_term && r.hall;
        }
        out << json{{"config", json{{"n", cfg.n}, {"max_total", cfg.max_total}, {"max_factors", cfg.max_factors}}},
                    {"rows", a}}
                   .dump()
            << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structure constants of the spherical Hecke algebra of GL_n and their checks"};
    app.require_subcommand(1);
    Flags f;
    auto* tensor = app.add_subcommand("tensor", "tensor product multiplicity, with the Schur oracle");
    auto* hecke = app.add_subcommand("hecke", "structure constant at --q, or its polynomial with --poly");
    auto* fiber = app.add_subcommand("fiber", "fiber strata and their degree checks");
    auto* verify = app.add_subcommand("verify", "run one check suite over a sweep");
    auto* sweep = app.add_subcommand("sweep", "table of polynomials and multiplicities over a sweep");
    for (auto* sub : {tensor, hecke, fiber, verify, sweep}) add_common(sub, f);
    std::string suites;
    for (Suite s : all_suites()) suites += (suites.empty() ? "" : " | ") + suite_name(s);
    verify->add_option("suite", f.suite, suites)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    std::ofstream file;
    if (!f.out.empty()) {
        file.open(f.out);
        if (!file) {
            err << "error: cannot open " << f.out << "\n";
            return kExitInvalid;
        }
    }
    std::ostream& sink = f.out.empty() ? out : file;

    try {
        if (tensor->parsed()) return cmd_tensor(f, sink);
        if (hecke->parsed()) return cmd_hecke(f, sink);
        if (fiber->parsed()) return cmd_fiber(f, sink);
        if (verify->parsed()) return cmd_verify(f, sink, err);
        return cmd_sweep(f, sink);
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace hecke
