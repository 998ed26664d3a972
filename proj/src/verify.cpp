#include "hecke/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "hecke/errors.hpp"
#include "hecke/fibers.hpp"
#include "hecke/repring.hpp"

namespace hecke {

namespace {

int parse_int(std::string_view key, std::string_view text) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw InvalidInput("setting " + std::string(key) + ": expected an integer, got '" + std::string(text) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Runs fn(i) for i in [0, count) on `workers` threads; results land in index
// order. The exception of the lowest failing index is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, int workers, Fn fn) {
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto threads = static_cast<std::size_t>(std::max(1, workers));
    if (threads == 1 || count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < std::min(threads, count); ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

bool all_minuscule(const CoweightTuple& mu) {
    return std::all_of(mu.factors().begin(), mu.factors().end(), [](const auto& f) { return is_minuscule(f); });
}

bool all_fundamental(const CoweightTuple& mu) {
    for (const auto& f : mu.factors())
        for (int x : f.parts())
            if (x != 0 && x != 1) return false;
    return true;
}

std::string join_degrees(const StratumDegreeReport& r, int rank) {
    std::ostringstream s;
    for (const auto& st : r.strata) {
        s << (s.tellp() > 0 ? " " : "") << CoweightTuple(rank, st.key).to_string() << ":"
          << st.poly.degree() << "<=" << st.bound;
    }
    return s.str();
}

Verdict check_instance(Suite suite, const Instance& in, const SweepConfig& cfg, CountContext& ctx) {
    Verdict v{in, false, {}};
    const auto& mu = in.mu;
    const auto& lam = in.lambda;
    std::ostringstream d;
    switch (suite) {
        case Suite::Klm: {
            const auto r = leading_term_report(mu, lam, ctx);
            d << "poly=" << r.poly.to_string() << " D=" << r.predicted_degree << " m=" << r.predicted_coefficient;
            v.pass = r.consistent();
            break;
        }
        case Suite::Hall: {
            const bool rep = rep_nonvanishing(mu, lam);
            v.pass = hecke_nonvanishing(mu, lam, ctx) == rep;
            d << "rep=" << rep;
            for (int q : cfg.fields) {
                const Integer c = hecke_constant_eval(mu, lam, q, EvalMethod::Recursive, ctx);
                d << " c(" << q << ")=" << c;
                v.pass = v.pass && ((c != 0) == rep);
            }
            break;
        }
        case Suite::Minuscule: {
            const bool witness = minuscule_witness(mu, lam).has_value();
            const bool hecke = hecke_nonvanishing(mu, lam, ctx);
            const bool rep = rep_nonvanishing(mu, lam);
            const auto deg = minuscule_degree_check(mu, lam, ctx);
            d << "witness=" << witness << " hecke=" << hecke << " rep=" << rep
              << " fiber=" << deg.fiber_poly.to_string() << " D=" << deg.predicted_degree;
            v.pass = witness && hecke && rep && deg.ok;
            break;
        }
        case Suite::Prv: {
            const auto w = prv_witness(mu, lam);
            v.pass = w.has_value();
            if (w) d << "mu'=" << CoweightTuple(mu.rank(), w->mu_prime).to_string();
            else d << "no witness";
            break;
        }
        case Suite::Semismall: {
            const auto r = stratum_degree_check(mu, lam, ctx);
            d << join_degrees(r, mu.rank());
            v.pass = r.ok;
            break;
        }
        case Suite::SsFibers: {
            v.pass = true;
            for (int q : cfg.fields) {
                const auto r = ss_bijection_check(mu, lam, q, ctx);
                d << (q == cfg.fields.front() ? "" : " ") << "q=" << q << ":" << r.spaltenstein << "/" << r.fiber;
                v.pass = v.pass && r.agree;
            }
            break;
        }
        case Suite::Sumset: {
            v.pass = sumset_lemma_check(mu, cfg.budget);
            break;
        }
        case Suite::Strata: {
            v.pass = true;
            for (int q : cfg.fields) {
                const auto table = stratify_fiber(mu, lam, q, ctx);
                const Integer open = table.at(mu.factors());
                const Integer both = hecke_constant_eval(mu, lam, q, EvalMethod::Both, ctx);
                d << (q == cfg.fields.front() ? "" : " ") << "q=" << q << ":" << open << "/" << both;
                v.pass = v.pass && open == both;
            }
            break;
        }
        case Suite::Oracle: {
            const Integer lr = tensor_multiplicity(mu, lam);
            const Integer schur = schur_product_oracle(mu, lam, cfg.budget);
            d << "lr=" << lr << " schur=" << schur;
            v.pass = lr == schur;
            for (int q : cfg.fields) d << " c(" << q << ")=" << hecke_constant_eval(mu, lam, q, EvalMethod::Both, ctx);
            break;
        }
        case Suite::QIndependence: {
            std::optional<bool> sign;
            v.pass = true;
            for (int q : cfg.fields) {
                const bool positive = hecke_constant_eval(mu, lam, q, EvalMethod::Recursive, ctx) > 0;
                d << (positive ? "+" : "0");
                if (sign && *sign != positive) v.pass = false;
                sign = positive;
            }
            break;
        }
    }
    v.detail = d.str();
    return v;
}

std::vector<Instance> suite_instances(Suite suite, const SweepConfig& cfg) {
    if (suite == Suite::Sumset) {
        std::vector<Instance> out;
        for (auto& t : sweep_tuples(cfg)) {
            DominantCoweight total = t.total();
            out.push_back({std::move(t), std::move(total)});
        }
        return out;
    }
    auto all = sweep_instances(cfg, true);
    if (suite == Suite::Minuscule) std::erase_if(all, [](const Instance& i) { return !all_minuscule(i.mu); });
    if (suite == Suite::SsFibers) std::erase_if(all, [](const Instance& i) { return !all_fundamental(i.mu); });
    return all;
}

}  // namespace

void SweepConfig::validate() const {
    if (n < 1) throw InvalidInput("n must be positive");
    if (max_total < 0) throw InvalidInput("max-total must be nonnegative");
    if (max_factors < 0) throw InvalidInput("max-factors must be nonnegative");
    if (fields.empty()) throw InvalidInput("fields must not be empty");
    for (int q : fields)
        if (!is_supported_field_size(q)) throw InvalidInput("unsupported field size q=" + std::to_string(q));
    if (budget == 0) throw InvalidInput("budget must be positive");
    if (workers < 1) throw InvalidInput("workers must be at least 1");
}

void SweepConfig::set(std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "n") {
        n = parse_int(key, value);
    } else if (key == "max-total" || key == "max_total") {
        max_total = parse_int(key, value);
    } else if (key == "max-factors" || key == "max_factors") {
        max_factors = parse_int(key, value);
    } else if (key == "fields") {
        fields.clear();
        std::size_t start = 0;
        while (start <= value.size()) {
            const auto comma = value.find(',', start);
            const auto piece = trim(value.substr(start, comma == std::string_view::npos ? value.npos : comma - start));
            fields.push_back(parse_int(key, piece));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else if (key == "budget") {
        std::uint64_t b = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), b);
        if (ec != std::errc() || ptr != value.data() + value.size())
            throw InvalidInput("setting budget: expected an integer, got '" + std::string(value) + "'");
        budget = b;
    } else if (key == "workers") {
        workers = parse_int(key, value);
    } else if (key == "cache" || key == "cache_path") {
        cache_path = std::string(value);
    } else {
        throw InvalidInput("unknown setting '" + std::string(key) + "'");
    }
}

void SweepConfig::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read config file " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string_view::npos) throw InvalidInput("config line without '=': " + line);
        set(t.substr(0, eq), t.substr(eq + 1));
    }
}

std::string Instance::to_string() const { return mu.to_string() + " -> (" + lambda.to_string() + ")"; }

std::vector<CoweightTuple> sweep_tuples(const SweepConfig& cfg) {
    std::vector<CoweightTuple> out;
    std::vector<DominantCoweight> cur;
    auto rec = [&](auto&& self, int left) -> void {
        out.emplace_back(cfg.n, cur);
        if (static_cast<int>(cur.size()) == cfg.max_factors) return;
        for (int size = 1; size <= left; ++size)
            for (const auto& p : partitions(size, cfg.n)) {
                cur.push_back(p);
                self(self, left - size);
                cur.pop_back();
            }
    };
    rec(rec, cfg.max_total);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Instance> sweep_instances(const SweepConfig& cfg, bool dominated_only) {
    std::vector<Instance> out;
    for (const auto& t : sweep_tuples(cfg)) {
        const DominantCoweight total = t.total();
        for (const auto& lam : partitions(total.sum(), cfg.n))
            if (!dominated_only || dominance_leq(lam, total)) out.push_back({t, lam});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Suite parse_suite(std::string_view name) {
    for (Suite s : all_suites())
        if (suite_name(s) == name) return s;
    throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Klm: return "klm";
        case Suite::Hall: return "hall";
        case Suite::Minuscule: return "minuscule";
        case Suite::Prv: return "prv";
        case Suite::Semismall: return "semismall";
        case Suite::SsFibers: return "ssfibers";
        case Suite::Sumset: return "sumset";
        case Suite::Strata: return "strata";
        case Suite::Oracle: return "oracle";
        case Suite::QIndependence: return "qindep";
    }
    return "?";
}

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites{Suite::Klm,       Suite::Hall,     Suite::Minuscule, Suite::Prv,
                                           Suite::Semismall, Suite::SsFibers, Suite::Sumset,    Suite::Strata,
                                           Suite::Oracle,    Suite::QIndependence};
    return suites;
}

std::size_t SuiteReport::passed() const {
    return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; }));
}

SuiteReport run_suite(Suite suite, const SweepConfig& cfg, CountContext& ctx) {
    cfg.validate();
    const auto instances = suite_instances(suite, cfg);
    SuiteReport report{suite, {}};
    report.verdicts = parallel_map<Verdict>(instances.size(), cfg.workers, [&](std::size_t i) {
        try {
            return check_instance(suite, instances[i], cfg, ctx);
        } catch (const ConsistencyError& e) {
            return Verdict{instances[i], false, e.what()};
        }
    });
    return report;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, CountContext& ctx) {
    cfg.validate();
    const auto instances = sweep_instances(cfg, false);
    return parallel_map<SweepRow>(instances.size(), cfg.workers, [&](std::size_t i) {
        const Instance& in = instances[i];
        SweepRow row{in, {}, tensor_multiplicity(in.mu, in.lambda), std::nullopt, false, false};
        const auto hp = hecke_constant_poly(in.mu, in.lambda, ctx);
        row.poly = hp.poly;
        if (hp.degree_bound >= 0) row.predicted_degree = hp.degree_bound;
        LeadingTermReport lt;
        lt.poly = hp.poly;
        lt.degree = hp.poly.degree();
        lt.leading_coefficient = hp.poly.leading_coefficient();
        lt.predicted_degree = hp.degree_bound;
        lt.predicted_coefficient = row.multiplicity;
        row.leading_term = lt.consistent();
        row.hall = hecke_nonvanishing(in.mu, in.lambda, ctx) == (row.multiplicity > 0);
        return row;
    });
}

}  // namespace hecke
