#pragma once

// Exhaustive sweeps over small instances and the check suites run over them.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/hallq.hpp"
#include "hecke/weights.hpp"

namespace hecke {

struct SweepConfig {
    int n = 2;
    int max_total = 2;
    int max_factors = 2;
    std::vector<int> fields{2, 3};
    std::uint64_t budget = Budget::kDefaultLimit;
    int workers = 1;
    std::string cache_path;

    /// InvalidInput on a bad value.
    void validate() const;
    /// Applies one `key=value` setting; keys mirror the long flag names
    /// (n, max-total, max-factors, fields, budget, workers, cache).
    void set(std::string_view key, std::string_view value);
    /// Reads `key=value` lines; blank lines and lines starting with '#' are skipped.
    void load_file(const std::filesystem::path& path);
};

struct Instance {
    CoweightTuple mu;
    DominantCoweight lambda;

    std::string to_string() const;
    auto operator<=>(const Instance&) const = default;
    bool operator==(const Instance&) const = default;
};

/// Tuples of partitions with every |mu_i| >= 1, sum at most max_total and at
/// most max_factors factors (the empty tuple included), sorted.
std::vector<CoweightTuple> sweep_tuples(const SweepConfig& cfg);

/// Every sweep tuple paired with each partition lambda of the same size,
/// restricted to lambda <= |mu| when `dominated_only`. Sorted.
std::vector<Instance> sweep_instances(const SweepConfig& cfg, bool dominated_only = true);

enum class Suite { Klm, Hall, Minuscule, Prv, Semismall, SsFibers, Sumset, Strata, Oracle, QIndependence };

Suite parse_suite(std::string_view name);
std::string suite_name(Suite s);
const std::vector<Suite>& all_suites();

struct Verdict {
    Instance instance;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    Suite suite;
    std::vector<Verdict> verdicts;

    std::size_t passed() const;
    bool all_passed() const { return passed() == verdicts.size(); }
};

/// Runs `suite` over its instances with cfg.workers threads. Verdicts come
/// back in instance order whatever the completion order. A failed check or a
/// ConsistencyError is a failing verdict; BudgetExceeded and InvalidInput
/// propagate.
SuiteReport run_suite(Suite suite, const SweepConfig& cfg, CountContext& ctx);

struct SweepRow {
    Instance instance;
    QPolynomial poly;
    Integer multiplicity;
    /// <rho, |mu| - lambda> when lambda <= |mu|.
    std::optional<std::int64_t> predicted_degree;
    bool leading_term = false;
    bool hall = false;
};

/// One row per instance (all lambda of matching size), in instance order.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, CountContext& ctx);

}  // namespace hecke
