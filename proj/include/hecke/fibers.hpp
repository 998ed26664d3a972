#pragma once

// Points of convolution fibers over F_q, their strata, and the partial-flag
// (Spaltenstein-Springer) model of the minuscule case.

#include <cstdint>
#include <map>
#include <vector>

#include "hecke/hallq.hpp"
#include "hecke/linalg.hpp"
#include "hecke/qpolynomial.hpp"
#include "hecke/torsion_module.hpp"
#include "hecke/weights.hpp"

namespace hecke {

/// Chain counts bucketed by stratum label (mu'_1, ..., mu'_r).
struct StratumTable {
    std::map<std::vector<DominantCoweight>, std::uint64_t> entries;

    std::uint64_t total() const;
    /// 0 for labels with no points.
    std::uint64_t at(const std::vector<DominantCoweight>& key) const;
};

/// Chains M_lam = N_0 >= ... >= N_r = 0 with type(N_{i-1}/N_i) <= mu_i, after
/// shifting every factor to a partition with last part 0. Zero unless lam <= |mu|.
/// Stratum labels are reported in the caller's coordinates.
std::uint64_t fiber_count(const CoweightTuple& mu, const DominantCoweight& lam, int q, const CountContext& ctx);

StratumTable stratify_fiber(const CoweightTuple& mu, const DominantCoweight& lam, int q, const CountContext& ctx);

/// Where stratum counts come from. Direct enumerates the fiber at every field
/// size; Recursive evaluates c^lam_{mu'} through Hall numbers, which counts the
/// same stratum.
enum class StratumSource { Direct, Recursive };

struct StratumDegree {
    std::vector<DominantCoweight> key;
    QPolynomial poly;
    /// <rho, |mu'| - lam>.
    std::int64_t bound = 0;
    bool within_bound = false;
};

struct StratumDegreeReport {
    std::vector<StratumDegree> strata;
    bool ok = true;
};

/// Every stratum count is interpolated with one degree of slack (bound + 1)
/// where enough field sizes exist, so a violation is observable rather than
/// assumed away.
StratumDegreeReport stratum_degree_check(const CoweightTuple& mu, const DominantCoweight& lam, CountContext& ctx,
                                         StratumSource source = StratumSource::Recursive);

struct TopCoefficientReport {
    std::int64_t predicted_degree = -1;
    Integer multiplicity = 0;
    QPolynomial fiber_poly;
    QPolynomial open_poly;
    /// fiber_poly(2) against a direct enumeration of the whole fiber.
    bool direct_sample_matches = false;
    bool degree_matches = false;
    bool coefficient_matches = false;
    bool open_matches = false;
    bool ok = false;
};

TopCoefficientReport top_coefficient_check(const CoweightTuple& mu, const DominantCoweight& lam, CountContext& ctx);

/// Dimension vector and nilpotent operator of a partial-flag problem.
class FlagDatum {
   public:
    /// InvalidInput unless dims are nonnegative, sum to the matrix size, and
    /// the matrix is nilpotent.
    FlagDatum(std::vector<int> dims, FieldMatrix nilpotent);

    const std::vector<int>& dims() const { return dims_; }
    const FieldMatrix& nilpotent() const { return t_; }

   private:
    std::vector<int> dims_;
    FieldMatrix t_;
};

/// Flags V = V_0 >= V_1 >= ... >= V_r = 0 with dim V_{i-1}/V_i = d_i and
/// T(V_{i-1}) <= V_i.
std::uint64_t spaltenstein_count(const FlagDatum& flag, Budget& budget);

struct SsBijectionReport {
    std::uint64_t spaltenstein = 0;
    std::uint64_t fiber = 0;
    bool agree = false;
};

/// Every mu_i must be (1^{d_i}, 0^{n-d_i}) and lam <= |mu|.
SsBijectionReport ss_bijection_check(const CoweightTuple& mu, const DominantCoweight& lam, int q,
                                     const CountContext& ctx);

struct MinusculeDegreeReport {
    std::int64_t predicted_degree = -1;
    QPolynomial fiber_poly;
    bool ok = false;
};

/// All mu_i minuscule and lam <= |mu| (InvalidInput otherwise).
MinusculeDegreeReport minuscule_degree_check(const CoweightTuple& mu, const DominantCoweight& lam,
                                             CountContext& ctx);

}  // namespace hecke
