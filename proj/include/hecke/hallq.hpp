#pragma once

// Structure constants of the spherical Hecke algebra of GL_n over F_q((t)),
// computed as counts of lattice chains over a fixed lattice of type lambda.

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "hecke/qpolynomial.hpp"
#include "hecke/structure_cache.hpp"
#include "hecke/torsion_module.hpp"
#include "hecke/weights.hpp"

namespace hecke {

enum class EvalMethod {
    /// Enumerate chains in M_lambda.
    Direct,
    /// Fold two-factor Hall numbers.
    Recursive,
    /// Both; MethodDisagreement if they differ.
    Both,
};

struct CountContext {
    /// Per-task state ceiling; one task is one (lambda, q) enumeration.
    std::uint64_t budget = Budget::kDefaultLimit;
    std::shared_ptr<StructureCache> cache = std::make_shared<StructureCache>();
};

/// (cotype, type) -> #{N <= M_lambda : type(M/N) = cotype, type(N) = type}.
/// Only nonzero entries are present.
using HallTable = std::map<std::pair<DominantCoweight, DominantCoweight>, std::uint64_t>;

HallTable hall_table(const DominantCoweight& lam, const FiniteField& field, Budget& budget);

/// g^lam_{mu nu}(q). All three must be partitions of the same rank.
Integer hall_number(const DominantCoweight& lam, const DominantCoweight& mu, const DominantCoweight& nu, int q,
                    CountContext& ctx);

/// c^lam_{mu_1..mu_r}(q). Inputs are normalized first; zero unless
/// lam <= mu_1 + ... + mu_r.
Integer hecke_constant_eval(const CoweightTuple& mu, const DominantCoweight& lam, int q, EvalMethod method,
                            CountContext& ctx);

struct HeckePolynomial {
    QPolynomial poly;
    /// <rho, |mu| - lam>, or -1 when the constant vanishes identically.
    std::int64_t degree_bound = -1;
    std::vector<Sample> samples;
};

/// Interpolates c^lam_{mu}(q) from degree_bound + 2 field sizes (the last one
/// is a check), capped at the supported sizes. A cached polynomial for the
/// same instance must agree, else ConsistencyError.
HeckePolynomial hecke_constant_poly(const CoweightTuple& mu, const DominantCoweight& lam, CountContext& ctx,
                                    EvalMethod method = EvalMethod::Recursive);

/// c^lam_{mu} != 0, decided by one evaluation at q = 2.
bool hecke_nonvanishing(const CoweightTuple& mu, const DominantCoweight& lam, CountContext& ctx);

struct LeadingTermReport {
    QPolynomial poly;
    int degree = -1;
    Integer leading_coefficient = 0;
    std::int64_t predicted_degree = -1;
    /// Tensor multiplicity of V_lam in V_{mu_1} x ... x V_{mu_r}.
    Integer predicted_coefficient = 0;

    /// Zero multiplicity with degree < predicted, or degree == predicted with
    /// leading coefficient equal to the multiplicity.
    bool consistent() const;
};

LeadingTermReport leading_term_report(const CoweightTuple& mu, const DominantCoweight& lam, CountContext& ctx);

}  // namespace hecke
