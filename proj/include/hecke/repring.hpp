#pragma once

// Representation ring of the dual group GL_n: Littlewood-Richardson
// coefficients, iterated tensor multiplicities, an independent Schur-polynomial
// oracle, weight sets and the minuscule / PRV witness searches.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hecke/weights.hpp"

namespace hecke {

/// Weights of V_mu: a subset of Z^n stable under permutations of the coordinates.
using WeightSet = std::set<Weight>;

struct MultiplicityResult {
    DominantCoweight lambda;
    Integer multiplicity;
};

/// Dominant mu'_i <= mu_i and permuted copies summing to lambda.
struct PRVWitness {
    std::vector<DominantCoweight> mu_prime;
    std::vector<Weight> summands;
};

/// Multiplicity of V_lam in V_mu (x) V_nu, by counting Littlewood-Richardson
/// tableaux of shape lam/mu and content nu. Inputs are shifted to partitions
/// first; mismatched sums give 0.
std::uint64_t lr_coefficient(const DominantCoweight& mu, const DominantCoweight& nu,
                             const DominantCoweight& lam);

/// Full decomposition of V_mu_1 (x) ... (x) V_mu_r, built factor by factor with
/// the LR rule, sorted by highest weight.
std::vector<MultiplicityResult> tensor_decomposition(const CoweightTuple& mu);

/// dim V^lam_{mu.}.
Integer tensor_multiplicity(const CoweightTuple& mu, const DominantCoweight& lam);

/// Same quantity computed by multiplying Schur polynomials in n variables and
/// peeling off leading dominant monomials. Never touches the LR rule.
/// `budget` bounds the number of monomial operations (BudgetExceeded).
Integer schur_product_oracle(const CoweightTuple& mu, const DominantCoweight& lam,
                             std::uint64_t budget = 100'000'000);

bool rep_nonvanishing(const CoweightTuple& mu, const DominantCoweight& lam);

/// Omega(V_mu) = { nu : sort(nu) <= mu }.
WeightSet weight_set(const DominantCoweight& mu);

/// Omega(V_|mu.|) equals the sumset of the Omega(V_mu_i).
bool sumset_lemma_check(const CoweightTuple& mu, std::uint64_t budget = 100'000'000);

/// Permutations nu_i of the (minuscule) mu_i with sum lambda, searched
/// depth-first starting from the identity permutation. std::nullopt when
/// lambda is not <= |mu.| or no witness exists. Throws InvalidInput for
/// non-minuscule factors.
std::optional<std::vector<Weight>> minuscule_witness(const CoweightTuple& mu, const DominantCoweight& lam);

/// nu_i in Omega(V_mu_i) with sum lambda; the result is checked against
/// tensor_multiplicity(mu', lambda) >= 1 (ConsistencyError otherwise).
std::optional<PRVWitness> prv_witness(const CoweightTuple& mu, const DominantCoweight& lam);

}  // namespace hecke
