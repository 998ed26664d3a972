#pragma once

#include <functional>
#include <vector>

#include "hecke/torsion_module.hpp"
#include "hecke/weights.hpp"

namespace hecke {

/// M_lambda = N_0 >= N_1 >= ... >= N_r = 0, all t-stable. Through the
/// correspondence N_i = L_i / L this is a point (L_1, ..., L_r) of the twisted
/// product lying over the fixed lattice L of type lambda.
struct LatticeChain {
    std::vector<Submodule> modules;
    /// module_type(N_{i-1} / N_i) for i = 1..r: the stratum label.
    std::vector<DominantCoweight> step_types;
};

enum class StepCondition {
    /// type(N_{i-1}/N_i) == mu_i: points of the open stratum.
    Equal,
    /// type(N_{i-1}/N_i) <= mu_i: the whole fiber.
    Dominated,
};

/// Walks chains top-down (N_1 first). A partial chain is abandoned as soon as
/// type(N_i) is not <= mu_{i+1} + ... + mu_r, since no completion can exist.
/// `mu` must consist of partitions of the module's rank.
void for_each_chain(const TorsionModule& module, const CoweightTuple& mu, StepCondition condition, Budget& budget,
                    const std::function<void(const LatticeChain&)>& visit);

}  // namespace hecke
