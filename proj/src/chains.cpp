#include "hecke/chains.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

class ChainWalker {
   public:
    ChainWalker(const TorsionModule& m, const CoweightTuple& mu, StepCondition cond, Budget& budget,
                const std::function<void(const LatticeChain&)>& visit)
        : m_(m), mu_(mu), cond_(cond), budget_(budget), visit_(visit) {
        for (std::size_t k = 0; k <= mu.size(); ++k) suffix_.push_back(mu.suffix(k).total());
    }

    void run() {
        const Submodule top = Submodule::whole(m_);
        if (!dominance_leq(module_type(top), suffix_[0])) return;
        chain_.modules.push_back(top);
        step(0);
    }

   private:
    bool accepts(const DominantCoweight& got, std::size_t i) const {
        return cond_ == StepCondition::Equal ? got == mu_[i] : dominance_leq(got, mu_[i]);
    }

    void step(std::size_t i) {
        if (i == mu_.size()) {
            visit_(chain_);
            return;
        }
        // Copied: chain_.modules grows while we recurse.
        const Submodule current = chain_.modules.back();
        const int dim = current.dimension() - mu_[i].sum();
        if (dim < 0) return;
        auto extend = [&](const Submodule& next) {
            DominantCoweight got = quotient_type(current, next);
            if (!accepts(got, i)) return;
            if (i + 1 < mu_.size() && !dominance_leq(module_type(next), suffix_[i + 1])) return;
            chain_.modules.push_back(next);
            chain_.step_types.push_back(std::move(got));
            step(i + 1);
            chain_.step_types.pop_back();
            chain_.modules.pop_back();
        };
        if (i + 1 == mu_.size()) {
            // N_r = 0 is forced.
            if (dim == 0) extend(Submodule::zero(m_));
            return;
        }
        SubmoduleQuery query;
        query.dimension = dim;
        query.within = &current;
        for_each_submodule(m_, query, budget_, extend);
    }

    const TorsionModule& m_;
    const CoweightTuple& mu_;
    StepCondition cond_;
    Budget& budget_;
    const std::function<void(const LatticeChain&)>& visit_;
    std::vector<DominantCoweight> suffix_;
    LatticeChain chain_;
};

}  // namespace

void for_each_chain(const TorsionModule& module, const CoweightTuple& mu, StepCondition condition, Budget& budget,
                    const std::function<void(const LatticeChain&)>& visit) {
    if (mu.rank() != module.rank()) throw InvalidInput("chain data and module have different ranks");
    for (const auto& f : mu.factors())
        if (!f.is_partition()) throw InvalidInput("chain step " + f.to_string() + " is not a partition");
    if (mu.total().sum() != module.dimension()) return;
    ChainWalker(module, mu, condition, budget, visit).run();
}

}  // namespace hecke
