#pragma once

// Finite torsion modules M_lambda = (+)_i F_q[t]/(t^lambda_i) and their
// t-stable subspaces. Lattices L between t^N O^n and O^n are always handled
// through their images in such a finite quotient.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hecke/finite_field.hpp"
#include "hecke/linalg.hpp"
#include "hecke/weights.hpp"

namespace hecke {

/// State-count ceiling for one enumeration task. Exceeding it throws
/// BudgetExceeded with the task description; results are never truncated.
class Budget {
   public:
    static constexpr std::uint64_t kDefaultLimit = 100'000'000;

    explicit Budget(std::uint64_t limit = kDefaultLimit, std::string task = {})
        : limit_(limit), task_(std::move(task)) {}

    void charge(std::uint64_t states = 1) {
        used_ += states;
        if (used_ > limit_) fail();
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }
    void set_task(std::string task) { task_ = std::move(task); }

   private:
    [[noreturn]] void fail() const;

    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    std::string task_;
};

/// M_lambda over F_q. The F_q-basis is e_{i,j} = t^j in summand i, ordered by
/// depth j first and summand i second, so multiplication by t only moves
/// basis vectors to later positions.
class TorsionModule {
   public:
    /// `type` must be a partition; InvalidInput otherwise.
    TorsionModule(DominantCoweight type, const FiniteField& field);

    const DominantCoweight& type() const { return type_; }
    const FiniteField& field() const { return *field_; }
    int rank() const { return type_.rank(); }
    /// dim over F_q, i.e. |lambda|.
    int dimension() const { return dim_; }
    /// q^|lambda|.
    Integer cardinality() const;

    int position(int summand, int depth) const;
    /// Position of t * e_pos, or -1 when t kills e_pos.
    int t_image(int pos) const { return t_image_[static_cast<std::size_t>(pos)]; }

    FieldVector apply_t(const FieldVector& v) const;
    FieldMatrix t_matrix() const;

    std::string describe() const;

   private:
    DominantCoweight type_;
    const FiniteField* field_;
    int dim_ = 0;
    std::vector<int> t_image_;
    std::vector<std::vector<int>> position_;
};

/// A t-stable subspace of a TorsionModule in canonical echelon form.
class Submodule {
   public:
    /// Verifies t-stability (InvalidInput otherwise).
    Submodule(const TorsionModule& ambient, Subspace space);

    static Submodule whole(const TorsionModule& ambient);
    static Submodule zero(const TorsionModule& ambient);

    const TorsionModule& ambient() const { return *ambient_; }
    const Subspace& space() const { return space_; }
    int dimension() const { return space_.dimension(); }
    int colength() const { return ambient_->dimension() - space_.dimension(); }
    bool contains(const Submodule& other) const { return space_.contains(other.space_); }

    /// t * N.
    Submodule times_t() const;

    bool operator==(const Submodule& other) const { return space_ == other.space_; }

   private:
    struct Trusted {};
    Submodule(const TorsionModule& ambient, Subspace space, Trusted)
        : ambient_(&ambient), space_(std::move(space)) {}
    friend class SubmoduleWalker;

    const TorsionModule* ambient_;
    Subspace space_;
};

/// Elementary-divisor type of N: the partition whose conjugate has entries
/// dim(t^{j-1}N / t^j N).
DominantCoweight module_type(const Submodule& n);

/// Type of outer / inner; requires inner to be contained in outer.
DominantCoweight quotient_type(const Submodule& outer, const Submodule& inner);

struct SubmoduleQuery {
    /// Only submodules of this F_q-dimension.
    std::optional<int> dimension;
    /// Only submodules contained in this one.
    const Submodule* within = nullptr;
};

/// Visits every t-stable subspace matching the query exactly once, in a fixed
/// deterministic order. Each echelon row is chosen from the affine space of
/// rows that keep the partial span t-stable, so no candidate is rejected
/// after the fact. Each search node is charged to `budget`.
void for_each_submodule(const TorsionModule& module, const SubmoduleQuery& query, Budget& budget,
                        const std::function<void(const Submodule&)>& visit);

/// All submodules of the given F_q-codimension (all of them if nullopt).
std::vector<Submodule> enumerate_submodules(const TorsionModule& module, std::optional<int> colength,
                                            Budget& budget);

}  // namespace hecke
