#include "hecke/torsion_module.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

void Budget::fail() const {
    throw BudgetExceeded("enumeration budget of " + std::to_string(limit_) + " states exceeded" +
                         (task_.empty() ? std::string() : " for " + task_));
}

TorsionModule::TorsionModule(DominantCoweight type, const FiniteField& field)
    : type_(std::move(type)), field_(&field) {
    if (!type_.is_partition()) throw InvalidInput("module type " + type_.to_string() + " is not a partition");
    const int n = type_.rank();
    position_.assign(static_cast<std::size_t>(n), {});
    const int depth = type_[0];
    for (int j = 0; j < depth; ++j)
        for (int i = 0; i < n; ++i)
            if (type_[i] > j) position_[static_cast<std::size_t>(i)].push_back(dim_++);
    t_image_.assign(static_cast<std::size_t>(dim_), -1);
    for (int i = 0; i < n; ++i) {
        const auto& col = position_[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j + 1 < col.size(); ++j) t_image_[static_cast<std::size_t>(col[j])] = col[j + 1];
    }
}

Integer TorsionModule::cardinality() const {
    Integer c = 1;
    for (int i = 0; i < dim_; ++i) c *= field_->order();
    return c;
}

int TorsionModule::position(int summand, int depth) const {
    const auto& col = position_.at(static_cast<std::size_t>(summand));
    if (depth < 0 || depth >= static_cast<int>(col.size())) throw InvalidInput("no basis vector at that depth");
    return col[static_cast<std::size_t>(depth)];
}

FieldVector TorsionModule::apply_t(const FieldVector& v) const {
    FieldVector out(v.size(), 0);
    for (int p = 0; p < dim_; ++p) {
        const int to = t_image_[static_cast<std::size_t>(p)];
        if (to >= 0) out[static_cast<std::size_t>(to)] = v[static_cast<std::size_t>(p)];
    }
    return out;
}

FieldMatrix TorsionModule::t_matrix() const {
    FieldMatrix m(*field_, dim_);
    for (int p = 0; p < dim_; ++p)
        if (t_image_[static_cast<std::size_t>(p)] >= 0) m.set(t_image_[static_cast<std::size_t>(p)], p, 1);
    return m;
}

std::string TorsionModule::describe() const {
    return "lambda=(" + type_.to_string() + "), q=" + std::to_string(field_->order());
}

Submodule::Submodule(const TorsionModule& ambient, Subspace space) : ambient_(&ambient), space_(std::move(space)) {
    if (space_.ambient_dimension() != ambient.dimension())
        throw InvalidInput("subspace dimension does not match " + ambient.describe());
    for (const auto& r : space_.rows())
        if (!space_.contains(ambient.apply_t(r))) throw InvalidInput("subspace is not stable under t");
}

Submodule Submodule::whole(const TorsionModule& ambient) {
    return Submodule(ambient, Subspace::whole(ambient.field(), ambient.dimension()), Trusted{});
}

Submodule Submodule::zero(const TorsionModule& ambient) {
    return Submodule(ambient, Subspace(ambient.field(), ambient.dimension()), Trusted{});
}

Submodule Submodule::times_t() const {
    return Submodule(*ambient_, space_.image([&](const FieldVector& v) { return ambient_->apply_t(v); }), Trusted{});
}

namespace {

DominantCoweight partition_from_conjugate(const std::vector<int>& conj, int rank) {
    std::vector<int> parts(static_cast<std::size_t>(rank), 0);
    for (int c : conj) {
        if (c > rank) throw ConsistencyError("module needs more than " + std::to_string(rank) + " generators");
        for (int i = 0; i < c; ++i) ++parts[static_cast<std::size_t>(i)];
    }
    return DominantCoweight(std::move(parts));
}

}  // namespace

DominantCoweight quotient_type(const Submodule& outer, const Submodule& inner) {
    const TorsionModule& m = outer.ambient();
    const int base = inner.dimension();
    std::vector<int> conj;
    Subspace power = outer.space();  // t^j * outer
    int prev = outer.dimension();
    while (prev > base) {
        power = power.image([&](const FieldVector& v) { return m.apply_t(v); });
        const int next = (power + inner.space()).dimension();
        conj.push_back(prev - next);
        prev = next;
    }
    return partition_from_conjugate(conj, m.rank());
}

DominantCoweight module_type(const Submodule& n) { return quotient_type(n, Submodule::zero(n.ambient())); }

class SubmoduleWalker {
   public:
    SubmoduleWalker(const TorsionModule& m, const SubmoduleQuery& query, Budget& budget,
                    const std::function<void(const Submodule&)>& visit)
        : m_(m),
          f_(m.field()),
          d_(m.dimension()),
          target_(query.dimension),
          within_(query.within ? &query.within->space() : nullptr),
          budget_(budget),
          visit_(visit),
          is_pivot_(static_cast<std::size_t>(d_), false) {}

    void run() { descend(d_ - 1); }

   private:
    FieldVector unit(int pos) const {
        FieldVector e(static_cast<std::size_t>(d_), 0);
        if (pos >= 0) e[static_cast<std::size_t>(pos)] = 1;
        return e;
    }

    // Residual of v modulo the rows chosen so far.
    FieldVector reduce_current(FieldVector v) const {
        for (std::size_t b = 0; b < rows_.size(); ++b) {
            const auto c = v[static_cast<std::size_t>(pivots_[b])];
            if (c == 0) continue;
            for (int k = 0; k < d_; ++k)
                v[static_cast<std::size_t>(k)] =
                    f_.sub(v[static_cast<std::size_t>(k)], f_.mul(c, rows_[b][static_cast<std::size_t>(k)]));
        }
        return v;
    }

    void emit() {
        std::vector<FieldVector> rows(rows_.rbegin(), rows_.rend());
        std::vector<int> pivots(pivots_.rbegin(), pivots_.rend());
        visit_(Submodule(m_, Subspace::from_echelon(f_, d_, std::move(rows), std::move(pivots)),
                         Submodule::Trusted{}));
    }

    void descend(int p) {
        budget_.charge();
        const int have = static_cast<int>(rows_.size());
        if (p < 0) {
            if (!target_ || have == *target_) emit();
            return;
        }
        if (target_ && (have > *target_ || have + p + 1 < *target_)) return;

        // Column p is not a pivot.
        if (!target_ || have + p >= *target_) descend(p - 1);

        // Column p is a pivot: row r = e_p + sum_s x_s e_s over the free columns s > p.
        if (target_ && have >= *target_) return;
        std::vector<int> free;
        for (int s = p + 1; s < d_; ++s)
            if (!is_pivot_[static_cast<std::size_t>(s)]) free.push_back(s);
        const std::size_t nf = free.size();

        std::vector<FieldVector> eqs;
        FieldVector rhs;
        auto add_constraints = [&](const FieldVector& base, const std::vector<FieldVector>& cols) {
            for (int c = 0; c < d_; ++c) {
                const auto cu = static_cast<std::size_t>(c);
                FieldVector row(nf);
                bool nonzero = base[cu] != 0;
                for (std::size_t j = 0; j < nf; ++j) {
                    row[j] = cols[j][cu];
                    nonzero = nonzero || row[j] != 0;
                }
                if (!nonzero) continue;
                eqs.push_back(std::move(row));
                rhs.push_back(f_.neg(base[cu]));
            }
        };
        // t r must already lie in the span of the deeper rows.
        {
            std::vector<FieldVector> cols;
            cols.reserve(nf);
            for (int s : free) cols.push_back(reduce_current(unit(m_.t_image(s))));
            add_constraints(reduce_current(unit(m_.t_image(p))), cols);
        }
        if (within_) {
            std::vector<FieldVector> cols;
            cols.reserve(nf);
            for (int s : free) cols.push_back(within_->reduce(unit(s)));
            add_constraints(within_->reduce(unit(p)), cols);
        }
        auto solution = solve_affine(f_, static_cast<int>(nf), std::move(eqs), std::move(rhs));
        if (!solution) return;

        is_pivot_[static_cast<std::size_t>(p)] = true;
        pivots_.push_back(p);
        rows_.emplace_back();
        for_each_solution(f_, *solution, [&](const FieldVector& x) {
            FieldVector r = unit(p);
            for (std::size_t j = 0; j < nf; ++j) r[static_cast<std::size_t>(free[j])] = x[j];
            rows_.back() = std::move(r);
            descend(p - 1);
        });
        rows_.pop_back();
        pivots_.pop_back();
        is_pivot_[static_cast<std::size_t>(p)] = false;
    }

    const TorsionModule& m_;
    const FiniteField& f_;
    const int d_;
    const std::optional<int> target_;
    const Subspace* within_;
    Budget& budget_;
    const std::function<void(const Submodule&)>& visit_;
    std::vector<bool> is_pivot_;
    // Chosen rows, deepest pivot first.
    std::vector<FieldVector> rows_;
    std::vector<int> pivots_;
};

void for_each_submodule(const TorsionModule& module, const SubmoduleQuery& query, Budget& budget,
                        const std::function<void(const Submodule&)>& visit) {
    if (query.within && &query.within->ambient() != &module)
        throw InvalidInput("containing submodule belongs to a different module");
    SubmoduleWalker(module, query, budget, visit).run();
}

std::vector<Submodule> enumerate_submodules(const TorsionModule& module, std::optional<int> colength,
                                            Budget& budget) {
    SubmoduleQuery query;
    if (colength) {
        if (*colength < 0 || *colength > module.dimension()) return {};
        query.dimension = module.dimension() - *colength;
    }
    std::vector<Submodule> out;
    for_each_submodule(module, query, budget, [&](const Submodule& s) { out.push_back(s); });
    return out;
}

}  // namespace hecke
