#include "hecke/fibers.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/chains.hpp"
#include "hecke/errors.hpp"
#include "hecke/repring.hpp"

namespace hecke {

namespace {

std::string label(const CoweightTuple& mu, const DominantCoweight& lam, int q) {
    return "fiber of " + mu.to_string() + " over (" + lam.to_string() + ") at q=" + std::to_string(q);
}

// Every tuple (mu'_1, ..., mu'_r) with mu'_i <= mu_i and lam <= |mu'|.
std::vector<std::vector<DominantCoweight>> stratum_keys(const CoweightTuple& mu, const DominantCoweight& lam) {
    std::vector<std::vector<DominantCoweight>> options;
    for (const auto& f : mu.factors()) options.push_back(dominated_by(f));
    std::vector<std::vector<DominantCoweight>> out;
    std::vector<DominantCoweight> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == options.size()) {
            if (dominance_leq(lam, CoweightTuple(mu.rank(), cur).total())) out.push_back(cur);
            return;
        }
        for (const auto& o : options[i]) {
            cur.push_back(o);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

QPolynomial sum_polys(const std::vector<StratumDegree>& strata) {
    QPolynomial s;
    for (const auto& st : strata) s += st.poly;
    return s;
}

// Calls visit(rows) for every k-dimensional subspace of F_q^m, given by its
// reduced echelon rows.
void for_each_echelon_subspace(const FiniteField& f, int m, int k, Budget& budget,
                               const std::function<void(const std::vector<FieldVector>&)>& visit) {
    if (k < 0 || k > m) return;
    std::vector<int> pivots(static_cast<std::size_t>(k));
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
        std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
        for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
        std::vector<std::pair<int, int>> free;  // (row, column)
        for (int a = 0; a < k; ++a)
            for (int c = pivots[static_cast<std::size_t>(a)] + 1; c < m; ++c)
                if (!is_pivot[static_cast<std::size_t>(c)]) free.emplace_back(a, c);
        std::vector<FieldVector> rows(static_cast<std::size_t>(k), FieldVector(static_cast<std::size_t>(m), 0));
        for (int a = 0; a < k; ++a)
            rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(a)])] = 1;
        while (true) {
            budget.charge();
            visit(rows);
            std::size_t j = 0;
            for (; j < free.size(); ++j) {
                auto& e = rows[static_cast<std::size_t>(free[j].first)][static_cast<std::size_t>(free[j].second)];
                e = static_cast<FiniteField::Element>(e + 1 < f.order() ? e + 1 : 0);
                if (e != 0) break;
            }
            if (j == free.size()) break;
        }
        // Next pivot combination.
        int a = k - 1;
        while (a >= 0 && pivots[static_cast<std::size_t>(a)] == m - k + a) --a;
        if (a < 0) return;
        ++pivots[static_cast<std::size_t>(a)];
        for (int b = a + 1; b < k; ++b) pivots[static_cast<std::size_t>(b)] = pivots[static_cast<std::size_t>(b - 1)] + 1;
    }
}

class FlagWalker {
   public:
    FlagWalker(const FlagDatum& flag, Budget& budget)
        : f_(flag.nilpotent().field()), t_(flag.nilpotent()), dims_(flag.dims()), budget_(budget) {}

    std::uint64_t run() { return step(Subspace::whole(f_, t_.dimension()), 0); }

   private:
    std::uint64_t step(const Subspace& v, std::size_t i) {
        budget_.charge();
        if (i == dims_.size()) return v.dimension() == 0 ? 1 : 0;
        const Subspace w = v.image([&](const FieldVector& x) { return t_.apply(x); });
        // V_i = W + (a subspace of a complement of W in V) of dimension k.
        const int k = v.dimension() - dims_[i] - w.dimension();
        if (k < 0) return 0;
        std::vector<FieldVector> comp;
        Subspace acc = w;
        for (const auto& r : v.rows()) {
            if (acc.contains(r)) continue;
            comp.push_back(r);
            acc = acc + Subspace::span(f_, t_.dimension(), {r});
        }
        const int m = static_cast<int>(comp.size());
        std::uint64_t total = 0;
        for_each_echelon_subspace(f_, m, k, budget_, [&](const std::vector<FieldVector>& coords) {
            std::vector<FieldVector> gens = w.rows();
            for (const auto& c : coords) {
                FieldVector g(static_cast<std::size_t>(t_.dimension()), 0);
                for (int j = 0; j < m; ++j) {
                    const auto a = c[static_cast<std::size_t>(j)];
                    if (a == 0) continue;
                    for (std::size_t s = 0; s < g.size(); ++s)
                        g[s] = f_.add(g[s], f_.mul(a, comp[static_cast<std::size_t>(j)][s]));
                }
                gens.push_back(std::move(g));
            }
            total += step(Subspace::span(f_, t_.dimension(), gens), i + 1);
        });
        return total;
    }

    const FiniteField& f_;
    const FieldMatrix& t_;
    const std::vector<int>& dims_;
    Budget& budget_;
};

// Labels come out of the walk in normalized coordinates; shift each one back
// by the offset its factor was normalized with.
std::vector<DominantCoweight> original_key(const std::vector<DominantCoweight>& key, const CoweightTuple& mu) {
    std::vector<DominantCoweight> out;
    for (std::size_t i = 0; i < key.size(); ++i) out.push_back(key[i].shifted(mu[i].parts().back()));
    return out;
}

}  // namespace

std::uint64_t StratumTable::total() const {
    std::uint64_t s = 0;
    for (const auto& [k, v] : entries) s += v;
    return s;
}

std::uint64_t StratumTable::at(const std::vector<DominantCoweight>& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? 0 : it->second;
}

std::uint64_t fiber_count(const CoweightTuple& mu, const DominantCoweight& lam, int q, const CountContext& ctx) {
    return stratify_fiber(mu, lam, q, ctx).total();
}

StratumTable stratify_fiber(const CoweightTuple& mu, const DominantCoweight& lam, int q, const CountContext& ctx) {
    const auto inst = normalize(mu, lam);
    StratumTable table;
    if (!dominance_leq(inst.lambda, inst.mu.total())) return table;
    TorsionModule m(inst.lambda, FiniteField::get(q));
    Budget budget(ctx.budget, label(mu, lam, q));
    for_each_chain(m, inst.mu, StepCondition::Dominated, budget, [&](const LatticeChain& chain) {
        for (std::size_t i = 0; i < chain.step_types.size(); ++i) {
            const auto& key = chain.step_types[i];
            if (!key.is_partition() || !dominance_leq(key, inst.mu[i]))
                throw ConsistencyError("stratum label " + key.to_string() + " is not a partition below " +
                                       inst.mu[i].to_string());
        }
        ++table.entries[original_key(chain.step_types, mu)];
    });
    return table;
}

StratumDegreeReport stratum_degree_check(const CoweightTuple& mu, const DominantCoweight& lam, CountContext& ctx,
                                         StratumSource source) {
    const auto inst = normalize(mu, lam);
    StratumDegreeReport report;
    if (!dominance_leq(inst.lambda, inst.mu.total())) return report;
    const auto keys = stratum_keys(inst.mu, inst.lambda);
    const auto max_points = static_cast<std::int64_t>(kSupportedFieldSizes.size());

    std::map<int, StratumTable> direct;  // q -> table, filled lazily
    for (const auto& key : keys) {
        StratumDegree sd;
        sd.key = original_key(key, mu);
        const CoweightTuple stratum(inst.mu.rank(), key);
        sd.bound = rho_pairing(stratum.total(), inst.lambda).integral();
        if (sd.bound + 1 > max_points)
            throw InvalidInput("stratum degree bound " + std::to_string(sd.bound) + " exceeds the supported fields");
        const auto points = std::min(sd.bound + 3, max_points);
        const auto fit_degree = std::max(sd.bound, points - 2);
        std::vector<Sample> samples;
        for (std::int64_t k = 0; k < points; ++k) {
            const int q = kSupportedFieldSizes[static_cast<std::size_t>(k)];
            Integer value;
            if (source == StratumSource::Recursive) {
                value = hecke_constant_eval(stratum, inst.lambda, q, EvalMethod::Recursive, ctx);
            } else {
                auto it = direct.find(q);
                if (it == direct.end()) it = direct.emplace(q, stratify_fiber(inst.mu, inst.lambda, q, ctx)).first;
                value = it->second.at(key);
            }
            samples.push_back({q, value});
        }
        sd.poly = interpolate_bounded(samples, static_cast<int>(fit_degree));
        sd.within_bound = sd.poly.degree() <= sd.bound;
        report.ok = report.ok && sd.within_bound;
        report.strata.push_back(std::move(sd));
    }
    return report;
}

TopCoefficientReport top_coefficient_check(const CoweightTuple& mu, const DominantCoweight& lam, CountContext& ctx) {
    const auto inst = normalize(mu, lam);
    TopCoefficientReport r;
    r.multiplicity = tensor_multiplicity(inst.mu, inst.lambda);
    if (!dominance_leq(inst.lambda, inst.mu.total())) {
        r.direct_sample_matches = r.degree_matches = r.coefficient_matches = r.open_matches = true;
        r.ok = r.multiplicity == 0;
        return r;
    }
    r.predicted_degree = rho_pairing(inst.mu.total(), inst.lambda).integral();
    const auto strata = stratum_degree_check(inst.mu, inst.lambda, ctx);
    r.fiber_poly = sum_polys(strata.strata);
    for (const auto& st : strata.strata)
        if (st.key == inst.mu.factors()) r.open_poly = st.poly;

    const auto d = static_cast<int>(r.predicted_degree);
    r.direct_sample_matches = r.fiber_poly.evaluate(2) == Integer(fiber_count(inst.mu, inst.lambda, 2, ctx));
    r.degree_matches = (r.multiplicity > 0) == (r.fiber_poly.degree() == d);
    r.coefficient_matches = r.multiplicity == 0 || r.fiber_poly.coefficient(d) == r.multiplicity;
    r.open_matches = r.open_poly.coefficient(d) == r.multiplicity;
    r.ok = r.direct_sample_matches && r.degree_matches && r.coefficient_matches && r.open_matches;
    return r;
}

FlagDatum::FlagDatum(std::vector<int> dims, FieldMatrix nilpotent) : dims_(std::move(dims)), t_(std::move(nilpotent)) {
    int sum = 0;
    for (int d : dims_) {
        if (d < 0) throw InvalidInput("flag dimensions must be nonnegative");
        sum += d;
    }
    if (sum != t_.dimension())
        throw InvalidInput("flag dimensions sum to " + std::to_string(sum) + ", space has dimension " +
                           std::to_string(t_.dimension()));
    FieldMatrix power = t_;
    for (int k = 0; k < t_.dimension() && !power.is_zero(); ++k) power = power * t_;
    if (!power.is_zero()) throw InvalidInput("flag operator is not nilpotent");
}

std::uint64_t spaltenstein_count(const FlagDatum& flag, Budget& budget) { return FlagWalker(flag, budget).run(); }

SsBijectionReport ss_bijection_check(const CoweightTuple& mu, const DominantCoweight& lam, int q,
                                     const CountContext& ctx) {
    std::vector<int> dims;
    for (const auto& f : mu.factors()) {
        int d = 0;
        for (int x : f.parts()) {
            if (x != 0 && x != 1) throw InvalidInput("factor " + f.to_string() + " is not of the form (1^d, 0^(n-d))");
            d += x;
        }
        dims.push_back(d);
    }
    if (!dominance_leq(lam, mu.total())) throw InvalidInput("lambda is not dominated by |mu|");
    TorsionModule m(lam, FiniteField::get(q));
    Budget budget(ctx.budget, "flags for " + label(mu, lam, q));
    SsBijectionReport r;
    r.spaltenstein = spaltenstein_count(FlagDatum(dims, m.t_matrix()), budget);
    r.fiber = fiber_count(mu, lam, q, ctx);
    r.agree = r.spaltenstein == r.fiber;
    return r;
}

MinusculeDegreeReport minuscule_degree_check(const CoweightTuple& mu, const DominantCoweight& lam,
                                             CountContext& ctx) {
    for (const auto& f : mu.factors())
        if (!is_minuscule(f)) throw InvalidInput("factor " + f.to_string() + " is not minuscule");
    const auto inst = normalize(mu, lam);
    if (!dominance_leq(inst.lambda, inst.mu.total())) throw InvalidInput("lambda is not dominated by |mu|");
    MinusculeDegreeReport r;
    r.predicted_degree = rho_pairing(inst.mu.total(), inst.lambda).integral();
    r.fiber_poly = sum_polys(stratum_degree_check(inst.mu, inst.lambda, ctx).strata);
    r.ok = !r.fiber_poly.is_zero() && r.fiber_poly.degree() == r.predicted_degree;
    return r;
}

}  // namespace hecke
