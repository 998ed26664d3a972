#include "hecke/repring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <string>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

// ---------------------------------------------------------------------------
// Littlewood-Richardson rule

class LrFiller {
   public:
    LrFiller(const std::vector<int>& outer, const std::vector<int>& inner, const std::vector<int>& content)
        : outer_(outer), inner_(inner), content_(content), used_(content.size() + 1, 0) {
        grid_.resize(outer.size());
        for (std::size_t i = 0; i < outer.size(); ++i) {
            grid_[i].assign(static_cast<std::size_t>(outer[i]), 0);
            // Reading order: rows top to bottom, each row right to left.
            for (int j = outer[i] - 1; j >= inner[i]; --j) cells_.emplace_back(i, j);
        }
    }

    std::uint64_t count() { return fill(0); }

   private:
    std::uint64_t fill(std::size_t k) {
        if (k == cells_.size()) return 1;
        const auto [i, j] = cells_[k];
        const auto ju = static_cast<std::size_t>(j);
        int hi = static_cast<int>(content_.size());
        if (ju + 1 < grid_[i].size()) hi = std::min(hi, grid_[i][ju + 1]);
        int lo = 1;
        if (i > 0 && j >= inner_[i - 1]) lo = grid_[i - 1][ju] + 1;
        std::uint64_t total = 0;
        for (int v = lo; v <= hi; ++v) {
            const auto vu = static_cast<std::size_t>(v);
            if (used_[vu] >= content_[vu - 1]) continue;
            if (v > 1 && used_[vu] + 1 > used_[vu - 1]) continue;
            ++used_[vu];
            grid_[i][ju] = v;
            total += fill(k + 1);
            grid_[i][ju] = 0;
            --used_[vu];
        }
        return total;
    }

    const std::vector<int>& outer_;
    const std::vector<int>& inner_;
    std::vector<int> content_;
    std::vector<int> used_;
    std::vector<std::vector<int>> grid_;
    std::vector<std::pair<std::size_t, int>> cells_;
};

using LrKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

std::mutex lr_memo_mutex;
std::map<LrKey, std::uint64_t>& lr_memo() {
    static std::map<LrKey, std::uint64_t> memo;
    return memo;
}

std::uint64_t lr_partitions(const std::vector<int>& mu, const std::vector<int>& nu, const std::vector<int>& lam) {
    for (std::size_t i = 0; i < lam.size(); ++i)
        if (mu[i] > lam[i]) return 0;
    std::vector<int> content;
    for (int x : nu)
        if (x > 0) content.push_back(x);
    LrKey key{mu, nu, lam};
    {
        std::lock_guard lock(lr_memo_mutex);
        auto it = lr_memo().find(key);
        if (it != lr_memo().end()) return it->second;
    }
    const std::uint64_t value = LrFiller(lam, mu, content).count();
    std::lock_guard lock(lr_memo_mutex);
    lr_memo().emplace(std::move(key), value);
    return value;
}

// ---------------------------------------------------------------------------
// Schur polynomials in n variables

using Monomial = std::vector<int>;
using SymPoly = std::map<Monomial, Integer>;

class OpBudget {
   public:
    explicit OpBudget(std::uint64_t limit) : limit_(limit) {}
    void charge(std::uint64_t n, const std::string& what) {
        used_ += n;
        if (used_ > limit_)
            throw BudgetExceeded(what + ": exceeded budget of " + std::to_string(limit_) + " operations");
    }

   private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

// Sum over semistandard tableaux of shape `shape` with entries 1..n.
SymPoly schur_polynomial(const std::vector<int>& shape, int n, OpBudget& budget) {
    SymPoly poly;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < static_cast<int>(shape.size()); ++i)
        for (int j = 0; j < shape[static_cast<std::size_t>(i)]; ++j) cells.emplace_back(i, j);
    std::vector<std::vector<int>> t(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) t[i].assign(static_cast<std::size_t>(shape[i]), 0);
    Monomial expo(static_cast<std::size_t>(n), 0);

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            budget.charge(1, "Schur polynomial expansion");
            poly[expo] += 1;
            return;
        }
        const auto [i, j] = cells[k];
        const auto iu = static_cast<std::size_t>(i), ju = static_cast<std::size_t>(j);
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[iu][ju - 1]);
        if (i > 0) lo = std::max(lo, t[iu - 1][ju] + 1);
        for (int v = lo; v <= n; ++v) {
            t[iu][ju] = v;
            ++expo[static_cast<std::size_t>(v - 1)];
            rec(k + 1);
            --expo[static_cast<std::size_t>(v - 1)];
        }
        t[iu][ju] = 0;
    };
    rec(0);
    return poly;
}

SymPoly multiply(const SymPoly& a, const SymPoly& b, OpBudget& budget) {
    SymPoly out;
    budget.charge(static_cast<std::uint64_t>(a.size()) * b.size(), "Schur product");
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// Search over candidate vectors per factor, depth first, honoring the order of
// each candidate list. `suffix_tops[k]` is mu_k + ... + mu_r.
std::optional<std::vector<Weight>> witness_search(const std::vector<std::vector<Weight>>& candidates,
                                                  const std::vector<DominantCoweight>& suffix_tops,
                                                  const DominantCoweight& lam) {
    const std::size_t r = candidates.size();
    const auto n = static_cast<std::size_t>(lam.rank());
    std::vector<Weight> chosen;
    Weight remaining = lam.parts();

    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        // What is left must be a weight of V_{mu_k + ... + mu_r}.
        if (!dominance_leq(DominantCoweight::sorted(remaining), suffix_tops[k])) return false;
        if (k == r) return true;
        for (const auto& c : candidates[k]) {
            for (std::size_t i = 0; i < n; ++i) remaining[i] -= c[i];
            chosen.push_back(c);
            if (rec(k + 1)) return true;
            chosen.pop_back();
            for (std::size_t i = 0; i < n; ++i) remaining[i] += c[i];
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return chosen;
}

std::vector<DominantCoweight> suffix_totals(const CoweightTuple& mu) {
    std::vector<DominantCoweight> out;
    for (std::size_t k = 0; k <= mu.size(); ++k) out.push_back(mu.suffix(k).total());
    return out;
}

// Distinct rearrangements of a dominant vector, lexicographically descending.
std::vector<Weight> orbit_descending(const DominantCoweight& mu) {
    std::vector<Weight> out;
    Weight w = mu.parts();
    do out.push_back(w);
    while (std::prev_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace

std::uint64_t lr_coefficient(const DominantCoweight& mu, const DominantCoweight& nu, const DominantCoweight& lam) {
    if (mu.rank() != nu.rank() || mu.rank() != lam.rank())
        throw InvalidInput("lr_coefficient: rank mismatch");
    const int a = -mu.parts().back(), b = -nu.parts().back();
    const DominantCoweight m = mu.shifted(a), v = nu.shifted(b), l = lam.shifted(a + b);
    if (!l.is_partition() || l.sum() != m.sum() + v.sum()) return 0;
    return lr_partitions(m.parts(), v.parts(), l.parts());
}

std::vector<MultiplicityResult> tensor_decomposition(const CoweightTuple& mu) {
    const NormalizedInstance norm = normalize(mu, DominantCoweight::zero(mu.rank()));
    const int n = mu.rank();
    std::map<DominantCoweight, Integer> current{{DominantCoweight::zero(n), Integer(1)}};
    DominantCoweight running = DominantCoweight::zero(n);
    for (const auto& factor : norm.mu.factors()) {
        running = CoweightTuple(n, {running, factor}).total();
        std::map<DominantCoweight, Integer> next;
        for (const auto& target : dominated_by(running)) {
            Integer m = 0;
            for (const auto& [nu, mult] : current) m += mult * lr_coefficient(nu, factor, target);
            if (m != 0) next.emplace(target, m);
        }
        current = std::move(next);
    }
    std::vector<MultiplicityResult> out;
    // Undo the normalizing shift.
    const int shift = norm.lambda.parts().front();
    for (auto& [lam, m] : current) out.push_back({lam.shifted(-shift), m});
    return out;
}

Integer tensor_multiplicity(const CoweightTuple& mu, const DominantCoweight& lam) {
    const NormalizedInstance norm = normalize(mu, lam);
    const DominantCoweight total = norm.mu.total();
    if (!dominance_leq(norm.lambda, total)) return 0;
    const int n = mu.rank();
    if (norm.mu.empty()) return norm.lambda.is_zero() ? 1 : 0;

    // dim V^lam_{(mu_1..mu_k)} = sum_nu lr(nu, mu_k, lam) dim V^nu_{(mu_1..mu_{k-1})}
    std::map<DominantCoweight, Integer> current{{DominantCoweight::zero(n), Integer(1)}};
    DominantCoweight running = DominantCoweight::zero(n);
    for (std::size_t k = 0; k < norm.mu.size(); ++k) {
        const auto& factor = norm.mu[k];
        running = CoweightTuple(n, {running, factor}).total();
        std::map<DominantCoweight, Integer> next;
        for (const auto& target : dominated_by(running)) {
            if (k + 1 == norm.mu.size() && target != norm.lambda) continue;
            Integer m = 0;
            for (const auto& [nu, mult] : current) m += mult * lr_coefficient(nu, factor, target);
            if (m != 0) next.emplace(target, m);
        }
        current = std::move(next);
    }
    auto it = current.find(norm.lambda);
    return it == current.end() ? Integer(0) : it->second;
}

Integer schur_product_oracle(const CoweightTuple& mu, const DominantCoweight& lam, std::uint64_t budget) {
    const NormalizedInstance norm = normalize(mu, lam);
    const int n = mu.rank();
    if (!norm.lambda.is_partition()) return 0;
    OpBudget ops(budget);

    SymPoly product{{Monomial(static_cast<std::size_t>(n), 0), Integer(1)}};
    for (const auto& factor : norm.mu.factors())
        product = multiply(product, schur_polynomial(factor.parts(), n, ops), ops);

    std::map<std::vector<int>, SymPoly> schur_cache;
    Integer answer = 0;
    while (!product.empty()) {
        const auto top = product.rbegin();
        const Monomial alpha = top->first;
        const Integer c = top->second;
        if (!std::is_sorted(alpha.begin(), alpha.end(), std::greater<>()))
            throw ConsistencyError("Schur oracle: leading monomial is not dominant");
        if (alpha == norm.lambda.parts()) answer = c;
        auto [it, inserted] = schur_cache.try_emplace(alpha);
        if (inserted) it->second = schur_polynomial(alpha, n, ops);
        ops.charge(it->second.size(), "Schur expansion");
        for (const auto& [m, coeff] : it->second) {
            auto& slot = product[m];
            slot -= c * coeff;
            if (slot == 0) product.erase(m);
        }
    }
    return answer;
}

bool rep_nonvanishing(const CoweightTuple& mu, const DominantCoweight& lam) {
    return tensor_multiplicity(mu, lam) > 0;
}

WeightSet weight_set(const DominantCoweight& mu) {
    WeightSet out;
    for (const auto& nu : dominated_by(mu)) {
        Weight w = nu.parts();
        std::sort(w.begin(), w.end());
        do out.insert(w);
        while (std::next_permutation(w.begin(), w.end()));
    }
    return out;
}

bool sumset_lemma_check(const CoweightTuple& mu, std::uint64_t budget) {
    OpBudget ops(budget);
    WeightSet acc{Weight(static_cast<std::size_t>(mu.rank()), 0)};
    for (const auto& factor : mu.factors()) {
        const WeightSet ws = weight_set(factor);
        ops.charge(static_cast<std::uint64_t>(acc.size()) * ws.size(), "weight sumset");
        WeightSet next;
        for (const auto& a : acc)
            for (const auto& b : ws) {
                Weight s(a.size());
                for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
                next.insert(std::move(s));
            }
        acc = std::move(next);
    }
    return acc == weight_set(mu.total());
}

std::optional<std::vector<Weight>> minuscule_witness(const CoweightTuple& mu, const DominantCoweight& lam) {
    if (lam.rank() != mu.rank()) throw InvalidInput("minuscule_witness: rank mismatch");
    std::vector<std::vector<Weight>> candidates;
    for (const auto& f : mu.factors()) {
        if (!is_minuscule(f)) throw InvalidInput("minuscule_witness: " + f.to_string() + " is not minuscule");
        candidates.push_back(orbit_descending(f));
    }
    if (!dominance_leq(lam, mu.total())) return std::nullopt;
    return witness_search(candidates, suffix_totals(mu), lam);
}

std::optional<PRVWitness> prv_witness(const CoweightTuple& mu, const DominantCoweight& lam) {
    if (lam.rank() != mu.rank()) throw InvalidInput("prv_witness: rank mismatch");
    if (!dominance_leq(lam, mu.total())) return std::nullopt;
    std::vector<std::vector<Weight>> candidates;
    for (const auto& f : mu.factors()) {
        const WeightSet ws = weight_set(f);
        candidates.emplace_back(ws.rbegin(), ws.rend());
    }
    auto found = witness_search(candidates, suffix_totals(mu), lam);
    if (!found) return std::nullopt;
    PRVWitness w;
    w.summands = std::move(*found);
    for (const auto& s : w.summands) w.mu_prime.push_back(DominantCoweight::sorted(s));
    if (tensor_multiplicity(CoweightTuple(mu.rank(), w.mu_prime), lam) < 1)
        throw ConsistencyError("PRV witness for " + mu.to_string() + " -> " + lam.to_string() +
                               " does not satisfy Rep(mu', lambda)");
    return w;
}

}  // namespace hecke
