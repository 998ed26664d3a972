#include "hecke/hallq.hpp"

#include <algorithm>

#include "hecke/chains.hpp"
#include "hecke/errors.hpp"
#include "hecke/repring.hpp"

namespace hecke {

namespace {

bool contained_in(const DominantCoweight& a, const DominantCoweight& b) {
    for (int i = 0; i < a.rank(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string instance_label(const CoweightTuple& mu, const DominantCoweight& lam, int q) {
    return "c^(" + lam.to_string() + ")_" + mu.to_string() + " at q=" + std::to_string(q);
}

// Computes the Hall table of M_lam and stores every (cotype, type) pair that
// could be nonzero, zeros included, so later lookups never miss.
void fill_hall_cache(const DominantCoweight& lam, int q, CountContext& ctx) {
    const FiniteField& field = FiniteField::get(q);
    Budget budget(ctx.budget, "Hall table of M_(" + lam.to_string() + ") over F_" + std::to_string(q));
    const HallTable table = hall_table(lam, field, budget);
    const int n = lam.rank();
    for (int k = 0; k <= lam.sum(); ++k) {
        for (const auto& cotype : partitions(k, n)) {
            if (!contained_in(cotype, lam)) continue;
            for (const auto& type : partitions(lam.sum() - k, n)) {
                if (!contained_in(type, lam)) continue;
                auto it = table.find({cotype, type});
                const Integer value = it == table.end() ? Integer(0) : Integer(it->second);
                ctx.cache->put_count(CoweightTuple(n, {cotype, type}), lam, q, value);
            }
        }
    }
}

Integer count_direct(const CoweightTuple& mu, const DominantCoweight& lam, int q, const CountContext& ctx) {
    TorsionModule m(lam, FiniteField::get(q));
    Budget budget(ctx.budget, instance_label(mu, lam, q));
    Integer count = 0;
    for_each_chain(m, mu, StepCondition::Equal, budget, [&](const LatticeChain&) { ++count; });
    return count;
}

// mu and lam are partitions with lam <= |mu|.
Integer count_recursive(const CoweightTuple& mu, const DominantCoweight& lam, int q, CountContext& ctx) {
    if (mu.empty()) return lam.is_zero() ? 1 : 0;
    if (mu.size() == 1) return lam == mu[0] ? 1 : 0;
    if (mu.size() == 2) return hall_number(lam, mu[0], mu[1], q, ctx);
    if (auto hit = ctx.cache->count(mu, lam, q)) return *hit;

    const CoweightTuple rest = mu.suffix(1);
    const DominantCoweight rest_total = rest.total();
    Integer sum = 0;
    for (const auto& nu : partitions(lam.sum() - mu[0].sum(), lam.rank())) {
        if (!contained_in(nu, lam) || !dominance_leq(nu, rest_total)) continue;
        const Integer g = hall_number(lam, mu[0], nu, q, ctx);
        if (g == 0) continue;
        sum += g * count_recursive(rest, nu, q, ctx);
    }
    ctx.cache->put_count(mu, lam, q, sum);
    return sum;
}

}  // namespace

HallTable hall_table(const DominantCoweight& lam, const FiniteField& field, Budget& budget) {
    TorsionModule m(lam, field);
    const Submodule top = Submodule::whole(m);
    HallTable table;
    for_each_submodule(m, SubmoduleQuery{}, budget,
                       [&](const Submodule& n) { ++table[{quotient_type(top, n), module_type(n)}]; });
    return table;
}

Integer hall_number(const DominantCoweight& lam, const DominantCoweight& mu, const DominantCoweight& nu, int q,
                    CountContext& ctx) {
    if (mu.rank() != lam.rank() || nu.rank() != lam.rank()) throw InvalidInput("Hall number: rank mismatch");
    for (const auto* p : {&lam, &mu, &nu})
        if (!p->is_partition()) throw InvalidInput("Hall number needs partitions, got " + p->to_string());
    if (!is_supported_field_size(q)) throw InvalidInput("unsupported field size q=" + std::to_string(q));
    if (mu.sum() + nu.sum() != lam.sum() || !contained_in(mu, lam) || !contained_in(nu, lam)) return 0;

    const CoweightTuple key(lam.rank(), {mu, nu});
    if (auto hit = ctx.cache->count(key, lam, q)) return *hit;
    fill_hall_cache(lam, q, ctx);
    if (auto hit = ctx.cache->count(key, lam, q)) return *hit;
    throw ConsistencyError("Hall table of M_(" + lam.to_string() + ") is missing an entry");
}

Integer hecke_constant_eval(const CoweightTuple& mu, const DominantCoweight& lam, int q, EvalMethod method,
                            CountContext& ctx) {
    if (!is_supported_field_size(q)) throw InvalidInput("unsupported field size q=" + std::to_string(q));
    const auto inst = normalize(mu, lam);
    if (!dominance_leq(inst.lambda, inst.mu.total())) return 0;
    switch (method) {
        case EvalMethod::Direct:
            return count_direct(inst.mu, inst.lambda, q, ctx);
        case EvalMethod::Recursive:
            return count_recursive(inst.mu, inst.lambda, q, ctx);
        case EvalMethod::Both: {
            const Integer direct = count_direct(inst.mu, inst.lambda, q, ctx);
            const Integer recursive = count_recursive(inst.mu, inst.lambda, q, ctx);
            if (direct != recursive)
                throw MethodDisagreement(instance_label(mu, lam, q) + ": direct " + direct.str() +
                                         " != recursive " + recursive.str());
            return direct;
        }
    }
    throw InvalidInput("unknown evaluation method");
}

HeckePolynomial hecke_constant_poly(const CoweightTuple& mu, const DominantCoweight& lam, CountContext& ctx,
                                    EvalMethod method) {
    const auto inst = normalize(mu, lam);
    HeckePolynomial out;
    const DominantCoweight total = inst.mu.total();
    if (!dominance_leq(inst.lambda, total)) return out;

    out.degree_bound = rho_pairing(total, inst.lambda).integral();
    const auto max_points = static_cast<std::int64_t>(kSupportedFieldSizes.size());
    if (out.degree_bound + 1 > max_points)
        throw InvalidInput("degree bound " + std::to_string(out.degree_bound) + " needs more than " +
                           std::to_string(max_points) + " field sizes");
    const auto points = std::min(out.degree_bound + 2, max_points);
    for (std::int64_t k = 0; k < points; ++k) {
        const int q = kSupportedFieldSizes[static_cast<std::size_t>(k)];
        out.samples.push_back({q, hecke_constant_eval(inst.mu, inst.lambda, q, method, ctx)});
    }
    out.poly = interpolate_bounded(out.samples, static_cast<int>(out.degree_bound));

    if (auto cached = ctx.cache->poly(inst.mu, inst.lambda)) {
        if (!(*cached == out.poly))
            throw ConsistencyError("cached polynomial " + cached->to_string() + " for " +
                                   instance_label(mu, lam, 0) + " differs from recomputed " + out.poly.to_string());
    } else {
        ctx.cache->put_poly(inst.mu, inst.lambda, out.poly);
    }
    return out;
}

bool hecke_nonvanishing(const CoweightTuple& mu, const DominantCoweight& lam, CountContext& ctx) {
    return hecke_constant_eval(mu, lam, 2, EvalMethod::Recursive, ctx) != 0;
}

bool LeadingTermReport::consistent() const {
    if (predicted_coefficient == 0) return poly.is_zero() || degree < predicted_degree;
    return degree == predicted_degree && leading_coefficient == predicted_coefficient;
}

LeadingTermReport leading_term_report(const CoweightTuple& mu, const DominantCoweight& lam, CountContext& ctx) {
    LeadingTermReport r;
    const HeckePolynomial hp = hecke_constant_poly(mu, lam, ctx);
    r.poly = hp.poly;
    r.degree = hp.poly.degree();
    r.leading_coefficient = hp.poly.leading_coefficient();
    r.predicted_degree = hp.degree_bound;
    r.predicted_coefficient = tensor_multiplicity(mu, lam);
    return r;
}

}  // namespace hecke
