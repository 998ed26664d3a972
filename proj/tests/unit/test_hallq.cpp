#include <doctest.h>

#include "brute_module.hpp"
#include "hecke/errors.hpp"
#include "hecke/hallq.hpp"
#include "hecke/repring.hpp"

using namespace hecke;

namespace {

DominantCoweight dc(std::vector<int> v) { return DominantCoweight(std::move(v)); }

CoweightTuple tup(int n, std::vector<std::vector<int>> fs) {
    std::vector<DominantCoweight> out;
    for (auto& f : fs) out.push_back(dc(std::move(f)));
    return CoweightTuple(n, std::move(out));
}

std::vector<CoweightTuple> small_tuples(int n, int max_total, int max_factors) {
    std::vector<CoweightTuple> out;
    std::vector<DominantCoweight> cur;
    auto rec = [&](auto&& self, int left) -> void {
        out.emplace_back(n, cur);
        if (static_cast<int>(cur.size()) == max_factors) return;
        for (int s = 1; s <= left; ++s)
            for (const auto& p : partitions(s, n)) {
                cur.push_back(p);
                self(self, left - s);
                cur.pop_back();
            }
    };
    rec(rec, max_total);
    return out;
}

}  // namespace

TEST_CASE("Hall number examples") {
    CountContext ctx;
    CHECK(hall_number(dc({1, 1}), dc({1, 0}), dc({1, 0}), 2, ctx) == 3);
    for (int q : kSupportedFieldSizes) CHECK(hall_number(dc({2}), dc({1}), dc({1}), q, ctx) == 1);
    CHECK(hall_number(dc({2, 1}), dc({1, 0}), dc({1, 0}), 2, ctx) == 0);
    CHECK(hall_number(dc({2, 1}), dc({3, 0}), dc({0, 0}), 2, ctx) == 0);
    CHECK_THROWS_AS(hall_number(dc({1, 1}), dc({1, 0}), dc({1, 0}), 6, ctx), InvalidInput);
    CHECK_THROWS_AS(hall_number(dc({1, 1}), dc({1, -1}), dc({1, 0}), 2, ctx), InvalidInput);
}

TEST_CASE("Hall tables match the set-level model") {
    for (int p : {2, 3})
        for (int rank = 1; rank <= 3; ++rank)
            for (int s = 0; s <= (p == 2 ? 5 : 4); ++s)
                for (const auto& lam : partitions(s, rank)) {
                    CAPTURE(p);
                    CAPTURE(lam.to_string());
                    Budget budget;
                    const auto got = hall_table(lam, FiniteField::get(p), budget);
                    const auto want = brute::Module(lam.parts(), p).hall_table();
                    CHECK(got == want);
                }
}

TEST_CASE("Hall numbers sum to the number of submodules") {
    CountContext ctx;
    for (int rank = 1; rank <= 3; ++rank)
        for (int s = 0; s <= 5; ++s)
            for (const auto& lam : partitions(s, rank)) {
                Budget budget;
                const auto all = enumerate_submodules(TorsionModule(lam, FiniteField::get(2)), std::nullopt, budget);
                Integer sum = 0;
                for (int k = 0; k <= s; ++k)
                    for (const auto& mu : partitions(k, rank))
                        for (const auto& nu : partitions(s - k, rank)) sum += hall_number(lam, mu, nu, 2, ctx);
                CHECK(sum == Integer(all.size()));
            }
}

TEST_CASE("structure constant examples") {
    CountContext ctx;
    for (auto method : {EvalMethod::Direct, EvalMethod::Recursive, EvalMethod::Both}) {
        CHECK(hecke_constant_eval(tup(2, {{1, 0}, {1, 0}}), dc({1, 1}), 2, method, ctx) == 3);
        CHECK(hecke_constant_eval(tup(2, {{1, 0}, {1, 0}}), dc({2, 0}), 3, method, ctx) == 1);
        CHECK(hecke_constant_eval(tup(3, {{2, 1, 0}}), dc({2, 1, 0}), 5, method, ctx) == 1);
        CHECK(hecke_constant_eval(tup(2, {{1, 0}, {1, 0}}), dc({3, -1}), 2, method, ctx) == 0);
        CHECK(hecke_constant_eval(tup(2, {}), dc({0, 0}), 2, method, ctx) == 1);
    }
    CHECK_THROWS_AS(hecke_constant_eval(tup(2, {{1, 0}}), dc({1, 0}), 10, EvalMethod::Both, ctx), InvalidInput);
}

TEST_CASE("direct and recursive evaluations agree") {
    CountContext ctx;
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : small_tuples(n, 5, 3))
            for (const auto& lam : dominated_by(mu.total()))
                for (int q : {2, 3}) {
                    CAPTURE(mu.to_string());
                    CAPTURE(lam.to_string());
                    const Integer d = hecke_constant_eval(mu, lam, q, EvalMethod::Direct, ctx);
                    const Integer r = hecke_constant_eval(mu, lam, q, EvalMethod::Recursive, ctx);
                    CHECK(d == r);
                }
}

TEST_CASE("central shifts leave structure constants unchanged") {
    CountContext ctx;
    for (const auto& mu : small_tuples(2, 4, 3))
        for (const auto& lam : dominated_by(mu.total())) {
            std::vector<DominantCoweight> shifted;
            int total_shift = 0;
            for (std::size_t i = 0; i < mu.size(); ++i) {
                const int c = static_cast<int>(i % 3) - 1;
                shifted.push_back(mu[i].shifted(c));
                total_shift += c;
            }
            const CoweightTuple smu(2, shifted);
            const auto slam = lam.shifted(total_shift);
            CHECK(hecke_constant_eval(mu, lam, 3, EvalMethod::Direct, ctx) ==
                  hecke_constant_eval(smu, slam, 3, EvalMethod::Both, ctx));
        }
}

TEST_CASE("polynomial examples") {
    CountContext ctx;
    auto hp = hecke_constant_poly(tup(2, {{1, 0}, {1, 0}}), dc({1, 1}), ctx);
    CHECK(hp.poly == QPolynomial{1, 1});
    CHECK(hp.degree_bound == 1);
    REQUIRE(hp.samples.size() == 3);
    CHECK(hp.samples[0].value == 3);
    CHECK(hp.samples[1].value == 4);
    CHECK(hecke_constant_poly(tup(2, {{1, 0}, {1, 0}}), dc({2, 0}), ctx).poly == QPolynomial{1});
    CHECK(hecke_constant_poly(tup(3, {{2, 1, 0}}), dc({2, 1, 0}), ctx).poly == QPolynomial{1});
    // Hall polynomial of (2) over (1),(1) is 1 for every q.
    CHECK(hecke_constant_poly(tup(1, {{1}, {1}}), dc({2}), ctx).poly == QPolynomial{1});
    const auto zero = hecke_constant_poly(tup(2, {{1, 1}}), dc({2, 0}), ctx);
    CHECK(zero.poly.is_zero());
    CHECK(zero.samples.empty());
    CHECK_THROWS_AS(hecke_constant_poly(tup(3, {{5, 0, 0}, {5, 0, 0}}), dc({4, 3, 3}), ctx), InvalidInput);
}

TEST_CASE("nonvanishing") {
    CountContext ctx;
    CHECK(hecke_nonvanishing(tup(2, {{1, 0}, {1, 0}}), dc({1, 1}), ctx));
    CHECK_FALSE(hecke_nonvanishing(tup(2, {{1, 1}}), dc({2, 0}), ctx));
    for (const auto& mu : small_tuples(3, 5, 5)) {
        bool minuscule = true;
        for (const auto& f : mu.factors()) minuscule = minuscule && is_minuscule(f);
        if (!minuscule) continue;
        for (const auto& lam : dominated_by(mu.total())) CHECK(hecke_nonvanishing(mu, lam, ctx));
    }
}

TEST_CASE("leading term report examples") {
    CountContext ctx;
    auto r = leading_term_report(tup(2, {{1, 0}, {1, 0}}), dc({1, 1}), ctx);
    CHECK(r.degree == 1);
    CHECK(r.leading_coefficient == 1);
    CHECK(r.predicted_degree == 1);
    CHECK(r.predicted_coefficient == 1);
    CHECK(r.consistent());
    r = leading_term_report(tup(2, {{1, 0}, {1, 0}}), dc({2, 0}), ctx);
    CHECK(r.degree == 0);
    CHECK(r.leading_coefficient == 1);
    CHECK(r.predicted_degree == 0);
    CHECK(r.predicted_coefficient == 1);
    const auto mu = tup(3, {{2, 1, 0}, {1, 1, 0}});
    r = leading_term_report(mu, mu.total(), ctx);
    CHECK(r.degree == 0);
    CHECK(r.leading_coefficient == 1);
    CHECK(r.predicted_degree == 0);
    CHECK(r.predicted_coefficient == 1);
    r = leading_term_report(tup(3, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}), dc({2, 1, 0}), ctx);
    CHECK(r.degree == 1);
    CHECK(r.leading_coefficient == 2);
    CHECK(r.consistent());
}

TEST_CASE("degree bound and leading term across a sweep") {
    CountContext ctx;
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : small_tuples(n, 5, 3))
            for (const auto& lam : dominated_by(mu.total())) {
                const auto r = leading_term_report(mu, lam, ctx);
                CHECK(r.degree <= r.predicted_degree);
                CHECK(r.consistent());
            }
}

TEST_CASE("Hall polynomial degree identity") {
    CountContext ctx;
    for (int n = 1; n <= 3; ++n)
        for (int s = 0; s <= 5; ++s)
            for (const auto& lam : partitions(s, n))
                for (int k = 0; k <= s; ++k)
                    for (const auto& mu : partitions(k, n))
                        for (const auto& nu : partitions(s - k, n)) {
                            if (!dominance_leq(lam, CoweightTuple(n, {mu, nu}).total())) continue;
                            const auto hp = hecke_constant_poly(CoweightTuple(n, {mu, nu}), lam, ctx);
                            const auto bound = n_stat(lam) - n_stat(mu) - n_stat(nu);
                            const auto lr = lr_coefficient(mu, nu, lam);
                            CHECK(hp.poly.degree() <= bound);
                            CHECK((hp.poly.degree() == bound) == (lr > 0));
                            if (lr > 0) CHECK(hp.poly.leading_coefficient() == Integer(lr));
                        }
}

TEST_CASE("nonvanishing does not depend on q") {
    CountContext ctx;
    for (const auto& mu : small_tuples(3, 4, 3))
        for (const auto& lam : dominated_by(mu.total())) {
            const bool at2 = hecke_constant_eval(mu, lam, 2, EvalMethod::Recursive, ctx) > 0;
            for (int q : kSupportedFieldSizes)
                CHECK((hecke_constant_eval(mu, lam, q, EvalMethod::Recursive, ctx) > 0) == at2);
            CHECK(at2 == rep_nonvanishing(mu, lam));
        }
}

TEST_CASE("recursive evaluation reads through the cache") {
    CountContext ctx;
    const auto lam = dc({1, 1});
    // A wrong entry planted before any computation is returned as-is...
    ctx.cache->put_count(tup(2, {{1, 0}, {1, 0}}), lam, 2, 5);
    CHECK(hecke_constant_eval(tup(2, {{1, 0}, {1, 0}}), lam, 2, EvalMethod::Recursive, ctx) == 5);
    // ...and caught by comparing against direct enumeration.
    CHECK_THROWS_AS(hecke_constant_eval(tup(2, {{1, 0}, {1, 0}}), lam, 2, EvalMethod::Both, ctx),
                    MethodDisagreement);
    // A conflicting polynomial record is reported.
    CountContext fresh;
    fresh.cache->put_poly(tup(2, {{1, 0}, {1, 0}}), lam, QPolynomial{1, 2});
    CHECK_THROWS_AS(hecke_constant_poly(tup(2, {{1, 0}, {1, 0}}), lam, fresh), ConsistencyError);
}

TEST_CASE("per-task budget") {
    CountContext ctx;
    ctx.budget = 20;
    CHECK_THROWS_AS(hecke_constant_eval(tup(3, {{2, 0, 0}, {2, 0, 0}, {2, 0, 0}}), dc({2, 2, 2}), 3,
                                        EvalMethod::Direct, ctx),
                    BudgetExceeded);
}
