#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "hecke/errors.hpp"
#include "hecke/weights.hpp"

using namespace hecke;

namespace {

DominantCoweight dc(std::vector<int> v) { return DominantCoweight(std::move(v)); }

// b - a as a nonnegative combination of simple coroots e_i - e_{i+1}, by search.
bool dominance_by_search(const DominantCoweight& a, const DominantCoweight& b) {
    const int n = a.rank();
    const int limit = 12;
    std::vector<int> c(static_cast<std::size_t>(std::max(0, n - 1)), 0);
    while (true) {
        Weight w = a.parts();
        for (int i = 0; i + 1 < n; ++i) {
            w[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)];
            w[static_cast<std::size_t>(i + 1)] -= c[static_cast<std::size_t>(i)];
        }
        if (w == b.parts()) return true;
        std::size_t j = 0;
        for (; j < c.size(); ++j) {
            if (++c[j] <= limit) break;
            c[j] = 0;
        }
        if (j == c.size()) return false;
    }
}

// Twice the pairing with half the sum of positive roots e_i - e_j, i < j.
std::int64_t twice_rho_by_roots(const Weight& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) s += v[i] - v[j];
    return s;
}

// Semistandard tableaux of partition shape with entries in 1..n.
long count_ssyt(const std::vector<int>& shape, int n) {
    std::vector<std::vector<int>> t;
    for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(static_cast<int>(r), static_cast<int>(c));
    std::function<long(std::size_t)> fill = [&](std::size_t k) -> long {
        if (k == cells.size()) return 1;
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        long total = 0;
        for (int v = lo; v <= n; ++v) {
            t[r][c] = v;
            total += fill(k + 1);
        }
        return total;
    };
    return fill(0);
}

std::vector<DominantCoweight> brute_partitions(int total, int rank) {
    std::vector<DominantCoweight> out;
    std::vector<int> v(static_cast<std::size_t>(rank), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == rank) {
            int s = 0;
            for (int x : v) s += x;
            if (s == total && std::is_sorted(v.rbegin(), v.rend())) out.push_back(dc(v));
            return;
        }
        for (int x = 0; x <= total; ++x) {
            v[static_cast<std::size_t>(i)] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<DominantCoweight> all_partitions_upto(int max_total, int rank) {
    std::vector<DominantCoweight> out;
    for (int s = 0; s <= max_total; ++s)
        for (auto& p : partitions(s, rank)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("construction and parsing") {
    CHECK(DominantCoweight::parse("2,1,0").parts() == std::vector<int>{2, 1, 0});
    CHECK(DominantCoweight::parse(" 1, -1 ", 2).parts() == std::vector<int>{1, -1});
    CHECK_THROWS_AS(DominantCoweight::parse("0,1"), InvalidInput);
    CHECK_THROWS_AS(DominantCoweight::parse("1,0", 3), InvalidInput);
    CHECK_THROWS_AS(DominantCoweight::parse("a,b"), InvalidInput);
    CHECK_THROWS_AS(DominantCoweight(std::vector<int>{}), InvalidInput);
    CHECK(DominantCoweight::sorted({0, 3, 1}).parts() == std::vector<int>{3, 1, 0});
    CHECK(dc({2, 1, 0}).to_string() == "2,1,0");
    CHECK(DominantCoweight::zero(3).is_zero());
    CHECK(dc({1, -1}).shifted(1).parts() == std::vector<int>{2, 0});
}

TEST_CASE("dominance examples") {
    CHECK(dominance_leq(dc({1, 1}), dc({2, 0})));
    CHECK_FALSE(dominance_leq(dc({2, 0}), dc({1, 1})));
    CHECK(dominance_leq(dc({2, 1, 0}), dc({2, 1, 0})));
    CHECK_FALSE(dominance_leq(dc({1, 0}), dc({2, 0})));
    CHECK_THROWS_AS(dominance_leq(dc({1, 0}), dc({1, 0, 0})), InvalidInput);
}

TEST_CASE("dominance agrees with the simple-coroot definition and is a partial order") {
    for (int n = 1; n <= 3; ++n)
        for (int s = 0; s <= 6; ++s) {
            const auto ps = partitions(s, n);
            for (const auto& a : ps)
                for (const auto& b : ps) {
                    CHECK(dominance_leq(a, b) == dominance_by_search(a, b));
                    if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                    for (const auto& c : ps)
                        if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
                }
            for (const auto& a : ps) CHECK(dominance_leq(a, a));
        }
}

TEST_CASE("rho pairing examples") {
    CHECK(rho_pairing(Weight{1, -1}).twice == 2);
    CHECK(rho_pairing(Weight{2, 0, -2}).twice == 8);
    CHECK(rho_pairing(Weight{0, 0}).twice == 0);
    CHECK(rho_pairing(Weight{1, 0}).twice == 1);
    CHECK_FALSE(rho_pairing(Weight{1, 0}).is_integral());
    CHECK_THROWS_AS(rho_pairing(Weight{1, 0}).integral(), ConsistencyError);
    CHECK(rho_pairing(Weight{1, 0}).to_string() == "1/2");
}

TEST_CASE("rho pairing equals half the sum of positive roots") {
    for (int n = 1; n <= 4; ++n) {
        Weight v(static_cast<std::size_t>(n), 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                CHECK(rho_pairing(v).twice == twice_rho_by_roots(v));
                return;
            }
            for (int x = -2; x <= 2; ++x) {
                v[static_cast<std::size_t>(i)] = x;
                rec(i + 1);
            }
        };
        rec(0);
    }
}

TEST_CASE("rho pairing of a dominance gap is a nonnegative integer") {
    for (int n = 1; n <= 3; ++n)
        for (int s = 0; s <= 6; ++s)
            for (const auto& a : partitions(s, n))
                for (const auto& b : partitions(s, n))
                    if (dominance_leq(a, b)) {
                        const auto r = rho_pairing(b, a);
                        CHECK(r.is_integral());
                        CHECK(r.integral() >= 0);
                    }
}

TEST_CASE("minuscule") {
    CHECK(is_minuscule(dc({1, 1, 1})));
    CHECK(is_minuscule(dc({2, 1})));
    CHECK_FALSE(is_minuscule(dc({2, 0})));
    CHECK(is_minuscule(dc({0, -1, -1})));
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : all_partitions_upto(6, n))
            if (is_minuscule(mu)) {
                const auto below = dominated_by(mu);
                REQUIRE(below.size() == 1);
                CHECK(below.front() == mu);
            }
}

TEST_CASE("n statistic") {
    CHECK(n_stat(dc({5})) == 0);
    CHECK(n_stat(dc({1, 1})) == 1);
    CHECK(n_stat(dc({3, 2, 1})) == 4);
    CHECK_THROWS_AS(n_stat(dc({1, -1})), InvalidInput);
}

TEST_CASE("n statistic and rho pairing identity") {
    for (int n = 1; n <= 3; ++n)
        for (int s = 0; s <= 6; ++s)
            for (const auto& lam : partitions(s, n))
                for (int k = 0; k <= s; ++k)
                    for (const auto& mu : partitions(k, n))
                        for (const auto& nu : partitions(s - k, n)) {
                            Weight v(static_cast<std::size_t>(n));
                            for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = mu[i] + nu[i] - lam[i];
                            CHECK(2 * (n_stat(lam) - n_stat(mu) - n_stat(nu)) == rho_pairing(v).twice);
                        }
}

TEST_CASE("Weyl dimension") {
    CHECK(weyl_dimension(dc({1, 0})) == 2);
    CHECK(weyl_dimension(dc({1, 1})) == 1);
    CHECK(weyl_dimension(dc({2, 1, 0})) == 8);
    CHECK(weyl_dimension(dc({0, -1, -1})) == 3);
}

TEST_CASE("Weyl dimension counts semistandard tableaux") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : all_partitions_upto(6, n))
            CHECK(weyl_dimension(lam) == Integer(count_ssyt(lam.parts(), n)));
}

TEST_CASE("partitions") {
    const auto p = partitions(2, 2);
    REQUIRE(p.size() == 2);
    CHECK(p[0] == dc({2, 0}));
    CHECK(p[1] == dc({1, 1}));
    CHECK(partitions(0, 3) == std::vector<DominantCoweight>{dc({0, 0, 0})});
    for (int n = 1; n <= 4; ++n)
        for (int s = 0; s <= 7; ++s) {
            auto got = partitions(s, n);
            auto want = brute_partitions(s, n);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
}

TEST_CASE("dominated_by lists exactly the dominant coweights below") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& top : all_partitions_upto(6, n)) {
            const auto got = dominated_by(top);
            std::set<DominantCoweight> seen(got.begin(), got.end());
            CHECK(seen.size() == got.size());
            std::set<DominantCoweight> want;
            for (const auto& p : partitions(top.sum(), n))
                if (dominance_by_search(p, top)) want.insert(p);
            CHECK(seen == want);
            CHECK(std::is_sorted(got.rbegin(), got.rend()));
        }
    // Non-partition tops are handled by shifting.
    const auto neg = dominated_by(dc({1, -1}));
    CHECK(neg == std::vector<DominantCoweight>{dc({1, -1}), dc({0, 0})});
}

TEST_CASE("tuples and normalization") {
    CoweightTuple mu(2, {dc({1, -1}), dc({0, -2})});
    CHECK(mu.total() == dc({1, -3}));
    CHECK(mu.suffix(1).size() == 1);
    CHECK(mu.prefix(1)[0] == dc({1, -1}));
    CHECK(CoweightTuple(3, {}).total() == DominantCoweight::zero(3));

    const auto inst = normalize(mu, dc({0, -2}));
    CHECK(inst.mu[0] == dc({2, 0}));
    CHECK(inst.mu[1] == dc({2, 0}));
    CHECK(inst.lambda == dc({3, 1}));
    CHECK_THROWS_AS(normalize(mu, dc({0, 0, 0})), InvalidInput);
    CHECK_THROWS_AS(CoweightTuple(2, {dc({1, 0, 0})}), InvalidInput);
}
