#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "hecke/errors.hpp"
#include "hecke/repring.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

SweepConfig config(int n, int max_total, int max_factors) {
    SweepConfig c;
    c.n = n;
    c.max_total = max_total;
    c.max_factors = max_factors;
    return c;
}

// Compositions of at most `total` into at most `factors` positive parts,
// each part weighted by its number of partitions with at most n rows.
std::size_t tuple_count(int n, int total, int factors) {
    if (factors == 0) return 1;
    std::size_t c = 1;
    for (int s = 1; s <= total; ++s) c += partitions(s, n).size() * tuple_count(n, total - s, factors - 1);
    return c;
}

}  // namespace

TEST_CASE("sweep tuple counts") {
    CHECK(sweep_tuples(config(2, 0, 3)).size() == 1);
    CHECK(sweep_tuples(config(2, 2, 2)).size() == 5);
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t <= 5; ++t)
            for (int r = 0; r <= 3; ++r) CHECK(sweep_tuples(config(n, t, r)).size() == tuple_count(n, t, r));
    const auto ts = sweep_tuples(config(3, 4, 3));
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
}

TEST_CASE("sweep instances") {
    const auto all = sweep_instances(config(2, 2, 2), false);
    CHECK(all.size() == 8);
    CHECK(sweep_instances(config(2, 2, 2), true).size() == 7);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& in : sweep_instances(config(3, 4, 3)))
        CHECK(dominance_leq(in.lambda, in.mu.total()));
}

TEST_CASE("suite names") {
    for (Suite s : all_suites()) CHECK(parse_suite(suite_name(s)) == s);
    CHECK(all_suites().size() == 10);
    CHECK_THROWS_AS(parse_suite("nope"), InvalidInput);
}

TEST_CASE("config settings") {
    SweepConfig c;
    c.set("n", "3");
    c.set(" max-total ", " 4");
    c.set("max_factors", "2");
    c.set("fields", "2, 3,9");
    c.set("budget", "1000");
    c.set("workers", "2");
    c.set("cache", "/tmp/x.jsonl");
    CHECK(c.n == 3);
    CHECK(c.max_total == 4);
    CHECK(c.max_factors == 2);
    CHECK(c.fields == std::vector<int>{2, 3, 9});
    CHECK(c.budget == 1000);
    CHECK(c.workers == 2);
    CHECK(c.cache_path == "/tmp/x.jsonl");
    CHECK_NOTHROW(c.validate());
    CHECK_THROWS_AS(c.set("n", "x"), InvalidInput);
    CHECK_THROWS_AS(c.set("colour", "red"), InvalidInput);
    for (auto [k, v] : std::vector<std::pair<std::string, std::string>>{
             {"n", "0"}, {"max-total", "-1"}, {"fields", "6"}, {"workers", "0"}, {"budget", "0"}}) {
        SweepConfig bad;
        bad.set(k, v);
        CHECK_THROWS_AS(bad.validate(), InvalidInput);
    }

    const auto path = std::filesystem::temp_directory_path() / "hecke_verify_config.txt";
    std::ofstream(path) << "# sweep\n\nn=3\nmax-total = 5\nfields=2,3\n";
    SweepConfig f;
    f.load_file(path);
    CHECK(f.n == 3);
    CHECK(f.max_total == 5);
    CHECK(f.fields == std::vector<int>{2, 3});
    std::ofstream(path) << "n 3\n";
    CHECK_THROWS_AS(f.load_file(path), InvalidInput);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(f.load_file(path), InvalidInput);
}

TEST_CASE("suite examples") {
    CountContext ctx;
    auto r = run_suite(Suite::Prv, config(2, 0, 2), ctx);
    CHECK(r.verdicts.size() == 1);
    CHECK(r.all_passed());

    r = run_suite(Suite::Klm, config(2, 2, 2), ctx);
    CHECK(r.all_passed());
    bool has_q_plus_one = false;
    for (const auto& v : r.verdicts) has_q_plus_one = has_q_plus_one || v.detail.find("poly=[1,1] ") == 0;
    CHECK(has_q_plus_one);

    r = run_suite(Suite::Hall, config(2, 4, 2), ctx);
    CHECK(r.verdicts.size() == sweep_instances(config(2, 4, 2)).size());
    CHECK(r.all_passed());
}

TEST_CASE("every suite passes on a small sweep") {
    CountContext ctx;
    for (Suite s : all_suites()) {
        CAPTURE(suite_name(s));
        const auto r = run_suite(s, config(3, 3, 3), ctx);
        CHECK(!r.verdicts.empty());
        for (const auto& v : r.verdicts) {
            CAPTURE(v.instance.to_string());
            CAPTURE(v.detail);
            CHECK(v.pass);
        }
    }
}

TEST_CASE("reports do not depend on the number of workers") {
    for (Suite s : {Suite::Klm, Suite::Strata, Suite::Semismall}) {
        CountContext a, b;
        auto one = config(2, 4, 3);
        auto many = one;
        many.workers = 3;
        const auto ra = run_suite(s, one, a);
        const auto rb = run_suite(s, many, b);
        REQUIRE(ra.verdicts.size() == rb.verdicts.size());
        for (std::size_t i = 0; i < ra.verdicts.size(); ++i) {
            CHECK(ra.verdicts[i].instance == rb.verdicts[i].instance);
            CHECK(ra.verdicts[i].pass == rb.verdicts[i].pass);
            CHECK(ra.verdicts[i].detail == rb.verdicts[i].detail);
        }
    }
}

TEST_CASE("budget exhaustion propagates") {
    CountContext ctx;
    ctx.budget = 5;
    auto cfg = config(3, 4, 2);
    CHECK_THROWS_AS(run_suite(Suite::Hall, cfg, ctx), BudgetExceeded);
}

TEST_CASE("sweep rows") {
    CountContext ctx;
    const auto rows = run_sweep(config(2, 2, 2), ctx);
    REQUIRE(rows.size() == 8);
    bool has_q_plus_one = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) CHECK(rows[i - 1].instance < rows[i].instance);
        CHECK(rows[i].leading_term);
        CHECK(rows[i].hall);
        CHECK(rows[i].multiplicity == tensor_multiplicity(rows[i].instance.mu, rows[i].instance.lambda));
        has_q_plus_one = has_q_plus_one || rows[i].poly == QPolynomial{1, 1};
    }
    CHECK(has_q_plus_one);
    CHECK(run_sweep(config(2, 0, 0), ctx).size() == 1);
    auto two = config(2, 3, 3);
    two.workers = 2;
    const auto a = run_sweep(config(2, 3, 3), ctx);
    CountContext fresh;
    const auto b = run_sweep(two, fresh);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance == b[i].instance);
        CHECK(a[i].poly == b[i].poly);
    }
}
