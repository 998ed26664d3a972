#include <doctest.h>

#include <random>

#include "hecke/errors.hpp"
#include "hecke/qpolynomial.hpp"

using namespace hecke;

TEST_CASE("basic arithmetic") {
    const QPolynomial a{1, 1};
    const QPolynomial b{-1, 0, 2};
    CHECK(a.degree() == 1);
    CHECK(QPolynomial{}.degree() == -1);
    CHECK(QPolynomial{0, 0}.is_zero());
    CHECK((a + b) == QPolynomial{0, 1, 2});
    CHECK((a - a).is_zero());
    CHECK((a * b) == QPolynomial{-1, -1, 2, 2});
    CHECK(a.evaluate(5) == 6);
    CHECK(b.coefficient(2) == 2);
    CHECK(b.coefficient(7) == 0);
    CHECK(QPolynomial{}.leading_coefficient() == 0);
    CHECK(a.to_string() == "[1,1]");
    CHECK(QPolynomial{}.to_string() == "[]");
}

TEST_CASE("product degree and leading coefficient") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        auto make = [&] {
            std::vector<Integer> c;
            const int d = deg(rng);
            for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
            int lead = 0;
            while (lead == 0) lead = coef(rng);
            c.emplace_back(lead);
            return QPolynomial(c);
        };
        const auto p = make();
        const auto q = make();
        const auto pq = p * q;
        CHECK(pq.degree() == p.degree() + q.degree());
        CHECK(pq.leading_coefficient() == p.leading_coefficient() * q.leading_coefficient());
        for (int x = -3; x <= 3; ++x) CHECK(pq.evaluate(x) == p.evaluate(x) * q.evaluate(x));
    }
}

TEST_CASE("exact evaluation with large values") {
    std::vector<Integer> c(81, 0);
    c[80] = 1;
    Integer want = 1;
    for (int i = 0; i < 80; ++i) want *= 13;
    CHECK(QPolynomial(c).evaluate(13) == want);
}

TEST_CASE("interpolation examples") {
    CHECK(interpolate_bounded({{2, 3}, {3, 4}}, 1) == QPolynomial{1, 1});
    CHECK(interpolate_bounded({{2, 1}, {3, 1}, {5, 1}}, 1) == QPolynomial{1});
    CHECK_THROWS_AS(interpolate_bounded({{2, 3}, {3, 4}, {5, 7}}, 1), InterpolationInconsistency);
}

TEST_CASE("interpolation rejects bad input") {
    CHECK_THROWS_AS(interpolate_bounded({{2, 3}}, 1), InvalidInput);
    CHECK_THROWS_AS(interpolate_bounded({{2, 3}, {2, 3}}, 1), InvalidInput);
    CHECK_THROWS_AS(interpolate_bounded({{1, 3}, {2, 3}}, 1), InvalidInput);
    // Through (2,0), (4,1) the line has slope 1/2.
    CHECK_THROWS_AS(interpolate_bounded({{2, 0}, {4, 1}}, 1), InterpolationInconsistency);
}

TEST_CASE("interpolation reproduces every point") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-20, 20);
    const std::vector<int> qs{2, 3, 4, 5, 7, 8, 9, 11, 13};
    for (int d = 0; d <= 7; ++d)
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Integer> c;
            for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
            const QPolynomial p(c);
            std::vector<Sample> pts;
            for (std::size_t k = 0; k < static_cast<std::size_t>(d) + 2; ++k) pts.push_back({qs[k], p.evaluate(qs[k])});
            const auto got = interpolate_bounded(pts, d);
            CHECK(got == p);
            for (const auto& s : pts) CHECK(got.evaluate(s.q) == s.value);
        }
}
