#include <doctest.h>

#include <random>

#include "npoint/series.hpp"
#include "test_util.hpp"

using namespace npoint;
using testutil::make_series;
using testutil::mono;

TEST_SUITE_BEGIN("series");

TEST_CASE("rational helpers") {
    CHECK(rational_to_string(Rational(1, 24)) == "1/24");
    CHECK(rational_to_string(Rational(-3)) == "-3");
    CHECK(parse_rational("1/1152") == Rational(1, 1152));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(factorial(5) == 120);
    CHECK(odd_double_factorial(-1) == 1);
    CHECK(odd_double_factorial(9) == 945);
    CHECK_THROWS_AS(odd_double_factorial(4), std::invalid_argument);
}

TEST_CASE("series_mul basic products") {
    // (1 + a_1)(1 - a_1) at cap 2 is the difference of squares.
    auto p = make_series(1, 2, {{{0}, {0}, 1}, {{1}, {0}, 1}});
    auto q = make_series(1, 2, {{{0}, {0}, 1}, {{1}, {0}, -1}});
    auto pq = series_mul(p, q, 2);
    CHECK(pq.coefficient(mono({0}, {0})) == 1);
    CHECK(pq.coefficient(mono({1}, {0})) == 0);
    CHECK(pq.coefficient(mono({2}, {0})) == -1);

    // (1 + a_1)^2 at cap 1 drops the square.
    auto p2 = series_mul(p, p, 1);
    CHECK(p2.coefficient(mono({0}, {0})) == 1);
    CHECK(p2.coefficient(mono({1}, {0})) == 2);
    CHECK(p2.coefficient(mono({2}, {0})) == 0);
}

TEST_CASE("series_exp expansions") {
    // exp(x_1^3 / 24) through degree 6.
    auto cube = make_series(1, 6, {{{0}, {3}, Rational(1, 24)}});
    auto e = series_exp(cube, 6);
    CHECK(e.constant_term() == 1);
    CHECK(e.coefficient(mono({0}, {3})) == Rational(1, 24));
    CHECK(e.coefficient(mono({0}, {6})) == Rational(1, 1152));

    CHECK(series_exp(TruncatedSeries(1, 4), 4).constant_term() == 1);  // exp(0) = 1

    // exp((x_1+x_2)^3/24) at cap 3: the binomial cube over 24.
    TruncatedSeries s = TruncatedSeries::sum_of_x(2, 3);
    TruncatedSeries cube2 = series_mul(series_mul(s, s, 3), s, 3) * Rational(1, 24);
    auto e2 = series_exp(cube2, 3);
    CHECK(e2.coefficient(mono({0, 0}, {3, 0})) == Rational(1, 24));
    CHECK(e2.coefficient(mono({0, 0}, {2, 1})) == Rational(3, 24));
    CHECK(e2.coefficient(mono({0, 0}, {1, 2})) == Rational(3, 24));

    auto bad = make_series(1, 2, {{{0}, {0}, 1}});
    CHECK_THROWS_AS(series_exp(bad, 2), std::domain_error);
}

TEST_CASE("zeta_series odd expansion") {
    // zeta(z) = z + z^3/24 + z^5/1920 + ... on a single variable.
    auto z = make_series(1, 5, {{{1}, {0}, 1}});
    auto zs = zeta_series(z, 5);
    CHECK(zs.coefficient(mono({1}, {0})) == 1);
    CHECK(zs.coefficient(mono({2}, {0})) == 0);
    CHECK(zs.coefficient(mono({3}, {0})) == Rational(1, 24));
    CHECK(zs.coefficient(mono({5}, {0})) == Rational(1, 1920));

    CHECK(zeta_series(TruncatedSeries(1, 3), 3).is_zero());  // zeta(0) = 0

    // zeta(a_1 x_2 - a_2 x_1) at cap 4: the linear term plus nothing else below
    // degree 6 except the degree-2*3 cube, which is above this cap.
    auto L = TruncatedSeries::bilinear(2, 4, BilinearForm(1, 2));
    auto zL = zeta_series(L, 4);
    CHECK(zL.coefficient(mono({1, 0}, {0, 1})) == 1);
    CHECK(zL.coefficient(mono({0, 1}, {1, 0})) == -1);
    CHECK(zL.coefficient(mono({2, 0}, {0, 2})) == 0);

    // zeta(z)^2 = z^2 + z^4/12 + ...
    auto sq = series_mul(zs, zs, 5);
    CHECK(sq.coefficient(mono({2}, {0})) == 1);
    CHECK(sq.coefficient(mono({4}, {0})) == Rational(1, 12));
}

TEST_CASE("exact_divide certification") {
    auto form = TruncatedSeries::bilinear(2, 6, BilinearForm(1, 2));

    auto [q1, ok1] = exact_divide(form, BilinearForm(1, 2));
    CHECK(ok1);
    CHECK(q1.constant_term() == 1);

    auto nd = make_series(2, 2, {{{1, 0}, {0, 1}, 1}});  // a_1 x_2 alone
    auto [q2, ok2] = exact_divide(nd, BilinearForm(1, 2));
    CHECK_FALSE(ok2);

    // (x_1^2 - x_2^2) / (x_1 + x_2) = x_1 - x_2.
    auto num = make_series(2, 2, {{{0, 0}, {2, 0}, 1}, {{0, 0}, {0, 2}, -1}});
    auto [q3, ok3] = exact_divide(num, TruncatedSeries::sum_of_x(2, 1));
    CHECK(ok3);
    CHECK(q3.coefficient(mono({0, 0}, {1, 0})) == 1);
    CHECK(q3.coefficient(mono({0, 0}, {0, 1})) == -1);
}

TEST_CASE("zeta oddness via exact division") {
    // zeta(L)/L contains only even powers of L; check against the L-power
    // expansion on a single variable.
    auto z = make_series(1, 7, {{{1}, {0}, 1}});
    auto zs = zeta_series(z, 7);
    auto [q, ok] = exact_divide(zs, z);
    REQUIRE(ok);
    for (const auto& [m, c] : q.terms()) {
        CHECK(m.a[0] % 2 == 0);
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> exp_dist(0, 3), coef(-5, 5);
    auto random_series = [&](int cap) {
        TruncatedSeries s(2, cap);
        for (int t = 0; t < 6; ++t) {
            Monomial m(2);
            m.a = {exp_dist(rng), exp_dist(rng)};
            m.x = {exp_dist(rng), exp_dist(rng)};
            s.add_term(m, coef(rng));
        }
        return s;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const int cap = 8;
        auto a = random_series(cap), b = random_series(cap), c = random_series(cap);
        CHECK(series_mul(series_mul(a, b, cap), c, cap) ==
              series_mul(a, series_mul(b, c, cap), cap));
        CHECK(series_mul(a, b + c, cap) ==
              series_mul(a, b, cap) + series_mul(a, c, cap));
        CHECK(series_mul(a, b, cap) == series_mul(b, a, cap));
    }
}

TEST_CASE("multiply-then-divide round trip") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> exp_dist(0, 2), coef(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries s(2, 6);
        for (int t = 0; t < 5; ++t) {
            Monomial m(2);
            m.a = {exp_dist(rng), exp_dist(rng)};
            m.x = {exp_dist(rng), exp_dist(rng)};
            s.add_term(m, coef(rng));
        }
        const BilinearForm f(1, 2);
        auto prod = series_mul(s, TruncatedSeries::bilinear(2, 8, f), 8);
        auto [q, ok] = exact_divide(prod, f);
        CHECK(ok);
        CHECK(q == s.truncated(q.cap()));
    }
}

TEST_CASE("canonical text form") {
    auto s = make_series(1, 4, {{{0}, {3}, Rational(1, 24)}, {{0}, {1}, -1}});
    CHECK(s.str() == "-1 * x1 + 1/24 * x1^3");
    CHECK(TruncatedSeries(1, 2).str() == "0");
}

TEST_SUITE_END();
