#include <doctest.h>

#include <cstdio>
#include <random>

#include "npoint/dvv.hpp"

using namespace npoint;

TEST_SUITE_BEGIN("dvv");

TEST_CASE("genus zero closed form") {
    CHECK(CorrelatorTable::genus_zero({0, 0, 0}) == 1);
    CHECK(CorrelatorTable::genus_zero({1, 0, 0, 0}) == 1);
    CHECK(CorrelatorTable::genus_zero({1, 1, 0, 0, 0}) == 2);
    CHECK(CorrelatorTable::genus_zero({2, 0, 0}) == 0);  // off dimension
    CHECK_THROWS_AS(CorrelatorTable::genus_zero({0, 0}), std::invalid_argument);
}

TEST_CASE("hand-verified correlators") {
    CorrelatorTable t;
    CHECK(t.correlator(1, {1}) == Rational(1, 24));
    CHECK(t.correlator(1, {0, 2}) == Rational(1, 24));
    CHECK(t.correlator(1, {1, 1}) == Rational(1, 24));
    CHECK(t.correlator(2, {4}) == Rational(1, 1152));
    CHECK(t.correlator(0, {0, 0, 0}) == 1);

    // Invalid keys quietly map to zero.
    CHECK(t.correlator(0, {2}) == 0);       // unstable
    CHECK(t.correlator(1, {2}) == 0);       // dimension
    CHECK(t.correlator(1, {-1, 2}) == 0);   // negative index
    CHECK(t.correlator(3, {7}) == Rational(1, 82944));  // e^{x^3/24}/x^2 coefficient
}

TEST_CASE("order of arguments is irrelevant") {
    CorrelatorTable t;
    CHECK(t.correlator(1, {0, 2}) == t.correlator(1, {2, 0}));
    CHECK(t.correlator(2, {1, 4}) == t.correlator(2, {4, 1}));
}

TEST_CASE("dilaton fast path agrees with the generic recursion") {
    // For the pivot written as m+1 with m=0 the generic step degenerates to
    // 3 <tau_1 X>_g = sum_j (2 d_j + 1) <X>_g; check it on random stable keys.
    CorrelatorTable t;
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> g_dist(1, 3), n_dist(1, 4);
    int checked = 0;
    while (checked < 50) {
        const int g = g_dist(rng), n = n_dist(rng);
        const int s = 3 * g - 3 + n;
        if (s < 0 || 2 * g - 2 + n <= 0) continue;
        // Random composition of s into n parts.
        std::vector<int> d(n, 0);
        for (int u = 0; u < s; ++u) d[rng() % n] += 1;
        std::vector<int> with1 = d;
        with1.push_back(1);
        Rational rhs = 0;
        for (int j = 0; j < n; ++j) rhs += Rational(2 * d[j] + 1) * t.correlator(g, d);
        CHECK(Rational(3) * t.correlator(g, with1) == rhs);
        ++checked;
    }
}

TEST_CASE("string identity") {
    CorrelatorTable t;
    CHECK(t.string_identity_check(0, {1, 0, 0}));
    CHECK(t.string_identity_check(1, {2}));
    CHECK(t.string_identity_check(1, {0, 3}));
    CHECK_THROWS_AS(t.string_identity_check(1, {5}), std::invalid_argument);
}

TEST_CASE("first KdV equation") {
    CorrelatorTable t;
    CHECK(t.kdv_first_equation_check({}, 8));
    CHECK(t.kdv_first_equation_check({3}, 8));
    CHECK(t.kdv_first_equation_check({1, 1}, 8));
    CHECK_THROWS_AS(t.kdv_first_equation_check({9}, 8), std::invalid_argument);

    // The hand-checked instance behind K={3}: 1/8 = 1/24 + 1/12.
    CHECK(t.genus_summed({1, 0, 0, 3}) == Rational(1, 8));
    CHECK(t.genus_summed({0, 0, 3}) == Rational(1, 24));
    CHECK(t.genus_summed({0, 0, 0, 0, 0, 3}) == 1);
}

TEST_CASE("cache round trip") {
    CorrelatorTable t;
    t.correlator(2, {4});
    t.correlator(1, {1, 1});
    const std::string dumped = t.dump();
    CHECK(dumped.find("2;4;1/1152") != std::string::npos);

    const std::string path = "test_cache_roundtrip.txt";
    t.save(path);
    CorrelatorTable fresh;
    fresh.load(path);
    CHECK(fresh.dump() == dumped);
    CHECK(fresh.size() == t.size());

    // Cached values are idempotent under recomputation.
    CHECK(fresh.correlator(2, {4}) == Rational(1, 1152));
    fresh.clear();
    CHECK(fresh.size() == 0);
    std::remove(path.c_str());
}

TEST_SUITE_END();
