#include <doctest.h>

#include <cmath>
#include <numbers>

#include "npoint/numeric.hpp"

using namespace npoint;

TEST_SUITE_BEGIN("numeric");

TEST_CASE("quadrature rules integrate polynomials exactly") {
    std::vector<double> t, w;
    gauss_legendre_01(12, t, w);
    double mass = 0, third = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        mass += w[i];
        third += w[i] * t[i] * t[i] * t[i];
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(third == doctest::Approx(0.25).epsilon(1e-12));

    gauss_hermite(12, t, w);
    double h0 = 0, h2 = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        h0 += w[i];
        h2 += w[i] * t[i] * t[i];
    }
    CHECK(h0 == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
    CHECK(h2 == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-12));
}

TEST_CASE("kernel closed forms") {
    NumericConfig cfg;
    // n=1: E(x) = e^{x^3/12} / (x sqrt(4 pi x)).
    CHECK(e_okounkov({1.0}, cfg).real() ==
          doctest::Approx(std::exp(1.0 / 12.0) / std::sqrt(4.0 * std::numbers::pi))
              .epsilon(1e-12));
    CHECK(e_okounkov({1.0}, cfg).real() == doctest::Approx(0.30661).epsilon(1e-4));

    // n=1 full assembly collapses to e^{x^3/24}/x^2.
    CHECK(f_ok_numeric({1.0}, cfg).real() ==
          doctest::Approx(std::exp(1.0 / 24.0)).epsilon(1e-10));
    CHECK(f_bur_numeric({1.0}, cfg).real() ==
          doctest::Approx(std::exp(1.0 / 24.0)).epsilon(1e-10));
    const double x = 0.6;
    CHECK(f_ok_numeric({x}, cfg).real() ==
          doctest::Approx(std::exp(x * x * x / 24.0) / (x * x)).epsilon(1e-10));

    CHECK_THROWS_AS(e_okounkov({-1.0}, cfg), std::domain_error);
    CHECK_THROWS_AS(e_okounkov({}, cfg), std::invalid_argument);
}

TEST_CASE("cyclic and full symmetry") {
    NumericConfig cfg;
    const double abc = e_okounkov({0.5, 0.9, 1.2}, cfg).real();
    const double rot = e_okounkov({0.9, 1.2, 0.5}, cfg).real();
    CHECK(abc == doctest::Approx(rot).epsilon(1e-8));

    const double g1 = g_okounkov({0.5, 0.9, 1.2}, cfg).real();
    const double g2 = g_okounkov({1.2, 0.5, 0.9}, cfg).real();
    const double g3 = g_okounkov({0.9, 0.5, 1.2}, cfg).real();
    CHECK(g1 == doctest::Approx(g2).epsilon(1e-9));
    CHECK(g1 == doctest::Approx(g3).epsilon(1e-9));
}

TEST_CASE("self convergence under node doubling") {
    NumericConfig coarse, fine;
    coarse.nodes_per_axis = 60;
    fine.nodes_per_axis = 120;
    const double a = e_okounkov({0.5, 0.8}, coarse).real();
    const double b = e_okounkov({0.5, 0.8}, fine).real();
    CHECK(std::abs(a - b) / std::abs(b) < coarse.target_rel_err);
    CHECK(e_okounkov({0.5, 0.8}, fine).est_err / std::abs(b) < fine.target_rel_err);
}

TEST_CASE("reality of the cyclic-composition sum") {
    NumericConfig cfg;
    const NumericResult r = f_bur_numeric({0.5, 0.8}, cfg);
    CHECK(r.abs_imag <= 1e-10 * std::abs(r.real()));
}

TEST_CASE("two pipelines meet at a sample point") {
    NumericConfig cfg;
    const double bur = f_bur_numeric({0.5, 0.8}, cfg).real();
    const double ok = f_ok_numeric({0.5, 0.8}, cfg).real();
    CHECK(std::abs(bur - ok) / std::abs(ok) < 1e-4);
}

TEST_CASE("single-block correspondence is closed form") {
    NumericConfig cfg;
    CyclicComposition whole;
    whole.blocks = {{1, 2}};
    double lhs = 0, rhs = 0;
    CHECK(term_correspondence(whole, {0.4, 0.5}, cfg, 1e-5, &lhs, &rhs));
    // Both sides equal -e^{X^3/24}/(sqrt(2 pi) X^{3/2}) at X = 0.9.
    const double X = 0.9;
    const double closed = -std::exp(X * X * X / 24.0) /
                          (std::sqrt(2.0 * std::numbers::pi) * std::pow(X, 1.5));
    CHECK(lhs == doctest::Approx(closed).epsilon(1e-10));
    CHECK(rhs == doctest::Approx(closed).epsilon(1e-10));
}

TEST_CASE("configuration validation") {
    NumericConfig bad;
    bad.nodes_per_axis = 4;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    NumericConfig bad2;
    bad2.target_rel_err = 0.0;
    CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}

TEST_SUITE_END();
