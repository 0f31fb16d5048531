#pragma once

#include <vector>

#include "npoint/series.hpp"

namespace npoint {

/// The n-point function F_n as computed by the Buryak pipeline: an unstable
/// pole tag (n = 1, 2 only) plus the stable part, an exact power series in the
/// x-variables truncated at total degree cap.
struct NPointSeries {
    enum class Unstable { none, x_pow_minus_2, inverse_sum_x };

    int n = 0;
    int cap = 0;
    Unstable unstable = Unstable::none;
    TruncatedSeries stable{1, 0};

    /// Coefficient of x_1^{d_1} ... x_n^{d_n} in the stable part.
    Rational coefficient(const std::vector<int>& d) const;

    /// Numeric evaluation of unstable tag + truncated stable part at x > 0.
    double evaluate(const std::vector<double>& x) const;
};

/// P_n from its defining sum over tau in S_n with tau(1) = 1: zeta-product
/// numerators over the chain of bilinear denominators, brought over the common
/// denominator of all pairs and divided out exactly. Requires n >= 2.
TruncatedSeries p_n_definition(int n, int cap);

/// P_n from the manifestly symmetric n!-term form: exp of the w-sum over the
/// chain of u-denominators (the x-monomial factors of u cancel against the
/// 1/prod x_i prefactor). Same series as p_n_definition. Requires n >= 2.
TruncatedSeries p_n_symmetric(int n, int cap);

/// Formal Gaussian moment functional with the i-twist: a monomial
/// prod a_j^{k_j} * X maps to 0 if any k_j is odd, and otherwise to
/// (-1)^{(sum k_j)/2} * prod_j (k_j - 1)!! x_j^{k_j / 2} * X.
TruncatedSeries gaussian_moments(const TruncatedSeries& p);

/// Assembles F_n^Bur up to stable total degree D. Throws std::runtime_error on
/// any divisibility failure (they would contradict polynomiality of P_n).
NPointSeries f_bur_series(int n, int D);

/// <tau_{d_1} ... tau_{d_n}>_g via the Buryak pipeline: 0 on dimension or
/// stability violation, else the coefficient of prod x_i^{d_i}.
Rational intersection_number(int genus, const std::vector<int>& d);

}  // namespace npoint
