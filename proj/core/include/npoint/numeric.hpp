#pragma once

#include <complex>
#include <vector>

#include "npoint/combinatorics.hpp"

namespace npoint {

enum class QuadratureRule {
    /// Gauss-Legendre on (0,1) composed with s = -alpha * log(1-t), alpha
    /// chosen per axis from the linear decay rate of the integrand.
    mapped_gauss_legendre,
    /// Tensor Gauss-Hermite matched to the Gaussian weights e^{-f^2/(2x)}.
    gauss_hermite,
};

struct NumericConfig {
    /// Nodes per tensor axis for the orthant (Okounkov-side) integrals.
    int nodes_per_axis = 120;
    QuadratureRule rule = QuadratureRule::mapped_gauss_legendre;
    double target_rel_err = 1e-6;
    /// Nodes per axis for the Gauss-Hermite (Buryak-side) integrals; the
    /// integrand carries a Lorentzian ridge of width (x_j + x_k)/2, which
    /// needs more nodes than the smooth orthant integrands.
    int hermite_nodes = 160;
    /// Boundary-decay multiplier K for the log map: alpha_j = 2K/(x_{j-1}+x_j)
    /// makes the transformed integrand vanish like (1-t)^{K-1} at t = 1.
    double boundary_decay = 6.0;

    void validate() const;
};

struct NumericResult {
    std::complex<double> value{0.0, 0.0};
    double abs_imag = 0.0;
    double est_err = 0.0;

    double real() const { return value.real(); }
};

/// Gauss-Legendre nodes/weights on (0,1) and Gauss-Hermite (weight e^{-t^2})
/// via Golub-Welsch. Exposed for tests.
void gauss_legendre_01(int m, std::vector<double>& nodes, std::vector<double>& weights);
void gauss_hermite(int m, std::vector<double>& nodes, std::vector<double>& weights);

/// Okounkov's kernel E(x_1..x_n): closed form for n = 1, mapped tensor
/// quadrature over the orthant for 2 <= n <= 4. Requires all x > 0.
NumericResult e_okounkov(const std::vector<double>& x, const NumericConfig& cfg);

/// E with the cyclic-orbit symmetrization: sum of E over cyclic_class_reps.
NumericResult e_cyclic(const std::vector<double>& x, const NumericConfig& cfg);

/// G = sum over set partitions of (-1)^{l+1} E^cyc(block sums).
NumericResult g_okounkov(const std::vector<double>& x, const NumericConfig& cfg);

/// F_n^Ok = (2 pi)^{n/2} / prod sqrt(x_j) * G(x / 2^{1/3}).
NumericResult f_ok_numeric(const std::vector<double>& x, const NumericConfig& cfg);

/// One cyclic-composition term of the pole-free Buryak form: the value of
/// e^{sum x_I^3 / 24} / (2 pi)^l * int_{R^l} prod e^{-f^2/(2 x_I)} df/x_I
/// over the cyclic product of shifted-pole denominators. Complex quadrature;
/// the denominators never vanish (modulus >= (x_{I_j}+x_{I_{j+1}})/2).
NumericResult buryak_cyclic_term(const std::vector<double>& block_sums,
                                 const NumericConfig& cfg);

/// F_n^Bur from the cyclic-ordered-partition form; real up to quadrature
/// noise. Requires all x > 0, n <= 3 at default configs.
NumericResult f_bur_numeric(const std::vector<double>& x, const NumericConfig& cfg);

/// Term-wise correspondence for one cyclic composition: checks that
/// buryak_cyclic_term(block sums) equals (-1)^l E(block sums / 2^{1/3})
/// within rel_tol. lhs/rhs are reported if non-null.
bool term_correspondence(const CyclicComposition& blocks, const std::vector<double>& x,
                         const NumericConfig& cfg, double rel_tol,
                         double* lhs_out = nullptr, double* rhs_out = nullptr);

}  // namespace npoint
