#include "npoint/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace npoint {

namespace {

constexpr double kCbrt2 = 1.2599210498948731647672106072782;  // 2^{1/3}

void golub_welsch(const Eigen::VectorXd& offdiag, double mu0, std::vector<double>& nodes,
                  std::vector<double>& weights) {
    const int m = static_cast<int>(offdiag.size()) + 1;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i + 1 < m; ++i) {
        J(i, i + 1) = offdiag(i);
        J(i + 1, i) = offdiag(i);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    nodes.resize(m);
    weights.resize(m);
    for (int i = 0; i < m; ++i) {
        nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        weights[i] = mu0 * v0 * v0;
    }
}

void check_positive(const std::vector<double>& x) {
    if (x.empty()) throw std::invalid_argument("empty evaluation point");
    for (double v : x) {
        if (!(v > 0)) throw std::domain_error("evaluation point must have positive components");
    }
}

/// Odometer over an n-fold tensor grid.
bool advance(std::vector<int>& idx, int m) {
    for (size_t j = 0; j < idx.size(); ++j) {
        if (++idx[j] < m) return true;
        idx[j] = 0;
    }
    return false;
}

double orthant_integral(const std::vector<double>& x, int m, double K) {
    const int n = static_cast<int>(x.size());
    std::vector<double> t, w;
    gauss_legendre_01(m, t, w);

    // Axis j of the integrand decays like e^{-s_j (x_{j-1}+x_j)/2}; the map
    // s = -alpha log(1-t) with alpha = 2K/(x_{j-1}+x_j) turns that decay into
    // a (1-t)^{K-1} boundary factor.
    std::vector<std::vector<double>> s(n), jw(n);
    for (int j = 0; j < n; ++j) {
        const double alpha = 2.0 * K / (x[(j + n - 1) % n] + x[j]);
        s[j].resize(m);
        jw[j].resize(m);
        for (int i = 0; i < m; ++i) {
            s[j][i] = -alpha * std::log1p(-t[i]);
            jw[j][i] = w[i] * alpha / (1.0 - t[i]);
        }
    }

    double total = 0.0;
    std::vector<int> idx(n, 0);
    do {
        double expo = 0.0, weight = 1.0;
        for (int j = 0; j < n; ++j) {
            const int jp = (j + 1) % n;
            const double sj = s[j][idx[j]], sjp = s[jp][idx[jp]];
            const double d = sj - sjp;
            expo -= d * d / (4.0 * x[j]) + (sj + sjp) * x[j] / 2.0;
            weight *= jw[j][idx[j]];
        }
        total += weight * std::exp(expo);
    } while (advance(idx, m));
    return total;
}

std::complex<double> hermite_integral(const std::vector<double>& xb, int m) {
    const int l = static_cast<int>(xb.size());
    std::vector<double> t, w;
    gauss_hermite(m, t, w);

    std::vector<double> scale(l);  // f_j = t sqrt(2 x_j)
    for (int j = 0; j < l; ++j) scale[j] = std::sqrt(2.0 * xb[j]);

    std::complex<double> total{0.0, 0.0};
    std::vector<int> idx(l, 0);
    do {
        double weight = 1.0;
        std::complex<double> den{1.0, 0.0};
        for (int j = 0; j < l; ++j) {
            const int jp = (j + 1) % l;
            const double fj = t[idx[j]] * scale[j];
            const double fjp = t[idx[jp]] * scale[jp];
            den *= std::complex<double>(-(xb[j] + xb[jp]) / 2.0, fj / xb[j] - fjp / xb[jp]);
            weight *= w[idx[j]];
        }
        total += weight / den;
    } while (advance(idx, m));
    // df_j / x_j measure against the e^{-t^2} normalization.
    for (int j = 0; j < l; ++j) total *= scale[j] / xb[j];
    return total;
}

NumericResult with_error_estimate(double coarse, double fine) {
    NumericResult r;
    r.value = fine;
    r.est_err = std::abs(fine - coarse);
    return r;
}

}  // namespace

void NumericConfig::validate() const {
    if (nodes_per_axis < 8 || hermite_nodes < 8) {
        throw std::invalid_argument("quadrature needs at least 8 nodes per axis");
    }
    if (!(target_rel_err > 0)) throw std::invalid_argument("target_rel_err must be positive");
}

void gauss_legendre_01(int m, std::vector<double>& nodes, std::vector<double>& weights) {
    Eigen::VectorXd off(m - 1);
    for (int k = 1; k < m; ++k) off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    golub_welsch(off, 2.0, nodes, weights);
    for (int i = 0; i < m; ++i) {
        nodes[i] = 0.5 * (nodes[i] + 1.0);
        weights[i] *= 0.5;
    }
}

void gauss_hermite(int m, std::vector<double>& nodes, std::vector<double>& weights) {
    Eigen::VectorXd off(m - 1);
    for (int k = 1; k < m; ++k) off(k - 1) = std::sqrt(k / 2.0);
    golub_welsch(off, std::sqrt(std::numbers::pi), nodes, weights);
}

NumericResult e_okounkov(const std::vector<double>& x, const NumericConfig& cfg) {
    cfg.validate();
    check_positive(x);
    const int n = static_cast<int>(x.size());
    if (n > 4) throw std::invalid_argument("e_okounkov supports n <= 4");

    double cube_sum = 0.0, root_prod = 1.0;
    for (double v : x) {
        cube_sum += v * v * v;
        root_prod *= std::sqrt(4.0 * std::numbers::pi * v);
    }
    const double pref = std::exp(cube_sum / 12.0) / root_prod;

    NumericResult r;
    if (n == 1) {
        // The integrand collapses to e^{-s x}.
        r.value = pref / x[0];
        return r;
    }
    const double coarse = orthant_integral(x, cfg.nodes_per_axis / 2, cfg.boundary_decay);
    const double fine = orthant_integral(x, cfg.nodes_per_axis, cfg.boundary_decay);
    r = with_error_estimate(pref * coarse, pref * fine);
    return r;
}

NumericResult e_cyclic(const std::vector<double>& x, const NumericConfig& cfg) {
    check_positive(x);
    const int n = static_cast<int>(x.size());
    NumericResult r;
    for (const Permutation& sigma : cyclic_class_reps(n)) {
        std::vector<double> xs(n);
        for (int i = 1; i <= n; ++i) xs[i - 1] = x[sigma(i) - 1];
        const NumericResult e = e_okounkov(xs, cfg);
        r.value += e.value;
        r.est_err += e.est_err;
    }
    return r;
}

NumericResult g_okounkov(const std::vector<double>& x, const NumericConfig& cfg) {
    check_positive(x);
    const int n = static_cast<int>(x.size());
    NumericResult r;
    for (const SetPartition& p : set_partitions(n)) {
        const int l = static_cast<int>(p.blocks.size());
        std::vector<double> sums(l, 0.0);
        for (int b = 0; b < l; ++b) {
            for (int i : p.blocks[b]) sums[b] += x[i - 1];
        }
        const NumericResult e = e_cyclic(sums, cfg);
        const double sign = (l % 2 == 1) ? 1.0 : -1.0;
        r.value += sign * e.value;
        r.est_err += e.est_err;
    }
    return r;
}

NumericResult f_ok_numeric(const std::vector<double>& x, const NumericConfig& cfg) {
    check_positive(x);
    const int n = static_cast<int>(x.size());
    std::vector<double> scaled(n);
    double pref = std::pow(2.0 * std::numbers::pi, n / 2.0);
    for (int i = 0; i < n; ++i) {
        scaled[i] = x[i] / kCbrt2;
        pref /= std::sqrt(x[i]);
    }
    NumericResult g = g_okounkov(scaled, cfg);
    g.value *= pref;
    g.est_err *= pref;
    return g;
}

NumericResult buryak_cyclic_term(const std::vector<double>& block_sums,
                                 const NumericConfig& cfg) {
    cfg.validate();
    check_positive(block_sums);
    const int l = static_cast<int>(block_sums.size());
    double cube_sum = 0.0;
    for (double v : block_sums) cube_sum += v * v * v;
    const double pref =
        std::exp(cube_sum / 24.0) / std::pow(2.0 * std::numbers::pi, l);

    const std::complex<double> coarse = hermite_integral(block_sums, cfg.hermite_nodes / 2);
    const std::complex<double> fine = hermite_integral(block_sums, cfg.hermite_nodes);
    NumericResult r;
    r.value = pref * fine;
    r.est_err = pref * std::abs(fine - coarse);
    r.abs_imag = std::abs(r.value.imag());
    return r;
}

NumericResult f_bur_numeric(const std::vector<double>& x, const NumericConfig& cfg) {
    cfg.validate();
    check_positive(x);
    const int n = static_cast<int>(x.size());

    NumericResult r;
    for (const CyclicComposition& comp : cyclic_ordered_partitions(n)) {
        const int l = static_cast<int>(comp.blocks.size());
        std::vector<double> sums(l, 0.0);
        for (int b = 0; b < l; ++b) {
            for (int i : comp.blocks[b]) sums[b] += x[i - 1];
        }
        const NumericResult term = buryak_cyclic_term(sums, cfg);
        r.value -= term.value;
        r.est_err += term.est_err;
    }
    double pref = std::pow(2.0 * std::numbers::pi, n / 2.0);
    for (double v : x) pref /= std::sqrt(v);
    r.value *= pref;
    r.est_err *= pref;
    r.abs_imag = std::abs(r.value.imag());
    return r;
}

bool term_correspondence(const CyclicComposition& blocks, const std::vector<double>& x,
                         const NumericConfig& cfg, double rel_tol, double* lhs_out,
                         double* rhs_out) {
    check_positive(x);
    const int l = static_cast<int>(blocks.blocks.size());
    std::vector<double> sums(l, 0.0);
    for (int b = 0; b < l; ++b) {
        for (int i : blocks.blocks[b]) {
            if (i < 1 || i > static_cast<int>(x.size())) {
                throw std::invalid_argument("composition index out of range");
            }
            sums[b] += x[i - 1];
        }
    }
    const NumericResult lhs = buryak_cyclic_term(sums, cfg);

    std::vector<double> scaled(l);
    for (int b = 0; b < l; ++b) scaled[b] = sums[b] / kCbrt2;
    const NumericResult rhs_e = e_okounkov(scaled, cfg);
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    const double rhs = sign * rhs_e.value.real();

    if (lhs_out) *lhs_out = lhs.value.real();
    if (rhs_out) *rhs_out = rhs;
    return std::abs(lhs.value.real() - rhs) <= rel_tol * std::abs(rhs) &&
           lhs.abs_imag <= rel_tol * std::abs(rhs);
}

}  // namespace npoint
