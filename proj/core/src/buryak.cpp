#include "npoint/buryak.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "npoint/combinatorics.hpp"

namespace npoint {

namespace {

std::vector<BilinearForm> all_pair_forms(int n) {
    std::vector<BilinearForm> forms;
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) forms.emplace_back(j, k);
    }
    return forms;
}

bool chain_contains(const Permutation& sigma, int j, int k) {
    for (int p = 1; p < sigma.size(); ++p) {
        const int a = std::min(sigma(p), sigma(p + 1));
        const int b = std::max(sigma(p), sigma(p + 1));
        if (a == j && b == k) return true;
    }
    return false;
}

/// Sign of prod B_{sigma(j) sigma(j+1)} relative to the pair-ordered forms.
int chain_orientation(const Permutation& sigma) {
    int s = 1;
    for (int p = 1; p < sigma.size(); ++p) {
        if (sigma(p) > sigma(p + 1)) s = -s;
    }
    return s;
}

/// Multiplies in the complement forms, the interior x-monomial and the chain
/// orientation sign shared by both P_n pipelines.
TruncatedSeries finish_numerator_term(TruncatedSeries term, const Permutation& sigma,
                                      int num_cap) {
    const int n = sigma.size();
    for (const BilinearForm& f : all_pair_forms(n)) {
        if (!chain_contains(sigma, f.j, f.k)) {
            term = series_mul(term, TruncatedSeries::bilinear(n, 2, f), num_cap);
        }
    }
    Monomial interior(n);
    for (int p = 2; p <= n - 1; ++p) interior.x[sigma(p) - 1] += 1;
    TruncatedSeries mono(n, num_cap);
    mono.add_term(interior, chain_orientation(sigma));
    return series_mul(term, mono, num_cap);
}

/// Parallel map over permutations with a fixed pairwise-tree reduction; exact
/// arithmetic makes the result independent of the worker count.
TruncatedSeries sum_over_permutations(const std::vector<Permutation>& perms,
                                      const TruncatedSeries& zero,
                                      const std::function<TruncatedSeries(const Permutation&)>& fn) {
    std::vector<TruncatedSeries> parts(perms.size(), zero);
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(perms.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < perms.size(); i += workers) parts[i] = fn(perms[i]);
        });
    }
    for (auto& t : pool) t.join();
    while (parts.size() > 1) {
        std::vector<TruncatedSeries> next;
        for (size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
        if (parts.size() % 2) next.push_back(parts.back());
        parts = std::move(next);
    }
    return parts.empty() ? zero : parts.front();
}

TruncatedSeries divide_all_pairs(TruncatedSeries num, int n) {
    for (const BilinearForm& f : all_pair_forms(n)) {
        auto [quot, ok] = exact_divide(num, f);
        if (!ok) {
            throw std::runtime_error("P_n numerator not divisible by a bilinear form; "
                                     "polynomiality violated");
        }
        num = std::move(quot);
    }
    return num;
}

}  // namespace

TruncatedSeries p_n_symmetric(int n, int cap) {
    if (n < 2) throw std::invalid_argument("p_n_symmetric requires n >= 2");
    if (cap < 0) throw std::invalid_argument("negative cap");
    const int num_cap = cap + n * (n - 1);
    // exp terms have equal a- and x-degree, so the useful part of the exp
    // factor stops at combined degree cap + n.
    const int exp_cap = cap + n;

    auto term_for = [&](const Permutation& sigma) {
        TruncatedSeries w_sum(n, 2);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const int p = sigma(i), q = sigma(j);
                const Rational half(p < q ? 1 : -1, 2);
                w_sum += TruncatedSeries::bilinear(n, 2, BilinearForm(std::min(p, q), std::max(p, q))) * half;
            }
        }
        return finish_numerator_term(series_exp(w_sum, exp_cap), sigma, num_cap);
    };

    const TruncatedSeries zero(n, num_cap);
    TruncatedSeries numerator = sum_over_permutations(permutations(n), zero, term_for);
    return divide_all_pairs(std::move(numerator), n);
}

TruncatedSeries p_n_definition(int n, int cap) {
    if (n < 2) throw std::invalid_argument("p_n_definition requires n >= 2");
    if (cap < 0) throw std::invalid_argument("negative cap");
    const int num_cap = cap + n * (n - 1);

    auto term_for = [&](const Permutation& tau) {
        TruncatedSeries term = TruncatedSeries::constant(n, num_cap, 1);
        for (int j = 1; j <= n - 1; ++j) {
            // L_j = (sum_{k<=j} a_{tau(k)}) x_{tau(j+1)} - a_{tau(j+1)} (sum_{k<=j} x_{tau(k)})
            TruncatedSeries L(n, 2);
            for (int k = 1; k <= j; ++k) {
                Monomial plus(n);
                plus.a[tau(k) - 1] = 1;
                plus.x[tau(j + 1) - 1] += 1;
                L.add_term(plus, 1);
                Monomial minus(n);
                minus.a[tau(j + 1) - 1] = 1;
                minus.x[tau(k) - 1] += 1;
                L.add_term(minus, -1);
            }
            term = series_mul(term, zeta_series(L, num_cap), num_cap);
        }
        return finish_numerator_term(std::move(term), tau, num_cap);
    };

    const TruncatedSeries zero(n, num_cap);
    TruncatedSeries numerator =
        sum_over_permutations(permutations_fixing_first(n), zero, term_for);
    return divide_all_pairs(std::move(numerator), n);
}

TruncatedSeries gaussian_moments(const TruncatedSeries& p) {
    TruncatedSeries out(p.vars(), p.cap());
    for (const auto& [m, c] : p.terms()) {
        bool odd = false;
        for (int k : m.a) {
            if (k % 2) {
                odd = true;
                break;
            }
        }
        if (odd) continue;
        Rational co = c;
        Monomial image(p.vars());
        int total = 0;
        for (int i = 0; i < p.vars(); ++i) {
            const int k = m.a[i];
            total += k;
            co *= odd_double_factorial(k - 1);
            image.x[i] = m.x[i] + k / 2;
        }
        if ((total / 2) % 2) co = -co;
        out.add_term(image, co);
    }
    return out;
}

NPointSeries f_bur_series(int n, int D) {
    if (n < 1) throw std::invalid_argument("f_bur_series requires n >= 1");
    if (D < 0) throw std::invalid_argument("negative degree bound");

    NPointSeries f;
    f.n = n;
    f.cap = D;
    f.stable = TruncatedSeries(n, D);

    if (n == 1) {
        f.unstable = NPointSeries::Unstable::x_pow_minus_2;
        Int den = 1;
        for (int k = 1; 3 * k - 2 <= D; ++k) {
            den *= 24 * k;
            Monomial m(1);
            m.x[0] = 3 * k - 2;
            f.stable.add_term(m, Rational(1, den));
        }
        return f;
    }

    // Stable coefficients at x-degree f come from P_n pieces of bidegree
    // (k, k + n - 2) with (3/2)k + n - 2 <= D + 1, so a combined P-cap of
    // 2*k_max + n - 2 suffices.
    const int k_max = std::max(0, 2 * (D + 3 - n) / 3);
    const int p_cap = 2 * k_max + n - 2;

    const TruncatedSeries moments = gaussian_moments(p_n_symmetric(n, p_cap));

    // Prefactor e^{(sum x)^3 / 24}.
    const int s_cap = D + 1;
    TruncatedSeries cube = TruncatedSeries::sum_of_x(n, s_cap);
    cube = series_mul(series_mul(cube, cube, s_cap), cube, s_cap) * Rational(1, 24);
    TruncatedSeries S = series_mul(series_exp(cube, s_cap), moments, s_cap);

    if (n == 2) {
        const Rational c0 = S.constant_term();
        if (c0 != 1) {
            throw std::runtime_error("grade-0 part of the 2-point integrand is not 1");
        }
        S.add_term(Monomial(2), -1);
        f.unstable = NPointSeries::Unstable::inverse_sum_x;
    }

    auto [quot, ok] = exact_divide(S, TruncatedSeries::sum_of_x(n, 1));
    if (!ok) {
        throw std::runtime_error("n-point integrand not divisible by sum of x");
    }
    f.stable = quot.truncated(std::min(quot.cap(), D));
    f.cap = f.stable.cap();
    return f;
}

Rational NPointSeries::coefficient(const std::vector<int>& d) const {
    if (static_cast<int>(d.size()) != n) throw std::invalid_argument("index vector size mismatch");
    Monomial m(n);
    m.x = d;
    return stable.coefficient(m);
}

double NPointSeries::evaluate(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("point size mismatch");
    double v = 0;
    switch (unstable) {
        case Unstable::x_pow_minus_2:
            v += 1.0 / (x[0] * x[0]);
            break;
        case Unstable::inverse_sum_x:
            v += 1.0 / (x[0] + x[1]);
            break;
        case Unstable::none:
            break;
    }
    for (const auto& [m, c] : stable.terms()) {
        double t = rational_to_double(c);
        for (int i = 0; i < n; ++i) t *= std::pow(x[i], m.x[i]);
        v += t;
    }
    return v;
}

Rational intersection_number(int genus, const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    if (genus < 0 || n < 1) throw std::invalid_argument("intersection_number needs g >= 0, n >= 1");
    for (int x : d) {
        if (x < 0) throw std::invalid_argument("negative tau index");
    }
    const int s = std::accumulate(d.begin(), d.end(), 0);
    if (2 * genus - 2 + n <= 0 || s != 3 * genus - 3 + n) return 0;
    return f_bur_series(n, s).coefficient(d);
}

}  // namespace npoint
