#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "npoint/rational.hpp"

namespace npoint {

/// Exponent vector of a monomial in two variable blocks a_1..a_n, x_1..x_n.
struct Monomial {
    std::vector<int> a;
    std::vector<int> x;

    Monomial() = default;
    explicit Monomial(int n) : a(n, 0), x(n, 0) {}

    int vars() const { return static_cast<int>(a.size()); }
    int a_degree() const;
    int x_degree() const;
    int degree() const { return a_degree() + x_degree(); }

    Monomial operator*(const Monomial& o) const;
    /// Componentwise divisibility.
    bool divisible_by(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;

    bool operator==(const Monomial& o) const = default;
};

/// Graded lexicographic order: total degree first, then the a-block, then the
/// x-block, each compared lexicographically.
struct GradedLexLess {
    bool operator()(const Monomial& l, const Monomial& r) const;
};

/// The bilinear denominator form a_j x_k - a_k x_j (1-based indices, j != k).
struct BilinearForm {
    int j;
    int k;

    BilinearForm(int j_, int k_);
};

/// Sparse multivariate power series over Rational, truncated by combined total
/// degree over both variable blocks. Immutable value semantics apart from the
/// named mutators; no zero coefficients and no terms above the cap are stored.
class TruncatedSeries {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    TruncatedSeries(int vars, int cap);
    static TruncatedSeries constant(int vars, int cap, const Rational& c);
    /// The polynomial a_j x_k - a_k x_j.
    static TruncatedSeries bilinear(int vars, int cap, const BilinearForm& f);
    /// The linear form x_1 + ... + x_n.
    static TruncatedSeries sum_of_x(int vars, int cap);

    int vars() const { return vars_; }
    int cap() const { return cap_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * m, dropping terms above the cap and cancelling to zero exactly.
    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    /// Copy re-truncated to new_cap (<= cap allowed to drop terms; larger caps
    /// are rejected since the dropped tail is unknown).
    TruncatedSeries truncated(int new_cap) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& c) const;

    bool operator==(const TruncatedSeries& o) const;

    /// Canonical text form: terms in ascending graded-lex order, coefficients
    /// as "num/den", e.g. "1/24 * x1^3". The zero series renders as "0".
    std::string str() const;

private:
    int vars_;
    int cap_;
    TermMap terms_;
};

/// Exact truncated product. Both factors must share the variable count.
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t, int cap);

/// exp(p) = sum p^m / m!, truncated. p must have zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& p, int cap);

/// zeta(L) = e^{L/2} - e^{-L/2} = sum_{k>=0} L^{2k+1} / (4^k (2k+1)!),
/// truncated. L must have zero constant term.
TruncatedSeries zeta_series(const TruncatedSeries& L, int cap);

/// Gradewise exact division by a nonzero homogeneous form. Returns the
/// quotient (capped at num.cap() - deg(form)) and whether the remainder is
/// exactly zero; on a nonzero remainder the quotient is meaningless.
std::pair<TruncatedSeries, bool> exact_divide(const TruncatedSeries& num,
                                              const TruncatedSeries& form);

std::pair<TruncatedSeries, bool> exact_divide(const TruncatedSeries& num,
                                              const BilinearForm& form);

}  // namespace npoint
