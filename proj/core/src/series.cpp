#include "npoint/series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace npoint {

int Monomial::a_degree() const {
    return std::accumulate(a.begin(), a.end(), 0);
}

int Monomial::x_degree() const {
    return std::accumulate(x.begin(), x.end(), 0);
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < a.size(); ++i) {
        r.a[i] += o.a[i];
        r.x[i] += o.x[i];
    }
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < o.a[i] || x[i] < o.x[i]) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < a.size(); ++i) {
        r.a[i] -= o.a[i];
        r.x[i] -= o.x[i];
    }
    return r;
}

bool GradedLexLess::operator()(const Monomial& l, const Monomial& r) const {
    const int dl = l.degree(), dr = r.degree();
    if (dl != dr) return dl < dr;
    if (l.a != r.a) return l.a < r.a;
    return l.x < r.x;
}

BilinearForm::BilinearForm(int j_, int k_) : j(j_), k(k_) {
    if (j == k) throw std::invalid_argument("BilinearForm requires j != k");
}

TruncatedSeries::TruncatedSeries(int vars, int cap) : vars_(vars), cap_(cap) {
    if (vars < 1) throw std::invalid_argument("series needs at least one variable per block");
    if (cap < 0) throw std::invalid_argument("negative truncation cap");
}

TruncatedSeries TruncatedSeries::constant(int vars, int cap, const Rational& c) {
    TruncatedSeries s(vars, cap);
    s.add_term(Monomial(vars), c);
    return s;
}

TruncatedSeries TruncatedSeries::bilinear(int vars, int cap, const BilinearForm& f) {
    if (f.j < 1 || f.j > vars || f.k < 1 || f.k > vars) {
        throw std::invalid_argument("bilinear form index out of range");
    }
    TruncatedSeries s(vars, cap);
    Monomial m(vars);
    m.a[f.j - 1] = 1;
    m.x[f.k - 1] = 1;
    s.add_term(m, 1);
    Monomial w(vars);
    w.a[f.k - 1] = 1;
    w.x[f.j - 1] = 1;
    s.add_term(w, -1);
    return s;
}

TruncatedSeries TruncatedSeries::sum_of_x(int vars, int cap) {
    TruncatedSeries s(vars, cap);
    for (int i = 0; i < vars; ++i) {
        Monomial m(vars);
        m.x[i] = 1;
        s.add_term(m, 1);
    }
    return s;
}

void TruncatedSeries::add_term(const Monomial& m, const Rational& c) {
    if (m.vars() != vars_) throw std::invalid_argument("monomial variable count mismatch");
    if (c == 0 || m.degree() > cap_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational TruncatedSeries::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const {
    return coefficient(Monomial(vars_));
}

TruncatedSeries TruncatedSeries::truncated(int new_cap) const {
    if (new_cap > cap_) throw std::invalid_argument("cannot extend a truncated series");
    TruncatedSeries r(vars_, new_cap);
    for (const auto& [m, c] : terms_) {
        if (m.degree() > new_cap) break;
        r.terms_.emplace(m, c);
    }
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r += o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r -= o;
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries r(vars_, cap_);
    if (c == 0) return r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

namespace {

void append_var(std::ostream& os, const char* name, int idx, int exp, bool& first) {
    if (exp == 0) return;
    if (!first) os << " ";
    first = false;
    os << name << idx;
    if (exp > 1) os << "^" << exp;
}

}  // namespace

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [m, c] : terms_) {
        if (!first_term) os << " + ";
        first_term = false;
        os << rational_to_string(c);
        if (m.degree() > 0) {
            os << " * ";
            bool first_var = true;
            for (int i = 0; i < vars_; ++i) append_var(os, "a", i + 1, m.a[i], first_var);
            for (int i = 0; i < vars_; ++i) append_var(os, "x", i + 1, m.x[i], first_var);
        }
    }
    return os.str();
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t, int cap) {
    if (s.vars() != t.vars()) throw std::invalid_argument("variable count mismatch in product");
    TruncatedSeries r(s.vars(), cap);
    // Terms are stored graded, so the inner loop can stop at the cap.
    for (const auto& [ms, cs] : s.terms()) {
        const int ds = ms.degree();
        if (ds > cap) break;
        for (const auto& [mt, ct] : t.terms()) {
            if (ds + mt.degree() > cap) break;
            r.add_term(ms * mt, cs * ct);
        }
    }
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& p, int cap) {
    if (p.constant_term() != 0) {
        throw std::domain_error("series_exp requires a zero constant term");
    }
    TruncatedSeries acc = TruncatedSeries::constant(p.vars(), cap, 1);
    TruncatedSeries power = acc;
    for (int m = 1; m <= cap; ++m) {
        power = series_mul(power, p, cap) * Rational(1, m);
        if (power.is_zero()) break;
        acc += power;
    }
    return acc;
}

TruncatedSeries zeta_series(const TruncatedSeries& L, int cap) {
    if (L.constant_term() != 0) {
        throw std::domain_error("zeta_series requires a zero constant term");
    }
    TruncatedSeries acc(L.vars(), cap);
    TruncatedSeries power = L.truncated(std::min(cap, L.cap()));
    Int pow4 = 1;
    for (int k = 0; !power.is_zero(); ++k) {
        acc += power * Rational(1, pow4 * factorial(2 * k + 1));
        power = series_mul(series_mul(power, L, cap), L, cap);
        pow4 *= 4;
    }
    return acc;
}

std::pair<TruncatedSeries, bool> exact_divide(const TruncatedSeries& num,
                                              const TruncatedSeries& form) {
    if (num.vars() != form.vars()) throw std::invalid_argument("variable count mismatch in division");
    if (form.is_zero()) throw std::invalid_argument("division by the zero form");

    // Graded-lex leading term of the form.
    const auto lead_it = std::prev(form.terms().end());
    const Monomial lead = lead_it->first;
    const Rational lead_c = lead_it->second;
    const int form_deg = lead.degree();

    const int qcap = num.cap() - form_deg;
    TruncatedSeries quotient(num.vars(), std::max(qcap, 0));
    if (qcap < 0) return {quotient, num.is_zero()};

    TruncatedSeries residual = num;
    while (!residual.is_zero()) {
        const auto top = std::prev(residual.terms().end());
        const Monomial t = top->first;
        if (!t.divisible_by(lead)) return {quotient, false};
        const Monomial q = t / lead;
        const Rational qc = top->second / lead_c;
        quotient.add_term(q, qc);
        for (const auto& [fm, fc] : form.terms()) {
            residual.add_term(q * fm, -qc * fc);
        }
    }
    return {quotient, true};
}

std::pair<TruncatedSeries, bool> exact_divide(const TruncatedSeries& num,
                                              const BilinearForm& form) {
    return exact_divide(num, TruncatedSeries::bilinear(num.vars(), 2, form));
}

}  // namespace npoint
