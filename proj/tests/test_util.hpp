#pragma once

#include <vector>

#include "npoint/series.hpp"

namespace npoint::testutil {

inline Monomial mono(const std::vector<int>& a, const std::vector<int>& x) {
    Monomial m(static_cast<int>(a.size()));
    m.a = a;
    m.x = x;
    return m;
}

struct Term {
    std::vector<int> a;
    std::vector<int> x;
    Rational c;
};

inline TruncatedSeries make_series(int vars, int cap, const std::vector<Term>& terms) {
    TruncatedSeries s(vars, cap);
    for (const Term& t : terms) s.add_term(mono(t.a, t.x), t.c);
    return s;
}

}  // namespace npoint::testutil
