#include "npoint/dvv.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace npoint {

CorrelatorKey CorrelatorKey::make(int genus, std::vector<int> d) {
    std::sort(d.begin(), d.end());
    return CorrelatorKey{genus, std::move(d)};
}

bool CorrelatorKey::stable() const {
    return genus >= 0 && points() >= 1 && 2 * genus - 2 + points() > 0;
}

bool CorrelatorKey::dimension_ok() const {
    const int s = std::accumulate(d.begin(), d.end(), 0);
    return s == 3 * genus - 3 + points();
}

Rational CorrelatorTable::genus_zero(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    if (n < 3) throw std::invalid_argument("genus_zero requires n >= 3");
    const int s = std::accumulate(d.begin(), d.end(), 0);
    if (s != n - 3) return 0;
    Rational v = factorial(n - 3);
    for (int x : d) v /= factorial(x);
    return v;
}

Rational CorrelatorTable::correlator(int genus, std::vector<int> d) {
    for (int x : d) {
        if (x < 0) return 0;
    }
    CorrelatorKey key = CorrelatorKey::make(genus, std::move(d));
    if (!key.stable() || !key.dimension_ok()) return 0;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int n = key.points();
    const auto& ds = key.d;
    Rational v;

    if (key.genus == 0) {
        v = genus_zero(ds);
    } else if (key.genus == 1 && n == 1 && ds[0] == 1) {
        v = Rational(1, 24);  // dilaton anomaly base case
    } else if (ds.front() == 0) {
        // String equation: remove the tau_0, lower each remaining index.
        std::vector<int> rest(ds.begin() + 1, ds.end());
        v = 0;
        for (size_t j = 0; j < rest.size(); ++j) {
            std::vector<int> t = rest;
            t[j] -= 1;
            v += correlator(key.genus, std::move(t));
        }
    } else if (ds.front() == 1) {
        // Dilaton equation.
        std::vector<int> rest(ds.begin() + 1, ds.end());
        const int n_rest = static_cast<int>(rest.size());
        v = Rational(2 * key.genus - 2 + n_rest) * correlator(key.genus, std::move(rest));
    } else {
        // Generic DVV step on the largest index, written as m+1 with m >= 1.
        const int m = ds.back() - 1;
        std::vector<int> rest(ds.begin(), ds.end() - 1);
        const int r = static_cast<int>(rest.size());
        v = 0;
        for (int j = 0; j < r; ++j) {
            std::vector<int> t = rest;
            t[j] = m + rest[j];
            v += Rational(odd_double_factorial(2 * (m + rest[j]) + 1),
                          odd_double_factorial(2 * rest[j] - 1)) *
                 correlator(key.genus, std::move(t));
        }
        for (int a = 0; a <= m - 1; ++a) {
            const int b = m - 1 - a;
            std::vector<int> t = rest;
            t.push_back(a);
            t.push_back(b);
            Rational inner = correlator(key.genus - 1, std::move(t));
            for (unsigned mask = 0; mask < (1u << r); ++mask) {
                std::vector<int> I{a}, J{b};
                for (int i = 0; i < r; ++i) {
                    (mask >> i & 1u ? I : J).push_back(rest[i]);
                }
                for (int gp = 0; gp <= key.genus; ++gp) {
                    inner += correlator(gp, I) * correlator(key.genus - gp, J);
                }
            }
            v += Rational(odd_double_factorial(2 * a + 1) * odd_double_factorial(2 * b + 1), 2) *
                 inner;
        }
        v /= Rational(odd_double_factorial(2 * m + 3));
    }

    memo_.emplace(std::move(key), v);
    return v;
}

bool CorrelatorTable::string_identity_check(int genus, const std::vector<int>& d) {
    // The identity relates <tau_0 prod tau_{d_i}>_g to the lowered correlators,
    // so the key *with* the appended tau_0 must sit on dimension, and the bare
    // key must itself be stable (the string equation excludes (g,n) = (0,2)).
    std::vector<int> with0 = d;
    with0.push_back(0);
    CorrelatorKey bare = CorrelatorKey::make(genus, d);
    CorrelatorKey appended = CorrelatorKey::make(genus, with0);
    if (!bare.stable() || !appended.dimension_ok()) {
        throw std::invalid_argument(
            "string_identity_check expects a stable key with sum d = 3g - 2 + n");
    }
    const Rational lhs = correlator(genus, with0);
    Rational rhs = 0;
    for (size_t j = 0; j < d.size(); ++j) {
        std::vector<int> t = d;
        t[j] -= 1;
        rhs += correlator(genus, std::move(t));
    }
    return lhs == rhs;
}

Rational CorrelatorTable::genus_summed(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    const int s = std::accumulate(d.begin(), d.end(), 0);
    // Dimension fixes the genus: sum d = 3g - 3 + n.
    if ((s + 3 - n) % 3 != 0) return 0;
    const int g = (s + 3 - n) / 3;
    if (g < 0) return 0;
    return correlator(g, d);
}

bool CorrelatorTable::kdv_first_equation_check(const std::vector<int>& K, int max_total) {
    int total = 0;
    for (int k : K) {
        if (k < 0) throw std::invalid_argument("negative index in KdV monomial");
        total += k + 1;
    }
    if (total > max_total) {
        throw std::invalid_argument("KdV monomial exceeds the requested weight bound");
    }

    // d/dt_1 U  at the monomial K:
    std::vector<int> lhs_key = {1, 0, 0};
    lhs_key.insert(lhs_key.end(), K.begin(), K.end());
    const Rational lhs = genus_summed(lhs_key);

    // U d0 U: product rule over position subsets of K.
    Rational rhs = 0;
    const int r = static_cast<int>(K.size());
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> S = {0, 0}, T = {0, 0, 0};
        for (int i = 0; i < r; ++i) (mask >> i & 1u ? S : T).push_back(K[i]);
        rhs += genus_summed(S) * genus_summed(T);
    }
    // (1/12) d0^3 U.
    std::vector<int> third = {0, 0, 0, 0, 0};
    third.insert(third.end(), K.begin(), K.end());
    rhs += Rational(1, 12) * genus_summed(third);

    return lhs == rhs;
}

std::string CorrelatorTable::dump() const {
    std::ostringstream os;
    for (const auto& [key, value] : memo_) {
        os << key.genus << ";";
        for (size_t i = 0; i < key.d.size(); ++i) {
            if (i) os << ",";
            os << key.d[i];
        }
        os << ";" << rational_to_string(value) << "\n";
    }
    return os.str();
}

void CorrelatorTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
    out << dump();
    if (!out) throw std::runtime_error("failed writing cache file: " + path);
}

void CorrelatorTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // a missing cache is an empty cache
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto p1 = line.find(';');
        const auto p2 = line.find(';', p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos) {
            throw std::runtime_error("malformed cache line: " + line);
        }
        CorrelatorKey key;
        key.genus = std::stoi(line.substr(0, p1));
        std::istringstream ds(line.substr(p1 + 1, p2 - p1 - 1));
        std::string tok;
        while (std::getline(ds, tok, ',')) key.d.push_back(std::stoi(tok));
        memo_[std::move(key)] = parse_rational(line.substr(p2 + 1));
    }
}

}  // namespace npoint
