#include "npoint/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace npoint {

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        if (v < 1 || v > static_cast<int>(img.size()) || seen[v - 1]) {
            throw std::invalid_argument("not a permutation of {1..n}");
        }
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img.resize(img.size());
    for (int i = 1; i <= size(); ++i) p.img[img[i - 1] - 1] = i;
    return p;
}

Permutation compose(const Permutation& sigma, const Permutation& rho) {
    if (sigma.size() != rho.size()) throw std::invalid_argument("size mismatch in composition");
    Permutation p;
    p.img.resize(sigma.size());
    for (int i = 1; i <= sigma.size(); ++i) p.img[i - 1] = sigma(rho(i));
    return p;
}

std::vector<Permutation> permutations(int n) {
    if (n < 1) throw std::invalid_argument("permutations requires n >= 1");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation p;
        p.img = img;
        out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<Permutation> permutations_fixing_first(int n) {
    if (n < 1) throw std::invalid_argument("permutations requires n >= 1");
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<Permutation> out;
    do {
        Permutation p;
        p.img.reserve(n);
        p.img.push_back(1);
        p.img.insert(p.img.end(), rest.begin(), rest.end());
        out.push_back(std::move(p));
    } while (std::next_permutation(rest.begin(), rest.end()));
    if (out.empty()) out.push_back(Permutation::identity(1));
    return out;
}

std::vector<Permutation> cyclic_class_reps(int n) {
    // sigma o shift^k runs over the orbit; exactly one member has sigma(1)=1.
    return permutations_fixing_first(n);
}

Permutation cycle_C(int m, int n) {
    if (m < 2 || m > n) throw std::invalid_argument("cycle_C requires 2 <= m <= n");
    Permutation p = Permutation::identity(n);
    p.img[0] = m;
    for (int k = 2; k <= m; ++k) p.img[k - 1] = k - 1;
    return p;
}

std::vector<SetPartition> set_partitions(int n) {
    if (n < 1) throw std::invalid_argument("set_partitions requires n >= 1");
    std::vector<SetPartition> out;
    // Restricted growth strings: element i joins block rgs[i] <= 1 + max so far.
    std::vector<int> rgs(n, 0);
    auto emit = [&] {
        SetPartition p;
        const int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        p.blocks.resize(nblocks);
        for (int i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(i + 1);
        out.push_back(std::move(p));
    };
    auto rec = [&](auto&& self, int i, int maxb) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(maxb, b));
        }
    };
    rec(rec, 1, 0);
    return out;
}

std::vector<CyclicComposition> cyclic_ordered_partitions(int n) {
    std::vector<CyclicComposition> out;
    for (const SetPartition& p : set_partitions(n)) {
        // Block containing 1 stays first; the rest in every order.
        std::vector<std::vector<int>> rest(p.blocks.begin() + 1, p.blocks.end());
        std::vector<int> idx(rest.size());
        std::iota(idx.begin(), idx.end(), 0);
        do {
            CyclicComposition c;
            c.blocks.push_back(p.blocks[0]);
            for (int i : idx) c.blocks.push_back(rest[i]);
            out.push_back(std::move(c));
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return out;
}

void PairVector::add(int j, int k, long delta) {
    if (j == k) throw std::invalid_argument("w_{jj} does not exist");
    if (j > k) {
        std::swap(j, k);
        delta = -delta;
    }
    auto [it, inserted] = coef.emplace(std::make_pair(j, k), delta);
    if (!inserted) {
        it->second += delta;
        if (it->second == 0) coef.erase(it);
    }
}

PairVector a_vector(const Permutation& sigma, const std::set<int>& I, const std::set<int>& J) {
    const int n = sigma.size();
    for (int v = 2; v <= n; ++v) {
        if (I.count(v) + J.count(v) != 1) {
            throw std::invalid_argument("I and J must partition {2..n}");
        }
    }
    if (static_cast<int>(I.size() + J.size()) != n - 1) {
        throw std::invalid_argument("I and J must partition {2..n}");
    }
    PairVector a;
    for (int i : I) {
        for (int l = 1; l < i; ++l) a.add(sigma(l), sigma(i), +1);
    }
    for (int j : J) {
        for (int l = 1; l < j; ++l) a.add(sigma(l), sigma(j), -1);
    }
    return a;
}

Rational q_value(const Permutation& sigma, const std::vector<Rational>& v) {
    const int n = sigma.size();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("value vector size mismatch");
    Rational den = 1;
    for (int j = 1; j < n; ++j) {
        const Rational u = v[sigma(j) - 1] - v[sigma(j + 1) - 1];
        if (u == 0) throw std::domain_error("coincident values give a zero denominator");
        den *= u;
    }
    return Rational(1) / den;
}

}  // namespace npoint
