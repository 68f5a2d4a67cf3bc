// Independent oracles shared by the unit and acceptance tests.
#pragma once

#include "bos/field.hpp"
#include "bos/matrix.hpp"
#include "bos/specialize.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using bos::FieldElement;
using bos::FMatrix;
using bos::Monomial;
using bos::Poly2;

// Leibniz expansion; fine up to 5x5
inline FieldElement det_leibniz(const FMatrix& a) {
    int n = int(a.size());
    if (n == 0) return FieldElement::one();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    FieldElement sum;
    do {
        FieldElement t = FieldElement::one();
        for (int i = 0; i < n && !t.is_zero(); ++i) t = t * a[i][p[i]];
        sum = sum + t; // signs vanish in characteristic 2
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = from; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// largest k with a nonzero k x k minor
inline int minor_rank(const FMatrix& a) {
    int r = int(a.size()), c = r ? int(a[0].size()) : 0;
    for (int k = std::min(r, c); k > 0; --k)
        for (const auto& rows : subsets(r, k))
            for (const auto& cols : subsets(c, k)) {
                FMatrix m(k, std::vector<FieldElement>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) m[i][j] = a[rows[i]][cols[j]];
                if (!det_leibniz(m).is_zero()) return k;
            }
    return 0;
}

inline Poly2 random_poly(std::mt19937_64& rng, int nvars, int terms) {
    std::vector<Monomial> t;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (int v = 0; v < nvars; ++v) m.set_exponent(v, int(rng() % 3));
        t.push_back(m);
    }
    return Poly2::from_terms(t);
}

// r x c with rank at most `inner` (product of two random factors), entries
// in F2(x0, x1, x2) with a sprinkling of zeros and fractions. Fractions only
// in the left factor: sums of products of unrelated fractions blow up the
// unreduced denominators without testing anything new.
inline FMatrix random_symbolic(std::mt19937_64& rng, int r, int c, int inner) {
    auto entry = [&](bool frac) -> FieldElement {
        if (rng() % 4 == 0) return FieldElement();
        Poly2 num = random_poly(rng, 3, 1 + int(rng() % 2));
        if (!frac || rng() % 3) return FieldElement(num);
        Poly2 den;
        while (den.is_zero()) den = random_poly(rng, 3, 2);
        return FieldElement(num, den);
    };
    FMatrix a(r, std::vector<FieldElement>(inner)), b(inner, std::vector<FieldElement>(c));
    for (auto& row : a)
        for (auto& x : row) x = entry(true);
    for (auto& row : b)
        for (auto& x : row) x = entry(false);
    FMatrix m(r, std::vector<FieldElement>(c));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            for (int k = 0; k < inner; ++k) m[i][j] = m[i][j] + a[i][k] * b[k][j];
    return m;
}

// rank after x_i -> t^{p_i}, t a fresh variable
inline int specialized_rank(const FMatrix& m, uint64_t seed, int nvars = 3) {
    auto exps = bos::power_exponents(nvars, seed);
    auto map = bos::power_map(exps, nvars);
    FMatrix s = m;
    for (auto& row : s)
        for (auto& x : row) x = bos::specialize(x, map);
    return bos::rank(s);
}

} // namespace oracle
