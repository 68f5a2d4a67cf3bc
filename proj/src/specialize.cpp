#include "bos/specialize.hpp"

#include <numeric>
#include <random>

namespace bos {

Poly2 specialize(const Poly2& p, const SpecializationMap& s) {
    uint64_t sup = p.support();
    for (int v = 0; v < 64; ++v)
        if (((sup >> v) & 1) && !s.assign.count(v) && !s.keep_free.count(v))
            throw std::invalid_argument("specialize: variable " + default_var_name(v) + " neither assigned nor kept free");
    return p.substitute(s.assign);
}

FieldElement specialize(const FieldElement& a, const SpecializationMap& s) {
    Poly2 n = specialize(a.num(), s);
    Poly2 d = specialize(a.den(), s);
    if (d.is_zero()) throw SpecializationPole("specialize: denominator " + a.den().str() + " vanishes");
    return FieldElement(n, d);
}

std::vector<int> power_exponents(int nvars, uint64_t seed, int range) {
    if (range < nvars) range = nvars;
    std::vector<int> pool(range);
    std::iota(pool.begin(), pool.end(), 1);
    std::mt19937_64 rng(seed);
    // partial Fisher-Yates; modulo reduction keeps the draw platform independent
    for (int i = 0; i < nvars; ++i) {
        uint64_t j = i + rng() % uint64_t(range - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(nvars);
    return pool;
}

SpecializationMap power_map(const std::vector<int>& exps, int t_var) {
    SpecializationMap s;
    for (std::size_t i = 0; i < exps.size(); ++i) s.assign[int(i)] = Poly2::var(t_var, exps[i]);
    return s;
}

gf64::elem evaluate(const Poly2& p, const std::vector<gf64::elem>& vals) {
    gf64::elem s = 0;
    for (const auto& m : p.terms()) {
        gf64::elem t = 1;
        for (auto [v, e] : m.terms()) {
            if (v >= int(vals.size())) throw std::invalid_argument("evaluate: no value for " + default_var_name(v));
            t = gf64::mul(t, gf64::pow(vals[v], uint64_t(e)));
        }
        s ^= t;
    }
    return s;
}

gf64::elem evaluate(const FieldElement& a, const std::vector<gf64::elem>& vals) {
    gf64::elem d = evaluate(a.den(), vals);
    if (d == 0) throw SpecializationPole("evaluate: denominator vanishes");
    return gf64::mul(evaluate(a.num(), vals), gf64::inv(d));
}

} // namespace bos
