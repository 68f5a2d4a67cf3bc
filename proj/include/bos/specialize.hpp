#pragma once

#include "bos/field.hpp"
#include "bos/gf64.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace bos {

struct SpecializationPole : std::domain_error {
    using std::domain_error::domain_error;
};

// Substitution homomorphism: var -> Poly2 in the target variables.
// Variables listed in keep_free are left alone; any other unassigned
// variable is an error at application time.
struct SpecializationMap {
    std::map<int, Poly2> assign;
    std::set<int> keep_free;
};

Poly2 specialize(const Poly2& p, const SpecializationMap& s);
FieldElement specialize(const FieldElement& a, const SpecializationMap& s);

// Exponents p_i for x_i -> t^{p_i}: drawn without repetition from 1..range
// (range grows to nvars if needed) by a seeded mt19937_64.
std::vector<int> power_exponents(int nvars, uint64_t seed, int range = 64);

// x_i -> t^{exps[i]} with t the variable id t_var
SpecializationMap power_map(const std::vector<int>& exps, int t_var);

// value at var i -> vals[i] in GF(2^64)
gf64::elem evaluate(const Poly2& p, const std::vector<gf64::elem>& vals);
// throws SpecializationPole when the denominator vanishes
gf64::elem evaluate(const FieldElement& a, const std::vector<gf64::elem>& vals);

} // namespace bos
