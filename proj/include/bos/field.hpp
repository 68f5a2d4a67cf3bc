#pragma once

#include "bos/poly2.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bos {

// Element of F2(x0, x1, ...): num/den with den != 0.
// Univariate fractions are fully reduced; multivariate ones only by monomial
// content and exact cofactor checks, so compare with ==, never by fields.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Poly2 num) : num_(std::move(num)), den_(Poly2::one()) {}
    FieldElement(Poly2 num, Poly2 den);
    static FieldElement zero() { return FieldElement(); }
    static FieldElement one() { return FieldElement(Poly2::one()); }
    static FieldElement var(int v) { return FieldElement(Poly2::var(v)); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const { return *this + o; }
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str(const Poly2::Namer& name = {}) const;

private:
    void normalize();
    Poly2 num_;
    Poly2 den_ = Poly2::one();
};

// 1/(1+m) for a monomial m != 1
FieldElement inv_one_plus(const Poly2& m);

// Fraction num / (m * prod atom_i^k_i) with the denominator kept factored.
// Sums take the lcm atom by atom and cancel atoms that divide the
// numerator, so sums of many 1/(1+monomial) terms stay small. Atoms are
// compared by equality only; the result is a correct fraction either way.
class FactoredFraction {
public:
    FactoredFraction() = default;
    explicit FactoredFraction(Poly2 num) : num_(std::move(num)) {}
    static FactoredFraction one() { return FactoredFraction(Poly2::one()); }
    // num / atom
    static FactoredFraction ratio(Poly2 num, const Poly2& atom);
    static FactoredFraction from(const FieldElement& a) { return ratio(a.num(), a.den()); }

    bool is_zero() const { return num_.is_zero(); }
    const Poly2& num() const { return num_; }
    Poly2 den() const; // expanded
    FieldElement expand() const { return FieldElement(num_, den()); }

    FactoredFraction operator+(const FactoredFraction& o) const;
    FactoredFraction operator-(const FactoredFraction& o) const { return *this + o; }
    FactoredFraction operator*(const FactoredFraction& o) const;
    FactoredFraction operator/(const FactoredFraction& o) const;
    FactoredFraction inverse() const;
    FactoredFraction& operator+=(const FactoredFraction& o) { return *this = *this + o; }
    FactoredFraction& operator*=(const FactoredFraction& o) { return *this = *this * o; }
    bool operator==(const FactoredFraction& o) const { return (*this + o).is_zero(); }
    bool operator!=(const FactoredFraction& o) const { return !(*this == o); }

private:
    void add_atom(const Poly2& a, int k);
    void reduce();
    Poly2 num_;
    Monomial mono_;                             // monomial part of the denominator
    std::vector<std::pair<Poly2, int>> atoms_; // non-monomial factors
};

// 1/(1+m) as a factored fraction
FactoredFraction factored_inv_one_plus(const Poly2& m);

} // namespace bos
