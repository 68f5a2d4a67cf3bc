#pragma once

#include "bos/monomial.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bos {

// Polynomial over F2 stored as a set of monomials (coefficients are all 1).
// Terms are kept sorted in decreasing lex order; the first term leads.
class Poly2 {
public:
    Poly2() = default;
    explicit Poly2(const Monomial& m) : t_{m} {}
    static Poly2 one() { return Poly2(Monomial()); }
    static Poly2 var(int v, int e = 1) { return Poly2(Monomial::var(v, e)); }
    // builds from an arbitrary list; duplicate monomials cancel in pairs
    static Poly2 from_terms(std::vector<Monomial> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_[0].is_one(); }
    bool is_monomial() const { return t_.size() == 1; }
    std::size_t size() const { return t_.size(); }
    const std::vector<Monomial>& terms() const { return t_; }
    const Monomial& leading() const { return t_.front(); }
    int total_degree() const;
    int degree_in(int v) const;
    // gcd of all terms
    Monomial content() const;
    // bitmask of variables that occur
    uint64_t support() const;

    Poly2 operator+(const Poly2& o) const;
    Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(const Monomial& m) const;
    Poly2 pow(unsigned e) const;
    bool operator==(const Poly2& o) const { return t_ == o.t_; }
    bool operator!=(const Poly2& o) const { return t_ != o.t_; }

    // exact division; returns false if d does not divide *this
    bool divide_exact(const Poly2& d, Poly2& q) const;
    // division with remainder in lex order (meaningful for univariate input)
    void divrem(const Poly2& d, Poly2& q, Poly2& r) const;
    // divides every term by m (m must divide the content)
    Poly2 div_monomial(const Monomial& m) const;

    // substitute variable v -> image[v]; variables without image stay
    Poly2 substitute(const std::map<int, Poly2>& image) const;

    using Namer = std::function<std::string(int)>;
    std::string str(const Namer& name = {}) const;

    std::size_t hash() const;

private:
    std::vector<Monomial> t_;
};

// gcd of univariate polynomials in the same single variable (or constants)
Poly2 univariate_gcd(Poly2 a, Poly2 b);

std::string default_var_name(int v);

} // namespace bos
