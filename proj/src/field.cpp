#include "bos/field.hpp"

#include <algorithm>
#include <bit>

namespace bos {

FieldElement::FieldElement(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("field: zero denominator");
    normalize();
}

void FieldElement::normalize() {
    if (num_.is_zero()) {
        den_ = Poly2::one();
        return;
    }
    Monomial g = num_.content().gcd(den_.content());
    if (!g.is_one()) {
        num_ = num_.div_monomial(g);
        den_ = den_.div_monomial(g);
    }
    if (den_.is_one()) return;
    uint64_t sn = num_.support(), sd = den_.support();
    uint64_t s = sn | sd;
    if (std::popcount(s) <= 1) {
        Poly2 h = univariate_gcd(num_, den_);
        if (!h.is_one()) {
            Poly2 q;
            num_.divide_exact(h, q);
            num_ = q;
            den_.divide_exact(h, q);
            den_ = q;
        }
        return;
    }
    if (den_.is_monomial()) return;
    Poly2 q;
    if ((sd & ~sn) == 0 && num_.size() >= den_.size() && num_.divide_exact(den_, q)) {
        num_ = std::move(q);
        den_ = Poly2::one();
    } else if ((sn & ~sd) == 0 && den_.size() >= num_.size() && den_.divide_exact(num_, q)) {
        num_ = Poly2::one();
        den_ = std::move(q);
    }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return FieldElement(num_ + o.num_, den_);
    if (den_.is_one()) return FieldElement(num_ * o.den_ + o.num_, o.den_);
    if (o.den_.is_one()) return FieldElement(num_ + o.num_ * den_, den_);
    // cheap common factor: if one denominator divides the other
    Poly2 q;
    if (den_.size() >= o.den_.size() && den_.divide_exact(o.den_, q))
        return FieldElement(num_ + o.num_ * q, den_);
    if (o.den_.size() >= den_.size() && o.den_.divide_exact(den_, q))
        return FieldElement(num_ * q + o.num_, o.den_);
    return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (is_zero() || o.is_zero()) return FieldElement();
    // cross-cancel before multiplying
    Poly2 a = num_, b = den_, c = o.num_, d = o.den_, q;
    if (!d.is_one() && a.divide_exact(d, q)) {
        a = q;
        d = Poly2::one();
    }
    if (!b.is_one() && c.divide_exact(b, q)) {
        c = q;
        b = Poly2::one();
    }
    return FieldElement(a * c, b * d);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("field: inverse of zero");
    FieldElement r;
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

std::string FieldElement::str(const Poly2::Namer& name) const {
    if (den_.is_one()) return num_.str(name);
    std::string n = num_.str(name), d = den_.str(name);
    if (num_.size() > 1) n = "(" + n + ")";
    if (den_.size() > 1 || den_.leading().terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

FieldElement inv_one_plus(const Poly2& m) {
    return FieldElement(Poly2::one(), Poly2::one() + m);
}

FactoredFraction FactoredFraction::ratio(Poly2 num, const Poly2& atom) {
    if (atom.is_zero()) throw std::domain_error("field: zero denominator");
    FactoredFraction r(std::move(num));
    if (r.is_zero()) return r;
    r.add_atom(atom, 1);
    r.reduce();
    return r;
}

void FactoredFraction::add_atom(const Poly2& a0, int k) {
    Monomial c = a0.content();
    Poly2 a = c.is_one() ? a0 : a0.div_monomial(c);
    for (int i = 0; i < k; ++i) mono_ = mono_ * c;
    if (a.is_one()) return;
    for (auto& [b, e] : atoms_)
        if (b == a) {
            e += k;
            return;
        }
    atoms_.push_back({a, k});
}

void FactoredFraction::reduce() {
    if (num_.is_zero()) {
        mono_ = Monomial();
        atoms_.clear();
        return;
    }
    Monomial g = num_.content().gcd(mono_);
    if (!g.is_one()) {
        num_ = num_.div_monomial(g);
        mono_ = g.quotient_of(mono_);
    }
    for (auto& [a, e] : atoms_) {
        Poly2 q;
        while (e > 0 && num_.size() >= a.size() && num_.divide_exact(a, q)) {
            num_ = std::move(q);
            --e;
        }
    }
    std::erase_if(atoms_, [](const auto& x) { return x.second == 0; });
}

Poly2 FactoredFraction::den() const {
    Poly2 d(mono_);
    for (const auto& [a, e] : atoms_)
        for (int i = 0; i < e; ++i) d = d * a;
    return d;
}

FactoredFraction FactoredFraction::operator+(const FactoredFraction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    FactoredFraction r;
    r.mono_ = mono_.lcm(o.mono_);
    r.atoms_ = atoms_;
    for (const auto& [b, e] : o.atoms_) {
        bool found = false;
        for (auto& [a, k] : r.atoms_)
            if (a == b) {
                k = std::max(k, e);
                found = true;
            }
        if (!found) r.atoms_.push_back({b, e});
    }
    auto cofactor = [&](const FactoredFraction& x) {
        Poly2 c(x.mono_.quotient_of(r.mono_));
        for (const auto& [a, k] : r.atoms_) {
            int have = 0;
            for (const auto& [b, e] : x.atoms_)
                if (a == b) have = e;
            for (int i = have; i < k; ++i) c = c * a;
        }
        return c;
    };
    r.num_ = num_ * cofactor(*this) + o.num_ * cofactor(o);
    r.reduce();
    return r;
}

FactoredFraction FactoredFraction::operator*(const FactoredFraction& o) const {
    if (is_zero() || o.is_zero()) return {};
    FactoredFraction r(num_ * o.num_);
    r.mono_ = mono_ * o.mono_;
    r.atoms_ = atoms_;
    for (const auto& [b, e] : o.atoms_) r.add_atom(b, e);
    r.reduce();
    return r;
}

FactoredFraction FactoredFraction::inverse() const {
    if (is_zero()) throw std::domain_error("field: inverse of zero");
    FactoredFraction r(den());
    r.add_atom(num_, 1);
    r.reduce();
    return r;
}

FactoredFraction FactoredFraction::operator/(const FactoredFraction& o) const {
    if (o.is_zero()) throw std::domain_error("field: division by zero");
    if (is_zero()) return {};
    // (n1/d1) / (n2/d2) = n1 d2 / (d1 n2), keeping d1 factored
    FactoredFraction r(num_ * o.den());
    r.mono_ = mono_;
    r.atoms_ = atoms_;
    r.add_atom(o.num_, 1);
    r.reduce();
    return r;
}

FactoredFraction factored_inv_one_plus(const Poly2& m) {
    return FactoredFraction::ratio(Poly2::one(), Poly2::one() + m);
}

} // namespace bos
