#include "bos/poly2.hpp"

#include <algorithm>
#include <stdexcept>

namespace bos {

namespace {
bool desc(const Monomial& a, const Monomial& b) { return a > b; }

// merge two descending lists, dropping common terms
std::vector<Monomial> sym_diff(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    std::vector<Monomial> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (a[i] > b[j]) {
            r.push_back(a[i++]);
        } else {
            r.push_back(b[j++]);
        }
    }
    r.insert(r.end(), a.begin() + i, a.end());
    r.insert(r.end(), b.begin() + j, b.end());
    return r;
}
} // namespace

std::string default_var_name(int v) { return "x" + std::to_string(v); }

Poly2 Poly2::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), desc);
    Poly2 p;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) & 1) p.t_.push_back(terms[i]);
        i = j;
    }
    return p;
}

int Poly2::total_degree() const {
    int d = -1;
    for (const auto& m : t_) d = std::max(d, m.degree());
    return d;
}

int Poly2::degree_in(int v) const {
    int d = -1;
    for (const auto& m : t_) d = std::max(d, m.exponent(v));
    return d;
}

Monomial Poly2::content() const {
    if (t_.empty()) return Monomial();
    Monomial g = t_[0];
    for (std::size_t i = 1; i < t_.size() && !g.is_one(); ++i) g = g.gcd(t_[i]);
    return g;
}

uint64_t Poly2::support() const {
    uint64_t s = 0;
    for (const auto& m : t_)
        for (auto [v, e] : m.terms()) s |= uint64_t(1) << v;
    return s;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r;
    r.t_ = sym_diff(t_, o.t_);
    return r;
}

Poly2 Poly2::operator*(const Monomial& m) const {
    Poly2 r;
    r.t_.reserve(t_.size());
    for (const auto& x : t_) r.t_.push_back(x * m);
    return r; // multiplication by a monomial preserves lex order
}

Poly2 Poly2::operator*(const Poly2& o) const {
    if (t_.empty() || o.t_.empty()) return Poly2();
    if (o.t_.size() == 1) return *this * o.t_[0];
    if (t_.size() == 1) return o * t_[0];
    const Poly2& big = t_.size() >= o.t_.size() ? *this : o;
    const Poly2& small = t_.size() >= o.t_.size() ? o : *this;
    // each row big*m is already sorted; merge like a binary counter so only
    // O(log) partial sums are alive at once
    std::vector<std::pair<std::size_t, std::vector<Monomial>>> stack; // (rows merged, terms)
    for (const auto& m : small.t_) {
        std::pair<std::size_t, std::vector<Monomial>> cur{1, (big * m).t_};
        while (!stack.empty() && stack.back().first == cur.first) {
            cur.second = sym_diff(stack.back().second, cur.second);
            cur.first *= 2;
            stack.pop_back();
        }
        stack.push_back(std::move(cur));
    }
    while (stack.size() > 1) {
        auto top = std::move(stack.back());
        stack.pop_back();
        stack.back().second = sym_diff(stack.back().second, top.second);
    }
    Poly2 r;
    r.t_ = std::move(stack[0].second);
    return r;
}

Poly2 Poly2::pow(unsigned e) const {
    Poly2 r = one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool Poly2::divide_exact(const Poly2& d, Poly2& q) const {
    if (d.is_zero()) throw std::domain_error("poly2: division by zero");
    q = Poly2();
    if (is_zero()) return true;
    if (d.t_.size() == 1) {
        std::vector<Monomial> out;
        out.reserve(t_.size());
        for (const auto& m : t_) {
            if (!d.t_[0].divides(m)) return false;
            out.push_back(d.t_[0].quotient_of(m));
        }
        q.t_ = std::move(out);
        return true;
    }
    const Monomial& ld = d.leading();
    std::vector<Monomial> r = t_;
    std::vector<Monomial> qt;
    while (!r.empty()) {
        if (!ld.divides(r[0])) return false;
        Monomial c = ld.quotient_of(r[0]);
        qt.push_back(c);
        r = sym_diff(r, (d * c).t_);
    }
    q.t_ = std::move(qt); // quotient terms come out in decreasing order
    return true;
}

void Poly2::divrem(const Poly2& d, Poly2& q, Poly2& rem) const {
    if (d.is_zero()) throw std::domain_error("poly2: division by zero");
    const Monomial& ld = d.leading();
    std::vector<Monomial> r = t_, qt, rt;
    while (!r.empty()) {
        if (!ld.divides(r[0])) {
            rt.push_back(r[0]);
            r.erase(r.begin());
            continue;
        }
        Monomial c = ld.quotient_of(r[0]);
        qt.push_back(c);
        r = sym_diff(r, (d * c).t_);
    }
    q = from_terms(qt);
    rem = from_terms(rt);
}

Poly2 Poly2::div_monomial(const Monomial& m) const {
    Poly2 r;
    r.t_.reserve(t_.size());
    for (const auto& x : t_) r.t_.push_back(m.quotient_of(x));
    return r;
}

Poly2 Poly2::substitute(const std::map<int, Poly2>& image) const {
    std::map<std::pair<int, int>, Poly2> cache;
    Poly2 out;
    for (const auto& m : t_) {
        Poly2 term = one();
        Monomial rest;
        for (auto [v, e] : m.terms()) {
            auto it = image.find(v);
            if (it == image.end()) {
                rest.set_exponent(v, e);
                continue;
            }
            auto key = std::make_pair(v, e);
            auto c = cache.find(key);
            if (c == cache.end()) c = cache.emplace(key, it->second.pow(unsigned(e))).first;
            term = term * c->second;
        }
        out += term * rest;
    }
    return out;
}

std::string Poly2::str(const Namer& name) const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        if (i) s += " + ";
        auto tv = t_[i].terms();
        if (tv.empty()) {
            s += "1";
            continue;
        }
        for (std::size_t j = 0; j < tv.size(); ++j) {
            if (j) s += "*";
            s += name ? name(tv[j].first) : default_var_name(tv[j].first);
            if (tv[j].second != 1) s += "^" + std::to_string(tv[j].second);
        }
    }
    return s;
}

std::size_t Poly2::hash() const {
    std::size_t h = t_.size();
    for (const auto& m : t_) h = h * 1000003u ^ m.hash();
    return h;
}

Poly2 univariate_gcd(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
        Poly2 q, r;
        a.divrem(b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a; // over F2 every nonzero polynomial is monic
}

} // namespace bos
