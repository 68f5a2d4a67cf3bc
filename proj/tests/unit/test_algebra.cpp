#include "doctest.h"

#include "bos/field.hpp"
#include "bos/gf64.hpp"
#include "bos/matrix.hpp"
#include "bos/specialize.hpp"

#include <random>

using namespace bos;

namespace {

Poly2 rand_poly(std::mt19937_64& rng, int nvars, int maxdeg, int terms) {
    std::vector<Monomial> t;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (int v = 0; v < nvars; ++v) m.set_exponent(v, int(rng() % (maxdeg + 1)));
        t.push_back(m);
    }
    return Poly2::from_terms(t);
}

FieldElement rand_fe(std::mt19937_64& rng, int nvars) {
    Poly2 d;
    while (d.is_zero()) d = rand_poly(rng, nvars, 2, 3);
    return FieldElement(rand_poly(rng, nvars, 2, 3), d);
}

} // namespace

TEST_CASE("monomial lanes") {
    Monomial a = Monomial::var(0, 3) * Monomial::var(31, 700);
    CHECK(a.exponent(0) == 3);
    CHECK(a.exponent(31) == 700);
    CHECK(a.degree() == 703);
    CHECK(Monomial::var(0) > Monomial::var(1, 9));
    CHECK_THROWS(Monomial::var(2, 40000) * Monomial::var(2, 40000));
    CHECK(Monomial::var(1, 2).divides(a * Monomial::var(1, 5)));
    CHECK_FALSE(Monomial::var(1, 6).divides(Monomial::var(1, 5)));
}

TEST_CASE("char 2 identities") {
    Poly2 x = Poly2::var(0), one = Poly2::one();
    CHECK((one + x + one + x).is_zero());
    CHECK((one + x) * (one + x) == one + Poly2::var(0, 2));
    FieldElement a = inv_one_plus(x), b = inv_one_plus(Poly2::var(1));
    FieldElement closed(x + Poly2::var(1), (one + x) * (one + Poly2::var(1)));
    CHECK(a + b == closed);
    CHECK((a + a).is_zero());
    CHECK_THROWS(FieldElement::one() / FieldElement::zero());
}

TEST_CASE("univariate fractions are reduced") {
    Poly2 t = Poly2::var(0), one = Poly2::one();
    FieldElement f((one + t) * (one + t + Poly2::var(0, 2)), (one + t) * t);
    CHECK(f.den() == t);
    CHECK(f.num() == one + t + Poly2::var(0, 2));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        FieldElement a = rand_fe(rng, 3), b = rand_fe(rng, 3), c = rand_fe(rng, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + a).is_zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement::one());
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937_64 rng(5);
    SpecializationMap s = power_map({1, 2, 5}, 0);
    int checked = 0;
    for (int it = 0; it < 40; ++it) {
        FieldElement a = rand_fe(rng, 3), b = rand_fe(rng, 3);
        try {
            FieldElement sa = specialize(a, s), sb = specialize(b, s);
            CHECK(specialize(a * b, s) == sa * sb);
            CHECK(specialize(a + b, s) == sa + sb);
            ++checked;
        } catch (const SpecializationPole&) {
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("specialize examples") {
    Poly2 x = Poly2::var(0), y = Poly2::var(1), one = Poly2::one();
    SpecializationMap s;
    s.assign[0] = Poly2::var(5);
    s.assign[1] = Poly2::var(5, 2);
    CHECK(specialize(inv_one_plus(x), s) == inv_one_plus(Poly2::var(5)));
    FieldElement q(x + y, one + x * y);
    FieldElement want(Poly2::var(5) + Poly2::var(5, 2), one + Poly2::var(5, 3));
    CHECK(specialize(q, s) == want);
    SpecializationMap bad;
    bad.assign[0] = one;
    CHECK_THROWS_AS(specialize(inv_one_plus(x), bad), SpecializationPole);
}

TEST_CASE("power exponents are distinct and seeded") {
    auto p = power_exponents(20, 7);
    auto q = power_exponents(20, 7);
    CHECK(p == q);
    std::set<int> s(p.begin(), p.end());
    CHECK(s.size() == 20);
    CHECK(*s.begin() >= 1);
    CHECK(*s.rbegin() <= 64);
    CHECK(power_exponents(20, 8) != p);
}

TEST_CASE("gf64 arithmetic") {
    using namespace gf64;
    // t^64 = t^4 + t^3 + t + 1
    CHECK(t_pow(64) == 0x1bULL);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        elem a = rng() | 1, b = rng(), c = rng();
        CHECK(mul(a, b ^ c) == (mul(a, b) ^ mul(a, c)));
        CHECK(mul(a, inv(a)) == 1);
        CHECK(sqr(a) == mul(a, a));
    }
    CHECK(mul(t_pow(-5), t_pow(5)) == 1);
}

TEST_CASE("gf64 modulus is irreducible") {
    // t^(2^64) = t and gcd(t^(2^32) - t, modulus) = 1 certify irreducibility
    // of a degree-64 polynomial (the only maximal divisor of 64 is 32).
    using namespace gf64;
    elem x = 2;
    for (int i = 0; i < 64; ++i) x = sqr(x);
    CHECK(x == 2);
    elem y = 2;
    for (int i = 0; i < 32; ++i) y = sqr(y);
    auto as_poly = [](elem e) {
        std::vector<Monomial> t;
        for (int i = 0; i < 64; ++i)
            if ((e >> i) & 1) t.push_back(Monomial::var(0, i));
        return Poly2::from_terms(t);
    };
    Poly2 modulus = as_poly(kModulusLow) + Poly2::var(0, 64);
    Poly2 g = univariate_gcd(as_poly(y) + Poly2::var(0), modulus);
    CHECK(g.is_one());
}

TEST_CASE("rank basics and kernel") {
    FMatrix id(3, FVector(3));
    for (int i = 0; i < 3; ++i) id[i][i] = FieldElement::one();
    CHECK(rank(id) == 3);
    FMatrix z(2, FVector(4));
    CHECK(rank(z) == 0);
    Poly2 t = Poly2::var(0), one = Poly2::one();
    FMatrix m = {{FieldElement(t), FieldElement(one), FieldElement(t + one)},
                 {FieldElement(t * t), FieldElement(t), FieldElement(t * t + t)}};
    CHECK(rank(m) == 1);
    auto ker = kernel_basis(m, 3);
    CHECK(ker.size() == 2);
    for (auto& v : ker)
        for (auto& x : mat_vec(m, v)) CHECK(x.is_zero());
}

TEST_CASE("row space meet") {
    FMatrix id(3, FVector(3));
    for (int i = 0; i < 3; ++i) id[i][i] = FieldElement::one();
    auto b = row_space_meet(id, 3, {1, 2});
    CHECK(b.size() == 2);
    FMatrix zc = {{FieldElement::one(), FieldElement::zero()}, {FieldElement::one(), FieldElement::zero()}};
    CHECK(row_space_meet(zc, 2, {1}).empty());
    Poly2 t = Poly2::var(0), one = Poly2::one();
    FMatrix m = {{FieldElement(one), FieldElement(t), FieldElement::zero()},
                 {FieldElement(one), FieldElement::zero(), FieldElement(t)}};
    auto c = row_space_meet(m, 3, {1, 2});
    REQUIRE(c.size() == 1);
    CHECK(c[0][0].is_zero());
    CHECK(c[0][1] == c[0][2]);
}
