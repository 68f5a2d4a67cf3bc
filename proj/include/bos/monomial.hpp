#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bos {

// Exponent vector over at most 32 variables, 16 bits per variable.
// Variable 0 sits in the most significant lane of word 0, so comparing the
// words lexicographically is lex order with x0 > x1 > ...
class Monomial {
public:
    static constexpr int kMaxVars = 32;
    static constexpr int kMaxExp = 65535;
    static constexpr int kWords = 8;

    Monomial() = default;
    static Monomial var(int v, int e = 1);

    int exponent(int v) const {
        return int((w_[v >> 2] >> shift(v)) & 0xffff);
    }
    void set_exponent(int v, int e);

    bool is_one() const {
        uint64_t o = 0;
        for (uint64_t w : w_) o |= w;
        return o == 0;
    }
    int degree() const;
    // variables with nonzero exponent, ascending
    std::vector<std::pair<int, int>> terms() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // requires divides(o)
    Monomial quotient_of(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return w_ == o.w_; }
    bool operator!=(const Monomial& o) const { return w_ != o.w_; }
    // lex order, larger means leading
    bool operator<(const Monomial& o) const { return w_ < o.w_; }
    bool operator>(const Monomial& o) const { return o.w_ < w_; }

    std::size_t hash() const;
    const std::array<uint64_t, kWords>& words() const { return w_; }

private:
    static int shift(int v) { return (3 - (v & 3)) * 16; }
    std::array<uint64_t, kWords> w_{};
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace bos
