#include "bos/monomial.hpp"

#include <stdexcept>

namespace bos {

namespace {
constexpr uint64_t kHigh = 0x8000800080008000ULL;
constexpr uint64_t kLane = 0xffff;

void check_var(int v) {
    if (v < 0 || v >= Monomial::kMaxVars)
        throw std::out_of_range("monomial: variable id out of range (max 32 variables)");
}
} // namespace

Monomial Monomial::var(int v, int e) {
    Monomial m;
    m.set_exponent(v, e);
    return m;
}

void Monomial::set_exponent(int v, int e) {
    check_var(v);
    if (e < 0 || e > kMaxExp) throw std::overflow_error("monomial: exponent out of range");
    uint64_t& w = w_[v >> 2];
    w &= ~(kLane << shift(v));
    w |= uint64_t(e) << shift(v);
}

int Monomial::degree() const {
    int d = 0;
    for (uint64_t w : w_)
        for (; w; w >>= 16) d += int(w & kLane);
    return d;
}

std::vector<std::pair<int, int>> Monomial::terms() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < kWords; ++i) {
        if (!w_[i]) continue;
        for (int v = 4 * i; v < 4 * i + 4; ++v) {
            int e = exponent(v);
            if (e) out.emplace_back(v, e);
        }
    }
    return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kWords; ++i) {
        uint64_t a = w_[i], b = o.w_[i], s = a + b;
        // carry out of the top bit of any lane means that lane overflowed
        uint64_t carry = ((a & b) | ((a | b) & ~s)) & kHigh;
        if (carry) throw std::overflow_error("monomial: exponent overflow");
        r.w_[i] = s;
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < kWords; ++i) {
        uint64_t a = w_[i], b = o.w_[i];
        if (!a) continue;
        for (int s = 0; s < 64; s += 16)
            if (((a >> s) & kLane) > ((b >> s) & kLane)) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = o.w_[i] - w_[i];
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kWords; ++i) {
        uint64_t a = w_[i], b = o.w_[i], m = 0;
        if (a && b)
            for (int s = 0; s < 64; s += 16) {
                uint64_t x = (a >> s) & kLane, y = (b >> s) & kLane;
                m |= (x < y ? x : y) << s;
            }
        r.w_[i] = m;
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kWords; ++i) {
        uint64_t a = w_[i], b = o.w_[i], m = 0;
        for (int s = 0; s < 64; s += 16) {
            uint64_t x = (a >> s) & kLane, y = (b >> s) & kLane;
            m |= (x > y ? x : y) << s;
        }
        r.w_[i] = m;
    }
    return r;
}

std::size_t Monomial::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t w : w_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 31;
    }
    return std::size_t(h);
}

} // namespace bos
