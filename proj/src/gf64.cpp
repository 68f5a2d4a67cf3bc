#include "bos/gf64.hpp"

#include <stdexcept>
#include <utility>

#if defined(__PCLMUL__)
#include <smmintrin.h>
#include <wmmintrin.h>
#endif

namespace bos::gf64 {

namespace {

inline void clmul(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
#if defined(__PCLMUL__)
    __m128i x = _mm_set_epi64x(0, (long long)a);
    __m128i y = _mm_set_epi64x(0, (long long)b);
    __m128i p = _mm_clmulepi64_si128(x, y, 0);
    lo = (uint64_t)_mm_cvtsi128_si64(p);
    hi = (uint64_t)_mm_extract_epi64(p, 1);
#else
    lo = hi = 0;
    for (int i = 0; i < 64; ++i)
        if ((b >> i) & 1) {
            lo ^= a << i;
            if (i) hi ^= a >> (64 - i);
        }
#endif
}

inline uint64_t reduce(uint64_t lo, uint64_t hi) {
    // t^64 = t^4 + t^3 + t + 1; fold hi twice
    uint64_t over = (hi >> 60) ^ (hi >> 61) ^ (hi >> 63);
    hi ^= over;
    return lo ^ hi ^ (hi << 1) ^ (hi << 3) ^ (hi << 4);
}

} // namespace

elem mul(elem a, elem b) {
    uint64_t lo, hi;
    clmul(a, b, lo, hi);
    return reduce(lo, hi);
}

elem sqr(elem a) { return mul(a, a); }

elem pow(elem a, uint64_t e) {
    elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

elem inv(elem a) {
    if (!a) throw std::domain_error("gf64: inverse of zero");
    // a^(2^64 - 2) via an addition chain on 2^k - 1 exponents
    elem x = a;            // a^(2^1 - 1)
    for (int k = 1; k < 63; ++k) x = mul(sqr(x), a); // a^(2^(k+1) - 1)
    return sqr(x);         // a^(2^64 - 2)
}

elem t_pow(long long n) {
    if (n >= 0) return pow(2, uint64_t(n));
    return inv(pow(2, uint64_t(-n)));
}

int rank(std::vector<elem>& a, int rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[std::size_t(i) * cols + c]) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < cols; ++j) std::swap(a[std::size_t(p) * cols + j], a[std::size_t(r) * cols + j]);
        elem* pr = &a[std::size_t(r) * cols];
        elem iv = inv(pr[c]);
        for (int j = c; j < cols; ++j) pr[j] = mul(pr[j], iv);
        for (int i = r + 1; i < rows; ++i) {
            elem* ri = &a[std::size_t(i) * cols];
            elem f = ri[c];
            if (!f) continue;
            for (int j = c; j < cols; ++j)
                if (pr[j]) ri[j] ^= mul(f, pr[j]);
        }
        ++r;
    }
    return r;
}

} // namespace bos::gf64
