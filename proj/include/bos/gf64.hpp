#pragma once

#include <cstdint>
#include <vector>

namespace bos::gf64 {

// GF(2^64) = F2[t]/(t^64 + t^4 + t^3 + t + 1). Elements are bit vectors of
// polynomial coefficients; the class of t is 2.
using elem = uint64_t;

constexpr uint64_t kModulusLow = 0x1b; // t^4 + t^3 + t + 1

elem mul(elem a, elem b);
elem sqr(elem a);
elem pow(elem a, uint64_t e);
elem inv(elem a); // throws on zero

// t^n in the field, for any integer n (negative means inverse powers)
elem t_pow(long long n);

// rank by Gaussian elimination, destroys its input (row-major, rows x cols)
int rank(std::vector<elem>& a, int rows, int cols);

} // namespace bos::gf64
