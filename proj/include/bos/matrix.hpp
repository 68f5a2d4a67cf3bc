#pragma once

#include "bos/field.hpp"

#include <vector>

namespace bos {

using FVector = std::vector<FieldElement>;
using FMatrix = std::vector<FVector>; // row major, all rows the same length
using FFMatrix = std::vector<std::vector<FactoredFraction>>;

struct EchelonForm {
    // polynomial echelon rows (fraction free); pivots[i] is the pivot column of row i
    std::vector<std::vector<Poly2>> rows;
    std::vector<int> pivots;
    int cols = 0;
};

// Multiply each row by a common denominator so all entries are polynomials.
std::vector<std::vector<Poly2>> clear_denominators(const FMatrix& m);

// Fraction-free (Bareiss) forward elimination. Pivot: lowest total degree,
// ties by row then column index among the remaining rows and columns.
// If col_order is given, columns are eliminated in that order instead and
// the pivot is the lowest-degree entry of the current column.
EchelonForm bareiss_echelon(std::vector<std::vector<Poly2>> a, int cols, const std::vector<int>* col_order = nullptr);

int rank(const FMatrix& m);
int rank_poly(const std::vector<std::vector<Poly2>>& m, int cols);

// basis of {v : m v = 0}
std::vector<FVector> kernel_basis(const FMatrix& m, int cols);

// basis (reduced echelon, supported on cols) of rowspace(m) meet span{e_c : c in cols}
std::vector<FVector> row_space_meet(const FMatrix& m, int ncols, const std::vector<int>& cols);

FVector mat_vec(const FMatrix& m, const FVector& v);

} // namespace bos
