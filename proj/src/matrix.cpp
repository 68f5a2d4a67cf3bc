#include "bos/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace bos {

std::vector<std::vector<Poly2>> clear_denominators(const FMatrix& m) {
    std::vector<std::vector<Poly2>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Poly2 l = Poly2::one();
        for (const auto& x : row) {
            if (x.is_zero() || x.den().is_one()) continue;
            Poly2 q;
            if (l.divide_exact(x.den(), q)) continue;
            l = l * x.den();
        }
        std::vector<Poly2> r;
        r.reserve(row.size());
        for (const auto& x : row) {
            if (x.is_zero()) {
                r.emplace_back();
                continue;
            }
            Poly2 q;
            if (!l.divide_exact(x.den(), q)) throw std::logic_error("clear_denominators: not a multiple");
            r.push_back(x.num() * q);
        }
        out.push_back(std::move(r));
    }
    return out;
}

EchelonForm bareiss_echelon(std::vector<std::vector<Poly2>> a, int cols, const std::vector<int>* col_order) {
    EchelonForm ef;
    ef.cols = cols;
    int rows = int(a.size());
    std::vector<int> colmap(cols);
    for (int j = 0; j < cols; ++j) colmap[j] = col_order ? (*col_order)[j] : j;
    int ncols = col_order ? int(col_order->size()) : cols;
    Poly2 prev = Poly2::one();
    int k = 0;
    std::vector<char> used_col(cols, 0);
    for (int step = 0; k < rows && step < ncols; ++step) {
        int pr = -1, pc = -1, best = 1 << 30;
        if (col_order) {
            int c = colmap[step];
            for (int i = k; i < rows; ++i)
                if (!a[i][c].is_zero() && a[i][c].total_degree() < best) {
                    best = a[i][c].total_degree();
                    pr = i;
                    pc = c;
                }
            if (pr < 0) continue;
        } else {
            for (int i = k; i < rows; ++i)
                for (int c = 0; c < cols; ++c) {
                    if (used_col[c] || a[i][c].is_zero()) continue;
                    int d = a[i][c].total_degree();
                    if (d < best) {
                        best = d;
                        pr = i;
                        pc = c;
                    }
                }
            if (pr < 0) break;
        }
        std::swap(a[k], a[pr]);
        used_col[pc] = 1;
        const Poly2 piv = a[k][pc];
        for (int i = k + 1; i < rows; ++i) {
            const Poly2 f = a[i][pc];
            for (int c = 0; c < cols; ++c) {
                if (used_col[c] && c != pc) continue;
                Poly2 v = piv * a[i][c];
                if (!f.is_zero() && !a[k][c].is_zero()) v += f * a[k][c];
                if (!prev.is_one() && !v.is_zero()) {
                    Poly2 q;
                    if (!v.divide_exact(prev, q)) throw std::logic_error("bareiss: inexact division");
                    v = std::move(q);
                }
                a[i][c] = std::move(v);
            }
        }
        ef.pivots.push_back(pc);
        ef.rows.push_back(a[k]);
        prev = piv;
        ++k;
    }
    return ef;
}

int rank_poly(const std::vector<std::vector<Poly2>>& m, int cols) {
    return int(bareiss_echelon(m, cols).pivots.size());
}

int rank(const FMatrix& m) {
    if (m.empty()) return 0;
    return rank_poly(clear_denominators(m), int(m[0].size()));
}

std::vector<FVector> kernel_basis(const FMatrix& m, int cols) {
    std::vector<FVector> basis;
    if (m.empty()) {
        for (int f = 0; f < cols; ++f) {
            FVector v(cols);
            v[f] = FieldElement::one();
            basis.push_back(v);
        }
        return basis;
    }
    EchelonForm ef = bareiss_echelon(clear_denominators(m), cols);
    std::vector<char> is_piv(cols, 0);
    for (int p : ef.pivots) is_piv[p] = 1;
    int r = int(ef.pivots.size());
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        FVector v(cols);
        v[f] = FieldElement::one();
        // rows are in elimination order; later rows have zeros in earlier pivot columns
        for (int i = r - 1; i >= 0; --i) {
            FieldElement s;
            for (int c = 0; c < cols; ++c) {
                if (c == ef.pivots[i] || v[c].is_zero() || ef.rows[i][c].is_zero()) continue;
                s += FieldElement(ef.rows[i][c]) * v[c];
            }
            v[ef.pivots[i]] = s / FieldElement(ef.rows[i][ef.pivots[i]]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FVector> row_space_meet(const FMatrix& m, int ncols, const std::vector<int>& cols) {
    std::vector<char> in(ncols, 0);
    for (int c : cols) in.at(c) = 1;
    std::vector<int> order;
    for (int c = 0; c < ncols; ++c)
        if (!in[c]) order.push_back(c);
    for (int c : cols) order.push_back(c);
    if (m.empty()) return {};
    EchelonForm ef = bareiss_echelon(clear_denominators(m), ncols, &order);
    // rows pivoting inside cols vanish on the complement and span the meet
    std::vector<FVector> sub;
    std::vector<int> piv;
    for (std::size_t i = 0; i < ef.rows.size(); ++i) {
        if (!in[ef.pivots[i]]) continue;
        FVector v(ncols);
        FieldElement p(ef.rows[i][ef.pivots[i]]);
        for (int c = 0; c < ncols; ++c)
            if (!ef.rows[i][c].is_zero()) v[c] = FieldElement(ef.rows[i][c]) / p;
        sub.push_back(std::move(v));
        piv.push_back(ef.pivots[i]);
    }
    // back-reduce to reduced echelon form
    for (int i = int(sub.size()) - 1; i >= 0; --i)
        for (int j = 0; j < i; ++j) {
            FieldElement f = sub[j][piv[i]];
            if (f.is_zero()) continue;
            for (int c = 0; c < ncols; ++c)
                if (!sub[i][c].is_zero()) sub[j][c] += f * sub[i][c];
        }
    return sub;
}

FVector mat_vec(const FMatrix& m, const FVector& v) {
    FVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
    return out;
}

} // namespace bos
