#include "bos/witness.hpp"

#include "bos/fixtures.hpp"
#include "bos/specialize.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace bos {

namespace {

using GMat = std::vector<std::vector<gf64::elem>>;

struct Backtrack {
    const GMat &P, &G;
    const std::function<bool(int, int)>& col_ok;
    int n, m;
    std::vector<int> row_of, col_of, col_used, row_used;
    std::vector<std::vector<gf64::elem>> psig, gsig;

    Backtrack(const GMat& p, const GMat& g, const std::function<bool(int, int)>& ok)
        : P(p), G(g), col_ok(ok), n(int(p.size())), m(n ? int(p[0].size()) : 0), row_of(n, -1), col_of(m, -1),
          col_used(m, 0), row_used(n, 0) {
        auto sig = [](const std::vector<gf64::elem>& r) {
            std::vector<gf64::elem> s;
            for (auto x : r)
                if (x) s.push_back(x);
            std::sort(s.begin(), s.end());
            return s;
        };
        for (auto& r : P) psig.push_back(sig(r));
        for (auto& r : G) gsig.push_back(sig(r));
    }

    bool allowed(int pc, int tc) const { return !col_ok || col_ok(pc, tc); }

    // columns of pattern row i still to place, starting at k
    bool place_cols(int i, int r, std::vector<int>& pending, std::size_t k) {
        if (k == pending.size()) return rows(i + 1);
        int j = pending[k];
        for (int t = 0; t < m; ++t) {
            if (col_used[t] || G[r][t] != P[i][j] || !allowed(j, t)) continue;
            col_of[j] = t;
            col_used[t] = 1;
            if (place_cols(i, r, pending, k + 1)) return true;
            col_of[j] = -1;
            col_used[t] = 0;
        }
        return false;
    }

    bool rows(int i) {
        if (i == n) return finish();
        for (int r = 0; r < n; ++r) {
            if (row_used[r] || gsig[r] != psig[i]) continue;
            bool bad = false;
            std::vector<int> pending;
            for (int j = 0; j < m && !bad; ++j) {
                if (col_of[j] >= 0) {
                    if (G[r][col_of[j]] != P[i][j]) bad = true;
                } else if (P[i][j]) {
                    pending.push_back(j);
                }
            }
            if (bad) continue;
            row_used[r] = 1;
            row_of[i] = r;
            if (place_cols(i, r, pending, 0)) return true;
            row_used[r] = 0;
            row_of[i] = -1;
        }
        return false;
    }

    // all-zero pattern columns: any free target column that is zero too
    bool finish() {
        std::vector<int> saved = col_of, used = col_used;
        for (int j = 0; j < m; ++j) {
            if (col_of[j] >= 0) continue;
            bool done = false;
            for (int t = 0; t < m && !done; ++t) {
                if (col_used[t] || !allowed(j, t)) continue;
                bool zero = true;
                for (int r = 0; r < n; ++r) zero = zero && G[r][t] == 0;
                if (!zero) continue;
                col_of[j] = t;
                col_used[t] = 1;
                done = true;
            }
            if (!done) {
                col_of = saved;
                col_used = used;
                return false;
            }
        }
        return true;
    }
};

std::vector<std::vector<int>> nonempty_subsets(const std::vector<int>& xs) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << xs.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (mask >> i & 1) s.push_back(xs[i]);
        out.push_back(s);
    }
    return out;
}

} // namespace

MatchSpec printed_match_spec(const EmbeddedBlackGraph& g) {
    PrintedMatrix pm = paper_matrix_M();
    MatchSpec spec;
    for (const char* s : {"x", "y1", "y2", "z1", "z2", "v"}) spec.pattern_vertex.push_back(pm.var(s));
    spec.pattern_face = {pm.var("Q"), pm.var("T")};
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.vertex_var(v) >= 0) spec.target_vertex.push_back(g.vertex_var(v));
    for (int f = 0; f < g.num_faces(); ++f)
        if (g.face_var(f) >= 0) spec.target_face.push_back(g.face_var(f));
    spec.target_vars = g.num_vars();
    return spec;
}

MatrixMatch match_matrix(const FMatrix& pattern, const FMatrix& target, const MatchSpec& spec) {
    MatrixMatch res;
    int n = int(pattern.size());
    if (n == 0 || target.size() != pattern.size() || target[0].size() != pattern[0].size()) {
        res.failure = "shape mismatch";
        return res;
    }
    if (spec.pattern_vertex.size() != spec.target_vertex.size()) {
        res.failure = "vertex variable counts differ";
        return res;
    }
    int m = int(pattern[0].size());
    std::mt19937_64 rng(spec.seed);
    std::vector<gf64::elem> tv(spec.target_vars);
    for (auto& x : tv) x = rng() | 2;
    GMat G(n, std::vector<gf64::elem>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) G[i][j] = target[i][j].is_zero() ? 0 : evaluate(target[i][j], tv);
    std::vector<gf64::elem> gall;
    for (auto& r : G)
        for (auto x : r)
            if (x) gall.push_back(x);
    std::sort(gall.begin(), gall.end());

    int pvars = 0;
    for (int v : spec.pattern_vertex) pvars = std::max(pvars, v + 1);
    for (int v : spec.pattern_face) pvars = std::max(pvars, v + 1);
    auto subsets = nonempty_subsets(spec.target_face);
    std::size_t nf = spec.pattern_face.size();

    std::vector<int> perm = spec.target_vertex;
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<std::size_t> choice(nf, 0);
        for (;;) {
            ++res.substitutions;
            std::vector<gf64::elem> pv(pvars, 0);
            std::map<int, Poly2> image;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                pv[spec.pattern_vertex[i]] = tv[perm[i]];
                image[spec.pattern_vertex[i]] = Poly2::var(perm[i]);
            }
            for (std::size_t i = 0; i < nf; ++i) {
                gf64::elem x = 1;
                Monomial mono;
                for (int f : subsets[choice[i]]) {
                    x = gf64::mul(x, tv[f]);
                    mono = mono * Monomial::var(f);
                }
                pv[spec.pattern_face[i]] = x;
                image[spec.pattern_face[i]] = Poly2(mono);
            }
            bool pole = false;
            GMat P(n, std::vector<gf64::elem>(m));
            std::vector<gf64::elem> pall;
            for (int i = 0; i < n && !pole; ++i)
                for (int j = 0; j < m && !pole; ++j) {
                    if (pattern[i][j].is_zero()) continue;
                    try {
                        P[i][j] = evaluate(pattern[i][j], pv);
                    } catch (const SpecializationPole&) {
                        pole = true;
                    }
                    if (P[i][j]) pall.push_back(P[i][j]);
                }
            if (!pole) {
                std::sort(pall.begin(), pall.end());
                if (pall == gall) {
                    ++res.fingerprint_hits;
                    Backtrack bt(P, G, spec.col_ok);
                    if (bt.rows(0)) {
                        SpecializationMap s;
                        s.assign = image;
                        bool exact = true;
                        for (int i = 0; i < n && exact; ++i)
                            for (int j = 0; j < m && exact; ++j)
                                exact = specialize(pattern[i][j], s) == target[bt.row_of[i]][bt.col_of[j]];
                        if (exact) {
                            res.found = true;
                            res.row_of = bt.row_of;
                            res.col_of = bt.col_of;
                            res.image = image;
                            return res;
                        }
                    }
                }
            }
            std::size_t k = 0;
            while (k < nf && ++choice[k] == subsets.size()) choice[k++] = 0;
            if (k == nf) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    res.failure = "no bijection reproduces the pattern";
    return res;
}

std::string MatrixMatch::describe(const std::vector<std::string>& pattern_names, const Poly2::Namer& target_name) const {
    std::ostringstream os;
    if (!found) return "no match: " + failure;
    os << "variables:";
    for (auto& [v, p] : image)
        os << " " << (v < int(pattern_names.size()) ? pattern_names[v] : default_var_name(v)) << "->"
           << p.str(target_name);
    os << "; rows:";
    for (std::size_t i = 0; i < row_of.size(); ++i) os << " " << i + 1 << "->" << row_of[i];
    os << "; cols:";
    for (std::size_t j = 0; j < col_of.size(); ++j) os << " u" << j << "->" << col_of[j];
    return os.str();
}

WitnessRecord lemma_witness(const FFMatrix& m, WitnessForm form) {
    WitnessRecord rec;
    if (m.size() != 9 || m[0].size() != 12) {
        rec.failure = "expected a 9x12 block";
        return rec;
    }
    auto M = [&](int i, int j) { return m[i - 1][j]; };
    rec.p = {M(4, 1) + M(5, 1), M(7, 2) + M(8, 2), M(4, 1) + M(6, 1), M(7, 2) + M(9, 2)};
    rec.q = {M(2, 4) + M(5, 4), M(2, 4) + M(8, 4), M(3, 5) + M(6, 5), M(3, 5) + M(9, 5)};
    for (const auto* a : {&rec.p, &rec.q})
        for (const auto& x : *a)
            if (x.is_zero()) {
                rec.failure = "a p or q entry sum vanishes";
                return rec;
            }
    const auto &p = rec.p, &q = rec.q;
    rec.identity = p[0] * p[3] * q[1] * q[2] == p[1] * p[2] * q[0] * q[3];
    FactoredFraction cy, cz, ct;
    if (form == WitnessForm::solved) {
        cy = q[0] / q[1];
        cz = p[0] / p[2];
        ct = (p[1] / p[3]) * (q[0] / q[1]);
    } else {
        cy = q[1] / q[0];
        cz = p[2] / p[0];
        ct = (p[3] / p[1]) * (q[1] / q[0]);
    }
    FactoredFraction one = FactoredFraction::one();
    const std::vector<std::pair<std::vector<int>, FactoredFraction>> combos{
        {{1, 2, 4, 5}, one}, {{1, 2, 7, 8}, cy}, {{1, 3, 4, 6}, cz}, {{1, 3, 7, 9}, ct}};
    rec.row_coeffs.assign(9, FactoredFraction());
    for (auto& [rows, c] : combos)
        for (int i : rows) rec.row_coeffs[i - 1] += c;
    rec.w.assign(12, FactoredFraction());
    for (int i = 0; i < 9; ++i)
        if (!rec.row_coeffs[i].is_zero())
            for (int j = 0; j < 12; ++j)
                if (!m[i][j].is_zero()) rec.w[j] += rec.row_coeffs[i] * m[i][j];
    for (int j = 0; j < 6; ++j)
        if (!rec.w[j].is_zero()) rec.nonvanishing.push_back(j);
    for (int j = 6; j < 12; ++j) rec.w_nonzero = rec.w_nonzero || !rec.w[j].is_zero();
    if (!rec.identity) rec.failure = "p1 p4 / (p2 p3) != q1 q4 / (q2 q3)";
    else if (!rec.nonvanishing.empty()) rec.failure = "w has nonzero coordinates among u0..u5";
    else if (!rec.w_nonzero) rec.failure = "w vanishes";
    return rec;
}

std::string RankWitness::describe() const {
    if (!ok) return "no witness: " + failure;
    return "parallel pair " + parallel_pair + ": the two block witnesses agree, rank of d_" + std::to_string(from) +
           " <= " + std::to_string(rank_bound);
}

RankWitness parallel_spoke_witness(const TreeComplex& c) {
    RankWitness rw;
    const EmbeddedBlackGraph& g = c.graph;
    int pe = -1, qe = -1;
    for (int a = 0; a < g.num_edges() && pe < 0; ++a)
        for (int b = a + 1; b < g.num_edges(); ++b) {
            const Edge &x = g.edge(a), &y = g.edge(b);
            bool same = (x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u);
            if (same && x.u != x.v && x.height == 1 && y.height == 1) {
                pe = a;
                qe = b;
                break;
            }
        }
    if (pe < 0) {
        rw.failure = "no parallel pair of height-1 edges";
        return rw;
    }
    rw.parallel_pair = g.edge(pe).id + "," + g.edge(qe).id;

    PrintedMatrix pm = paper_matrix_M();
    MatchSpec spec = printed_match_spec(g);
    spec.col_ok = [](int pc, int tc) { return (pc < 6) == (tc < 6); };

    for (const auto& [from, D] : c.d) {
        if (D.rows != 18 || D.cols != 18) continue;
        const auto& src = c.trees.by_height.at(from);
        const auto& dst = c.trees.by_height.at(from + 2);
        TreeMask P = TreeMask(1) << pe, Q = TreeMask(1) << qe;
        std::vector<int> rp, rq, cp, cq, c0;
        for (int i = 0; i < int(dst.size()); ++i) {
            if (dst[i] & P) rp.push_back(i);
            if (dst[i] & Q) rq.push_back(i);
        }
        for (int j = 0; j < int(src.size()); ++j)
            (src[j] & P ? cp : src[j] & Q ? cq : c0).push_back(j);
        if (rp.size() != 9 || rq.size() != 9 || cp.size() != 6 || cq.size() != 6 || c0.size() != 6) continue;
        FMatrix N = c.exact_matrix(from);
        FFMatrix NF = c.factored_matrix(from);
        auto block = [&](const std::vector<int>& rows, const std::vector<int>& own, std::vector<int>& colmap) {
            colmap = own;
            colmap.insert(colmap.end(), c0.begin(), c0.end());
            FMatrix b(9, FVector(12));
            for (int i = 0; i < 9; ++i)
                for (int j = 0; j < 12; ++j) b[i][j] = N[rows[i]][colmap[j]];
            return b;
        };
        auto fblock = [&](const std::vector<int>& rows, const std::vector<int>& colmap, const MatrixMatch& mm) {
            FFMatrix o(9, std::vector<FactoredFraction>(12));
            for (int i = 0; i < 9; ++i)
                for (int j = 0; j < 12; ++j) o[i][j] = NF[rows[mm.row_of[i]]][colmap[mm.col_of[j]]];
            return o;
        };
        std::vector<int> map1, map2;
        FMatrix b1 = block(rp, cp, map1), b2 = block(rq, cq, map2);
        rw.from = from;
        rw.rows = D.rows;
        rw.cols = D.cols;
        rw.first = match_matrix(pm.m, b1, spec);
        rw.second = match_matrix(pm.m, b2, spec);
        if (!rw.first.found || !rw.second.found) {
            rw.failure = "block does not match the D(3,3) pattern";
            return rw;
        }
        rw.w1 = lemma_witness(fblock(rp, map1, rw.first));
        rw.w2 = lemma_witness(fblock(rq, map2, rw.second));
        if (!rw.w1.ok() || !rw.w2.ok()) {
            rw.failure = "block witness failed: " + (rw.w1.ok() ? rw.w2.failure : rw.w1.failure);
            return rw;
        }
        // sum over both copies, on the full 18 columns
        std::vector<FactoredFraction> acc(D.cols);
        auto add_rows = [&](const std::vector<int>& rows, const MatrixMatch& mm, const WitnessRecord& w) {
            for (int i = 0; i < 9; ++i) {
                if (w.row_coeffs[i].is_zero()) continue;
                int r = rows[mm.row_of[i]];
                for (int j = 0; j < D.cols; ++j)
                    if (!NF[r][j].is_zero()) acc[j] += w.row_coeffs[i] * NF[r][j];
            }
        };
        add_rows(rp, rw.first, rw.w1);
        add_rows(rq, rw.second, rw.w2);
        rw.combination_vanishes = std::all_of(acc.begin(), acc.end(), [](const FactoredFraction& x) { return x.is_zero(); });
        if (!rw.combination_vanishes) {
            rw.failure = "the two witness vectors differ";
            return rw;
        }
        rw.ok = true;
        rw.rank_bound = D.rows - 1;
        return rw;
    }
    rw.failure = "no 18x18 differential split 9+9 rows, 6+6+6 columns by the pair";
    return rw;
}

void apply_rank_witness(CohomologyReport& r, const RankWitness& w) {
    if (!w.ok) return;
    add_rank_upper_bound(r, w.from, w.rank_bound, "block witness (" + w.parallel_pair + ")");
}

} // namespace bos
