#include "bos/complex.hpp"

#include "bos/specialize.hpp"

#include <algorithm>
#include <cstdio>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace bos {

std::string Conventions::describe() const {
    std::string s = "darts:2e-tail,2e+1-head;rotation:ccw;faces:left;";
    s += base_ref == BaseRef::tree_path ? "ref:tree-path;" : "ref:graph-nearest;";
    s += alpha == AlphaRule::consistent ? "alpha:product-if-cw;" : "alpha:product-if-ccw;";
    s += "beta:non-base-component;vars:vertices-then-bounded-faces;skein:h0-sub=delete+1,h1-sub=contract+1";
    return s;
}

std::string Conventions::hash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : describe()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

int total_height(const EmbeddedBlackGraph& g, TreeMask t) {
    int h = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        bool in = (t >> e) & 1;
        if (g.edge(e).height == 1 ? in : !in) ++h;
    }
    return h;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

// lexicographic order of the sorted omitted-edge lists (all the same length)
bool omitted_less(TreeMask a, TreeMask b, TreeMask all) {
    TreeMask oa = all & ~a, ob = all & ~b;
    TreeMask x = oa ^ ob;
    if (!x) return false;
    TreeMask low = x & (~x + 1);
    return (oa & low) != 0;
}

std::vector<int> tree_component(const EmbeddedBlackGraph& g, TreeMask t, int start) {
    std::vector<int> mark(g.num_vertices(), 0);
    std::vector<int> st{start};
    mark[start] = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int d : g.rotation()[x]) {
            if (!((t >> (d >> 1)) & 1)) continue;
            int y = g.head(d);
            if (!mark[y]) {
                mark[y] = 1;
                st.push_back(y);
            }
        }
    }
    return mark;
}

// tree path a -> b as a list of darts
std::vector<int> tree_path(const EmbeddedBlackGraph& g, TreeMask t, int a, int b) {
    std::vector<int> prev(g.num_vertices(), -2);
    prev[a] = -1;
    std::vector<int> st{a};
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int d : g.rotation()[x]) {
            if (!((t >> (d >> 1)) & 1)) continue;
            int y = g.head(d);
            if (prev[y] == -2) {
                prev[y] = d;
                st.push_back(y);
            }
        }
    }
    if (prev[b] == -2) throw GraphError("tree path: vertices not connected");
    std::vector<int> path;
    for (int x = b; x != a; x = g.tail(prev[x])) path.push_back(prev[x]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

GradedTrees spanning_trees(const EmbeddedBlackGraph& g) {
    GradedTrees out;
    int n = g.num_vertices(), m = g.num_edges();
    if (m > 64) throw GraphError("spanning trees: more than 64 edges");
    if (!g.connected()) return out;
    std::vector<TreeMask> found;
    // include/exclude recursion; exclusion only when the edge is not a bridge
    // of chosen + undecided, inclusion only when it closes no cycle
    std::function<void(int, TreeMask, TreeMask)> rec = [&](int e, TreeMask chosen, TreeMask avail) {
        if (std::popcount(chosen) == n - 1) {
            found.push_back(chosen);
            return;
        }
        if (e == m) return;
        const Edge& ed = g.edge(e);
        TreeMask bit = TreeMask(1) << e;
        Dsu d(n);
        for (int i = 0; i < m; ++i)
            if ((chosen >> i) & 1) d.unite(g.edge(i).u, g.edge(i).v);
        bool cycle = d.find(ed.u) == d.find(ed.v);
        if (!cycle) rec(e + 1, chosen | bit, avail);
        // may we skip e?
        Dsu d2(n);
        int comps = n;
        for (int i = 0; i < m; ++i)
            if (i != e && (((chosen | avail) >> i) & 1) && d2.unite(g.edge(i).u, g.edge(i).v)) --comps;
        if (comps == 1) rec(e + 1, chosen, avail & ~bit);
    };
    TreeMask all = m == 64 ? ~TreeMask(0) : (TreeMask(1) << m) - 1;
    rec(0, 0, all);
    for (TreeMask t : found) out.by_height[total_height(g, t)].push_back(t);
    for (auto& [h, v] : out.by_height)
        std::sort(v.begin(), v.end(), [&](TreeMask a, TreeMask b) { return omitted_less(a, b, all); });
    out.total = found.size();
    return out;
}

long long tree_count(const EmbeddedBlackGraph& g) {
    int n = g.num_vertices();
    if (n == 1) return 1;
    std::vector<std::vector<__int128>> L(n, std::vector<__int128>(n, 0));
    for (const auto& e : g.edges()) {
        if (e.u == e.v) continue;
        L[e.u][e.u]++;
        L[e.v][e.v]++;
        L[e.u][e.v]--;
        L[e.v][e.u]--;
    }
    // delete row/column 0, Bareiss determinant
    int k = n - 1;
    std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = L[i + 1][j + 1];
    __int128 prev = 1;
    int sign = 1;
    for (int c = 0; c < k; ++c) {
        int p = c;
        while (p < k && a[p][c] == 0) ++p;
        if (p == k) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            sign = -sign;
        }
        for (int i = c + 1; i < k; ++i) {
            for (int j = c + 1; j < k; ++j) a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    __int128 det = a[k - 1][k - 1] * sign;
    return (long long)(det < 0 ? -det : det);
}

CoefficientData coefficient_data(const EmbeddedBlackGraph& g, TreeMask t, int e, int f, const Conventions& conv) {
    if (!((t >> e) & 1) || ((t >> f) & 1)) throw GraphError("coefficient: need e in T and f not in T");
    TreeMask te = t & ~(TreeMask(1) << e);
    std::vector<int> cb = tree_component(g, te, g.base());
    const Edge& fe = g.edge(f);
    if (cb[fe.u] == cb[fe.v]) throw GraphError("coefficient: T - e + f is not a spanning tree");
    int df = cb[fe.u] ? 2 * f + 1 : 2 * f; // from the non-base side to the base side
    CoefficientData c;
    std::vector<int> path = tree_path(g, t, g.head(df), g.tail(df));
    c.cycle.push_back(f);
    for (int d : path) c.cycle.push_back(d >> 1);
    c.faces = cycle_interior(g, c.cycle);
    std::vector<char> on(g.num_vertices(), 0);
    for (int ed : c.cycle) {
        on[g.edge(ed).u] = 1;
        on[g.edge(ed).v] = 1;
    }
    if (conv.base_ref == BaseRef::tree_path) {
        std::vector<int> p = tree_path(g, t, g.base(), g.head(df));
        int x = g.base();
        for (std::size_t i = 0; !on[x] && i < p.size(); ++i) x = g.head(p[i]);
        c.ref_vertex = x;
    } else {
        std::vector<int> dist(g.num_vertices(), -1);
        std::deque<int> q{g.base()};
        dist[g.base()] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int d : g.rotation()[x]) {
                int y = g.head(d);
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        int best = -1;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (on[v] && (best < 0 || dist[v] < dist[best])) best = v;
        c.ref_vertex = best;
    }
    c.parity = cycle_orientation_parity(g, c.cycle, e, f, c.ref_vertex);
    bool product = conv.alpha == AlphaRule::consistent ? c.parity == Orientation::cw : c.parity == Orientation::ccw;
    c.inverted = !product;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!cb[v]) c.beta_vertices.push_back(v);
    return c;
}

FieldElement coefficient_value(const EmbeddedBlackGraph& g, const CoefficientData& c) {
    Monomial a, b;
    for (int f : c.faces) a = a * Monomial::var(g.face_var(f));
    for (int v : c.beta_vertices) b = b * Monomial::var(g.vertex_var(v));
    Poly2 pa(a), one = Poly2::one();
    // 1/(1 + 1/m) = m/(1 + m)
    FieldElement ta = c.inverted ? FieldElement(pa, one + pa) : inv_one_plus(pa);
    return ta + inv_one_plus(Poly2(b));
}

FactoredFraction coefficient_factored(const EmbeddedBlackGraph& g, const CoefficientData& c) {
    Monomial a, b;
    for (int f : c.faces) a = a * Monomial::var(g.face_var(f));
    for (int v : c.beta_vertices) b = b * Monomial::var(g.vertex_var(v));
    Poly2 pa(a);
    FactoredFraction ta =
        c.inverted ? FactoredFraction::ratio(pa, Poly2::one() + pa) : factored_inv_one_plus(pa);
    return ta + factored_inv_one_plus(Poly2(b));
}

FieldElement coefficient(const EmbeddedBlackGraph& g, TreeMask t, int e, int f, const Conventions& conv) {
    return coefficient_value(g, coefficient_data(g, t, e, f, conv));
}

gf64::elem coefficient_value(const EmbeddedBlackGraph& g, const CoefficientData& c,
                             const std::vector<gf64::elem>& vals) {
    gf64::elem a = 1, b = 1;
    for (int f : c.faces) a = gf64::mul(a, vals.at(g.face_var(f)));
    for (int v : c.beta_vertices) b = gf64::mul(b, vals.at(g.vertex_var(v)));
    if (a == 1 || b == 1) throw SpecializationPole("specialization: 1 + alpha or 1 + beta vanishes");
    gf64::elem ta = gf64::inv(1 ^ a);
    if (c.inverted) ta ^= 1; // 1/(1 + 1/a) = 1 + 1/(1 + a)
    return ta ^ gf64::inv(1 ^ b);
}

int TreeComplex::dim(int h) const {
    auto it = trees.by_height.find(h);
    return it == trees.by_height.end() ? 0 : int(it->second.size());
}

FMatrix TreeComplex::exact_matrix(int from) const {
    const Differential& D = d.at(from);
    FMatrix m(D.rows, FVector(D.cols));
    for (const auto& en : D.entries) m[en.row][en.col] = coefficient_value(graph, en.data);
    return m;
}

FFMatrix TreeComplex::factored_matrix(int from) const {
    const Differential& D = d.at(from);
    FFMatrix m(D.rows, std::vector<FactoredFraction>(D.cols));
    for (const auto& en : D.entries) m[en.row][en.col] = coefficient_factored(graph, en.data);
    return m;
}

std::vector<gf64::elem> TreeComplex::eval_matrix(int from, const std::vector<gf64::elem>& vals) const {
    const Differential& D = d.at(from);
    std::vector<gf64::elem> m(std::size_t(D.rows) * D.cols, 0);
    for (const auto& en : D.entries) m[std::size_t(en.row) * D.cols + en.col] = coefficient_value(graph, en.data, vals);
    return m;
}

TreeComplex build_complex(const EmbeddedBlackGraph& g, const Conventions& conv) {
    TreeComplex c;
    c.graph = g;
    c.conv = conv;
    c.trees = spanning_trees(g);
    if (c.trees.total == 0) return c;
    std::map<TreeMask, int> index;
    for (const auto& [h, v] : c.trees.by_height)
        for (int i = 0; i < int(v.size()); ++i) index[v[i]] = i;
    int m = g.num_edges();
    for (const auto& [h, src] : c.trees.by_height) {
        auto tgt = c.trees.by_height.find(h + 2);
        if (tgt == c.trees.by_height.end()) continue;
        Differential D;
        D.from = h;
        D.cols = int(src.size());
        D.rows = int(tgt->second.size());
        for (int col = 0; col < D.cols; ++col) {
            TreeMask t = src[col];
            for (int e = 0; e < m; ++e) {
                if (!((t >> e) & 1) || g.edge(e).height != 0) continue;
                for (int f = 0; f < m; ++f) {
                    if (((t >> f) & 1) || g.edge(f).height != 1) continue;
                    TreeMask t2 = (t & ~(TreeMask(1) << e)) | (TreeMask(1) << f);
                    auto it = index.find(t2);
                    if (it == index.end() || total_height(g, t2) != h + 2) continue;
                    DiffEntry en;
                    en.row = it->second;
                    en.col = col;
                    en.e = e;
                    en.f = f;
                    en.data = coefficient_data(g, t, e, f, conv);
                    D.entries.push_back(std::move(en));
                }
            }
        }
        c.d[h] = std::move(D);
    }
    return c;
}

std::string DSquaredResult::describe() const {
    std::ostringstream os;
    if (ok)
        os << "d^2 = 0 (" << (exact ? "exact" : std::to_string(specializations) + " specializations") << ")";
    else
        os << "d^2 != 0 at height " << height << ": source tree " << source << " -> target tree " << target
           << " (height " << height + 4 << ")";
    return os.str();
}

DSquaredResult check_d_squared(const std::map<int, FMatrix>& d) {
    DSquaredResult r;
    r.exact = true;
    for (const auto& [h, a] : d) {
        auto it = d.find(h + 2);
        if (it == d.end()) continue;
        const FMatrix& b = it->second;
        int cols = a.empty() ? 0 : int(a[0].size());
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < int(b.size()); ++i) {
                FieldElement s;
                for (int k = 0; k < int(a.size()); ++k)
                    if (!a[k][j].is_zero() && !b[i][k].is_zero()) s += b[i][k] * a[k][j];
                if (!s.is_zero()) {
                    r.ok = false;
                    r.height = h;
                    r.source = j;
                    r.target = i;
                    return r;
                }
            }
    }
    return r;
}

std::vector<gf64::elem> power_values(const std::vector<int>& exps) {
    std::vector<gf64::elem> v;
    for (int p : exps) v.push_back(gf64::t_pow(p));
    return v;
}

DSquaredResult verify_d_squared(const TreeComplex& c, int exact_edges) {
    if (c.graph.num_edges() <= exact_edges && c.graph.num_vars() <= Monomial::kMaxVars) {
        std::map<int, FMatrix> d;
        for (const auto& [h, D] : c.d) d[h] = c.exact_matrix(h);
        return check_d_squared(d);
    }
    DSquaredResult r;
    for (uint64_t seed = 1; seed <= 3; ++seed) {
        auto vals = power_values(power_exponents(c.graph.num_vars(), 0xd2d2 + seed));
        for (const auto& [h, D] : c.d) {
            auto it = c.d.find(h + 2);
            if (it == c.d.end()) continue;
            const Differential& E = it->second;
            std::vector<gf64::elem> a = c.eval_matrix(h, vals), b = c.eval_matrix(h + 2, vals);
            for (int j = 0; j < D.cols; ++j)
                for (int i = 0; i < E.rows; ++i) {
                    gf64::elem s = 0;
                    for (int k = 0; k < D.rows; ++k) {
                        gf64::elem x = a[std::size_t(k) * D.cols + j];
                        if (x) s ^= gf64::mul(b[std::size_t(i) * E.cols + k], x);
                    }
                    if (s) {
                        r.ok = false;
                        r.height = h;
                        r.source = j;
                        r.target = i;
                        return r;
                    }
                }
        }
        r.specializations++;
    }
    return r;
}

int euler_trace(const TreeComplex& c) {
    int h0 = c.trees.min_height(), s = 0;
    for (const auto& [h, v] : c.trees.by_height) s += (((h - h0) / 2) % 2 ? -1 : 1) * int(v.size());
    return s;
}

int determinant(const TreeComplex& c) { return std::abs(euler_trace(c)); }

DifferentialRank specialized_rank(const TreeComplex& c, int from, uint64_t seed, int retries) {
    const Differential& D = c.d.at(from);
    DifferentialRank r;
    r.from = from;
    r.rows = D.rows;
    r.cols = D.cols;
    r.hi = std::min(D.rows, D.cols);
    r.lo = 0;
    r.seed = seed;
    if (D.entries.empty()) {
        r.hi = 0;
        r.hi_source = "zero matrix";
        return r;
    }
    int nv = c.graph.num_vars();
    for (int a = 0; a < std::max(1, retries); ++a) {
        uint64_t s = seed + uint64_t(a);
        std::vector<int> exps = power_exponents(nv, s);
        ++r.attempts;
        std::vector<gf64::elem> m;
        try {
            m = c.eval_matrix(from, power_values(exps));
        } catch (const SpecializationPole&) {
            continue;
        }
        int rk = gf64::rank(m, D.rows, D.cols);
        if (rk > r.lo || r.exponents.empty()) {
            r.lo = std::max(r.lo, rk);
            r.seed = s;
            r.exponents = exps;
        }
        if (r.lo == r.hi) break;
    }
    return r;
}

bool CohomologyReport::certified(int h) const {
    auto a = ranks.find(h), b = lower.find(h);
    if (a == ranks.end()) return true;
    return b != lower.end() && a->second == b->second;
}

bool CohomologyReport::all_certified() const {
    for (const auto& [h, x] : ranks)
        if (!certified(h)) return false;
    return true;
}

int CohomologyReport::total_rank() const {
    int s = 0;
    for (const auto& [h, x] : ranks) s += x;
    return s;
}

std::vector<int> CohomologyReport::occupied() const {
    std::vector<int> o;
    for (const auto& [h, x] : ranks)
        if (x) o.push_back(h);
    return o;
}

namespace {

DifferentialRank* diff_at(CohomologyReport& r, int from) {
    auto it = r.differentials.find(from);
    return it == r.differentials.end() ? nullptr : &it->second;
}

bool euler_tighten(const std::map<int, int>& dims, std::map<int, int>& L, std::map<int, int>& U, int chi) {
    if (dims.empty()) return false;
    int h0 = dims.begin()->first;
    auto sg = [&](int h) { return ((h - h0) / 2) % 2 ? -1 : 1; };
    bool any = false, changed = true;
    while (changed) {
        changed = false;
        for (const auto& [h, dd] : dims) {
            // sg(h) H_h = chi - sum of the others
            int lo = chi, hi = chi;
            for (const auto& [h2, d2] : dims) {
                if (h2 == h) continue;
                if (sg(h2) > 0) {
                    lo -= U[h2];
                    hi -= L[h2];
                } else {
                    lo += L[h2];
                    hi += U[h2];
                }
            }
            int nl = sg(h) > 0 ? lo : -hi, nu = sg(h) > 0 ? hi : -lo;
            if (nl > L[h]) {
                L[h] = nl;
                changed = any = true;
            }
            if (nu < U[h]) {
                U[h] = nu;
                changed = any = true;
            }
        }
    }
    return any;
}

} // namespace

void propagate(CohomologyReport& r) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [h, dd] : r.dims) {
            DifferentialRank* out = diff_at(r, h);
            DifferentialRank* in = diff_at(r, h - 2);
            int lo_out = out ? out->lo : 0, hi_out = out ? out->hi : 0;
            int lo_in = in ? in->lo : 0, hi_in = in ? in->hi : 0;
            int U = dd - lo_out - lo_in, L = dd - hi_out - hi_in;
            if (U < r.ranks[h]) {
                r.ranks[h] = U;
                changed = true;
            }
            if (L > r.lower[h]) {
                r.lower[h] = L;
                changed = true;
            }
            int Lh = r.lower[h], Uh = r.ranks[h];
            if (out && dd - Lh - lo_in < out->hi) {
                out->hi = dd - Lh - lo_in;
                out->hi_source = "cohomology lower bound";
                changed = true;
            }
            if (in && dd - Lh - lo_out < in->hi) {
                in->hi = dd - Lh - lo_out;
                in->hi_source = "cohomology lower bound";
                changed = true;
            }
            if (out && dd - Uh - hi_in > out->lo) {
                out->lo = dd - Uh - hi_in;
                changed = true;
            }
            if (in && dd - Uh - hi_out > in->lo) {
                in->lo = dd - Uh - hi_out;
                changed = true;
            }
        }
        if (euler_tighten(r.dims, r.lower, r.ranks, r.euler_trace)) changed = true;
    }
}

void add_rank_upper_bound(CohomologyReport& r, int from, int hi, const std::string& source) {
    DifferentialRank* d = diff_at(r, from);
    if (!d || hi >= d->hi) return;
    if (hi < d->lo) throw std::logic_error("rank upper bound below a proven lower bound: " + source);
    d->hi = hi;
    d->hi_source = source;
    r.certificates.push_back(source);
    propagate(r);
}

void add_cohomology_lower_bounds(CohomologyReport& r, const std::map<int, int>& lower, const std::string& source) {
    bool used = false;
    for (const auto& [h, l] : lower) {
        if (!r.dims.count(h)) continue;
        if (l > r.ranks[h]) throw std::logic_error("cohomology lower bound above a proven upper bound: " + source);
        if (l > r.lower[h]) {
            r.lower[h] = l;
            used = true;
        }
    }
    if (used) r.certificates.push_back(source);
    propagate(r);
}

void add_cohomology_upper_bounds(CohomologyReport& r, const std::map<int, int>& upper, const std::string& source) {
    bool used = false;
    for (const auto& [h, u] : upper) {
        if (!r.dims.count(h)) continue;
        if (u < r.lower[h]) throw std::logic_error("cohomology upper bound below a proven lower bound: " + source);
        if (u < r.ranks[h]) {
            r.ranks[h] = u;
            used = true;
        }
    }
    if (used) r.certificates.push_back(source);
    propagate(r);
}

void add_total_rank_lower_bound(CohomologyReport& r, int total, const std::string& source) {
    int sum_hi = 0;
    for (const auto& [h, u] : r.ranks) sum_hi += u;
    if (total > sum_hi) throw std::logic_error("total rank lower bound above the upper bounds: " + source);
    std::map<int, int> lo;
    for (const auto& [h, u] : r.ranks) lo[h] = std::max(r.lower[h], total - (sum_hi - u));
    add_cohomology_lower_bounds(r, lo, source);
}

CohomologyReport cohomology(const TreeComplex& c, const CohomologyOptions& opt) {
    CohomologyReport r;
    r.seed = opt.seed;
    r.retries = opt.retries;
    r.exact = opt.exact;
    r.convention = c.conv.describe();
    r.convention_hash = c.conv.hash();
    r.num_trees = int(c.trees.total);
    for (const auto& [h, v] : c.trees.by_height) r.dims[h] = int(v.size());
    r.euler_trace = euler_trace(c);
    r.determinant = std::abs(r.euler_trace);
    for (const auto& [h, D] : c.d) {
        DifferentialRank dr;
        if (opt.exact) {
            if (c.graph.num_vars() > Monomial::kMaxVars)
                throw std::runtime_error("exact rank: more than 32 variables");
            dr.from = h;
            dr.rows = D.rows;
            dr.cols = D.cols;
            dr.lo = dr.hi = rank(c.exact_matrix(h));
            dr.hi_source = "exact elimination";
            dr.attempts = 0;
        } else {
            dr = specialized_rank(c, h, opt.seed, opt.retries);
        }
        r.differentials[h] = dr;
    }
    for (const auto& [h, d] : r.dims) {
        r.ranks[h] = d;
        r.lower[h] = 0;
    }
    propagate(r);
    if (opt.exact) {
        r.certificates.push_back("exact elimination over the function field");
    } else if (r.all_certified()) {
        bool full = true;
        for (const auto& [h, d] : r.differentials)
            if (d.lo != std::min(d.rows, d.cols)) full = false;
        // generic ranks sum to at least |euler trace| and never exceed the specialized ones
        r.certificates.push_back(full ? "specialized ranks are maximal" : "total rank equals determinant");
    }
    return r;
}

CohomologyReport shifted_report(const CohomologyReport& r, int n_minus) {
    CohomologyReport s = r;
    s.n_minus = n_minus;
    auto shift = [&](const std::map<int, int>& m) {
        std::map<int, int> o;
        for (const auto& [h, x] : m) o[h - n_minus] = x;
        return o;
    };
    s.dims = shift(r.dims);
    s.ranks = shift(r.ranks);
    s.lower = shift(r.lower);
    s.differentials.clear();
    for (auto [h, d] : r.differentials) {
        d.from = h - n_minus;
        s.differentials[h - n_minus] = d;
    }
    return s;
}

} // namespace bos
