#include "bos/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace bos {

EmbeddedBlackGraph::EmbeddedBlackGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges,
                                       std::vector<std::vector<int>> rotation, int outer_dart, int base)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)), rot_(std::move(rotation)),
      outer_dart_(outer_dart), base_(base) {
    build();
}

void EmbeddedBlackGraph::build() {
    int n = num_vertices(), m = num_edges();
    if (n == 0) throw GraphError("graph: no vertices");
    if (base_ < 0 || base_ >= n) throw GraphError("graph: base vertex out of range");
    if (int(rot_.size()) != n) throw GraphError("graph: rotation must list every vertex");
    for (const auto& e : edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw GraphError("graph: edge endpoint out of range");
        if (e.height != 0 && e.height != 1) throw GraphError("graph: edge height must be 0 or 1");
    }
    pos_.assign(2 * m, {-1, -1});
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < int(rot_[v].size()); ++i) {
            int d = rot_[v][i];
            if (d < 0 || d >= 2 * m) throw GraphError("graph: rotation lists an unknown edge end");
            if (pos_[d].first >= 0) throw GraphError("graph: edge end listed twice in rotation");
            if (tail(d) != v) throw GraphError("graph: edge end listed at the wrong vertex");
            pos_[d] = {v, i};
        }
    for (int d = 0; d < 2 * m; ++d)
        if (pos_[d].first < 0) throw GraphError("graph: edge end missing from rotation");
    faces_ = trace_faces(*this);
    if (m == 0) {
        outer_dart_ = -1;
        outer_face_ = 0;
    } else {
        if (outer_dart_ < 0 || outer_dart_ >= 2 * m) throw GraphError("graph: outer face not given");
        outer_face_ = faces_.face_of[outer_dart_];
    }
    vertex_var_.assign(n, -1);
    int k = 0;
    for (int v = 0; v < n; ++v)
        if (v != base_) vertex_var_[v] = k++;
    face_var_.assign(num_faces(), -1);
    for (int f = 0; f < num_faces(); ++f)
        if (f != outer_face_) face_var_[f] = k++;
    num_vars_ = k;
}

int EmbeddedBlackGraph::phi(int d) const {
    auto [v, i] = pos_[d ^ 1];
    const auto& L = rot_[v];
    return L[(i + int(L.size()) - 1) % int(L.size())];
}

int EmbeddedBlackGraph::num_components() const {
    int n = num_vertices();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    int c = n;
    for (const auto& e : edges_) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            p[a] = b;
            --c;
        }
    }
    return c;
}

std::string EmbeddedBlackGraph::var_name(int var) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (vertex_var_[v] == var) return vertex_ids_[v];
    for (int f = 0; f < num_faces(); ++f)
        if (face_var_[f] == var) return "F" + std::to_string(f);
    return "?" + std::to_string(var);
}

int EmbeddedBlackGraph::find_edge(const std::string& id) const {
    for (int e = 0; e < num_edges(); ++e)
        if (edges_[e].id == id) return e;
    return -1;
}

int EmbeddedBlackGraph::find_vertex(const std::string& id) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (vertex_ids_[v] == id) return v;
    return -1;
}

EmbeddedBlackGraph EmbeddedBlackGraph::with_base(int b) const {
    return EmbeddedBlackGraph(vertex_ids_, edges_, rot_, outer_dart_, b);
}

FaceSet trace_faces(const EmbeddedBlackGraph& g) {
    FaceSet fs;
    int D = 2 * g.num_edges();
    fs.face_of.assign(D, -1);
    for (int d = 0; d < D; ++d) {
        if (fs.face_of[d] >= 0) continue;
        int f = int(fs.walks.size());
        std::vector<int> walk;
        for (int x = d; fs.face_of[x] < 0; x = g.phi(x)) {
            fs.face_of[x] = f;
            walk.push_back(x);
        }
        fs.walks.push_back(std::move(walk));
    }
    // an edgeless graph still has its one (outer) face
    if (D == 0) fs.walks.emplace_back();
    return fs;
}

void validate(const EmbeddedBlackGraph& g) {
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::deque<int> q{s};
        comp[s] = nc;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int d : g.rotation()[x]) {
                int y = g.head(d);
                if (comp[y] < 0) {
                    comp[y] = nc;
                    q.push_back(y);
                }
            }
        }
        ++nc;
    }
    std::vector<int> V(nc, 0), E(nc, 0), F(nc, 0);
    for (int v = 0; v < n; ++v) ++V[comp[v]];
    for (const auto& e : g.edges()) ++E[comp[e.u]];
    if (g.num_edges() > 0)
        for (const auto& w : g.faces().walks) ++F[comp[g.tail(w.front())]];
    for (int c = 0; c < nc; ++c) {
        int f = E[c] == 0 ? 1 : F[c];
        if (V[c] - E[c] + f != 2)
            throw GraphError("graph: Euler check failed (V - E + F = " + std::to_string(V[c] - E[c] + f) +
                             " on a component); rotation is not planar");
    }
}

std::vector<int> cycle_darts(const EmbeddedBlackGraph& g, const std::vector<int>& cycle) {
    if (cycle.empty()) throw GraphError("cycle: empty");
    std::map<int, std::vector<int>> at; // vertex -> darts of cycle edges leaving it
    std::set<int> es(cycle.begin(), cycle.end());
    if (es.size() != cycle.size()) throw GraphError("cycle: repeated edge");
    for (int e : cycle) {
        if (e < 0 || e >= g.num_edges()) throw GraphError("cycle: unknown edge");
        at[g.edge(e).u].push_back(2 * e);
        at[g.edge(e).v].push_back(2 * e + 1);
    }
    for (auto& [v, ds] : at)
        if (ds.size() != 2) throw GraphError("cycle: not a simple closed walk");
    std::vector<int> walk;
    int d = 2 * cycle[0];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        walk.push_back(d);
        int h = g.head(d);
        const auto& ds = at[h];
        int nd = (ds[0] >> 1) == (d >> 1) ? ds[1] : ds[0];
        if (ds.size() == 2 && (ds[0] >> 1) == (ds[1] >> 1)) nd = d; // loop
        d = nd;
    }
    if (d != walk.front()) throw GraphError("cycle: edges do not form one closed walk");
    return walk;
}

std::vector<int> cycle_interior(const EmbeddedBlackGraph& g, const std::vector<int>& cycle) {
    cycle_darts(g, cycle); // validates
    std::vector<char> on(g.num_edges(), 0);
    for (int e : cycle) on[e] = 1;
    int F = g.num_faces();
    std::vector<std::vector<int>> adj(F);
    for (int e = 0; e < g.num_edges(); ++e) {
        if (on[e]) continue;
        int a = g.face_of(2 * e), b = g.face_of(2 * e + 1);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(F, 0);
    std::deque<int> q{g.outer_face()};
    seen[g.outer_face()] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                q.push_back(y);
            }
    }
    std::vector<int> in;
    for (int f = 0; f < F; ++f)
        if (!seen[f]) in.push_back(f);
    if (in.empty()) throw GraphError("cycle: empty interior");
    return in;
}

Orientation cycle_orientation_parity(const EmbeddedBlackGraph& g, const std::vector<int>& cycle, int e, int f,
                                     int ref_vertex) {
    std::vector<int> walk = cycle_darts(g, cycle);
    std::vector<int> in = cycle_interior(g, cycle);
    bool ccw = std::binary_search(in.begin(), in.end(), g.face_of(walk.front()));
    if (!ccw) {
        std::reverse(walk.begin(), walk.end());
        for (int& d : walk) d ^= 1;
    }
    // interleave: tail vertex, edge, tail vertex, edge, ...
    int n = int(walk.size());
    int pe = -1, pf = -1, pr = -1;
    for (int i = 0; i < n; ++i) {
        if (g.tail(walk[i]) == ref_vertex) pr = 2 * i;
        if ((walk[i] >> 1) == e) pe = 2 * i + 1;
        if ((walk[i] >> 1) == f) pf = 2 * i + 1;
    }
    if (pe < 0 || pf < 0) throw GraphError("cycle orientation: e or f not on the cycle");
    if (pr < 0) throw GraphError("cycle orientation: reference vertex not on the cycle");
    if (pe == pf) throw GraphError("cycle orientation: e and f coincide");
    int L = 2 * n;
    int df = ((pf - pe) % L + L) % L, dr = ((pr - pe) % L + L) % L;
    return df < dr ? Orientation::ccw : Orientation::cw;
}

namespace {

int remap_dart(int d, int e) { return (d >> 1) < e ? d : d - 2; }

int surviving_outer_dart(const EmbeddedBlackGraph& g, int e) {
    if (g.num_edges() == 0) return -1;
    for (int d : g.faces().walks[g.outer_face()])
        if ((d >> 1) != e) return remap_dart(d, e);
    // the outer face ran only along e; fall back to the other side
    for (int d : g.faces().walks[g.face_of((2 * e) ^ (g.face_of(2 * e) == g.outer_face()))])
        if ((d >> 1) != e) return remap_dart(d, e);
    return g.num_edges() > 1 ? 0 : -1;
}

} // namespace

EmbeddedBlackGraph delete_edge(const EmbeddedBlackGraph& g, int e) {
    if (e < 0 || e >= g.num_edges()) throw GraphError("delete: unknown edge");
    std::vector<Edge> edges;
    for (int i = 0; i < g.num_edges(); ++i)
        if (i != e) edges.push_back(g.edge(i));
    std::vector<std::vector<int>> rot(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int d : g.rotation()[v])
            if ((d >> 1) != e) rot[v].push_back(remap_dart(d, e));
    int od = surviving_outer_dart(g, e);
    return EmbeddedBlackGraph(g.vertex_ids(), edges, rot, edges.empty() ? -1 : od, g.base());
}

EmbeddedBlackGraph contract_edge(const EmbeddedBlackGraph& g, int e) {
    if (e < 0 || e >= g.num_edges()) throw GraphError("contract: unknown edge");
    int u = g.edge(e).u, v = g.edge(e).v;
    if (u == v) throw GraphError("contract: edge " + g.edge(e).id + " is a loop");
    int du = 2 * e, dv = 2 * e + 1;
    const auto& Lu = g.rotation()[u];
    const auto& Lv = g.rotation()[v];
    int iu = int(std::find(Lu.begin(), Lu.end(), du) - Lu.begin());
    int iv = int(std::find(Lv.begin(), Lv.end(), dv) - Lv.begin());
    // splice v's darts (ccw, starting after dv) in place of du
    std::vector<int> merged(Lu.begin(), Lu.begin() + iu);
    for (int k = 1; k < int(Lv.size()); ++k) merged.push_back(Lv[(iv + k) % Lv.size()]);
    merged.insert(merged.end(), Lu.begin() + iu + 1, Lu.end());
    auto vmap = [&](int w) {
        int z = (w == v) ? u : w;
        return z < v ? z : z - 1;
    };
    std::vector<std::string> ids;
    for (int w = 0; w < g.num_vertices(); ++w)
        if (w != v) ids.push_back(g.vertex_ids()[w]);
    std::vector<Edge> edges;
    for (int i = 0; i < g.num_edges(); ++i) {
        if (i == e) continue;
        Edge x = g.edge(i);
        x.u = vmap(x.u);
        x.v = vmap(x.v);
        edges.push_back(x);
    }
    std::vector<std::vector<int>> rot;
    for (int w = 0; w < g.num_vertices(); ++w) {
        if (w == v) continue;
        const auto& L = (w == u) ? merged : g.rotation()[w];
        std::vector<int> r;
        for (int d : L) r.push_back(remap_dart(d, e));
        rot.push_back(std::move(r));
    }
    int od = surviving_outer_dart(g, e);
    return EmbeddedBlackGraph(ids, edges, rot, edges.empty() ? -1 : od, vmap(g.base()));
}

namespace {

// try to extend a dart bijection starting from a0 -> b0 over a's component
bool grow_map(const EmbeddedBlackGraph& a, const EmbeddedBlackGraph& b, int a0, int b0, std::vector<int>& m,
              std::vector<int>& inv) {
    std::vector<int> touched;
    auto next = [](const EmbeddedBlackGraph& g, int d) {
        int v = g.tail(d);
        const auto& L = g.rotation()[v];
        int i = int(std::find(L.begin(), L.end(), d) - L.begin());
        return L[(i + 1) % L.size()];
    };
    std::deque<std::pair<int, int>> q{{a0, b0}};
    bool ok = true;
    while (!q.empty() && ok) {
        auto [x, y] = q.front();
        q.pop_front();
        if (m[x] >= 0 || inv[y] >= 0) {
            if (m[x] != y || inv[y] != x) ok = false;
            continue;
        }
        if (a.edge(x >> 1).height != b.edge(y >> 1).height) {
            ok = false;
            break;
        }
        m[x] = y;
        inv[y] = x;
        touched.push_back(x);
        q.emplace_back(x ^ 1, y ^ 1);
        q.emplace_back(next(a, x), next(b, y));
    }
    if (!ok)
        for (int x : touched) {
            inv[m[x]] = -1;
            m[x] = -1;
        }
    return ok;
}

} // namespace

bool isomorphic_maps(const EmbeddedBlackGraph& a, const EmbeddedBlackGraph& b, bool match_outer) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    int D = 2 * a.num_edges();
    std::vector<int> m(D, -1), inv(D, -1);
    for (int x = 0; x < D; ++x) {
        if (m[x] >= 0) continue;
        bool found = false;
        for (int y = 0; y < D && !found; ++y) {
            if (inv[y] >= 0) continue;
            found = grow_map(a, b, x, y, m, inv);
        }
        if (!found) return false;
    }
    if (match_outer && D > 0 && b.face_of(m[a.outer_dart()]) != b.outer_face()) {
        // a different choice of images could still match; only checked for connected maps
        if (a.connected()) {
            for (int y = 0; y < D; ++y) {
                std::vector<int> m2(D, -1), i2(D, -1);
                if (grow_map(a, b, 0, y, m2, i2) && b.face_of(m2[a.outer_dart()]) == b.outer_face()) return true;
            }
        }
        return false;
    }
    // isolated vertices pair up automatically once the counts agree
    return true;
}

} // namespace bos

namespace bos {

std::string canonical_code(const EmbeddedBlackGraph& g) {
    int D = 2 * g.num_edges();
    if (D == 0) return g.num_vertices() == 1 ? "point" : "empty" + std::to_string(g.num_vertices());
    if (!g.connected()) return "split";
    std::vector<int> nxt(D);
    for (const auto& L : g.rotation())
        for (std::size_t i = 0; i < L.size(); ++i) nxt[L[i]] = L[(i + 1) % L.size()];
    std::vector<int> best;
    for (int s : g.rotation()[g.base()]) {
        std::vector<int> lab(D, -1), order;
        lab[s] = 0;
        order.push_back(s);
        for (std::size_t i = 0; i < order.size(); ++i) {
            int d = order[i];
            for (int y : {nxt[d], d ^ 1})
                if (lab[y] < 0) {
                    lab[y] = int(order.size());
                    order.push_back(y);
                }
        }
        std::vector<int> code;
        code.reserve(4 * D);
        for (int d : order) {
            code.push_back(lab[nxt[d]]);
            code.push_back(lab[d ^ 1]);
            code.push_back(g.edge(d >> 1).height);
            code.push_back(g.face_of(d) == g.outer_face());
        }
        if (best.empty() || code < best) best = code;
    }
    std::string out;
    for (int x : best) {
        out += std::to_string(x);
        out += ',';
    }
    return out;
}

} // namespace bos
