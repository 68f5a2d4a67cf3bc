#include "bos/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>

namespace bos {

EmbeddedBlackGraph graph_from_coordinates(const std::vector<std::string>& ids,
                                          const std::vector<std::pair<double, double>>& pos,
                                          const std::vector<Edge>& edges, int base, int outer_dart) {
    int n = int(ids.size());
    std::vector<std::vector<int>> rot(n);
    for (int e = 0; e < int(edges.size()); ++e) {
        rot[edges[e].u].push_back(2 * e);
        rot[edges[e].v].push_back(2 * e + 1);
    }
    auto angle = [&](int d) {
        const Edge& e = edges[d >> 1];
        int a = (d & 1) ? e.v : e.u, b = (d & 1) ? e.u : e.v;
        return std::atan2(pos[b].second - pos[a].second, pos[b].first - pos[a].first);
    };
    for (auto& r : rot) std::stable_sort(r.begin(), r.end(), [&](int x, int y) { return angle(x) < angle(y); });
    return EmbeddedBlackGraph(ids, edges, rot, outer_dart, base);
}

namespace {

std::string arc_edge_id(int i, int j) {
    if (i < 10 && j < 10) return "a" + std::to_string(i) + std::to_string(j);
    return "a" + std::to_string(i) + "_" + std::to_string(j);
}

} // namespace

EmbeddedBlackGraph wheel_graph(const std::vector<int>& ns) {
    int k = int(ns.size());
    if (k < 2) throw FixtureError("wheel: need at least two arcs");
    for (int x : ns)
        if (x < 0) throw FixtureError("wheel: arc lengths must be non-negative");
    std::vector<int> pre{0};
    for (int x : ns) pre.push_back(pre.back() + x);
    int m = pre.back();
    if (m < 1) throw FixtureError("wheel: rim needs at least one edge");
    std::vector<int> jpos(k);
    for (int i = 0; i < k; ++i) jpos[i] = pre[i] % m;

    std::vector<std::string> ids(1 + m);
    ids[0] = "hub";
    for (int i = 0; i < k; ++i)
        if (ids[1 + jpos[i]].empty()) ids[1 + jpos[i]] = "J" + std::to_string(i);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j < ns[i - 1]; ++j) ids[1 + pre[i - 1] + j] = "p" + std::to_string(i) + "_" + std::to_string(j);

    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= ns[i - 1]; ++j) {
            int p = pre[i - 1] + j - 1;
            edges.push_back({arc_edge_id(i, j), 1 + p % m, 1 + (p + 1) % m, 0});
        }
    int sp0 = int(edges.size());
    for (int i = 0; i < k; ++i) edges.push_back({"e" + std::to_string(i), 0, 1 + jpos[i], 1});

    std::vector<std::vector<int>> rot(1 + m);
    for (int i = 0; i < k; ++i) rot[0].push_back(2 * (sp0 + i));
    for (int p = 0; p < m; ++p) {
        int r = 1 + p;
        std::vector<int> out, in, sp;
        for (int e = 0; e < sp0; ++e) {
            if (edges[e].u == r) out.push_back(2 * e);
            if (edges[e].v == r) in.push_back(2 * e + 1);
        }
        for (int i = 0; i < k; ++i)
            if (1 + jpos[i] == r) sp.push_back(i);
        // spokes meeting at a merged junction: the later arc end comes first
        auto key = [&](int i) { return std::make_pair(pre[i] < m ? pre[i] : pre[i] - m - 1, i); };
        std::sort(sp.begin(), sp.end(), [&](int a, int b) { return key(a) > key(b); });
        auto& R = rot[r];
        R = out;
        for (int i : sp) R.push_back(2 * (sp0 + i) + 1);
        R.insert(R.end(), in.begin(), in.end());
    }
    EmbeddedBlackGraph g(ids, edges, rot, 1, 0);
    validate(g);
    return g;
}

EmbeddedBlackGraph e_family(int k) {
    if (k < 2) throw FixtureError("E family: k must be at least 2");
    std::vector<std::string> ids{"C", "V6", "V2", "V3", "V10", "V9", "V4", "V8", "V7", "V5"};
    std::vector<std::pair<double, double>> pos{{1445, 380}, {1443, 491}, {1550, 456}, {1526, 248}, {1463, 234},
                                               {1386, 238}, {1324, 263}, {1296, 314}, {1299, 411}, {1337, 453}};
    for (int j = 1; j < k; ++j) {
        ids.push_back("w" + std::to_string(j));
        pos.push_back({1585.0, 456.0 + (248.0 - 456.0) * j / k});
    }
    auto v = [&](const std::string& s) { return int(std::find(ids.begin(), ids.end(), s) - ids.begin()); };
    std::vector<Edge> edges{{"s2", v("C"), v("V2"), 1},     {"s5", v("C"), v("V5"), 1},    {"s4", v("C"), v("V4"), 1},
                            {"s3", v("C"), v("V3"), 1},     {"c6", v("C"), v("V6"), 0},    {"a", v("V6"), v("V2"), 0},
                            {"r56", v("V5"), v("V6"), 0},   {"r57", v("V5"), v("V7"), 0},  {"r78", v("V7"), v("V8"), 0},
                            {"r84", v("V8"), v("V4"), 0},   {"r49", v("V4"), v("V9"), 0},  {"r910", v("V9"), v("V10"), 0},
                            {"r103", v("V10"), v("V3"), 0}};
    std::vector<std::string> chain{"V2"};
    for (int j = 1; j < k; ++j) chain.push_back("w" + std::to_string(j));
    chain.push_back("V3");
    for (int j = 0; j < k; ++j) edges.push_back({"e" + std::to_string(j + 1), v(chain[j]), v(chain[j + 1]), 0});
    int r57 = 7;
    EmbeddedBlackGraph g = graph_from_coordinates(ids, pos, edges, v("C"), 2 * r57 + 1);
    validate(g);
    return g;
}

int PrintedMatrix::var(const std::string& name) const {
    auto it = std::find(var_names.begin(), var_names.end(), name);
    if (it == var_names.end()) throw FixtureError("printed matrix: no variable " + name);
    return int(it - var_names.begin());
}

PrintedMatrix paper_matrix_M() {
    PrintedMatrix pm;
    pm.var_names = {"x", "y1", "y2", "z1", "z2", "v", "Q", "T"};
    auto X = [&](const std::string& s) { return Monomial::var(pm.var(s)); };
    Monomial x = X("x"), y1 = X("y1"), y2 = X("y2"), z1 = X("z1"), z2 = X("z2"), v = X("v");
    Monomial a = x * y1 * y2 * z1 * z2 * v;
    Poly2 Q = Poly2::var(pm.var("Q")), T = Poly2::var(pm.var("T"));
    FieldElement A = inv_one_plus(Q);
    FieldElement B(Q, Q + T);
    FieldElement I = FieldElement::one();
    FactoredFraction fA = factored_inv_one_plus(Q), fB = FactoredFraction::ratio(Q, Q + T), fI = FactoredFraction::one();
    struct Listed {
        int row, col;
        bool is_a; // A-type entry, else (B + 1)-type
        Monomial zeta;
    };
    std::vector<Listed> listed{
        {1, 0, true, x},
        {2, 0, true, x * y1},
        {3, 0, true, x * y1 * y2},
        {4, 1, true, x * z1},
        {5, 1, true, x * y1 * z1},
        {6, 1, true, x * y1 * y2 * z1},
        {7, 2, true, x * z1 * z2},
        {8, 2, true, x * y1 * z1 * z2},
        {9, 2, true, x * y1 * y2 * z1 * z2},
        {1, 3, false, x},
        {4, 3, false, x * z1},
        {7, 3, false, x * z1 * z2},
        {2, 4, false, x * y1},
        {5, 4, false, x * y1 * z1},
        {8, 4, false, x * y1 * z1 * z2},
        {3, 5, false, x * y1 * y2},
        {6, 5, false, x * y1 * y2 * z1},
        {9, 5, false, x * y1 * y2 * z1 * z2},
    };
    pm.m.assign(9, FVector(12));
    pm.mf.assign(9, std::vector<FactoredFraction>(12));
    for (const auto& L : listed) {
        FieldElement left = L.is_a ? A : B + I;
        pm.m[L.row - 1][L.col] = left + inv_one_plus(Poly2(L.zeta));
        // mirrored column: A -> A + 1, B + 1 -> B, 1/(1+zeta) -> 1/(1 + a/zeta)
        FieldElement left2 = L.is_a ? A + I : B;
        Poly2 q(L.zeta.quotient_of(a));
        pm.m[L.row - 1][L.col + 6] = left2 + inv_one_plus(q);
        pm.mf[L.row - 1][L.col] = (L.is_a ? fA : fB + fI) + factored_inv_one_plus(Poly2(L.zeta));
        pm.mf[L.row - 1][L.col + 6] = (L.is_a ? fA + fI : fB) + factored_inv_one_plus(q);
    }
    return pm;
}

SpecializationMap paper_specialization(const PrintedMatrix& pm, int t_var) {
    SpecializationMap s;
    auto put = [&](const std::string& n, int e) { s.assign[pm.var(n)] = Poly2::var(t_var, e); };
    put("x", 1);
    put("y1", 2);
    put("y2", 1);
    put("z1", 4);
    put("z2", 1);
    put("v", 6);
    put("T", 10);
    s.keep_free.insert(pm.var("Q"));
    return s;
}

namespace {

EmbeddedBlackGraph single_edge(int height) {
    return EmbeddedBlackGraph({"u", "v"}, {{"e", 0, 1, height}}, {{0}, {1}}, 0, 0);
}

} // namespace

std::vector<std::string> graph_fixture_names() {
    return {"D33", "D330", "D36", "D331", "D332", "D333", "E2", "E3", "E4", "E5", "E6", "point", "edge0", "edge1"};
}

EmbeddedBlackGraph graph_fixture(const std::string& name) {
    if (name == "D33") return wheel_graph({3, 3});
    if (name == "D330") return wheel_graph({3, 3, 0});
    if (name == "D36") return wheel_graph({3, 6});
    if (name.size() == 4 && name.rfind("D33", 0) == 0 && std::isdigit((unsigned char)name[3]))
        return wheel_graph({3, 3, name[3] - '0'});
    if (name.size() >= 2 && name[0] == 'E') {
        int k = 0;
        try {
            k = std::stoi(name.substr(1));
        } catch (...) {
            throw FixtureError("unknown fixture " + name);
        }
        return e_family(k);
    }
    if (name == "point") return EmbeddedBlackGraph({"u"}, {}, {{}}, -1, 0);
    if (name == "edge0") return single_edge(0);
    if (name == "edge1") return single_edge(1);
    throw FixtureError("unknown fixture " + name);
}

EmbeddedBlackGraph random_plane_graph(uint64_t seed, int m) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return int(rng() % uint64_t(n)); };
    std::vector<std::string> ids{"v0"};
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rot(1);
    auto insert_after = [&](int v, int after, int d) {
        auto& r = rot[v];
        if (after < 0) r.push_back(d);
        else r.insert(std::find(r.begin(), r.end(), after) + 1, d);
    };
    auto tail = [&](int d) { return (d & 1) ? edges[d >> 1].v : edges[d >> 1].u; };
    for (int e = 0; e < m; ++e) {
        EmbeddedBlackGraph cur(ids, edges, rot, edges.empty() ? -1 : 0, 0);
        int h = pick(2);
        std::string id = "e" + std::to_string(e);
        // corners are darts (the corner after d at its tail), or the bare vertex
        bool leaf = edges.empty() || pick(3) == 0;
        if (leaf) {
            int d = edges.empty() ? -1 : pick(2 * int(edges.size()));
            int v = d < 0 ? 0 : tail(d);
            int w = int(ids.size());
            ids.push_back("v" + std::to_string(w));
            rot.emplace_back();
            edges.push_back({id, v, w, h});
            insert_after(v, d, 2 * e);
            rot[w].push_back(2 * e + 1);
        } else {
            const auto& walk = cur.faces().walks[pick(cur.num_faces())];
            int d1 = walk[pick(int(walk.size()))], d2 = walk[pick(int(walk.size()))];
            edges.push_back({id, tail(d1), tail(d2), h});
            insert_after(tail(d1), d1, 2 * e);
            insert_after(tail(d2), d1 == d2 ? 2 * e : d2, 2 * e + 1);
        }
    }
    int od = m ? pick(2 * m) : -1;
    EmbeddedBlackGraph g(ids, edges, rot, od, pick(int(ids.size())));
    validate(g);
    return g;
}

} // namespace bos
