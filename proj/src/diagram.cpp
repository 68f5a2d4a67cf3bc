#include "bos/diagram.hpp"

#include "bos/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace bos {

// ---------------------------------------------------------------- PD text

namespace {

struct Scanner {
    const std::string& s;
    size_t i = 0;
    int line = 1, col = 1;

    [[noreturn]] void fail(const std::string& what) const { throw PdParseError(what, line, col); }

    void bump() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }
    void skip() {
        while (i < s.size()) {
            if (s[i] == '#') {
                while (i < s.size() && s[i] != '\n') bump();
            } else if (std::isspace((unsigned char)s[i]) || s[i] == ',') {
                bump();
            } else {
                break;
            }
        }
    }
    bool at_end() {
        skip();
        return i >= s.size();
    }
    bool peek_word(const std::string& w) {
        skip();
        return s.compare(i, w.size(), w) == 0;
    }
    void expect(char c) {
        skip();
        if (i >= s.size()) fail(std::string("expected '") + c + "' but input ended");
        if (s[i] != c) fail(std::string("expected '") + c + "'");
        bump();
    }
    void word(const std::string& w) {
        skip();
        if (s.compare(i, w.size(), w) != 0) fail("expected '" + w + "'");
        for (size_t k = 0; k < w.size(); ++k) bump();
    }
    int number() {
        skip();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected a positive arc label");
        long long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000) fail("arc label too large");
            bump();
        }
        if (v == 0) fail("arc labels start at 1");
        return int(v);
    }
    std::vector<int> bracket_list() {
        expect('[');
        std::vector<int> out;
        for (;;) {
            skip();
            if (i < s.size() && s[i] == ']') {
                bump();
                return out;
            }
            if (i >= s.size()) fail("unterminated '['");
            out.push_back(number());
        }
    }
};

} // namespace

LinkDiagram parse_diagram(const std::string& text) {
    Scanner sc{text};
    LinkDiagram d;
    bool wrapped = false;
    if (sc.peek_word("PD")) {
        sc.word("PD");
        sc.expect('[');
        wrapped = true;
    }
    for (;;) {
        if (sc.at_end()) {
            if (wrapped) sc.fail("missing closing ']'");
            break;
        }
        if (wrapped && text[sc.i] == ']') {
            sc.bump();
            if (!sc.at_end()) sc.fail("trailing input after PD[...]");
            break;
        }
        int l = sc.line, c = sc.col;
        if (sc.peek_word("X")) {
            sc.word("X");
            auto v = sc.bracket_list();
            if (v.size() != 4) throw PdParseError("crossing needs 4 arc labels, got " + std::to_string(v.size()), l, c);
            d.crossings.push_back({{v[0], v[1], v[2], v[3]}});
        } else if (sc.peek_word("Loop")) {
            sc.word("Loop");
            auto v = sc.bracket_list();
            if (v.size() != 1) throw PdParseError("Loop takes one arc label", l, c);
            d.loops.push_back(v[0]);
        } else {
            sc.fail("expected X[...] or Loop[...]");
        }
    }
    validate(d);
    return d;
}

std::string serialize_diagram(const LinkDiagram& d) {
    std::ostringstream os;
    os << "PD[";
    bool first = true;
    for (const auto& x : d.crossings) {
        os << (first ? "" : ", ") << "X[" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3]
           << ']';
        first = false;
    }
    for (int l : d.loops) {
        os << (first ? "" : ", ") << "Loop[" << l << ']';
        first = false;
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------- structure

namespace {

// arc label -> its two ends (4c+k)
std::map<int, std::vector<int>> arc_ends(const LinkDiagram& d) {
    std::map<int, std::vector<int>> ends;
    for (size_t c = 0; c < d.crossings.size(); ++c)
        for (int k = 0; k < 4; ++k) ends[d.crossings[c].arcs[k]].push_back(int(4 * c + k));
    return ends;
}

std::vector<int> partner_of(const LinkDiagram& d) {
    std::vector<int> p(4 * d.crossings.size(), -1);
    for (auto& [a, e] : arc_ends(d)) {
        if (e.size() != 2) throw DiagramError("arc " + std::to_string(a) + " occurs " + std::to_string(e.size()) +
                                              " times (expected exactly twice)");
        p[e[0]] = e[1];
        p[e[1]] = e[0];
    }
    return p;
}

std::vector<bool> orient(const LinkDiagram& d, const std::vector<int>& partner) {
    int n = int(d.crossings.size());
    std::vector<int> st(4 * n, -1); // 1 incoming, 0 outgoing
    auto set = [&](int x, int v, bool& changed) {
        if (st[x] == -1) {
            st[x] = v;
            changed = true;
        } else if (st[x] != v) {
            throw DiagramError("inconsistent orientation at crossing " + std::to_string(x / 4 + 1));
        }
    };
    bool dummy = false;
    for (int c = 0; c < n; ++c) {
        set(4 * c, 1, dummy);
        set(4 * c + 2, 0, dummy);
    }
    for (;;) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < 4 * n; ++x) {
                if (st[x] == -1) continue;
                set(partner[x], 1 - st[x], changed);
                int c = x / 4, k = x % 4;
                set(4 * c + (k + 2) % 4, 1 - st[x], changed);
            }
        }
        // components passing only over: run them from position 3 to 1
        auto it = std::find(st.begin(), st.end(), -1);
        if (it == st.end()) break;
        int c = int(it - st.begin()) / 4;
        set(4 * c + 3, 1, dummy);
    }
    std::vector<bool> in(4 * n);
    for (int x = 0; x < 4 * n; ++x) in[x] = st[x] == 1;
    return in;
}

} // namespace

std::vector<bool> orientation(const LinkDiagram& d) { return orient(d, partner_of(d)); }

DiagramFaces diagram_faces(const LinkDiagram& d) {
    auto partner = partner_of(d);
    int n = int(d.crossings.size());
    DiagramFaces f;
    f.face_of.assign(4 * n, -1);
    for (int s = 0; s < 4 * n; ++s) {
        if (f.face_of[s] >= 0) continue;
        int id = int(f.walks.size());
        f.walks.emplace_back();
        int x = s;
        do {
            f.face_of[x] = id;
            f.walks.back().push_back(x);
            int r = partner[x];
            x = 4 * (r / 4) + (r % 4 + 3) % 4;
        } while (x != s);
    }
    f.component_of_crossing.assign(n, -1);
    for (int c = 0; c < n; ++c) {
        if (f.component_of_crossing[c] >= 0) continue;
        std::vector<int> stack{c};
        f.component_of_crossing[c] = f.components;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            for (int k = 0; k < 4; ++k) {
                int z = partner[4 * y + k] / 4;
                if (f.component_of_crossing[z] < 0) {
                    f.component_of_crossing[z] = f.components;
                    stack.push_back(z);
                }
            }
        }
        ++f.components;
    }
    return f;
}

void validate(const LinkDiagram& d) {
    auto ends = arc_ends(d);
    for (auto& [a, e] : ends)
        if (e.size() != 2)
            throw DiagramError("arc " + std::to_string(a) + " occurs " + std::to_string(e.size()) +
                               " times (expected exactly twice)");
    std::vector<int> seen;
    for (int l : d.loops) {
        if (ends.count(l) || std::find(seen.begin(), seen.end(), l) != seen.end())
            throw DiagramError("loop label " + std::to_string(l) + " is used elsewhere");
        seen.push_back(l);
    }
    orientation(d);
    auto f = diagram_faces(d);
    std::vector<int> V(f.components), F(f.components);
    for (int c : f.component_of_crossing) ++V[c];
    for (const auto& w : f.walks) ++F[f.component_of_crossing[w[0] / 4]];
    for (int k = 0; k < f.components; ++k)
        if (V[k] - 2 * V[k] + F[k] != 2)
            throw DiagramError("projection is not planar: V - E + F = " + std::to_string(F[k] - V[k]) +
                               " in component " + std::to_string(k));
}

std::vector<Sign> crossing_signs(const LinkDiagram& d) {
    auto in = orientation(d);
    std::vector<Sign> s;
    for (size_t c = 0; c < d.crossings.size(); ++c) s.push_back(in[4 * c + 3] ? Sign::positive : Sign::negative);
    return s;
}

int negative_crossing_count(const LinkDiagram& d) {
    auto s = crossing_signs(d);
    return int(std::count(s.begin(), s.end(), Sign::negative));
}

std::vector<int> unbounded_faces(const LinkDiagram& d, const DiagramFaces& f) {
    auto in = orientation(d);
    std::vector<int> best(f.components, -1), face(f.components, -1);
    for (size_t c = 0; c < d.crossings.size(); ++c)
        for (int k = 0; k < 4; ++k) {
            int x = int(4 * c + k);
            if (in[x]) continue; // take the outgoing end of each arc
            int comp = f.component_of_crossing[c];
            int a = d.crossings[c].arcs[k];
            if (best[comp] < 0 || a < best[comp]) {
                best[comp] = a;
                face[comp] = f.face_of[4 * c + (k + 3) % 4];
            }
        }
    return face;
}

// ---------------------------------------------------------------- colouring

namespace {

struct Colouring {
    DiagramFaces f;
    std::vector<int> unbounded;
    std::vector<int> black; // per face
};

Colouring colour(const LinkDiagram& d, bool outer_black) {
    Colouring c{diagram_faces(d), {}, {}};
    c.unbounded = unbounded_faces(d, c.f);
    int n = int(d.crossings.size());
    c.black.assign(c.f.walks.size(), -1);
    for (int comp = 0; comp < c.f.components; ++comp) c.black[c.unbounded[comp]] = outer_black ? 1 : 0;
    // corners 0 and 2 share a colour, 1 and 3 the other
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            int known = -1, val = 0;
            for (int k = 0; k < 4 && known < 0; ++k)
                if (c.black[c.f.face_of[4 * x + k]] >= 0) {
                    known = k;
                    val = c.black[c.f.face_of[4 * x + k]];
                }
            if (known < 0) continue;
            for (int k = 0; k < 4; ++k) {
                int want = (k - known) % 2 == 0 ? val : 1 - val;
                int& b = c.black[c.f.face_of[4 * x + k]];
                if (b < 0) {
                    b = want;
                    changed = true;
                } else if (b != want) {
                    throw DiagramError("faces do not admit a checkerboard colouring");
                }
            }
        }
    }
    return c;
}

int crossing_height(const Colouring& c, int x) { return c.black[c.f.face_of[4 * x]] == 1 ? 0 : 1; }

} // namespace

EmbeddedBlackGraph black_graph(const LinkDiagram& d, const BlackGraphOptions& opt) {
    Colouring c = colour(d, opt.outer_black);
    int n = int(d.crossings.size());
    std::vector<int> vertex_of(c.f.walks.size(), -1);
    std::vector<std::string> ids;
    for (size_t f = 0; f < c.f.walks.size(); ++f)
        if (c.black[f] == 1) {
            vertex_of[f] = int(ids.size());
            ids.push_back("B" + std::to_string(ids.size()));
        }
    for (size_t l = 0; l < d.loops.size(); ++l) ids.push_back("B" + std::to_string(ids.size()));

    std::vector<Edge> edges;
    for (int x = 0; x < n; ++x) {
        int h = crossing_height(c, x);
        edges.push_back({"x" + std::to_string(x + 1), vertex_of[c.f.face_of[4 * x + h]],
                         vertex_of[c.f.face_of[4 * x + h + 2]], h});
    }
    std::vector<std::vector<int>> rot(ids.size());
    for (size_t f = 0; f < c.f.walks.size(); ++f) {
        if (c.black[f] != 1) continue;
        for (int dart : c.f.walks[f]) {
            int x = dart / 4, k = dart % 4, h = edges[x].height;
            rot[vertex_of[f]].push_back(k == h ? 2 * x : 2 * x + 1);
        }
    }

    int outer_dart = -1, base = 0;
    if (n > 0) {
        int main = c.f.component_of_crossing[0];
        int W = c.unbounded[main];
        if (opt.outer_black) {
            for (size_t f = 0; f < c.f.walks.size(); ++f)
                if (c.black[f] == 0 && c.f.component_of_crossing[c.f.walks[f][0] / 4] == main) {
                    W = int(f);
                    break;
                }
        }
        int best = -1;
        for (int x = 0; x < n && outer_dart < 0; ++x) {
            int h = edges[x].height;
            if (c.f.face_of[4 * x + (h + 3) % 4] == W) outer_dart = 2 * x;
            else if (c.f.face_of[4 * x + (h + 1) % 4] == W) outer_dart = 2 * x + 1;
        }
        if (opt.outer_black) {
            best = vertex_of[c.unbounded[main]];
        } else {
            for (int x = 0; x < n; ++x) {
                int h = edges[x].height;
                if (c.f.face_of[4 * x + (h + 1) % 4] == W || c.f.face_of[4 * x + (h + 3) % 4] == W) {
                    int m = std::min(edges[x].u, edges[x].v);
                    if (best < 0 || m < best) best = m;
                }
            }
        }
        base = best < 0 ? 0 : best;
    }
    if (ids.empty()) throw DiagramError("empty diagram");
    EmbeddedBlackGraph g(ids, edges, rot, outer_dart, base);
    if (opt.base) {
        int b = g.find_vertex(*opt.base);
        if (b < 0) throw DiagramError("unknown base vertex " + *opt.base);
        g = g.with_base(b);
    }
    return g;
}

// ---------------------------------------------------------------- medial construction

LinkDiagram diagram_from_black_graph(const EmbeddedBlackGraph& g) {
    int m = g.num_edges();
    std::vector<int> partner(4 * m, -1);
    auto L = [&](int d) { return 4 * (d >> 1) + (g.edge(d >> 1).height + ((d & 1) ? 2 : 0)) % 4; };
    auto R = [&](int d) { return 4 * (d >> 1) + (g.edge(d >> 1).height + 1 + ((d & 1) ? 2 : 0)) % 4; };
    for (const auto& r : g.rotation())
        for (size_t i = 0; i < r.size(); ++i) {
            int a = L(r[i]), b = R(r[(i + 1) % r.size()]);
            partner[a] = b;
            partner[b] = a;
        }

    std::vector<int> label(4 * m, 0);
    std::vector<bool> incoming(4 * m, false);
    int next = 1;
    auto run = [&](int start) {
        int cur = start;
        do {
            int p = partner[cur];
            label[cur] = label[p] = next++;
            incoming[p] = true;
            cur = 4 * (p / 4) + (p % 4 + 2) % 4;
        } while (cur != start);
    };
    if (m > 0) {
        // start on the under strand next to the outer face; an over-only strand
        // would get its direction from the parser instead of from us
        int od = g.outer_dart();
        int e = od >> 1, j = (g.edge(e).height + ((od & 1) ? 1 : 3)) % 4;
        run((j + 1) % 2 == 0 ? 4 * e + (j + 1) % 4 : partner[4 * e + j]);
        for (int x = 0; x < 4 * m; ++x)
            if (!label[x]) run(x);
    }
    LinkDiagram d;
    for (int e = 0; e < m; ++e) {
        int s = incoming[4 * e] ? 0 : 2;
        Crossing c;
        for (int k = 0; k < 4; ++k) c.arcs[k] = label[4 * e + (s + k) % 4];
        d.crossings.push_back(c);
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.rotation()[v].empty()) d.loops.push_back(next++);
    return d;
}

// ---------------------------------------------------------------- Goeritz

long long goeritz_det(const LinkDiagram& d, bool outer_black) {
    if (d.crossings.empty()) return d.loops.size() == 1 ? 1 : 0;
    Colouring c = colour(d, outer_black);
    if (c.f.components > 1 || !d.loops.empty()) return 0;
    std::vector<int> idx(c.f.walks.size(), -1);
    int k = 0;
    for (size_t f = 0; f < c.f.walks.size(); ++f)
        if (c.black[f] == 0) idx[f] = k++;
    std::vector<std::vector<__int128>> G(k, std::vector<__int128>(k, 0));
    for (size_t x = 0; x < d.crossings.size(); ++x) {
        int h = crossing_height(c, int(x));
        int eta = h == 0 ? 1 : -1;
        int i = idx[c.f.face_of[4 * x + (h + 1) % 4]], j = idx[c.f.face_of[4 * x + (h + 3) % 4]];
        if (i == j) continue;
        G[i][i] += eta;
        G[j][j] += eta;
        G[i][j] -= eta;
        G[j][i] -= eta;
    }
    int n = k - 1;
    if (n <= 0) return 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = G[i + 1][j + 1];
    __int128 prev = 1;
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(a[p], a[col]);
            sign = -sign;
        }
        for (int i = col + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j) a[i][j] = (a[i][j] * a[col][col] - a[i][col] * a[col][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[col][col];
    }
    __int128 det = a[n - 1][n - 1] * sign;
    return (long long)(det < 0 ? -det : det);
}

// ---------------------------------------------------------------- kinks

LinkDiagram add_kink(const LinkDiagram& d, int arc, Sign sign, bool left) {
    auto in = orientation(d);
    int head = -1;
    for (size_t c = 0; c < d.crossings.size(); ++c)
        for (int k = 0; k < 4; ++k)
            if (d.crossings[c].arcs[k] == arc && in[4 * c + k]) head = int(4 * c + k);
    LinkDiagram out = d;
    int top = 0;
    for (const auto& x : d.crossings)
        for (int a : x.arcs) top = std::max(top, a);
    for (int l : d.loops) top = std::max(top, l);
    int loop = top + 1, tail = top + 2;
    if (head < 0) {
        auto it = std::find(out.loops.begin(), out.loops.end(), arc);
        if (it == out.loops.end()) throw DiagramError("no arc labelled " + std::to_string(arc));
        // a kinked circle: both ends of the new strand meet the one crossing
        out.loops.erase(it);
        tail = arc;
    } else {
        out.crossings[head / 4].arcs[head % 4] = tail;
    }
    // strand: arc -> crossing -> loop -> crossing -> tail; first pass under
    // when !left, over when left. Position 3 incoming over makes it positive.
    bool pos = sign == Sign::positive;
    Crossing x;
    if (!left) x.arcs = pos ? std::array<int, 4>{arc, tail, loop, loop} : std::array<int, 4>{arc, loop, loop, tail};
    else x.arcs = pos ? std::array<int, 4>{loop, loop, tail, arc} : std::array<int, 4>{loop, arc, tail, loop};
    out.crossings.push_back(x);
    validate(out);
    return out;
}

// ---------------------------------------------------------------- named diagrams

std::vector<NamedDiagram> basic_knots() {
    std::vector<NamedDiagram> v;
    v.push_back({"unknot", parse_diagram("PD[Loop[1]]"), 1});
    v.push_back({"trefoil_right", parse_diagram("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]"), 3});
    v.push_back({"trefoil_left", parse_diagram("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]"), 3});
    v.push_back({"figure_eight", parse_diagram("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]"), 5});
    v.push_back({"knot_8_19", diagram_from_black_graph(graph_fixture("D33")), 3});
    v.push_back({"unlink2", parse_diagram("PD[Loop[1], Loop[2]]"), 0});
    return v;
}

} // namespace bos
