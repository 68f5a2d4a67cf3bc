#include "bos/analysis.hpp"

#include "bos/fixtures.hpp"
#include "bos/witness.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <unordered_map>

namespace bos {

SkeinResolution skein_resolve(const EmbeddedBlackGraph& g, int e) {
    if (e < 0 || e >= g.num_edges()) throw GraphError("skein: unknown edge");
    SkeinResolution s;
    s.edge = e;
    const Edge& ed = g.edge(e);
    Resolution del, con;
    del.kind = "delete";
    del.graph = delete_edge(g, e);
    del.zero = !del.graph->connected();
    con.kind = "contract";
    if (ed.u == ed.v) {
        con.zero = true; // no spanning tree contains a loop
    } else {
        con.graph = contract_edge(g, e);
    }
    if (ed.height == 0) {
        s.sub = std::move(del);
        s.quotient = std::move(con);
    } else {
        s.sub = std::move(con);
        s.quotient = std::move(del);
    }
    s.sub.shift = 1;
    s.quotient.shift = 0;
    return s;
}

namespace {

constexpr long long kInf = 1LL << 40;

struct Interval {
    long long lo = 0, hi = kInf;
};

// bounds propagation for sums of +-1 multiples of integer variables
struct Csp {
    std::vector<Interval> v;
    struct Eq {
        std::vector<std::pair<int, int>> terms; // (coef, var)
        long long k = 0;
    };
    std::vector<Eq> eqs;

    int var(long long lo = 0, long long hi = kInf) {
        v.push_back({lo, hi});
        return int(v.size()) - 1;
    }
    void eq(std::vector<std::pair<int, int>> t, long long k = 0) { eqs.push_back({std::move(t), k}); }
    // a <= b
    void le(int a, int b) {
        int s = var();
        eq({{1, a}, {1, s}, {-1, b}});
    }
    bool run() {
        for (int it = 0; it < 10000; ++it) {
            bool changed = false;
            for (const auto& E : eqs) {
                for (std::size_t i = 0; i < E.terms.size(); ++i) {
                    // c_i x_i = k - sum_{j != i} c_j x_j
                    long long lo = E.k, hi = E.k;
                    for (std::size_t j = 0; j < E.terms.size(); ++j) {
                        if (j == i) continue;
                        auto [c, x] = E.terms[j];
                        if (c > 0) {
                            lo -= v[x].hi;
                            hi -= v[x].lo;
                        } else {
                            lo += v[x].lo;
                            hi += v[x].hi;
                        }
                    }
                    lo = std::max(lo, -kInf);
                    hi = std::min(hi, kInf);
                    auto [c, x] = E.terms[i];
                    long long nl = c > 0 ? lo : -hi, nh = c > 0 ? hi : -lo;
                    if (nl > v[x].lo) {
                        v[x].lo = nl;
                        changed = true;
                    }
                    if (nh < v[x].hi) {
                        v[x].hi = nh;
                        changed = true;
                    }
                    if (v[x].lo > v[x].hi) return false;
                }
            }
            if (!changed) return true;
        }
        return true;
    }
};

struct BoxIn {
    std::map<int, int> lo, hi;
};

struct LesModel {
    Csp csp;
    std::map<int, int> A, B, C, X; // height -> var (X[h]: delta from C_h to A_{h+2})
};

int sign_at(int h, int h0) { return ((h - h0) / 2) % 2 ? -1 : 1; }

// heights: common parity set covering all three; chi values in the common sign convention
LesModel build_les(const BoxIn& a, const BoxIn& b, const BoxIn& c, const std::vector<int>& heights,
                   const std::optional<long long>& chi_a, const std::optional<long long>& chi_b,
                   const std::optional<long long>& chi_c) {
    LesModel m;
    auto get = [](const BoxIn& x, int h, bool hi) {
        const auto& mp = hi ? x.hi : x.lo;
        auto it = mp.find(h);
        return it == mp.end() ? 0 : it->second;
    };
    for (int h : heights) {
        m.A[h] = m.csp.var(get(a, h, false), get(a, h, true));
        m.B[h] = m.csp.var(get(b, h, false), get(b, h, true));
        m.C[h] = m.csp.var(get(c, h, false), get(c, h, true));
        m.X[h] = m.csp.var();
    }
    int top = heights.empty() ? 0 : heights.back();
    int bottom = heights.empty() ? 0 : heights.front();
    int zero = m.csp.var(0, 0);
    auto A = [&](int h) { return m.A.count(h) ? m.A[h] : zero; };
    auto C = [&](int h) { return m.C.count(h) ? m.C[h] : zero; };
    auto X = [&](int h) { return m.X.count(h) ? m.X[h] : zero; };
    for (int h : heights) {
        // image of A_h in B_h and kernel part of C_h
        int P = m.csp.var(), Q = m.csp.var();
        m.csp.eq({{1, P}, {1, X(h - 2)}, {-1, A(h)}});
        m.csp.eq({{1, Q}, {1, X(h)}, {-1, C(h)}});
        m.csp.eq({{1, P}, {1, Q}, {-1, m.B[h]}});
        m.csp.le(X(h), A(h + 2));
    }
    if (!heights.empty()) m.csp.eq({{1, m.X[top]}}, 0);
    (void)bottom;
    auto euler = [&](const std::map<int, int>& vars, const std::optional<long long>& chi) {
        if (!chi) return;
        std::vector<std::pair<int, int>> t;
        for (auto [h, x] : vars) t.push_back({sign_at(h, heights.front()), x});
        m.csp.eq(t, *chi);
    };
    euler(m.A, chi_a);
    euler(m.B, chi_b);
    euler(m.C, chi_c);
    return m;
}

} // namespace

LesResult les_consistency(const SkeinTriple& t) {
    std::set<int> hs;
    for (const auto* mp : {&t.whole, &t.sub, &t.quotient})
        for (auto [h, x] : *mp) hs.insert(h);
    LesResult r;
    if (hs.empty()) return r;
    int par = *hs.begin() & 1;
    for (int h : hs)
        if ((h & 1) != par) {
            r.ok = false;
            r.reason = "incompatible gradings (mixed parity)";
            return r;
        }
    std::vector<int> heights;
    for (int h = *hs.begin(); h <= *hs.rbegin(); h += 2) heights.push_back(h);
    BoxIn a{t.sub, t.sub}, b{t.whole, t.whole}, c{t.quotient, t.quotient};
    LesModel m = build_les(a, b, c, heights, {}, {}, {});
    if (!m.csp.run()) {
        r.ok = false;
        r.reason = "no admissible connecting ranks";
        return r;
    }
    for (int h : heights) {
        auto iv = m.csp.v[m.X[h]];
        if (iv.lo != iv.hi) {
            r.ok = false;
            r.reason = "connecting ranks not determined";
            return r;
        }
        if (iv.lo) r.delta[h] = int(iv.lo);
    }
    return r;
}

LesResult short_exact_feasible(const std::map<int, int>& a, const std::map<int, int>& b, const std::map<int, int>& c) {
    // 0 -> A -> B -> C -> 0 of complexes: long sequence A_h -> B_h -> C_h -> A_{h+2}
    SkeinTriple t{b, a, c};
    return les_consistency(t);
}

CollapseVerdict collapse_check(const CohomologyReport& r) {
    CollapseVerdict v;
    auto occ = r.occupied();
    for (std::size_t i = 0; i < occ.size(); ++i)
        for (std::size_t j = i + 1; j < occ.size(); ++j) {
            int d = occ[j] - occ[i];
            if (d >= 6 && d % 4 == 2) v.blocking.push_back({occ[i], occ[j]});
        }
    v.collapsed = v.blocking.empty();
    return v;
}

HfInference infer_hf(const CohomologyReport& r) {
    HfInference out;
    if (r.determinant == 0) {
        out.reason = "determinant is 0: the branched double cover has infinite first homology";
        return out;
    }
    if (!r.all_certified()) {
        out.reason = "ranks are specialized upper bounds only";
        return out;
    }
    auto c = collapse_check(r);
    if (!c.collapsed) {
        out.reason = "a higher differential is possible between occupied heights";
        return out;
    }
    out.rank = r.total_rank();
    out.reason = "collapsed at E3";
    return out;
}

bool lspace_test(const CohomologyReport& r) {
    return r.determinant != 0 && r.all_certified() && r.total_rank() == r.determinant;
}

bool Bounds::certified() const {
    for (auto [h, u] : upper) {
        auto it = lower.find(h);
        if ((it == lower.end() ? 0 : it->second) != u) return false;
    }
    return true;
}

std::pair<EmbeddedBlackGraph, int> strip_loops_and_bridges(const EmbeddedBlackGraph& g0) {
    EmbeddedBlackGraph g = g0;
    int shift = 0;
    for (bool again = true; again;) {
        again = false;
        if (!g.connected()) break;
        for (int e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.u == ed.v) {
                shift += ed.height == 0 ? 1 : 0;
                g = delete_edge(g, e);
                again = true;
                break;
            }
            EmbeddedBlackGraph d = delete_edge(g, e);
            if (!d.connected()) {
                shift += ed.height == 1 ? 1 : 0;
                g = contract_edge(g, e);
                again = true;
                break;
            }
        }
    }
    return {g, shift};
}


namespace {

std::map<int, int> shifted(const std::map<int, int>& m, int s) {
    std::map<int, int> o;
    for (auto [h, x] : m) o[h + s] = x;
    return o;
}

// shaves the ends of small intervals that admit no solution
bool shave(Csp& csp, const std::vector<int>& vars) {
    if (!csp.run()) return false;
    for (bool again = true; again;) {
        again = false;
        for (int x : vars) {
            for (int side = 0; side < 2; ++side) {
                while (csp.v[x].lo < csp.v[x].hi && csp.v[x].hi - csp.v[x].lo <= 16) {
                    long long val = side ? csp.v[x].hi : csp.v[x].lo;
                    Csp t = csp;
                    t.v[x] = {val, val};
                    if (t.run()) break;
                    if (side) csp.v[x].hi = val - 1;
                    else csp.v[x].lo = val + 1;
                    if (!csp.run()) return false;
                    again = true;
                }
            }
        }
    }
    return true;
}

} // namespace

std::vector<ImportedFact> imported_facts() {
    ImportedFact f;
    f.name = "E3";
    f.graph_code = canonical_code(strip_loops_and_bridges(e_family(3)).first);
    f.total_rank_lower = 3;
    f.statement = "imported: the E_3 link is the mirror of T(3,7); its branched double cover is Sigma(2,3,7), "
                  "rank HF-hat = 3, and the E3 page has total rank at least that";
    return {f};
}

std::function<void(const TreeComplex&, CohomologyReport&)> standard_enrich(bool imports) {
    std::vector<ImportedFact> facts;
    if (imports) facts = imported_facts();
    return [facts](const TreeComplex& c, CohomologyReport& r) {
        const EmbeddedBlackGraph& g = c.graph;
        bool parallel = false;
        for (int a = 0; a < g.num_edges() && !parallel; ++a)
            for (int b = a + 1; b < g.num_edges() && !parallel; ++b) {
                const Edge &x = g.edge(a), &y = g.edge(b);
                parallel = x.height == 1 && y.height == 1 && x.u != x.v &&
                           ((x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u));
            }
        bool square18 = false;
        for (const auto& [h, d] : c.d) square18 = square18 || (d.rows == 18 && d.cols == 18);
        if (parallel && square18 && !r.all_certified()) apply_rank_witness(r, parallel_spoke_witness(c));
        if (facts.empty() || r.all_certified()) return;
        std::string code = canonical_code(strip_loops_and_bridges(g).first);
        for (const auto& f : facts)
            if (f.graph_code == code) add_total_rank_lower_bound(r, f.total_rank_lower, f.statement);
    };
}

struct SkeinCertifier::Impl {
    CertifierOptions opt;
    struct Entry {
        CohomologyReport report;
        bool explored = false;
        bool zero = false;
    };
    std::unordered_map<std::string, Entry> memo;
    int nodes = 0;
    std::vector<std::string> proof;

    void say(const std::string& s) {
        proof.push_back(s);
        if (opt.log) opt.log(s);
    }

    // entry of a stripped graph
    Entry& eval(const EmbeddedBlackGraph& g) {
        std::string key = canonical_code(g);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        ++nodes;
        Entry en;
        if (!g.connected()) {
            en.zero = true;
        } else {
            TreeComplex c = build_complex(g);
            CohomologyOptions co;
            co.seed = opt.seed;
            co.retries = opt.retries;
            co.exact = g.num_edges() <= opt.exact_edges;
            en.report = cohomology(c, co);
            if (opt.enrich) opt.enrich(c, en.report);
        }
        return memo.emplace(key, std::move(en)).first->second;
    }

    // a graph reduced by loops and bridges, with the shift into the grading of its parent
    struct Piece {
        std::string key;
        int shift = 0;
        std::optional<EmbeddedBlackGraph> graph;
        bool zero = false;
    };

    Piece piece(const EmbeddedBlackGraph& g0, int shift) {
        Piece p;
        p.shift = shift;
        if (!g0.connected()) {
            p.zero = true;
            return p;
        }
        auto [s, sh] = strip_loops_and_bridges(g0);
        p.shift += sh;
        p.key = canonical_code(s);
        p.graph = s;
        p.zero = eval(s).zero;
        return p;
    }

    Piece piece(const Resolution& r) {
        if (r.zero || !r.graph) {
            Piece p;
            p.zero = true;
            p.shift = r.shift;
            return p;
        }
        return piece(*r.graph, r.shift);
    }

    Entry* entry(const Piece& p) { return p.zero ? nullptr : &memo.at(p.key); }

    struct Slot {
        Bounds b;
        std::optional<long long> chi_at; // signed dims relative to height 0 mod 4
        std::map<int, int> dims;
    };

    static long long chi_from_dims(const std::map<int, int>& dims) {
        long long s = 0;
        for (auto [h, d] : dims) s += ((h % 4 + 4) % 4 < 2 ? 1 : -1) * d;
        return s;
    }

    Slot slot(const Piece& p) {
        Slot s;
        s.chi_at = 0;
        if (p.zero) return s;
        const Entry& e = *entry(p);
        s.b.lower = shifted(e.report.lower, p.shift);
        s.b.upper = shifted(e.report.ranks, p.shift);
        s.dims = shifted(e.report.dims, p.shift);
        s.chi_at = chi_from_dims(s.dims);
        return s;
    }

    static Slot sum(const Slot& x, const Slot& y) {
        Slot s = x;
        for (auto [h, v] : y.b.lower) s.b.lower[h] += v;
        for (auto [h, v] : y.b.upper) s.b.upper[h] += v;
        for (auto [h, v] : y.dims) s.dims[h] += v;
        s.chi_at = chi_from_dims(s.dims);
        return s;
    }

    // tightened boxes of 0 -> a -> b -> c -> 0, or nullopt when infeasible
    static std::optional<std::array<Bounds, 3>> tighten(const std::array<Slot, 3>& sl, bool optimistic_pieces = false,
                                                        int unknown = 1) {
        std::set<int> hs;
        for (const auto& s : sl) {
            for (auto [h, x] : s.b.upper) hs.insert(h);
            for (auto [h, x] : s.dims) hs.insert(h);
        }
        std::array<Bounds, 3> out;
        if (hs.empty()) return out;
        std::vector<int> heights;
        for (int h = *hs.begin(); h <= *hs.rbegin(); h += 2) heights.push_back(h);
        std::array<BoxIn, 3> box;
        for (int i = 0; i < 3; ++i) {
            box[i].lo = sl[i].b.lower;
            box[i].hi = sl[i].b.upper;
            if (optimistic_pieces && i != unknown) box[i].lo = box[i].hi;
        }
        // chi in the sign convention of build_les (relative to heights.front())
        auto chi = [&](const Slot& s) -> std::optional<long long> {
            if (!s.chi_at) return std::nullopt;
            return ((heights.front() % 4 + 4) % 4 < 2) ? *s.chi_at : -*s.chi_at;
        };
        LesModel m = build_les(box[0], box[1], box[2], heights, chi(sl[0]), chi(sl[1]), chi(sl[2]));
        std::vector<int> vars;
        for (const auto* mp : {&m.A, &m.B, &m.C, &m.X})
            for (auto [h, x] : *mp) vars.push_back(x);
        if (!shave(m.csp, vars)) return std::nullopt;
        const std::map<int, int>* maps[3] = {&m.A, &m.B, &m.C};
        for (int i = 0; i < 3; ++i)
            for (int h : heights) {
                auto iv = m.csp.v[maps[i]->at(h)];
                out[i].lower[h] = int(iv.lo);
                out[i].upper[h] = int(std::min<long long>(iv.hi, INT_MAX));
            }
        return out;
    }

    static bool improves(const CohomologyReport& r, const Bounds& b) {
        for (auto [h, l] : b.lower)
            if (r.dims.count(h) && l > r.lower.at(h)) return true;
        for (auto [h, u] : b.upper)
            if (r.dims.count(h) && u < r.ranks.at(h)) return true;
        return false;
    }

    static void apply(CohomologyReport& r, const Bounds& b, const std::string& source) {
        std::map<int, int> lo;
        for (auto [h, l] : b.lower)
            if (r.dims.count(h)) lo[h] = l;
        bool any = false;
        for (auto [h, u] : b.upper)
            if (r.dims.count(h) && u < r.ranks[h]) {
                r.ranks[h] = u;
                any = true;
            }
        if (any) {
            r.certificates.push_back("upper bounds from " + source);
            propagate(r);
        }
        add_cohomology_lower_bounds(r, lo, source);
    }

    static bool pins(const CohomologyReport& r, const Bounds& b) {
        CohomologyReport t = r;
        apply(t, b, "");
        return t.all_certified();
    }

    // feed tightened bounds back into every non-sum participant
    void feed(const std::array<Bounds, 3>& out, const std::array<const Piece*, 3>& who, const std::string& source) {
        for (int i = 0; i < 3; ++i) {
            if (!who[i] || who[i]->zero) continue;
            Entry* e = entry(*who[i]);
            Bounds b{shifted(out[i].lower, -who[i]->shift), shifted(out[i].upper, -who[i]->shift)};
            if (improves(e->report, b)) apply(e->report, b, source);
        }
    }

    struct Relation {
        std::string source;
        std::array<Slot, 3> slots;
        std::array<const Piece*, 3> who{}; // null for the sum slot
        std::vector<Piece> pieces;         // storage
        int me = 1;                        // slot of the graph itself
        long long size = 0;
    };

    // every skein and Mayer-Vietoris relation of g with its pieces
    std::vector<Relation> relations(const EmbeddedBlackGraph& g, const Piece& self) {
        std::vector<Relation> rels;
        for (int e = 0; e < g.num_edges(); ++e) {
            SkeinResolution s = skein_resolve(g, e);
            Relation r;
            r.source = "skein at " + g.edge(e).id;
            r.pieces = {piece(s.sub), piece(s.quotient)};
            r.me = 1;
            rels.push_back(std::move(r));
        }
        // degree-2 vertices whose two edges share a height
        for (int v = 0; v < g.num_vertices(); ++v) {
            const auto& rot = g.rotation()[v];
            if (rot.size() != 2) continue;
            int e1 = rot[0] >> 1, e2 = rot[1] >> 1;
            if (e1 == e2 || g.edge(e1).height != g.edge(e2).height) continue;
            const Edge &a = g.edge(e1), &b = g.edge(e2);
            if (a.u == a.v || b.u == b.v) continue;
            EmbeddedBlackGraph g1 = contract_edge(g, e1), g2 = contract_edge(g, e2);
            // e2 keeps its id in g1
            EmbeddedBlackGraph g12 = contract_edge(g1, g1.find_edge(b.id));
            Relation r;
            r.source = "Mayer-Vietoris at " + g.vertex_ids()[v] + " (" + a.id + "," + b.id + ")";
            if (a.height == 0) {
                // 0 -> C(g) -> C(g/e1) + C(g/e2) -> C(g/e1e2) -> 0
                r.pieces = {piece(g1, 0), piece(g2, 0), piece(g12, 0)};
                r.me = 0;
            } else {
                // 0 -> C(g/e1e2)[2] -> C(g/e1)[1] + C(g/e2)[1] -> C(g) -> 0
                r.pieces = {piece(g1, 1), piece(g2, 1), piece(g12, 2)};
                r.me = 2;
            }
            rels.push_back(std::move(r));
        }
        for (auto& r : rels) {
            Slot mine = slot(self);
            if (r.pieces.size() == 2) {
                r.slots = {slot(r.pieces[0]), mine, slot(r.pieces[1])};
                r.who = {&r.pieces[0], &self, &r.pieces[1]};
            } else {
                Slot sm = sum(slot(r.pieces[0]), slot(r.pieces[1]));
                Slot last = slot(r.pieces[2]);
                if (r.me == 0) {
                    r.slots = {mine, sm, last};
                    r.who = {&self, nullptr, &r.pieces[2]};
                } else {
                    r.slots = {last, sm, mine};
                    r.who = {&r.pieces[2], nullptr, &self};
                }
            }
            for (const auto& p : r.pieces) r.size += p.graph ? p.graph->num_edges() : 0;
        }
        return rels;
    }

    void refresh(Relation& r, const Piece& self) {
        Slot mine = slot(self);
        if (r.pieces.size() == 2) {
            r.slots = {slot(r.pieces[0]), mine, slot(r.pieces[1])};
            r.who = {&r.pieces[0], &self, &r.pieces[1]};
        } else {
            Slot sm = sum(slot(r.pieces[0]), slot(r.pieces[1]));
            Slot last = slot(r.pieces[2]);
            if (r.me == 0) {
                r.slots = {mine, sm, last};
                r.who = {&self, nullptr, &r.pieces[2]};
            } else {
                r.slots = {last, sm, mine};
                r.who = {&r.pieces[2], nullptr, &self};
            }
        }
    }

    static std::string fmt(const Bounds& b) {
        std::string s = "{";
        for (auto [h, u] : b.upper)
            if (u) s += std::to_string(h) + ":" + std::to_string(u) + (b.lower.count(h) && b.lower.at(h) == u ? "" : "?") + " ";
        if (s.size() > 1) s.pop_back();
        return s + "}";
    }

    bool use(Relation& r, const Piece& self, const std::string& name) {
        refresh(r, self);
        auto out = tighten(r.slots);
        if (!out) throw std::logic_error("exact sequence infeasible: " + r.source + " on " + name);
        Entry& me = *entry(self);
        bool before = me.report.all_certified();
        feed(*out, r.who, r.source);
        if (!before && me.report.all_certified()) {
            std::string s = name + ": " + r.source + " pins ranks";
            for (int i = 0; i < 3; ++i) s += (i ? ", " : " from ") + fmt(r.slots[i].b);
            say(s);
        }
        return me.report.all_certified();
    }

    bool certify(const EmbeddedBlackGraph& g, int depth) {
        Piece self = piece(g, 0);
        if (self.zero) return true;
        Entry& me0 = *entry(self);
        if (me0.report.all_certified()) return true;
        if (me0.explored || depth <= 0 || nodes >= opt.max_nodes) return false;
        me0.explored = true;
        std::string name = std::to_string(self.graph->num_edges()) + "-edge graph";
        auto rels = relations(*self.graph, self);
        std::vector<Relation*> viable;
        for (auto& r : rels) {
            if (use(r, self, name)) return true;
            auto opt_out = tighten(r.slots, true, r.me);
            if (opt_out && pins(entry(self)->report, Bounds{(*opt_out)[r.me].lower, (*opt_out)[r.me].upper}))
                viable.push_back(&r);
        }
        std::stable_sort(viable.begin(), viable.end(), [](auto* x, auto* y) { return x->size < y->size; });
        for (auto* r : viable) {
            for (auto& p : r->pieces)
                if (p.graph && !p.zero && !entry(p)->report.all_certified()) certify(*p.graph, depth - 1);
            if (use(*r, self, name)) return true;
            if (nodes >= opt.max_nodes) break;
        }
        return false;
    }

    Bounds bounds(const EmbeddedBlackGraph& g) {
        Piece p = piece(g, 0);
        if (p.zero) return {};
        const Entry& e = *entry(p);
        return {shifted(e.report.lower, p.shift), shifted(e.report.ranks, p.shift)};
    }
};

SkeinCertifier::SkeinCertifier(CertifierOptions opt) : impl_(std::make_unique<Impl>()) { impl_->opt = std::move(opt); }
SkeinCertifier::~SkeinCertifier() = default;

Bounds SkeinCertifier::bounds(const EmbeddedBlackGraph& g) { return impl_->bounds(g); }

Bounds SkeinCertifier::certify(const EmbeddedBlackGraph& g) {
    impl_->certify(g, impl_->opt.max_depth);
    return bounds(g);
}

SkeinStep SkeinCertifier::resolve(const EmbeddedBlackGraph& g, int e) {
    SkeinResolution s = skein_resolve(g, e);
    auto& I = *impl_;
    Impl::Piece self = I.piece(g, 0);
    Impl::Piece a = I.piece(s.sub), c = I.piece(s.quotient);
    SkeinStep st;
    st.edge = g.edge(e).id;
    st.height = g.edge(e).height;
    auto out = Impl::tighten({I.slot(a), I.slot(self), I.slot(c)});
    st.feasible = bool(out);
    if (out) I.feed(*out, {&a, &self, &c}, "skein at " + st.edge);
    st.sub = I.slot(a).b;
    st.whole = I.slot(self).b;
    st.quotient = I.slot(c).b;
    auto is_zero = [](const Bounds& b) {
        for (auto [h, u] : b.upper)
            if (u) return false;
        return true;
    };
    st.sub_zero = is_zero(st.sub);
    st.quotient_zero = is_zero(st.quotient);
    st.sub_graph = a.graph;
    st.quotient_graph = c.graph;
    return st;
}

const std::vector<std::string>& SkeinCertifier::proof() const { return impl_->proof; }
int SkeinCertifier::nodes() const { return impl_->nodes; }

CertifierResult certify_by_skein(const EmbeddedBlackGraph& g, const CertifierOptions& opt) {
    SkeinCertifier c(opt);
    CertifierResult res;
    res.bounds = c.certify(g);
    res.nodes = c.nodes();
    res.proof = c.proof();
    return res;
}

} // namespace bos
