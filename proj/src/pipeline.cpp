#include "bos/pipeline.hpp"

#include "bos/fixtures.hpp"
#include "bos/io.hpp"

#include "json.hpp"

#include <cctype>
#include <sstream>

namespace bos {

using nlohmann::ordered_json;

LoadedInput load_input(const std::string& what, const RunConfig& cfg) {
    LoadedInput in;
    std::string name = what;
    // "E 4" -> "E4"
    if (name.size() > 2 && name[0] == 'E' && name[1] == ' ') name = "E" + name.substr(2);
    in.name = name;
    BlackGraphOptions bo;
    bo.outer_black = cfg.outer_black;
    bo.base = cfg.base;
    for (const auto& k : basic_knots())
        if (k.name == name) {
            in.diagram = k.diagram;
            in.graph = black_graph(k.diagram, bo);
            return in;
        }
    bool fixture = false;
    for (const auto& f : graph_fixture_names()) fixture = fixture || f == name;
    if (!fixture && name.size() >= 2 && name[0] == 'E' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit((unsigned char)c); }))
        fixture = true;
    if (fixture) {
        in.graph = graph_fixture(name);
    } else {
        std::string text = read_file(what);
        bool json = what.size() >= 5 && what.substr(what.size() - 5) == ".json";
        if (json) {
            in.graph = graph_from_json(text);
        } else {
            in.diagram = parse_diagram(text);
            in.graph = black_graph(*in.diagram, bo);
            return in;
        }
    }
    if (cfg.base) {
        int b = in.graph.find_vertex(*cfg.base);
        if (b < 0) throw GraphError("unknown base vertex " + *cfg.base);
        in.graph = in.graph.with_base(b);
    }
    return in;
}

PipelineResult run_cohomology(const LoadedInput& in, const RunConfig& cfg) {
    PipelineResult out;
    out.in = in;
    const auto& g = in.graph;
    TreeComplex c = build_complex(g);
    out.d_squared = verify_d_squared(c, cfg.exact ? 1 << 20 : 9);
    CohomologyOptions co;
    co.seed = cfg.seed;
    co.retries = cfg.retries;
    co.exact = cfg.exact;
    CohomologyReport r = cohomology(c, co);
    auto enrich = standard_enrich(cfg.imports);
    enrich(c, r);
    if (!r.all_certified() && cfg.certify) {
        CertifierOptions o;
        o.seed = cfg.seed;
        o.retries = cfg.retries;
        o.enrich = enrich;
        SkeinCertifier cert(o);
        Bounds b = cert.certify(g);
        add_cohomology_lower_bounds(r, b.lower, "skein exact sequences (lower)");
        add_cohomology_upper_bounds(r, b.upper, "skein exact sequences (upper)");
        out.proof = cert.proof();
    }
    out.report = r;
    out.certified = r.all_certified();
    out.collapse = collapse_check(r);
    out.hf = infer_hf(r);
    out.lspace = lspace_test(r);
    if (in.diagram) {
        out.shifted = shifted_report(r, negative_crossing_count(*in.diagram));
    }
    return out;
}

SkeinReport run_skein(const LoadedInput& in, const std::string& edge, const RunConfig& cfg) {
    const auto& g = in.graph;
    int e = g.find_edge(edge);
    if (e < 0) throw GraphError("no edge named " + edge);
    CertifierOptions o;
    o.seed = cfg.seed;
    o.retries = cfg.retries;
    o.enrich = standard_enrich(cfg.imports);
    SkeinCertifier cert(o);
    cert.certify(g);
    SkeinReport rep;
    rep.graph_name = in.name;
    rep.step = cert.resolve(g, e);
    auto res = skein_resolve(g, e);
    rep.sub_shift = res.sub.shift;
    rep.quotient_shift = res.quotient.shift;
    rep.sub_kind = res.sub.kind;
    rep.quotient_kind = res.quotient.kind;
    const auto& s = rep.step;
    auto known = [&](const std::optional<EmbeddedBlackGraph>& piece) -> std::string {
        if (!piece) return "";
        for (const auto& f : graph_fixture_names()) {
            auto fx = strip_loops_and_bridges(graph_fixture(f)).first;
            if (fx.num_edges() == piece->num_edges() && isomorphic_maps(fx, *piece)) return f;
        }
        return "";
    };
    rep.sub_fixture = known(s.sub_graph);
    rep.quotient_fixture = known(s.quotient_graph);
    std::string name = in.name.empty() ? "G" : in.name;
    if (!s.feasible) {
        rep.conclusion = "no rank assignment satisfies the exact sequence";
    } else if (s.sub_zero && s.quotient_zero) {
        rep.conclusion = "both branches vanish, so H(" + name + ") = 0";
    } else if (s.sub_zero) {
        rep.conclusion = "sub branch (" + rep.sub_kind + ") is zero, so H(" + name + ") is isomorphic to H(" +
                         name + "/" + rep.quotient_kind + " " + edge + ")" +
                         (rep.quotient_fixture.empty() ? "" : " = H(" + rep.quotient_fixture + ")") +
                         " in the parent grading";
    } else if (s.quotient_zero) {
        rep.conclusion = "quotient branch (" + rep.quotient_kind + ") is zero, so H(" + name +
                         ") is isomorphic to H(" + name + "/" + rep.sub_kind + " " + edge + ")" +
                         (rep.sub_fixture.empty() ? "" : " = H(" + rep.sub_fixture + ")") + "[" +
                         std::to_string(rep.sub_shift) + "]";
    } else {
        rep.conclusion = "no branch vanishes; exact sequence consistent";
    }
    rep.proof = cert.proof();
    return rep;
}

std::string heights_string(const std::map<int, int>& m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [h, k] : m) {
        if (!k) continue;
        os << (first ? "" : ", ") << 'h' << h << ':' << k;
        first = false;
    }
    os << '}';
    return os.str();
}

namespace {

ordered_json heights_json(const std::map<int, int>& m, bool skip_zero = false) {
    ordered_json j = ordered_json::object();
    for (auto [h, k] : m)
        if (!skip_zero || k) j["h" + std::to_string(h)] = k;
    return j;
}

ordered_json report_body(const CohomologyReport& r) {
    ordered_json j;
    j["trees"] = r.num_trees;
    j["dims"] = heights_json(r.dims);
    j["ranks"] = heights_json(r.ranks, true);
    j["lower"] = heights_json(r.lower, true);
    ordered_json diffs = ordered_json::array();
    for (const auto& [h, d] : r.differentials)
        diffs.push_back({{"from", h},
                         {"rows", d.rows},
                         {"cols", d.cols},
                         {"rank_lo", d.lo},
                         {"rank_hi", d.hi},
                         {"hi_source", d.hi_source},
                         {"seed", d.seed},
                         {"attempts", d.attempts},
                         {"exponents", d.exponents}});
    j["differentials"] = diffs;
    j["euler_trace"] = r.euler_trace;
    j["determinant"] = r.determinant;
    return j;
}

ordered_json header(const RunConfig& cfg, const std::string& command) {
    ordered_json j;
    j["tool"] = "bos";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input"] = cfg.input;
    j["seed"] = cfg.seed;
    j["retries"] = cfg.retries;
    j["exact"] = cfg.exact;
    j["imports"] = cfg.imports;
    return j;
}

ordered_json bounds_json(const Bounds& b) {
    ordered_json j;
    j["lower"] = heights_json(b.lower, true);
    j["upper"] = heights_json(b.upper, true);
    j["certified"] = b.certified();
    return j;
}

} // namespace

std::string report_json(const PipelineResult& p, const RunConfig& cfg) {
    const auto& r = p.report;
    ordered_json j = header(cfg, "cohomology");
    j["convention"] = r.convention;
    j["convention_hash"] = r.convention_hash;
    j["graph"] = {{"vertices", p.in.graph.num_vertices()},
                  {"edges", p.in.graph.num_edges()},
                  {"base", p.in.graph.vertex_ids()[p.in.graph.base()]},
                  {"code", canonical_code(p.in.graph)}};
    j["d_squared"] = {{"ok", p.d_squared.ok}, {"exact", p.d_squared.exact}, {"specializations", p.d_squared.specializations}};
    j["cohomology"] = report_body(r);
    j["certified"] = p.certified;
    if (p.shifted) {
        j["n_minus"] = *p.shifted->n_minus;
        j["shifted_ranks"] = heights_json(p.shifted->ranks, true);
    }
    ordered_json blocking = ordered_json::array();
    for (auto [a, b] : p.collapse.blocking) blocking.push_back({a, b});
    j["collapse"] = {{"verdict", p.certified ? (p.collapse.collapsed ? "collapsed" : "not collapsed") : "undetermined"},
                     {"blocking", blocking}};
    j["hf_rank"] = p.hf.rank ? ordered_json(*p.hf.rank) : ordered_json(nullptr);
    j["hf_reason"] = p.hf.reason;
    j["lspace"] = p.lspace;
    j["certificates"] = r.certificates;
    j["proof"] = p.proof;
    return j.dump(2) + "\n";
}

std::string report_text(const PipelineResult& p, const RunConfig& cfg) {
    const auto& r = p.report;
    std::ostringstream os;
    os << "bos " << kToolVersion << "  input " << cfg.input << "  seed " << cfg.seed << "  retries " << cfg.retries
       << "\n";
    os << "graph: " << p.in.graph.num_vertices() << " vertices, " << p.in.graph.num_edges() << " edges, base "
       << p.in.graph.vertex_ids()[p.in.graph.base()] << ", " << r.num_trees << " spanning trees\n";
    os << "convention: " << r.convention << " (" << r.convention_hash << ")\n";
    os << "d^2 = 0: " << (p.d_squared.ok ? "yes" : "NO " + p.d_squared.describe())
       << (p.d_squared.exact ? " (exact)" : " (specialized)") << "\n";
    os << "height  degree  trees  rank\n";
    for (auto [h, d] : r.dims) {
        int lo = r.lower.count(h) ? r.lower.at(h) : 0, hi = r.ranks.at(h);
        std::ostringstream deg;
        if (h % 2 == 0) deg << h / 2;
        else deg << h << "/2";
        os << "  " << h << "\t" << deg.str() << "\t" << d << "\t";
        if (lo == hi) os << hi;
        else os << "[" << lo << ", " << hi << "]";
        os << "\n";
    }
    for (const auto& [h, d] : r.differentials)
        os << "d_" << h << ": " << d.rows << "x" << d.cols << " rank " << (d.lo == d.hi ? std::to_string(d.lo)
                                                                                       : "[" + std::to_string(d.lo) + ", " + std::to_string(d.hi) + "]")
           << " (upper bound: " << d.hi_source << ")\n";
    os << "euler trace " << r.euler_trace << ", determinant " << r.determinant << "\n";
    if (p.shifted) os << "n_minus " << *p.shifted->n_minus << ", shifted ranks " << heights_string(p.shifted->ranks) << "\n";
    os << "certified: " << (p.certified ? "yes" : "no") << "\n";
    os << "collapse: " << (p.certified ? (p.collapse.collapsed ? "collapsed" : "not collapsed") : "undetermined") << "\n";
    os << "HF-hat rank: " << (p.hf.rank ? std::to_string(*p.hf.rank) : "none") << " (" << p.hf.reason << ")\n";
    os << "L-space: " << (p.lspace ? "true" : "false") << "\n";
    for (const auto& c : r.certificates) os << "  certificate: " << c << "\n";
    for (const auto& c : p.proof) os << "  proof: " << c << "\n";
    return os.str();
}

std::string skein_json(const SkeinReport& r, const RunConfig& cfg) {
    ordered_json j = header(cfg, "skein");
    j["edge"] = r.step.edge;
    j["height"] = r.step.height;
    j["feasible"] = r.step.feasible;
    j["whole"] = bounds_json(r.step.whole);
    j["sub"] = bounds_json(r.step.sub);
    j["sub"]["kind"] = r.sub_kind;
    j["sub"]["shift"] = r.sub_shift;
    j["sub"]["zero"] = r.step.sub_zero;
    j["sub"]["fixture"] = r.sub_fixture;
    j["quotient"] = bounds_json(r.step.quotient);
    j["quotient"]["kind"] = r.quotient_kind;
    j["quotient"]["shift"] = r.quotient_shift;
    j["quotient"]["zero"] = r.step.quotient_zero;
    j["quotient"]["fixture"] = r.quotient_fixture;
    j["conclusion"] = r.conclusion;
    j["proof"] = r.proof;
    return j.dump(2) + "\n";
}

std::string skein_text(const SkeinReport& r) {
    std::ostringstream os;
    auto line = [&](const char* what, const Bounds& b) {
        os << what;
        if (b.certified()) os << heights_string(b.upper);
        else os << "lower " << heights_string(b.lower) << " upper " << heights_string(b.upper);
        os << "\n";
    };
    os << "skein at " << r.step.edge << " (height " << r.step.height << ")\n";
    auto piece = [&](const std::string& fx, bool zero) {
        std::string t = fx.empty() ? "" : " [" + fx + "]";
        return t + (zero ? " zero: " : ": ");
    };
    line("  whole: ", r.step.whole);
    os << "  sub (" << r.sub_kind << ", shift " << r.sub_shift << ")" << piece(r.sub_fixture, r.step.sub_zero);
    line("", r.step.sub);
    os << "  quotient (" << r.quotient_kind << ", shift " << r.quotient_shift << ")"
       << piece(r.quotient_fixture, r.step.quotient_zero);
    line("", r.step.quotient);
    os << r.conclusion << "\n";
    return os.str();
}

} // namespace bos
