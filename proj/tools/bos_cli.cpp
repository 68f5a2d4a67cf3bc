// bos: command-line front end (graph, cohomology, skein, verify)
#include "bos/diagram.hpp"
#include "bos/fixtures.hpp"
#include "bos/io.hpp"
#include "bos/pipeline.hpp"
#include "bos/suite.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace bos;

namespace {

enum Exit { ok = 0, usage = 1, invalid = 2, uncertified = 3 };

struct Common {
    std::vector<std::string> fixture;
    std::string path;
    uint64_t seed = 1;
    int retries = 5;
    std::string base;
    std::string coloring = "outer-white";
    std::string format = "text";
    bool exact = false;
    bool no_imports = false;
};

void add_common(CLI::App* app, Common& c, bool input = true) {
    if (input) {
        app->add_option("--fixture", c.fixture, "fixture name (D33, D330, E 4, unknot, ...)")->expected(1, 2);
        app->add_option("input", c.path, "PD text file or black-graph JSON (*.json)");
    }
    app->add_option("--seed", c.seed, "specialization seed");
    app->add_option("--retries", c.retries, "specialization retries")->check(CLI::Range(1, 1000));
    app->add_option("--base", c.base, "base vertex id");
    app->add_option("--coloring", c.coloring, "checkerboard colouring")->check(CLI::IsMember({"outer-white", "outer-black"}));
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app->add_flag("--exact", c.exact, "multivariate elimination instead of specialization");
    app->add_flag("--no-imports", c.no_imports, "do not use imported facts");
}

RunConfig config(const Common& c) {
    RunConfig cfg;
    if (!c.fixture.empty()) {
        for (size_t i = 0; i < c.fixture.size(); ++i) cfg.input += (i ? " " : "") + c.fixture[i];
    } else {
        cfg.input = c.path;
    }
    cfg.seed = c.seed;
    cfg.retries = c.retries;
    cfg.exact = c.exact;
    cfg.imports = !c.no_imports;
    if (!c.base.empty()) cfg.base = c.base;
    cfg.outer_black = c.coloring == "outer-black";
    return cfg;
}

LoadedInput load(const Common& c, const RunConfig& cfg) {
    if (c.fixture.empty() == c.path.empty()) throw CLI::ValidationError("input", "give exactly one of --fixture or an input file");
    return load_input(cfg.input, cfg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"BOS cohomology of link diagrams from the spanning-tree complex"};
    app.require_subcommand(1);
    Common cg, cc, cs, cv;
    std::string edge, suite = "oracles";
    int random_graphs = 200;
    auto* graph = app.add_subcommand("graph", "print the black graph");
    add_common(graph, cg);
    auto* coh = app.add_subcommand("cohomology", "ranks, determinant, collapse, HF-hat, L-space");
    add_common(coh, cc);
    auto* sk = app.add_subcommand("skein", "one skein exact sequence at an edge");
    add_common(sk, cs);
    sk->add_option("--edge", edge, "edge id")->required();
    auto* ver = app.add_subcommand("verify", "property and oracle suite");
    add_common(ver, cv, false);
    ver->add_option("--suite", suite, "suite name")->check(CLI::IsMember({"oracles"}));
    ver->add_option("--random", random_graphs, "random graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (graph->parsed()) {
            auto cfg = config(cg);
            auto in = load(cg, cfg);
            if (cg.format == "json") {
                std::cout << graph_to_json(in.graph) << "\n";
            } else {
                const auto& g = in.graph;
                std::cout << g.num_vertices() << " vertices, " << g.num_edges() << " edges, " << g.num_faces()
                          << " faces, base " << g.vertex_ids()[g.base()] << "\n";
                for (const auto& e : g.edges())
                    std::cout << "  " << e.id << ": " << g.vertex_ids()[e.u] << " -> " << g.vertex_ids()[e.v]
                              << "  height " << e.height << "\n";
                if (in.diagram)
                    std::cout << "diagram: " << serialize_diagram(*in.diagram) << "\n  n_minus "
                              << negative_crossing_count(*in.diagram) << ", Goeritz determinant "
                              << goeritz_det(*in.diagram, cfg.outer_black) << "\n";
            }
            return Exit::ok;
        }
        if (coh->parsed()) {
            auto cfg = config(cc);
            auto in = load(cc, cfg);
            auto r = run_cohomology(in, cfg);
            std::cout << (cc.format == "json" ? report_json(r, cfg) : report_text(r, cfg));
            if (!r.d_squared.ok) return Exit::uncertified;
            return r.certified ? Exit::ok : Exit::uncertified;
        }
        if (sk->parsed()) {
            auto cfg = config(cs);
            auto in = load(cs, cfg);
            auto r = run_skein(in, edge, cfg);
            std::cout << (cs.format == "json" ? skein_json(r, cfg) : skein_text(r));
            bool pinned = r.step.whole.certified() && r.step.sub.certified() && r.step.quotient.certified();
            return r.step.feasible && pinned ? Exit::ok : Exit::uncertified;
        }
        if (ver->parsed()) {
            SuiteOptions o;
            o.random_graphs = random_graphs;
            o.seed = cv.seed == 1 ? o.seed : cv.seed;
            auto r = oracle_suite(o);
            for (const auto& s : r.summary) std::cout << s << "\n";
            for (const auto& f : r.failed) std::cout << "FAIL " << f << "\n";
            std::cout << (r.ok() ? "all checks passed" : "failures: " + std::to_string(r.failures)) << " ("
                      << r.checks << " checks)\n";
            return r.ok() ? Exit::ok : Exit::uncertified;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const DiagramError& e) {
        std::cerr << "error: diagram: " << e.what() << "\n";
        return Exit::invalid;
    } catch (const GraphError& e) {
        std::cerr << "error: graph: " << e.what() << "\n";
        return Exit::invalid;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::invalid;
    } catch (const FixtureError& e) {
        std::cerr << "error: fixture: " << e.what() << "\n";
        return Exit::invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: computation: " << e.what() << "\n";
        return Exit::uncertified;
    }
    return Exit::usage;
}
