#include "bos/suite.hpp"

#include "bos/complex.hpp"
#include "bos/diagram.hpp"
#include "bos/fixtures.hpp"

#include <map>
#include <sstream>

namespace bos {

namespace {

struct Tally {
    int checks = 0, failures = 0;
};

} // namespace

SuiteResult oracle_suite(const SuiteOptions& opt) {
    SuiteResult out;
    std::map<std::string, Tally> tally;
    auto check = [&](const std::string& prop, bool ok, const std::string& what) {
        auto& t = tally[prop];
        ++t.checks;
        ++out.checks;
        if (!ok) {
            ++t.failures;
            ++out.failures;
            out.failed.push_back(prop + ": " + what);
            if (opt.log) opt.log("FAIL " + prop + ": " + what);
        }
    };

    std::vector<std::pair<std::string, EmbeddedBlackGraph>> graphs;
    for (const auto& n : graph_fixture_names()) graphs.push_back({n, graph_fixture(n)});
    for (const auto& k : basic_knots()) graphs.push_back({k.name, black_graph(k.diagram)});
    for (int i = 0; i < opt.random_graphs; ++i) {
        int m = 1 + i % opt.max_edges;
        graphs.push_back({"random#" + std::to_string(i) + "(" + std::to_string(m) + " edges)",
                          random_plane_graph(opt.seed + uint64_t(i), m)});
    }

    for (const auto& [name, g] : graphs) {
        TreeComplex c = build_complex(g);
        auto dsq = verify_d_squared(c, 9);
        check(g.num_edges() <= 9 ? "d^2 = 0 (exact)" : "d^2 = 0 (specialized)", dsq.ok, name + " " + dsq.describe());
        check("trees = Kirchhoff", (long long)c.trees.total == tree_count(g),
              name + ": " + std::to_string(c.trees.total) + " vs " + std::to_string(tree_count(g)));
        if (g.num_edges() <= opt.max_edges && g.num_edges() > 0) {
            auto ref = cohomology(c);
            for (int b = 0; b < g.num_vertices(); ++b) {
                if (b == g.base()) continue;
                auto r = cohomology(build_complex(g.with_base(b)));
                check("base independence", r.ranks == ref.ranks && r.determinant == ref.determinant,
                      name + " base " + g.vertex_ids()[b]);
            }
        }
        if (g.connected() && g.num_edges() <= 24) {
            // the medial diagram gives a second, face-based determinant
            auto d = diagram_from_black_graph(g);
            long long det = goeritz_det(d);
            int tr = euler_trace(c);
            check("euler trace = Goeritz", det == (tr < 0 ? -tr : tr),
                  name + ": goeritz " + std::to_string(det) + " trace " + std::to_string(tr));
        }
    }
    for (const auto& k : basic_knots()) {
        long long det = goeritz_det(k.diagram);
        int tr = euler_trace(build_complex(black_graph(k.diagram)));
        check("euler trace = Goeritz", det == (tr < 0 ? -tr : tr) && det == k.det,
              k.name + ": goeritz " + std::to_string(det) + " trace " + std::to_string(tr));
    }
    for (const auto& [p, t] : tally) {
        std::ostringstream os;
        os << p << ": " << (t.checks - t.failures) << "/" << t.checks << " passed";
        out.summary.push_back(os.str());
    }
    return out;
}

} // namespace bos
