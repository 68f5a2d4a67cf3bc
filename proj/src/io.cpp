#include "bos/io.hpp"

#include "json.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace bos {

using nlohmann::ordered_json;

namespace {

std::string end_name(const EmbeddedBlackGraph& g, int d) { return g.edge(d >> 1).id + ((d & 1) ? ":h" : ":t"); }

} // namespace

std::string graph_to_json(const EmbeddedBlackGraph& g, int indent) {
    ordered_json j;
    j["schema"] = kGraphSchema;
    j["vertices"] = g.vertex_ids();
    j["base"] = g.vertex_ids()[g.base()];
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"id", e.id}, {"ends", {g.vertex_ids()[e.u], g.vertex_ids()[e.v]}}, {"height", e.height}});
    j["edges"] = edges;
    ordered_json rot = ordered_json::object();
    for (int v = 0; v < g.num_vertices(); ++v) {
        ordered_json r = ordered_json::array();
        for (int d : g.rotation()[v]) r.push_back(end_name(g, d));
        rot[g.vertex_ids()[v]] = r;
    }
    j["rotation"] = rot;
    ordered_json outer = ordered_json::array();
    if (g.outer_dart() >= 0) {
        int d = g.outer_dart();
        do {
            outer.push_back(end_name(g, d));
            d = g.phi(d);
        } while (d != g.outer_dart());
    }
    j["outer_face"] = outer;
    return j.dump(indent);
}

EmbeddedBlackGraph graph_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw FormatError(std::string("graph json: ") + e.what());
    }
    try {
        if (j.value("schema", std::string()) != kGraphSchema)
            throw FormatError("graph json: expected schema \"" + std::string(kGraphSchema) + "\"");
        auto ids = j.at("vertices").get<std::vector<std::string>>();
        std::map<std::string, int> vid;
        for (size_t i = 0; i < ids.size(); ++i)
            if (!vid.emplace(ids[i], int(i)).second) throw FormatError("graph json: duplicate vertex " + ids[i]);
        auto vertex = [&](const std::string& s) {
            auto it = vid.find(s);
            if (it == vid.end()) throw FormatError("graph json: unknown vertex " + s);
            return it->second;
        };
        std::vector<Edge> edges;
        std::map<std::string, int> eid;
        for (const auto& e : j.at("edges")) {
            Edge x;
            x.id = e.at("id").get<std::string>();
            auto ends = e.at("ends").get<std::vector<std::string>>();
            if (ends.size() != 2) throw FormatError("graph json: edge " + x.id + " needs two ends");
            x.u = vertex(ends[0]);
            x.v = vertex(ends[1]);
            x.height = e.at("height").get<int>();
            if (x.height != 0 && x.height != 1) throw FormatError("graph json: height of " + x.id + " must be 0 or 1");
            if (!eid.emplace(x.id, int(edges.size())).second) throw FormatError("graph json: duplicate edge " + x.id);
            edges.push_back(x);
        }
        auto dart = [&](const std::string& s) {
            auto c = s.rfind(':');
            if (c == std::string::npos) throw FormatError("graph json: bad edge-end " + s);
            auto it = eid.find(s.substr(0, c));
            std::string side = s.substr(c + 1);
            if (it == eid.end() || (side != "t" && side != "h")) throw FormatError("graph json: bad edge-end " + s);
            return 2 * it->second + (side == "h");
        };
        std::vector<std::vector<int>> rot(ids.size());
        for (const auto& [v, list] : j.at("rotation").items())
            for (const auto& s : list) rot[vertex(v)].push_back(dart(s.get<std::string>()));
        auto outer = j.at("outer_face").get<std::vector<std::string>>();
        int od = outer.empty() ? -1 : dart(outer[0]);
        EmbeddedBlackGraph g(ids, edges, rot, od, vertex(j.at("base").get<std::string>()));
        validate(g);
        // the stored walk must be the traced face
        if (od >= 0) {
            int d = od;
            for (size_t i = 0; i < outer.size(); ++i, d = g.phi(d))
                if (d != dart(outer[i]) || (i > 0 && d == od))
                    throw FormatError("graph json: outer_face is not a face boundary walk");
            if (d != od) throw FormatError("graph json: outer_face is not a face boundary walk");
        }
        return g;
    } catch (const ordered_json::exception& e) {
        throw FormatError(std::string("graph json: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace bos
