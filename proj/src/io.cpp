// Serialization: JSON round-trips for graphs, covers and census levels, DOT
// export with the bold-dilated/thin-free drawing convention, CSV report
// tables, and the one-way JSON dump of an assembled complex.
#include "tcov/io.hpp"

#include <sstream>

namespace tcov {

namespace {

using nlohmann::json;

// CSV field quoting: wrap when the value contains a delimiter, quote or
// newline; internal quotes double.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string vertex_label(const WeightedGraph& g, int v) {
    return "v" + std::to_string(v) + " g=" + std::to_string(g.genus[v]);
}

} // namespace

json graph_to_json(const WeightedGraph& g) {
    json genus = json::array();
    for (int v : g.vertices) genus.push_back({v, g.genus[v]});
    return {{"inv", g.inv}, {"root", g.root}, {"vertex_genus", genus}};
}

WeightedGraph graph_from_json(const json& j) {
    std::map<int, int> genus;
    for (const auto& pair : j.at("vertex_genus"))
        genus[pair.at(0).get<int>()] = pair.at(1).get<int>();
    return build_graph(j.at("inv").get<std::vector<int>>(), j.at("root").get<std::vector<int>>(),
                       genus);
}

json cover_to_json(const PCover& c) {
    json dilated_vertices = json::array();
    for (int v : c.target.vertices)
        if (c.vertex_is_dilated(v)) dilated_vertices.push_back(v);
    json dilated_edges = json::array();
    json flows = json::array();
    json gains = json::array();
    for (int e = 0; e < c.target.num_edges(); ++e) {
        if (c.edge_is_dilated(e)) {
            dilated_edges.push_back(e);
            flows.push_back({c.target.edges[e].a, c.flow[c.target.edges[e].a]});
        } else if (c.edge_is_free_free(e)) {
            gains.push_back({e, c.gain[e].tail, c.gain[e].value});
        }
    }
    return {{"p", c.p},
            {"target", graph_to_json(c.target)},
            {"dilated_vertices", dilated_vertices},
            {"dilated_edges", dilated_edges},
            {"flows", flows},
            {"gains", gains}};
}

PCover cover_from_json(const json& j) {
    std::vector<std::pair<int, int>> flows;
    for (const auto& f : j.at("flows"))
        flows.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
    std::vector<std::pair<int, GainSpec>> gains;
    for (const auto& g : j.at("gains"))
        gains.emplace_back(g.at(0).get<int>(), GainSpec{g.at(1).get<int>(), g.at(2).get<int>()});
    return make_cover(graph_from_json(j.at("target")), j.at("p").get<int>(),
                      j.at("dilated_vertices").get<std::vector<int>>(),
                      j.at("dilated_edges").get<std::vector<int>>(), flows, gains);
}

std::string graph_to_dot(const WeightedGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v : g.vertices) out << "  v" << v << " [label=\"" << vertex_label(g, v) << "\"];\n";
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto [u, w] = g.endpoints(e);
        out << "  v" << u << " -- v" << w << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string cover_to_dot(const PCover& c, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v : c.target.vertices) {
        out << "  v" << v << " [label=\"" << vertex_label(c.target, v) << "\", shape="
            << (c.vertex_is_dilated(v) ? "doublecircle" : "circle") << "];\n";
    }
    for (int e = 0; e < c.target.num_edges(); ++e) {
        const auto [u, w] = c.target.endpoints(e);
        out << "  v" << u << " -- v" << w;
        if (c.edge_is_dilated(e)) {
            out << " [style=bold, penwidth=2, label=\"flow " << c.flow[c.target.edges[e].a]
                << "\"]";
        } else if (c.edge_is_free_free(e)) {
            out << " [label=\"gain " << c.oriented_gain(c.target.edges[e].a) << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string census_csv(const std::vector<CensusLevel>& levels) {
    std::ostringstream out;
    out << "dimension,target,count\n";
    for (const CensusLevel& level : levels)
        for (const auto& [target, count] : level.counts_by_target)
            out << level.n << ',' << csv_field(target) << ',' << count << '\n';
    return out.str();
}

std::string locus_csv(const DeltaComplex& X,
                      const std::vector<std::vector<LocusMembership>>& membership) {
    std::ostringstream out;
    out << "dimension,index,target,w,lw,br,scon,par,witness\n";
    for (std::size_t n = 0; n < X.levels.size(); ++n)
        for (std::size_t i = 0; i < X.levels[n].size(); ++i) {
            const LocusMembership& m = membership[n][i];
            out << n << ',' << i << ','
                << csv_field(target_name(X.levels[n][i].representative.target)) << ',' << m.w
                << ',' << m.lw << ',' << m.br << ',' << m.scon << ',' << m.par << ','
                << csv_field(m.witness) << '\n';
        }
    return out.str();
}

std::string betti_csv(const BettiVector& bv) {
    std::ostringstream out;
    out << "n,chain_dim,b,reduced\n";
    for (std::size_t n = 0; n < bv.b.size(); ++n)
        out << n << ',' << bv.chain_dims[n] << ',' << bv.b[n] << ',' << bv.reduced[n] << '\n';
    return out.str();
}

json complex_to_json(const DeltaComplex& X) {
    json levels = json::array();
    for (const auto& level : X.levels) {
        json cells = json::array();
        for (const OrbitCell& cell : level)
            cells.push_back({{"dimension", cell.dimension},
                             {"representative", cover_to_json(cell.representative)},
                             {"edge_stabilizer", cell.edge_stabilizer},
                             {"is_alternating", cell.is_alternating}});
        levels.push_back(std::move(cells));
    }
    json faces = json::array();
    for (const auto& level : X.faces) {
        json per_cell = json::array();
        for (const auto& cell_faces : level) {
            json refs = json::array();
            for (const FaceRef& f : cell_faces)
                refs.push_back({{"target", f.target}, {"align", f.align}, {"sign", f.sign}});
            per_cell.push_back(std::move(refs));
        }
        faces.push_back(std::move(per_cell));
    }
    return {{"genus", X.genus}, {"p", X.p}, {"levels", levels}, {"faces", faces}};
}

json census_level_to_json(const CensusLevel& level) {
    json reps = json::array();
    for (const PCover& c : level.orbit_reps) reps.push_back(cover_to_json(c));
    return {{"genus", level.genus},
            {"p", level.p},
            {"n", level.n},
            {"orbit_reps", reps},
            {"counts_by_target", level.counts_by_target}};
}

CensusLevel census_level_from_json(const json& j) {
    CensusLevel level;
    level.genus = j.at("genus").get<int>();
    level.p = j.at("p").get<int>();
    level.n = j.at("n").get<int>();
    for (const auto& rep : j.at("orbit_reps")) level.orbit_reps.push_back(cover_from_json(rep));
    level.counts_by_target = j.at("counts_by_target").get<std::map<std::string, int>>();
    return level;
}

} // namespace tcov
