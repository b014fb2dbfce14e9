#include "thg/graph_format.hpp"

#include <sstream>

#include <json.hpp>

#include "thg/error.hpp"

namespace thg {

ExportFormat parse_export_format(std::string_view text) {
    if (text == "dot") return ExportFormat::Dot;
    if (text == "edgelist") return ExportFormat::EdgeList;
    if (text == "json") return ExportFormat::Json;
    throw Error(ErrorCode::ParseError, "unknown export format '" + std::string(text) + "'");
}

namespace {

void write_rank(std::ostream& out, const char* label, std::size_t level, VertexRange range) {
    out << "  { rank=same; // " << label << level << '\n' << "   ";
    for (Vertex v = range.begin; v < range.end; ++v) out << ' ' << v << ';';
    out << " }\n";
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    out << "  // kind=" << to_string(g.kind()) << " n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    if (g.cells().empty()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    } else {
        std::size_t level = 1;
        for (const Cell& cell : g.cells()) {
            write_rank(out, "U", level, cell.zeros);
            write_rank(out, "V", level, cell.ones);
            ++level;
        }
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_json_text(const Graph& g) {
    nlohmann::json runs = nlohmann::json::array();
    for (const Cell& cell : g.cells()) runs.push_back({cell.zeros.size(), cell.ones.size()});
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    doc["kind"] = to_string(g.kind());
    doc["runs"] = std::move(runs);
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

}  // namespace

std::string export_graph(const Graph& g, ExportFormat format) {
    switch (format) {
        case ExportFormat::Dot: return to_dot(g);
        case ExportFormat::EdgeList: return to_edge_list(g);
        case ExportFormat::Json: return to_json_text(g);
    }
    return {};
}

Graph graph_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        const auto n = doc.at("n").get<std::size_t>();
        const GraphKind kind = parse_graph_kind(doc.at("kind").get<std::string>());
        std::vector<Edge> edges;
        for (const auto& pair : doc.at("edges")) edges.emplace_back(pair.at(0).get<Vertex>(), pair.at(1).get<Vertex>());
        Graph g = Graph::from_edges(n, edges, kind);

        std::vector<Run> runs;
        if (doc.contains("runs"))
            for (const auto& pair : doc.at("runs")) runs.push_back({pair.at(0).get<std::uint64_t>(), pair.at(1).get<std::uint64_t>()});
        if (runs.empty() || kind == GraphKind::General) return g;

        Graph built = materialize(GeneratingSequence::from_runs(std::move(runs)), kind);
        if (!(built == g)) throw Error(ErrorCode::ParseError, "edges do not match runs");
        return built;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace thg
