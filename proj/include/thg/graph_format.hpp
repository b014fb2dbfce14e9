#ifndef THG_GRAPH_FORMAT_HPP
#define THG_GRAPH_FORMAT_HPP

#include <string>
#include <string_view>

#include "thg/graph.hpp"

namespace thg {

enum class ExportFormat { Dot, EdgeList, Json };

ExportFormat parse_export_format(std::string_view text);

// dot:      "graph G { ... }" with numeric node ids, "--" edges and one
//           rank=same group per cell
// edgelist: one "u v" line per edge, u < v
// json:     {"n": .., "kind": .., "runs": [[t, s], ...], "edges": [[u, v], ...]}
std::string export_graph(const Graph& g, ExportFormat format);

/// Reads the json form back. Cells are rebuilt from "runs" when present.
Graph graph_from_json(std::string_view text);

}  // namespace thg

#endif
