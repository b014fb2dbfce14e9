#ifndef THG_GRAPH_HPP
#define THG_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "thg/sequence.hpp"

namespace thg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class GraphKind { Threshold, Chain, General };

std::string_view to_string(GraphKind kind);
GraphKind parse_graph_kind(std::string_view text);

/// Half-open range of vertex ids.
struct VertexRange {
    Vertex begin = 0;
    Vertex end = 0;

    std::size_t size() const noexcept { return end - begin; }
    bool contains(Vertex v) const noexcept { return begin <= v && v < end; }
    friend bool operator==(const VertexRange&, const VertexRange&) = default;
};

/// Cells U_i (zeros) and V_i (ones) of one level of the construction.
struct Cell {
    VertexRange zeros;
    VertexRange ones;
};

enum class Side : std::uint8_t { U, V };

/// Immutable undirected simple graph with sorted neighbour lists. Graphs built
/// from a sequence also carry the cell partition; chain graphs carry the
/// colour class of every vertex.
class Graph {
public:
    Graph() = default;

    /// General graph on n vertices. Self-loops are rejected, duplicates merged.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                            GraphKind kind = GraphKind::General);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    GraphKind kind() const noexcept { return kind_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Empty unless built by materialize().
    std::span<const Cell> cells() const noexcept { return cells_; }
    /// Empty unless the bipartition is known.
    std::span<const Side> sides() const noexcept { return sides_; }

    /// Copy with the edge {u, v} removed. Cells are dropped (they no longer
    /// describe the graph); sides are kept.
    Graph without_edge(Vertex u, Vertex v) const;

    /// Copy with vertex v renamed to perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;

    /// Copy with the colour classes attached (chain graphs given as edges).
    Graph with_sides(std::vector<Side> sides) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_;
    }

private:
    friend Graph materialize(const GeneratingSequence&, GraphKind);

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
    GraphKind kind_ = GraphKind::General;
    std::vector<Cell> cells_;
    std::vector<Side> sides_;
};

/// Builds the threshold or chain graph of seq. Vertex k is the k-th symbol of
/// the binary word, so U_1 = [0, t_1), V_1 = [t_1, t_1 + s_1), and so on.
Graph materialize(const GeneratingSequence& seq, GraphKind kind);

inline Graph materialize_threshold(const GeneratingSequence& seq) {
    return materialize(seq, GraphKind::Threshold);
}
inline Graph materialize_chain(const GeneratingSequence& seq) {
    return materialize(seq, GraphKind::Chain);
}

/// Degrees in the chain graph B obtained from the threshold graph by removing
/// the edges of a maximal clique J. d lists the co-clique I, e lists J; both
/// are non-decreasing.
struct DegreeProfile {
    std::vector<std::uint64_t> d;
    std::vector<std::uint64_t> e;
    std::uint64_t r = 0;  // |I| = T - 1
    std::uint64_t s = 0;  // |J| = S + 1
    std::uint64_t total_zeros = 0;
    std::uint64_t total_ones = 0;
    bool t1_is_one = false;

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Closed form: J = V + {x} (x the lowest id of U_1) when t_1 != 1, and
/// J = V + U_1 when t_1 = 1.
DegreeProfile degree_profile(const GeneratingSequence& seq);

/// Same profile obtained by materializing the threshold graph and counting.
DegreeProfile counted_degree_profile(const GeneratingSequence& seq);

/// Sorted degrees of the two colour classes of the chain graph.
struct ChainDegrees {
    std::vector<std::uint64_t> u;
    std::vector<std::uint64_t> v;
};

ChainDegrees chain_degrees(const GeneratingSequence& seq);
ChainDegrees chain_degrees(const Graph& chain);

/// Σ_i t_i · (Σ_{j>=i} s_j).
std::uint64_t chain_edge_count(const GeneratingSequence& seq);

}  // namespace thg

#endif
