#include "thg/graph.hpp"

#include <algorithm>
#include <limits>

#include "thg/error.hpp"

namespace thg {

std::string_view to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::Threshold: return "threshold";
        case GraphKind::Chain: return "chain";
        case GraphKind::General: return "general";
    }
    return "general";
}

GraphKind parse_graph_kind(std::string_view text) {
    if (text == "threshold") return GraphKind::Threshold;
    if (text == "chain") return GraphKind::Chain;
    if (text == "general") return GraphKind::General;
    throw Error(ErrorCode::ParseError, "unknown graph kind '" + std::string(text) + "'");
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, GraphKind kind) {
    if (n > std::numeric_limits<Vertex>::max()) throw Error(ErrorCode::ParseError, "too many vertices");
    Graph g;
    g.kind_ = kind;
    g.adjacency_.resize(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw Error(ErrorCode::ParseError, "edge endpoint out of range");
        if (u == v) throw Error(ErrorCode::ParseError, "self-loop");
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t twice = 0;
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        twice += list.size();
    }
    g.edge_count_ = twice / 2;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.cells_.clear();
    auto erase = [&g](Vertex a, Vertex b) {
        auto& list = g.adjacency_[a];
        auto it = std::lower_bound(list.begin(), list.end(), b);
        if (it == list.end() || *it != b) return false;
        list.erase(it);
        return true;
    };
    if (erase(u, v) && erase(v, u)) --g.edge_count_;
    return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    const std::size_t n = vertex_count();
    if (perm.size() != n) throw Error(ErrorCode::ParseError, "permutation size mismatch");
    std::vector<Edge> mapped;
    mapped.reserve(edge_count_);
    for (auto [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
    Graph g = from_edges(n, mapped, kind_);
    if (!sides_.empty()) {
        g.sides_.resize(n);
        for (std::size_t v = 0; v < n; ++v) g.sides_[perm[v]] = sides_[v];
    }
    return g;
}

Graph Graph::with_sides(std::vector<Side> sides) const {
    if (sides.size() != vertex_count()) throw Error(ErrorCode::ParseError, "side list size mismatch");
    Graph g = *this;
    g.sides_ = std::move(sides);
    return g;
}

Graph materialize(const GeneratingSequence& seq, GraphKind kind) {
    if (kind == GraphKind::General) throw Error(ErrorCode::ParseError, "materialize needs threshold or chain");
    if (seq.order() > std::numeric_limits<Vertex>::max())
        throw Error(ErrorCode::ParseError, "sequence too long to materialize");

    Graph g;
    g.kind_ = kind;
    const auto n = static_cast<std::size_t>(seq.order());
    g.adjacency_.resize(n);
    g.cells_.reserve(seq.levels());

    Vertex next = 0;
    for (const Run& run : seq.runs()) {
        Cell cell;
        cell.zeros = {next, static_cast<Vertex>(next + run.zeros)};
        next = cell.zeros.end;
        cell.ones = {next, static_cast<Vertex>(next + run.ones)};
        next = cell.ones.end;
        g.cells_.push_back(cell);
    }

    // A one-vertex joins every earlier zero (and, for threshold graphs, every
    // earlier one). Neighbours come out sorted: earlier ids are appended in
    // increasing order before later ones.
    std::size_t edges = 0;
    for (std::size_t i = 0; i < g.cells_.size(); ++i) {
        const Cell& cell = g.cells_[i];
        for (Vertex v = cell.ones.begin; v < cell.ones.end; ++v) {
            for (std::size_t j = 0; j <= i; ++j) {
                for (Vertex u = g.cells_[j].zeros.begin; u < g.cells_[j].zeros.end; ++u) {
                    g.adjacency_[u].push_back(v);
                    g.adjacency_[v].push_back(u);
                    ++edges;
                }
                if (kind == GraphKind::Threshold) {
                    Vertex last = j == i ? v : g.cells_[j].ones.end;
                    for (Vertex w = g.cells_[j].ones.begin; w < last; ++w) {
                        g.adjacency_[w].push_back(v);
                        g.adjacency_[v].push_back(w);
                        ++edges;
                    }
                }
            }
        }
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    g.edge_count_ = edges;

    if (kind == GraphKind::Chain) {
        g.sides_.assign(n, Side::U);
        for (const Cell& cell : g.cells_)
            for (Vertex v = cell.ones.begin; v < cell.ones.end; ++v) g.sides_[v] = Side::V;
    }
    return g;
}

DegreeProfile degree_profile(const GeneratingSequence& seq) {
    const auto runs = seq.runs();
    const std::size_t h = runs.size();
    DegreeProfile p;
    p.total_zeros = seq.total_zeros();
    p.total_ones = seq.total_ones();
    p.r = p.total_zeros - 1;
    p.s = p.total_ones + 1;
    p.t1_is_one = runs[0].zeros == 1;

    // Co-clique side: U_h, ..., U_1 (minus x, or minus all of U_1 when t_1 = 1),
    // with d_j = s_{h+1-j} + ... + s_h.
    std::uint64_t suffix = 0;
    const std::size_t lowest_level = p.t1_is_one ? 1 : 0;
    for (std::size_t i = h; i-- > lowest_level;) {
        suffix += runs[i].ones;
        std::uint64_t multiplicity = i == 0 ? runs[0].zeros - 1 : runs[i].zeros;
        p.d.insert(p.d.end(), multiplicity, suffix);
    }

    // Clique side: x (or U_1 plus V_1 when t_1 = 1) has degree 0 in B; V_j has
    // degree t_1 + ... + t_j - 1, or t_2 + ... + t_j when t_1 = 1.
    if (p.t1_is_one) {
        p.e.assign(1 + runs[0].ones, 0);
        std::uint64_t prefix = 0;
        for (std::size_t i = 1; i < h; ++i) {
            prefix += runs[i].zeros;
            p.e.insert(p.e.end(), runs[i].ones, prefix);
        }
    } else {
        p.e.assign(1, 0);
        std::uint64_t prefix = 0;
        for (std::size_t i = 0; i < h; ++i) {
            prefix += runs[i].zeros;
            p.e.insert(p.e.end(), runs[i].ones, prefix - 1);
        }
    }
    return p;
}

DegreeProfile counted_degree_profile(const GeneratingSequence& seq) {
    const Graph g = materialize_threshold(seq);
    const auto cells = g.cells();
    DegreeProfile p;
    p.total_zeros = seq.total_zeros();
    p.total_ones = seq.total_ones();
    p.t1_is_one = seq[0].zeros == 1;

    std::vector<bool> in_clique(g.vertex_count(), false);
    for (const Cell& cell : cells)
        for (Vertex v = cell.ones.begin; v < cell.ones.end; ++v) in_clique[v] = true;
    if (p.t1_is_one) {
        for (Vertex v = cells[0].zeros.begin; v < cells[0].zeros.end; ++v) in_clique[v] = true;
    } else {
        in_clique[cells[0].zeros.begin] = true;
    }

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t degree = 0;
        for (Vertex w : g.neighbors(v))
            if (!(in_clique[v] && in_clique[w])) ++degree;
        (in_clique[v] ? p.e : p.d).push_back(degree);
    }
    std::sort(p.d.begin(), p.d.end());
    std::sort(p.e.begin(), p.e.end());
    p.r = p.d.size();
    p.s = p.e.size();
    return p;
}

ChainDegrees chain_degrees(const GeneratingSequence& seq) {
    ChainDegrees out;
    const auto runs = seq.runs();
    std::uint64_t suffix = 0;
    for (std::size_t i = runs.size(); i-- > 0;) {
        suffix += runs[i].ones;
        out.u.insert(out.u.end(), runs[i].zeros, suffix);
    }
    std::uint64_t prefix = 0;
    for (const Run& run : runs) {
        prefix += run.zeros;
        out.v.insert(out.v.end(), run.ones, prefix);
    }
    return out;
}

ChainDegrees chain_degrees(const Graph& chain) {
    if (chain.sides().empty()) throw Error(ErrorCode::NotNested, "chain graph without colour classes");
    ChainDegrees out;
    for (Vertex v = 0; v < chain.vertex_count(); ++v)
        (chain.sides()[v] == Side::U ? out.u : out.v).push_back(chain.degree(v));
    std::sort(out.u.begin(), out.u.end());
    std::sort(out.v.begin(), out.v.end());
    return out;
}

std::uint64_t chain_edge_count(const GeneratingSequence& seq) {
    std::uint64_t total = 0;
    std::uint64_t suffix = 0;
    const auto runs = seq.runs();
    for (std::size_t i = runs.size(); i-- > 0;) {
        suffix += runs[i].ones;
        total += runs[i].zeros * suffix;
    }
    return total;
}

}  // namespace thg
