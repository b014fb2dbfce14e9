#include "thg/oracle.hpp"

#include <algorithm>
#include <bit>

#include "thg/error.hpp"

namespace thg {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

// Backtracking over partial paths that start at a fixed vertex. Prunes:
//  - an unvisited vertex with fewer than two usable neighbours (unvisited,
//    the path end, or the start) kills the branch;
//  - an unvisited vertex whose only two usable neighbours include the path
//    end must come next, and two such vertices kill the branch; likewise at
//    most one can be pinned to the start;
//  - the unvisited vertices must all be reachable from the path end.
// For existence searches, candidates that are twins (equal open or closed
// neighbourhoods) of an already tried candidate are skipped: swapping two
// unvisited twins is an automorphism fixing the current path.
class Search {
public:
    Search(const Graph& g, bool skip_twins) : n_(g.vertex_count()), skip_twins_(skip_twins) {
        if (n_ > kOracleMaxVertices)
            throw Error(ErrorCode::OracleTooLarge,
                        std::to_string(n_) + " vertices exceeds the oracle limit of " + std::to_string(kOracleMaxVertices));
        adj_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) adj_[v] |= bit(w);
        all_ = n_ == 64 ? ~Mask{0} : bit(static_cast<Vertex>(n_)) - 1;
        twin_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            twin_[v] = v;
            for (Vertex u = 0; u < v; ++u) {
                if (adj_[u] == adj_[v] || (adj_[u] | bit(u)) == (adj_[v] | bit(v))) {
                    twin_[v] = twin_[u];
                    break;
                }
            }
        }
        path_.reserve(n_);
    }

    /// Explores every Hamilton cycle starting with the given prefix. The
    /// visitor returns false to stop the search.
    template <class Visitor>
    void run(std::span<const Vertex> prefix, Visitor&& visit) {
        if (n_ < 3) return;
        path_.assign(prefix.begin(), prefix.end());
        Mask visited = 0;
        for (std::size_t k = 0; k < path_.size(); ++k) {
            visited |= bit(path_[k]);
            if (k > 0 && !(adj_[path_[k - 1]] & bit(path_[k]))) return;
        }
        start_ = path_.front();
        stop_ = false;
        extend(visited, visit);
    }

private:
    template <class Visitor>
    void extend(Mask visited, Visitor& visit) {
        const Vertex cur = path_.back();
        const Mask unvisited = all_ & ~visited;
        if (unvisited == 0) {
            if (adj_[cur] & bit(start_)) stop_ = !visit(path_);
            return;
        }

        const Mask usable = unvisited | bit(cur) | bit(start_);
        const bool at_start = cur == start_;
        const bool last = std::has_single_bit(unvisited);
        Mask forced_next = 0;
        int pinned_to_start = 0;
        for (Mask rest = unvisited; rest; rest &= rest - 1) {
            const auto v = static_cast<Vertex>(std::countr_zero(rest));
            const Mask avail = adj_[v] & usable;
            const int count = std::popcount(avail);
            if (count < 2) return;
            if (count == 2 && !at_start && !last) {
                const bool to_cur = avail & bit(cur);
                const bool to_start = avail & bit(start_);
                if (to_cur && to_start) return;
                if (to_cur) forced_next |= bit(v);
                if (to_start && ++pinned_to_start > 1) return;
            }
        }
        if (std::popcount(forced_next) > 1) return;

        // Every unvisited vertex must be reachable from cur through unvisited
        // vertices.
        Mask reached = adj_[cur] & unvisited;
        Mask frontier = reached;
        while (frontier) {
            Mask grow = 0;
            for (Mask rest = frontier; rest; rest &= rest - 1)
                grow |= adj_[static_cast<Vertex>(std::countr_zero(rest))];
            frontier = grow & unvisited & ~reached;
            reached |= frontier;
        }
        if (reached != unvisited) return;

        Mask candidates = forced_next ? forced_next : adj_[cur] & unvisited;
        Mask tried_twins = 0;
        for (; candidates; candidates &= candidates - 1) {
            const auto next = static_cast<Vertex>(std::countr_zero(candidates));
            if (skip_twins_) {
                if (tried_twins & bit(twin_[next])) continue;
                tried_twins |= bit(twin_[next]);
            }
            path_.push_back(next);
            extend(visited | bit(next), visit);
            path_.pop_back();
            if (stop_) return;
        }
    }

    std::size_t n_;
    bool skip_twins_;
    std::vector<Mask> adj_;
    Mask all_ = 0;
    std::vector<Vertex> twin_;
    std::vector<Vertex> path_;
    Vertex start_ = 0;
    bool stop_ = false;
};

std::optional<HamiltonCycle> first_cycle(const Graph& g, std::span<const Vertex> prefix) {
    std::optional<HamiltonCycle> found;
    Search(g, true).run(prefix, [&found](const std::vector<Vertex>& path) {
        found = canonical_cycle(path);
        return false;
    });
    return found;
}

}  // namespace

HamiltonCycle canonical_cycle(std::vector<Vertex> cycle) {
    if (cycle.empty()) return {};
    auto lowest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), lowest, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return HamiltonCycle{std::move(cycle)};
}

bool is_hamilton_cycle(const Graph& g, const HamiltonCycle& cycle) {
    const std::size_t n = g.vertex_count();
    if (n < 3 || cycle.vertices.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        Vertex v = cycle.vertices[k];
        if (v >= n || seen[v]) return false;
        seen[v] = true;
        if (!g.adjacent(v, cycle.vertices[(k + 1) % n])) return false;
    }
    return true;
}

std::optional<HamiltonCycle> find_hamilton_cycle(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    const Vertex start = 0;
    return first_cycle(g, std::span<const Vertex>(&start, 1));
}

std::optional<HamiltonCycle> find_hamilton_cycle_through(const Graph& g, Vertex u, Vertex v) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v)) return std::nullopt;
    const Vertex prefix[] = {u, v};
    return first_cycle(g, prefix);
}

std::uint64_t count_hamilton_cycles(const Graph& g, CountOptions options) {
    const std::size_t n = g.vertex_count();
    if (n > options.cap && !options.override_cap)
        throw Error(ErrorCode::CapExceeded,
                    std::to_string(n) + " vertices exceeds the counting cap of " + std::to_string(options.cap));
    if (n < 3) return 0;
    std::uint64_t count = 0;
    const Vertex start = 0;
    Search(g, false).run(std::span<const Vertex>(&start, 1), [&count](const std::vector<Vertex>& path) {
        if (path[1] < path.back()) ++count;
        return true;
    });
    return count;
}

SequenceEnumerator::SequenceEnumerator(std::size_t n, bool connected_only)
    : n_(n), connected_only_(connected_only) {
    if (n < 2 || n > 62) throw Error(ErrorCode::CapExceeded, "enumeration supports 2 <= n <= 62");
    free_bits_ = connected_only ? n - 2 : n - 1;
}

std::optional<ParsedSequence> SequenceEnumerator::next() {
    if (cursor_ >= size()) return std::nullopt;
    std::string word(n_, '0');
    for (std::size_t k = 0; k < free_bits_; ++k)
        if (cursor_ & (std::uint64_t{1} << (free_bits_ - 1 - k))) word[1 + k] = '1';
    if (connected_only_) word.back() = '1';
    ++cursor_;
    return parse_sequence(word, ParseOptions{.allow_trailing_zeros = true});
}

std::vector<ParsedSequence> enumerate_sequences(std::size_t n, bool connected_only) {
    SequenceEnumerator it(n, connected_only);
    std::vector<ParsedSequence> out;
    out.reserve(it.size());
    while (auto item = it.next()) out.push_back(std::move(*item));
    return out;
}

std::vector<GeneratingSequence> connected_sequences(std::size_t n) {
    SequenceEnumerator it(n, true);
    std::vector<GeneratingSequence> out;
    out.reserve(it.size());
    while (auto item = it.next()) out.push_back(std::move(item->sequence));
    return out;
}

}  // namespace thg
