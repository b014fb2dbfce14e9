#ifndef THG_ORACLE_HPP
#define THG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "thg/graph.hpp"
#include "thg/sequence.hpp"

namespace thg {

// Brute-force ground truth. Backtracking over 64-bit adjacency masks, so every
// routine here refuses graphs with more than kOracleMaxVertices vertices.

inline constexpr std::size_t kOracleMaxVertices = 64;

/// Vertices in cycle order, starting at the smallest id; of the two
/// directions the lexicographically smaller is stored.
struct HamiltonCycle {
    std::vector<Vertex> vertices;

    friend bool operator==(const HamiltonCycle&, const HamiltonCycle&) = default;
};

/// Rotates and orients a vertex cycle into canonical form.
HamiltonCycle canonical_cycle(std::vector<Vertex> cycle);

/// True when consecutive vertices (cyclically) are adjacent and every vertex
/// appears exactly once.
bool is_hamilton_cycle(const Graph& g, const HamiltonCycle& cycle);

/// Deterministic search: starts at vertex 0, expands neighbours in id order.
std::optional<HamiltonCycle> find_hamilton_cycle(const Graph& g);

/// Hamilton cycle that uses the edge {u, v}, if one exists.
std::optional<HamiltonCycle> find_hamilton_cycle_through(const Graph& g, Vertex u, Vertex v);

inline bool oracle_hamiltonian(const Graph& g) { return find_hamilton_cycle(g).has_value(); }

struct CountOptions {
    std::size_t cap = 20;
    /// Lifts the cap (still bounded by kOracleMaxVertices).
    bool override_cap = false;
};

/// Number of distinct undirected Hamilton cycles. Each cycle is counted once:
/// the start is pinned to vertex 0 and of the two directions only the one
/// whose second vertex is smaller than its last is kept.
std::uint64_t count_hamilton_cycles(const Graph& g, CountOptions options = {});

/// Every binary word of length n that starts with 0, in lexicographic order,
/// as (connected part, trailing zeros). With connected_only the word must also
/// end with 1, giving 2^(n-2) sequences; otherwise 2^(n-1), the all-zero word
/// yielding an empty sequence with n isolated vertices.
class SequenceEnumerator {
public:
    SequenceEnumerator(std::size_t n, bool connected_only);

    std::optional<ParsedSequence> next();

    /// Total number of items this enumerator yields.
    std::uint64_t size() const noexcept { return std::uint64_t{1} << free_bits_; }

private:
    std::size_t n_;
    bool connected_only_;
    std::size_t free_bits_;
    std::uint64_t cursor_ = 0;
};

std::vector<ParsedSequence> enumerate_sequences(std::size_t n, bool connected_only);

/// Connected sequences only, unwrapped.
std::vector<GeneratingSequence> connected_sequences(std::size_t n);

}  // namespace thg

#endif
