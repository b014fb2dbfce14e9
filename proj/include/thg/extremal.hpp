#ifndef THG_EXTREMAL_HPP
#define THG_EXTREMAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "thg/graph.hpp"
#include "thg/oracle.hpp"
#include "thg/sequence.hpp"

namespace thg {

/// Edge of a chain graph joining U_level to V_level (level is 1-based).
struct KeyEdge {
    std::size_t level = 0;
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const KeyEdge&, const KeyEdge&) = default;
};

/// All key edges, by level, then u, then v. Vertex ids follow materialize().
std::vector<KeyEdge> key_edges(const GeneratingSequence& seq);

/// Sequence of the chain graph minus one key edge at the given 1-based level.
/// Throws InvalidLevel for a level outside 1..h and EdgeDeletionDisconnects
/// when the removed edge was the only edge at one of its ends.
GeneratingSequence delete_key_edge(const GeneratingSequence& seq, std::size_t level);

/// The chain graph (0^2 1)(0 1)...(0 1)(0 1^2) of order n with h - 1 blocks,
/// h = n / 2, or (0^2 1^2) for n = 4. Throws NoHamiltonianChainGraph for odd
/// n or n < 4.
GeneratingSequence min_cycle_chain_graph(std::size_t n);

struct CensusRow {
    GeneratingSequence sequence;
    std::uint64_t cycle_count = 0;
};

/// Every Hamiltonian connected chain graph of order n with its exact cycle
/// count, ascending by count (ties by binary word). The linear decision
/// filters candidates before counting.
std::vector<CensusRow> census(std::size_t n, CountOptions options = {});

/// "sequence,n,hamiltonian,cycle_count" header plus one line per row.
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace thg

#endif
