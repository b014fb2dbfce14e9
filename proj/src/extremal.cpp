#include "thg/extremal.hpp"

#include <algorithm>
#include <sstream>

#include "thg/error.hpp"
#include "thg/hamiltonicity.hpp"

namespace thg {

std::vector<KeyEdge> key_edges(const GeneratingSequence& seq) {
    const Graph g = materialize_chain(seq);
    std::vector<KeyEdge> out;
    std::size_t level = 1;
    for (const Cell& cell : g.cells()) {
        for (Vertex u = cell.zeros.begin; u < cell.zeros.end; ++u)
            for (Vertex v = cell.ones.begin; v < cell.ones.end; ++v) out.push_back({level, u, v});
        ++level;
    }
    return out;
}

// Removing u-v with u in U_i, v in V_i leaves v adjacent to U_1..U_{i-1} plus
// the rest of U_i, and u adjacent to the rest of V_i plus V_{i+1}..V_h:
//   t_i > 1, s_i > 1: level i splits into (0^{t_i-1} 1)(0 1^{s_i-1})
//   t_i > 1, s_i = 1: (0^{t_i-1} 1), u joins U_{i+1}
//   t_i = 1, s_i > 1: v joins V_{i-1}, level becomes (0 1^{s_i-1})
//   t_i = 1, s_i = 1: level vanishes, v joins V_{i-1}, u joins U_{i+1}
GeneratingSequence delete_key_edge(const GeneratingSequence& seq, std::size_t level) {
    const std::size_t h = seq.levels();
    if (level < 1 || level > h)
        throw Error(ErrorCode::InvalidLevel, "level " + std::to_string(level) + " outside 1.." + std::to_string(h));

    std::vector<Run> blocks(seq.runs().begin(), seq.runs().end());
    const std::size_t i = level - 1;
    const Run run = blocks[i];
    const bool u_moves_up = run.ones == 1;   // u keeps no neighbour in V_i
    const bool v_moves_down = run.zeros == 1;  // v keeps no neighbour in U_i

    if (u_moves_up && i + 1 == h)
        throw Error(ErrorCode::EdgeDeletionDisconnects, "the U-endpoint would become isolated");
    if (v_moves_down && i == 0)
        throw Error(ErrorCode::EdgeDeletionDisconnects, "the V-endpoint would become isolated");

    std::vector<Run> replacement;
    if (!u_moves_up && !v_moves_down) {
        replacement = {{run.zeros - 1, 1}, {1, run.ones - 1}};
    } else if (u_moves_up && !v_moves_down) {
        replacement = {{run.zeros - 1, 1}};
        blocks[i + 1].zeros += 1;
    } else if (!u_moves_up && v_moves_down) {
        replacement = {{1, run.ones - 1}};
        blocks[i - 1].ones += 1;
    } else {
        blocks[i - 1].ones += 1;
        blocks[i + 1].zeros += 1;
    }
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
    blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(), replacement.end());
    return GeneratingSequence::canonicalize(blocks);
}

GeneratingSequence min_cycle_chain_graph(std::size_t n) {
    if (n < 4 || n % 2 != 0)
        throw Error(ErrorCode::NoHamiltonianChainGraph,
                    "a Hamiltonian chain graph needs colour classes of equal size >= 2, got order " + std::to_string(n));
    const std::size_t h = n / 2;
    if (h == 2) return GeneratingSequence::from_runs({{2, 2}});
    std::vector<Run> runs;
    runs.reserve(h - 1);
    runs.push_back({2, 1});
    runs.insert(runs.end(), h - 3, Run{1, 1});
    runs.push_back({1, 2});
    return GeneratingSequence::from_runs(std::move(runs));
}

std::vector<CensusRow> census(std::size_t n, CountOptions options) {
    if (n > options.cap && !options.override_cap)
        throw Error(ErrorCode::CapExceeded,
                    std::to_string(n) + " vertices exceeds the counting cap of " + std::to_string(options.cap));
    std::vector<CensusRow> rows;
    if (n < 4 || n % 2 != 0) return rows;
    for (GeneratingSequence& seq : connected_sequences(n)) {
        if (!is_hamiltonian_chain(seq).hamiltonian) continue;
        const std::uint64_t count = count_hamilton_cycles(materialize_chain(seq), options);
        rows.push_back({std::move(seq), count});
    }
    // Enumeration order is lexicographic in the binary word; keep it on ties.
    std::stable_sort(rows.begin(), rows.end(),
                     [](const CensusRow& a, const CensusRow& b) { return a.cycle_count < b.cycle_count; });
    return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "sequence,n,hamiltonian,cycle_count\n";
    for (const CensusRow& row : rows)
        out << to_string(row.sequence) << ',' << row.sequence.order() << ','
            << (row.cycle_count > 0 ? "true" : "false") << ',' << row.cycle_count << '\n';
    return out.str();
}

}  // namespace thg
