#ifndef THG_BENCH_HPP
#define THG_BENCH_HPP

#include <chrono>
#include <cstddef>

#include "thg/graph.hpp"
#include "thg/hamiltonicity.hpp"
#include "thg/sequence.hpp"

namespace thg {

/// (0^2 1^2)(0 1)...(0 1^2) with h blocks: Hamiltonian threshold graph
/// (ell = 1) whose decision scans every suffix inequality.
GeneratingSequence synthetic_threshold_sequence(std::size_t h);

/// (0^2 1)(0 1)...(0 1^2) with h blocks: Hamiltonian chain graph whose
/// decision scans every suffix inequality.
GeneratingSequence synthetic_chain_sequence(std::size_t h);

struct Timing {
    std::chrono::nanoseconds best{};
    std::chrono::nanoseconds median{};
    Verdict verdict;
};

/// Best and median wall time of `repeat` decisions on an already parsed
/// sequence.
Timing time_decision(const GeneratingSequence& seq, GraphKind kind, std::size_t repeat);

}  // namespace thg

#endif
