#include "thg/bench.hpp"

#include <algorithm>
#include <vector>

#include "thg/error.hpp"

namespace thg {

GeneratingSequence synthetic_threshold_sequence(std::size_t h) {
    if (h == 0) throw Error(ErrorCode::InvalidLevel, "need at least one block");
    if (h == 1) return GeneratingSequence::from_runs({{2, 2}});
    std::vector<Run> runs(h, Run{1, 1});
    runs.front() = {2, 2};
    runs.back() = {1, 2};
    return GeneratingSequence::from_runs(std::move(runs));
}

GeneratingSequence synthetic_chain_sequence(std::size_t h) {
    if (h == 0) throw Error(ErrorCode::InvalidLevel, "need at least one block");
    if (h == 1) return GeneratingSequence::from_runs({{2, 2}});
    std::vector<Run> runs(h, Run{1, 1});
    runs.front() = {2, 1};
    runs.back() = {1, 2};
    return GeneratingSequence::from_runs(std::move(runs));
}

Timing time_decision(const GeneratingSequence& seq, GraphKind kind, std::size_t repeat) {
    repeat = std::max<std::size_t>(repeat, 1);
    std::vector<std::chrono::nanoseconds> samples;
    samples.reserve(repeat);
    Timing timing;
    for (std::size_t k = 0; k < repeat; ++k) {
        const auto begin = std::chrono::steady_clock::now();
        timing.verdict = is_hamiltonian(seq, kind);
        const auto end = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin));
    }
    std::sort(samples.begin(), samples.end());
    timing.best = samples.front();
    timing.median = samples[samples.size() / 2];
    return timing;
}

}  // namespace thg
