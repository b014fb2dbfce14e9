#ifndef THG_VERIFICATION_HPP
#define THG_VERIFICATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "thg/sequence.hpp"

namespace thg {

// Exhaustive cross-validation of the linear decisions against brute force.
// Sequences are fanned out to worker threads; results are merged in sequence
// order so the report does not depend on the thread count.

struct VerifyOptions {
    std::size_t max_n = 12;
    std::size_t min_n = 2;
    bool threshold = true;
    bool chain = true;
    /// 0 picks std::thread::hardware_concurrency().
    std::size_t threads = 0;
};

enum class Check {
    ThresholdDecision,   // threshold decision vs oracle
    ChainDecision,       // chain decision vs oracle
    SqSystem,            // exists-q / forall-q S_q vs oracle, balanced chains
    Reduction,           // oracle(G) == oracle(G*) where the reduction applies
    DegreeProfile,       // closed-form vs counted degree profile
};

std::string_view to_string(Check check);

struct Mismatch {
    Check check;
    GeneratingSequence sequence;
    std::string detail;
};

struct OrderSummary {
    std::size_t n = 0;
    std::uint64_t sequences = 0;
    std::uint64_t threshold_hamiltonian = 0;
    std::uint64_t chain_hamiltonian = 0;
    std::uint64_t balanced_chains = 0;
    std::uint64_t reductions = 0;
};

struct VerifyReport {
    std::vector<OrderSummary> orders;
    std::vector<Mismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
    std::uint64_t mismatch_count(Check check) const;
};

VerifyReport verify_all(const VerifyOptions& options);

/// Fixed-width summary table, one row per order, followed by any mismatches.
std::string format_report(const VerifyReport& report);

}  // namespace thg

#endif
