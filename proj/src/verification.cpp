#include "thg/verification.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "thg/error.hpp"
#include "thg/graph.hpp"
#include "thg/hamiltonicity.hpp"
#include "thg/oracle.hpp"

namespace thg {

std::string_view to_string(Check check) {
    switch (check) {
        case Check::ThresholdDecision: return "threshold-decision";
        case Check::ChainDecision: return "chain-decision";
        case Check::SqSystem: return "sq-system";
        case Check::Reduction: return "reduction";
        case Check::DegreeProfile: return "degree-profile";
    }
    return "unknown";
}

std::uint64_t VerifyReport::mismatch_count(Check check) const {
    return static_cast<std::uint64_t>(
        std::count_if(mismatches.begin(), mismatches.end(), [check](const Mismatch& m) { return m.check == check; }));
}

namespace {

struct Outcome {
    bool threshold_hamiltonian = false;
    bool chain_hamiltonian = false;
    bool balanced = false;
    bool reduced = false;
    std::vector<Mismatch> mismatches;
};

std::string yes_no(bool value) { return value ? "yes" : "no"; }

Outcome examine(const GeneratingSequence& seq, const VerifyOptions& options) {
    Outcome out;
    auto report = [&](Check check, std::string detail) { out.mismatches.push_back({check, seq, std::move(detail)}); };

    if (degree_profile(seq) != counted_degree_profile(seq)) report(Check::DegreeProfile, "closed form differs from counted degrees");

    if (options.threshold) {
        const bool truth = oracle_hamiltonian(materialize_threshold(seq));
        const Verdict verdict = is_hamiltonian_threshold(seq);
        out.threshold_hamiltonian = truth;
        if (verdict.hamiltonian != truth)
            report(Check::ThresholdDecision, "algorithm " + yes_no(verdict.hamiltonian) + " (" +
                                                 std::string(to_string(verdict.reason)) + "), oracle " + yes_no(truth));

        std::optional<GeneratingSequence> reduced;
        try {
            reduced = reduce_to_g_star(seq);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ReductionNotApplicable) throw;
        }
        if (reduced) {
            out.reduced = true;
            const bool reduced_truth = oracle_hamiltonian(materialize_threshold(*reduced));
            if (reduced->total_zeros() != reduced->total_ones())
                report(Check::Reduction, "G* = " + to_string(*reduced) + " has T* != S*");
            if (reduced_truth != truth)
                report(Check::Reduction, "oracle(G) " + yes_no(truth) + ", oracle(G* = " + to_string(*reduced) +
                                             ") " + yes_no(reduced_truth));
        }
    }

    if (options.chain) {
        const bool truth = oracle_hamiltonian(materialize_chain(seq));
        const Verdict verdict = is_hamiltonian_chain(seq);
        out.chain_hamiltonian = truth;
        if (verdict.hamiltonian != truth)
            report(Check::ChainDecision, "algorithm " + yes_no(verdict.hamiltonian) + " (" +
                                             std::string(to_string(verdict.reason)) + "), oracle " + yes_no(truth));

        if (seq.total_zeros() == seq.total_ones() && seq.total_zeros() >= 2) {
            out.balanced = true;
            const ChainDegrees degrees = chain_degrees(seq);
            bool any = false;
            bool all = true;
            for (std::uint64_t q = 0; q < degrees.u.size(); ++q) {
                const bool holds = check_sq_system(degrees, q);
                any = any || holds;
                all = all && holds;
            }
            if (any != truth || all != truth)
                report(Check::SqSystem, "exists-q " + yes_no(any) + ", forall-q " + yes_no(all) + ", oracle " + yes_no(truth));
        }
    }
    return out;
}

std::vector<Outcome> examine_all(const std::vector<GeneratingSequence>& seqs, const VerifyOptions& options) {
    std::vector<Outcome> outcomes(seqs.size());
    std::size_t workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(1, seqs.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (std::size_t k = next++; k < seqs.size(); k = next++) outcomes[k] = examine(seqs[k], options);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = seqs.size();
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return outcomes;
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& options) {
    VerifyReport report;
    for (std::size_t n = std::max<std::size_t>(options.min_n, 2); n <= options.max_n; ++n) {
        const std::vector<GeneratingSequence> seqs = connected_sequences(n);
        std::vector<Outcome> outcomes = examine_all(seqs, options);

        OrderSummary summary;
        summary.n = n;
        summary.sequences = seqs.size();
        for (Outcome& outcome : outcomes) {
            summary.threshold_hamiltonian += outcome.threshold_hamiltonian;
            summary.chain_hamiltonian += outcome.chain_hamiltonian;
            summary.balanced_chains += outcome.balanced;
            summary.reductions += outcome.reduced;
            for (Mismatch& m : outcome.mismatches) report.mismatches.push_back(std::move(m));
        }
        report.orders.push_back(summary);
    }
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream out;
    out << std::setw(4) << "n" << std::setw(12) << "sequences" << std::setw(12) << "thr-ham" << std::setw(12)
        << "chain-ham" << std::setw(12) << "balanced" << std::setw(12) << "reduced" << '\n';
    std::uint64_t total = 0;
    for (const OrderSummary& row : report.orders) {
        out << std::setw(4) << row.n << std::setw(12) << row.sequences << std::setw(12) << row.threshold_hamiltonian
            << std::setw(12) << row.chain_hamiltonian << std::setw(12) << row.balanced_chains << std::setw(12)
            << row.reductions << '\n';
        total += row.sequences;
    }
    out << "checked " << total << " sequences, " << report.mismatches.size() << " mismatch(es)\n";
    for (const Mismatch& m : report.mismatches)
        out << "MISMATCH " << to_string(m.check) << " \"" << to_string(m.sequence) << "\": " << m.detail << '\n';
    return out.str();
}

}  // namespace thg
