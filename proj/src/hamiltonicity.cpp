#include "thg/hamiltonicity.hpp"

#include <json.hpp>

#include "thg/error.hpp"

namespace thg {

std::string_view to_string(Reason reason) {
    switch (reason) {
        case Reason::TooFewVertices: return "TOO_FEW_VERTICES";
        case Reason::SmallCaseR0: return "SMALL_CASE_R0";
        case Reason::SmallCaseR1: return "SMALL_CASE_R1";
        case Reason::CliqueTooSmall: return "CLIQUE_TOO_SMALL";
        case Reason::ZeroDegreeInClique: return "ZERO_DEGREE_IN_CLIQUE";
        case Reason::UnequalClasses: return "UNEQUAL_CLASSES";
        case Reason::PendantStructure: return "PENDANT_STRUCTURE";
        case Reason::InequalityFailed: return "INEQUALITY_FAILED";
        case Reason::EllPlusOneEqualsH: return "ELL_PLUS_ONE_EQUALS_H";
        case Reason::InequalitiesHold: return "INEQUALITIES_HOLD";
    }
    return "UNKNOWN";
}

std::string to_json(const Verdict& verdict) {
    nlohmann::ordered_json doc;
    doc["hamiltonian"] = verdict.hamiltonian;
    doc["reason"] = to_string(verdict.reason);
    doc["r"] = verdict.r;
    doc["s"] = verdict.s;
    doc["T"] = verdict.total_zeros;
    doc["S"] = verdict.total_ones;
    doc["ell"] = verdict.ell ? nlohmann::ordered_json(*verdict.ell) : nlohmann::ordered_json(nullptr);
    doc["failed_j"] = verdict.failed_j ? nlohmann::ordered_json(*verdict.failed_j) : nlohmann::ordered_json(nullptr);
    doc["witness"] = verdict.witness ? nlohmann::ordered_json(*verdict.witness) : nlohmann::ordered_json(nullptr);
    return doc.dump();
}

namespace {

// Clique-size rejection of the threshold decision, for r >= 2. Returns the reason when the
// clique is too small to absorb the co-clique.
std::optional<Reason> clique_rejection(const GeneratingSequence& seq, std::uint64_t r, std::uint64_t s) {
    if (s <= r) return Reason::CliqueTooSmall;
    const Run& first = seq[0];
    if (first.zeros != 1 && s <= r + 1) return Reason::ZeroDegreeInClique;
    if (first.zeros == 1 && s <= r + first.ones + 1) return Reason::ZeroDegreeInClique;
    return std::nullopt;
}

}  // namespace

std::uint64_t trimming_level(const GeneratingSequence& seq, std::uint64_t surplus) {
    std::uint64_t ell = 0;
    std::uint64_t prefix = 0;
    for (const Run& run : seq.runs()) {
        if (prefix + run.ones > surplus) break;
        prefix += run.ones;
        ++ell;
    }
    return ell;
}

Verdict is_hamiltonian_threshold(const GeneratingSequence& seq) {
    Verdict v;
    v.total_zeros = seq.total_zeros();
    v.total_ones = seq.total_ones();
    v.r = v.total_zeros - 1;
    v.s = v.total_ones + 1;
    const auto runs = seq.runs();
    const std::size_t h = runs.size();

    if (seq.order() < 3) {
        v.reason = Reason::TooFewVertices;
        return v;
    }
    if (v.r == 0) {
        v.reason = Reason::SmallCaseR0;
        v.hamiltonian = v.s >= 3;
        return v;
    }
    if (v.r == 1) {
        // d_1 = s_h: the one co-clique vertex outside the clique sees V_h only.
        v.reason = Reason::SmallCaseR1;
        v.hamiltonian = runs[h - 1].ones >= 2;
        return v;
    }
    if (auto reason = clique_rejection(seq, v.r, v.s)) {
        v.reason = *reason;
        return v;
    }

    const std::uint64_t surplus = v.s - v.r - 1;
    const std::uint64_t ell = trimming_level(seq, surplus);
    v.ell = ell;
    v.work += ell + 1;
    if (ell + 1 == h) {
        v.reason = Reason::EllPlusOneEqualsH;
        v.hamiltonian = true;
        return v;
    }

    std::uint64_t suffix_ones = 0;
    std::uint64_t suffix_zeros = 0;
    for (std::size_t j = h; j >= ell + 2; --j) {
        ++v.work;
        suffix_ones += runs[j - 1].ones;
        suffix_zeros += runs[j - 1].zeros;
        // The +1 comes from the balanced case applied to G*, whose blocks from
        // ell + 2 on are those of the input; without it 0^2 1^2 0 1 (a vertex
        // of degree 1) would be accepted.
        if (suffix_ones < suffix_zeros + 1) {
            v.failed_j = j;
            v.reason = Reason::InequalityFailed;
            return v;
        }
    }
    v.reason = Reason::InequalitiesHold;
    v.hamiltonian = true;
    return v;
}

Verdict is_hamiltonian_chain(const GeneratingSequence& seq) {
    Verdict v;
    v.total_zeros = seq.total_zeros();
    v.total_ones = seq.total_ones();
    v.r = v.total_zeros;
    v.s = v.total_ones;
    const auto runs = seq.runs();
    const std::size_t h = runs.size();

    if (seq.order() < 3) {
        v.reason = Reason::TooFewVertices;
        return v;
    }
    if (v.total_zeros != v.total_ones) {
        v.reason = Reason::UnequalClasses;
        return v;
    }

    // The suffix scan also runs when the pendant test fires so the verdict
    // can name the first failing inequality.
    std::uint64_t suffix_ones = 0;
    std::uint64_t suffix_zeros = 0;
    for (std::size_t j = h; j >= 2; --j) {
        ++v.work;
        suffix_ones += runs[j - 1].ones;
        suffix_zeros += runs[j - 1].zeros;
        if (suffix_ones < suffix_zeros + 1) {
            v.failed_j = j;
            break;
        }
    }

    // With two or more levels, U_1 + V_1 and U_h + V_h would otherwise close
    // into a short cycle. A single level is K_{t,t}, Hamiltonian for t >= 2.
    if (h >= 2 && (runs[0].zeros < runs[0].ones + 1 || runs[h - 1].ones < runs[h - 1].zeros + 1)) {
        v.reason = Reason::PendantStructure;
        return v;
    }
    if (v.failed_j) {
        v.reason = Reason::InequalityFailed;
        return v;
    }
    v.reason = Reason::InequalitiesHold;
    v.hamiltonian = true;
    return v;
}

Verdict is_hamiltonian(const GeneratingSequence& seq, GraphKind kind) {
    switch (kind) {
        case GraphKind::Threshold: return is_hamiltonian_threshold(seq);
        case GraphKind::Chain: return is_hamiltonian_chain(seq);
        case GraphKind::General: break;
    }
    throw Error(ErrorCode::ParseError, "decision needs threshold or chain kind");
}

GeneratingSequence reduce_to_g_star(const GeneratingSequence& seq) {
    const std::uint64_t r = seq.total_zeros() - 1;
    const std::uint64_t s = seq.total_ones() + 1;
    if (r < 2) throw Error(ErrorCode::ReductionNotApplicable, "co-clique size r = " + std::to_string(r) + " < 2");
    if (clique_rejection(seq, r, s))
        throw Error(ErrorCode::ReductionNotApplicable, "clique of size " + std::to_string(s) + " is rejected outright");

    const std::uint64_t surplus = s - r - 1;
    const std::uint64_t ell = trimming_level(seq, surplus);
    const auto runs = seq.runs();

    std::vector<Run> blocks;
    blocks.reserve(runs.size() - ell);
    Run head;
    for (std::size_t i = 0; i <= ell; ++i) {
        head.zeros += runs[i].zeros;
        head.ones += runs[i].ones;
    }
    head.zeros -= 1;
    head.ones -= surplus;
    blocks.push_back(head);
    blocks.insert(blocks.end(), runs.begin() + static_cast<std::ptrdiff_t>(ell + 1), runs.end());
    return GeneratingSequence::canonicalize(blocks);
}

bool check_sq_system(std::span<const std::uint64_t> d, std::span<const std::uint64_t> e, std::uint64_t q) {
    if (d.size() != e.size() || d.size() < 2)
        throw Error(ErrorCode::UnbalancedClasses, "S_q needs |U| = |V| >= 2");
    const std::uint64_t size = d.size();
    if (q >= size) throw Error(ErrorCode::QOutOfRange, "q = " + std::to_string(q) + " outside 0.." + std::to_string(size - 1));
    for (std::uint64_t j = 1; j <= q; ++j)
        if (d[j - 1] < j + 1) return false;
    for (std::uint64_t j = 1; j <= size - 1 - q; ++j)
        if (e[j - 1] < j + 1) return false;
    return true;
}

}  // namespace thg
