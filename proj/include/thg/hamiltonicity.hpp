#ifndef THG_HAMILTONICITY_HPP
#define THG_HAMILTONICITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thg/graph.hpp"
#include "thg/sequence.hpp"

namespace thg {

enum class Reason {
    TooFewVertices,
    SmallCaseR0,
    SmallCaseR1,
    CliqueTooSmall,
    ZeroDegreeInClique,
    UnequalClasses,
    PendantStructure,
    InequalityFailed,
    EllPlusOneEqualsH,
    InequalitiesHold,
};

/// Upper-case wire name, e.g. "ELL_PLUS_ONE_EQUALS_H".
std::string_view to_string(Reason reason);

/// Outcome of a linear-time decision, with the intermediate quantities that
/// explain it. For threshold graphs r and s are the co-clique and maximal
/// clique sizes (T - 1 and S + 1); for chain graphs they are the colour class
/// sizes T and S. failed_j is the first j, scanning down from h, whose suffix
/// inequality fails.
struct Verdict {
    bool hamiltonian = false;
    Reason reason = Reason::TooFewVertices;
    std::uint64_t r = 0;
    std::uint64_t s = 0;
    std::uint64_t total_zeros = 0;
    std::uint64_t total_ones = 0;
    std::optional<std::uint64_t> ell;
    std::optional<std::uint64_t> failed_j;
    std::optional<std::vector<Vertex>> witness;
    /// Loop iterations spent on the run list; grows linearly with h.
    std::uint64_t work = 0;
};

/// {hamiltonian, reason, r, s, T, S, ell, failed_j, witness}.
std::string to_json(const Verdict& verdict);

/// Threshold-graph decision straight from the run-length form, O(h).
Verdict is_hamiltonian_threshold(const GeneratingSequence& seq);

/// Chain-graph decision straight from the run-length form, O(h).
Verdict is_hamiltonian_chain(const GeneratingSequence& seq);

/// Either of the above by kind. General is rejected.
Verdict is_hamiltonian(const GeneratingSequence& seq, GraphKind kind);

/// The index ell of the clique-trimming step: 0 when s - r - 1 < s_1, else the
/// least ell with s_1 + ... + s_ell <= s - r - 1 < s_1 + ... + s_{ell+1}.
std::uint64_t trimming_level(const GeneratingSequence& seq, std::uint64_t surplus);

/// Sequence of the reduced threshold graph G* obtained by dropping the s - r
/// lowest-degree clique vertices. Requires r >= 2 and that the clique-size
/// rejection does not fire; throws ReductionNotApplicable otherwise.
GeneratingSequence reduce_to_g_star(const GeneratingSequence& seq);

/// Inequality family S_q over the class degree lists of a balanced chain graph:
/// d_j >= j + 1 for j <= q and e_j >= j + 1 for j <= |U| - 1 - q.
/// Test oracle only; not on the decision path.
bool check_sq_system(std::span<const std::uint64_t> d, std::span<const std::uint64_t> e,
                     std::uint64_t q);

inline bool check_sq_system(const ChainDegrees& degrees, std::uint64_t q) {
    return check_sq_system(degrees.u, degrees.v, q);
}

}  // namespace thg

#endif
