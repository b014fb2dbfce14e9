#ifndef THG_SEQUENCE_HPP
#define THG_SEQUENCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thg {

class Graph;

/// One block 0^zeros 1^ones of a generating sequence.
struct Run {
    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Canonical run-length form (0^t1 1^s1)...(0^th 1^sh) of a binary generating
/// sequence. Every t_i and s_i is positive, so the word starts with a zero and
/// ends with a one; adjacent blocks never merge.
class GeneratingSequence {
public:
    GeneratingSequence() = default;

    /// Validates and takes ownership of already-canonical runs.
    static GeneratingSequence from_runs(std::vector<Run> runs);

    /// Builds from an arbitrary list of (zeros, ones) counts where zero
    /// entries are allowed, merging neighbours into canonical form. The
    /// concatenated word must start with 0 and end with 1.
    static GeneratingSequence canonicalize(std::span<const Run> blocks);

    std::span<const Run> runs() const noexcept { return runs_; }
    std::size_t levels() const noexcept { return runs_.size(); }
    bool empty() const noexcept { return runs_.empty(); }

    const Run& operator[](std::size_t level) const { return runs_[level]; }

    std::uint64_t total_zeros() const noexcept { return total_zeros_; }
    std::uint64_t total_ones() const noexcept { return total_ones_; }
    std::uint64_t order() const noexcept { return total_zeros_ + total_ones_; }

    friend bool operator==(const GeneratingSequence& a, const GeneratingSequence& b) {
        return a.runs_ == b.runs_;
    }

private:
    explicit GeneratingSequence(std::vector<Run> runs);

    std::vector<Run> runs_;
    std::uint64_t total_zeros_ = 0;
    std::uint64_t total_ones_ = 0;
};

/// Result of a permissive parse: the connected part plus the number of
/// trailing zeros (isolated vertices) that followed it.
struct ParsedSequence {
    GeneratingSequence sequence;
    std::uint64_t isolated_vertices = 0;

    friend bool operator==(const ParsedSequence&, const ParsedSequence&) = default;
};

struct ParseOptions {
    bool allow_trailing_zeros = false;
};

// Accepted grammar, whitespace insignificant:
//   seq   := block+
//   block := group | run
//   group := '(' run+ ')'
//   run   := bit ('^' uint)?
// A raw word such as "001011" is just a sequence of exponent-free runs. A
// leading 1 is rewritten to 0 since the graph does not depend on b_1.
ParsedSequence parse_sequence(std::string_view text, ParseOptions options);
GeneratingSequence parse_sequence(std::string_view text);

/// Run-length display form, e.g. "0^2 1 0 1^2".
std::string to_string(const GeneratingSequence& seq);

/// Expanded binary word, e.g. "001011". Intended for small orders.
std::string to_binary_word(const GeneratingSequence& seq);

/// Inverse of materialization: groups vertices by neighbourhood and orders
/// the groups by degree. Throws NotNested when the graph is neither a chain
/// graph nor a threshold graph of the recorded kind.
GeneratingSequence recover_sequence(const Graph& g);

}  // namespace thg

#endif
