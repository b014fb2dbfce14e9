#include "thg/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <queue>

#include "thg/error.hpp"
#include "thg/graph.hpp"

namespace thg {

namespace {

struct BitRun {
    bool one;
    std::uint64_t count;
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw Error(ErrorCode::ParseError, "sequence length overflows 64 bits");
    return a + b;
}

void push_run(std::vector<BitRun>& runs, bool one, std::uint64_t count) {
    if (count == 0) return;
    if (!runs.empty() && runs.back().one == one)
        runs.back().count = checked_add(runs.back().count, count);
    else
        runs.push_back({one, count});
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<BitRun> parse() {
        std::vector<BitRun> runs;
        skip_space();
        if (at_end()) fail("empty input");
        while (!at_end()) {
            if (peek() == '(') {
                ++pos_;
                skip_space();
                if (!at_end() && peek() == ')') fail("empty group");
                while (true) {
                    skip_space();
                    if (at_end()) fail("unterminated group");
                    if (peek() == ')') {
                        ++pos_;
                        break;
                    }
                    parse_run(runs);
                }
            } else {
                parse_run(runs);
            }
            skip_space();
        }
        return runs;
    }

private:
    void parse_run(std::vector<BitRun>& runs) {
        char c = peek();
        if (c != '0' && c != '1') fail(std::string("unexpected character '") + c + "'");
        ++pos_;
        std::uint64_t count = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_space();
            count = parse_uint();
            if (count == 0) fail("zero exponent");
        }
        push_run(runs, c == '1', count);
    }

    std::uint64_t parse_uint() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
        std::uint64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            auto digit = static_cast<std::uint64_t>(peek() - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("exponent overflows 64 bits");
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& message) const {
        throw Error(ErrorCode::ParseError, message + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GeneratingSequence::GeneratingSequence(std::vector<Run> runs) : runs_(std::move(runs)) {
    for (const Run& run : runs_) {
        if (run.zeros == 0 || run.ones == 0)
            throw Error(ErrorCode::ParseError, "runs must be positive");
        total_zeros_ = checked_add(total_zeros_, run.zeros);
        total_ones_ = checked_add(total_ones_, run.ones);
    }
    checked_add(total_zeros_, total_ones_);
}

GeneratingSequence GeneratingSequence::from_runs(std::vector<Run> runs) {
    if (runs.empty()) throw Error(ErrorCode::ParseError, "sequence needs at least one block");
    return GeneratingSequence(std::move(runs));
}

GeneratingSequence GeneratingSequence::canonicalize(std::span<const Run> blocks) {
    std::vector<BitRun> bits;
    for (const Run& block : blocks) {
        push_run(bits, false, block.zeros);
        push_run(bits, true, block.ones);
    }
    if (bits.empty() || bits.front().one || !bits.back().one)
        throw Error(ErrorCode::ParseError, "canonical sequence must start with 0 and end with 1");
    std::vector<Run> runs;
    runs.reserve(bits.size() / 2);
    for (std::size_t k = 0; k < bits.size(); k += 2) runs.push_back({bits[k].count, bits[k + 1].count});
    return GeneratingSequence(std::move(runs));
}

ParsedSequence parse_sequence(std::string_view text, ParseOptions options) {
    std::vector<BitRun> bits = Parser(text).parse();

    // b_1 does not affect the graph: rewrite a leading 1 as 0.
    if (bits.front().one) {
        std::vector<BitRun> flipped{{false, 1}};
        push_run(flipped, true, bits.front().count - 1);
        for (std::size_t k = 1; k < bits.size(); ++k) push_run(flipped, bits[k].one, bits[k].count);
        bits = std::move(flipped);
    }

    ParsedSequence result;
    if (!bits.back().one) {
        if (!options.allow_trailing_zeros)
            throw Error(ErrorCode::DisconnectedSequence,
                        "sequence ends with " + std::to_string(bits.back().count) + " zero(s)");
        result.isolated_vertices = bits.back().count;
        bits.pop_back();
    }
    if (bits.empty()) return result;

    std::vector<Run> runs;
    for (std::size_t k = 0; k < bits.size(); k += 2) runs.push_back({bits[k].count, bits[k + 1].count});
    result.sequence = GeneratingSequence::from_runs(std::move(runs));
    return result;
}

GeneratingSequence parse_sequence(std::string_view text) {
    return parse_sequence(text, ParseOptions{}).sequence;
}

std::string to_string(const GeneratingSequence& seq) {
    std::string out;
    auto append = [&out](char bit, std::uint64_t count) {
        if (!out.empty()) out += ' ';
        out += bit;
        if (count != 1) out += '^' + std::to_string(count);
    };
    for (const Run& run : seq.runs()) {
        append('0', run.zeros);
        append('1', run.ones);
    }
    return out;
}

std::string to_binary_word(const GeneratingSequence& seq) {
    std::string out;
    for (const Run& run : seq.runs()) {
        out.append(run.zeros, '0');
        out.append(run.ones, '1');
    }
    return out;
}

namespace {

std::vector<Side> bipartition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> colour(n, -1);
    for (Vertex start = 0; start < n; ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        std::queue<Vertex> queue;
        queue.push(start);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            for (Vertex y : g.neighbors(x)) {
                if (colour[y] == -1) {
                    colour[y] = 1 - colour[x];
                    queue.push(y);
                } else if (colour[y] == colour[x]) {
                    throw Error(ErrorCode::NotNested, "graph is not bipartite");
                }
            }
        }
    }
    std::vector<Side> sides(n);
    for (std::size_t v = 0; v < n; ++v) sides[v] = colour[v] == 0 ? Side::U : Side::V;
    return sides;
}

GeneratingSequence from_word(const std::string& word) {
    if (word.empty() || word.back() != '1')
        throw Error(ErrorCode::DisconnectedSequence, "graph has an isolated vertex");
    return parse_sequence(word);
}

// Peels the last-added vertex off repeatedly. In a threshold graph it is
// either isolated or dominating among the remaining vertices; in a chain
// graph it is an isolated U vertex or a V vertex adjacent to every remaining
// U vertex.
GeneratingSequence peel(const Graph& g, const std::vector<Side>* sides) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw Error(ErrorCode::NotNested, "empty graph");
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    std::size_t remaining = n;
    std::size_t remaining_u = 0;
    if (sides)
        remaining_u = static_cast<std::size_t>(std::count(sides->begin(), sides->end(), Side::U));

    std::string reversed;
    reversed.reserve(n);
    while (remaining > 1) {
        std::optional<Vertex> pick;
        char symbol = '0';
        for (Vertex v = 0; v < n && !pick; ++v) {
            if (removed[v]) continue;
            bool dominating = sides ? ((*sides)[v] == Side::V && remaining_u > 0 && degree[v] == remaining_u)
                                    : degree[v] == remaining - 1;
            if (dominating) {
                pick = v;
                symbol = '1';
            }
        }
        for (Vertex v = 0; v < n && !pick; ++v) {
            if (removed[v]) continue;
            bool isolated = degree[v] == 0 && (!sides || (*sides)[v] == Side::U);
            if (isolated) pick = v;
        }
        if (!pick) throw Error(ErrorCode::NotNested, "neighbourhoods are not totally ordered by inclusion");
        removed[*pick] = true;
        --remaining;
        if (sides && (*sides)[*pick] == Side::U) --remaining_u;
        for (Vertex y : g.neighbors(*pick))
            if (!removed[y]) --degree[y];
        reversed += symbol;
    }
    reversed += '0';
    return from_word(std::string(reversed.rbegin(), reversed.rend()));
}

}  // namespace

GeneratingSequence recover_sequence(const Graph& g) {
    switch (g.kind()) {
        case GraphKind::Threshold:
            return peel(g, nullptr);
        case GraphKind::Chain: {
            if (!g.sides().empty()) {
                std::vector<Side> sides(g.sides().begin(), g.sides().end());
                for (auto [u, v] : g.edges())
                    if (sides[u] == sides[v]) throw Error(ErrorCode::NotNested, "edge inside a colour class");
                return peel(g, &sides);
            }
            std::vector<Side> sides = bipartition(g);
            return peel(g, &sides);
        }
        case GraphKind::General:
            break;
    }
    throw Error(ErrorCode::NotNested, "graph kind must be threshold or chain");
}

}  // namespace thg
