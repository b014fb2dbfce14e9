#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thg/bench.hpp"
#include "thg/error.hpp"
#include "thg/extremal.hpp"
#include "thg/graph.hpp"
#include "thg/graph_format.hpp"
#include "thg/hamiltonicity.hpp"
#include "thg/oracle.hpp"
#include "thg/sequence.hpp"
#include "thg/verification.hpp"

namespace thg::cli {

namespace {

std::string join(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::uint64_t v : values) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

std::string describe(const Verdict& v, GraphKind kind, const GeneratingSequence& seq) {
    std::ostringstream line;
    line << to_string(kind) << " \"" << to_string(seq) << "\": " << (v.hamiltonian ? "hamiltonian" : "not hamiltonian")
         << " (" << to_string(v.reason) << ") r=" << v.r << " s=" << v.s << " T=" << v.total_zeros
         << " S=" << v.total_ones;
    if (v.ell) line << " ell=" << *v.ell;
    if (v.failed_j) line << " failed_j=" << *v.failed_j;
    if (v.witness) {
        line << " witness=";
        for (std::size_t k = 0; k < v.witness->size(); ++k) line << (k ? "," : "") << (*v.witness)[k];
    }
    return line.str();
}

struct Options {
    std::string kind_text;
    std::string seq_text;
    std::string format_text = "edgelist";
    std::string verify_kind = "both";
    bool witness = false;
    bool json = false;
    std::size_t cap = 20;
    bool cap_given = false;
    std::size_t order = 0;
    std::size_t max_n = 12;
    std::size_t threads = 0;
    std::size_t blocks = 100000;
    std::size_t repeat = 21;
};

int cmd_check(const Options& o, std::ostream& out) {
    const GraphKind kind = parse_graph_kind(o.kind_text);
    if (kind == GraphKind::General) throw Error(ErrorCode::ParseError, "check needs threshold or chain");
    const GeneratingSequence seq = parse_sequence(o.seq_text);
    Verdict v = is_hamiltonian(seq, kind);
    if (o.witness && v.hamiltonian) {
        if (auto cycle = find_hamilton_cycle(materialize(seq, kind))) v.witness = cycle->vertices;
    }
    out << (o.json ? to_json(v) : describe(v, kind, seq)) << '\n';
    return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    const GeneratingSequence seq = parse_sequence(o.seq_text);
    const GeneratingSequence reduced = reduce_to_g_star(seq);
    if (o.json) {
        nlohmann::ordered_json doc;
        doc["input"] = to_string(seq);
        doc["reduced"] = to_string(reduced);
        doc["ell"] = trimming_level(seq, seq.total_ones() + 1 - seq.total_zeros());
        out << doc.dump() << '\n';
    } else {
        out << to_string(reduced) << '\n';
    }
    return kExitOk;
}

int cmd_degrees(const Options& o, std::ostream& out) {
    const GeneratingSequence seq = parse_sequence(o.seq_text);
    const DegreeProfile p = degree_profile(seq);
    if (o.json) {
        nlohmann::ordered_json doc;
        doc["r"] = p.r;
        doc["s"] = p.s;
        doc["T"] = p.total_zeros;
        doc["S"] = p.total_ones;
        doc["t1_is_one"] = p.t1_is_one;
        doc["d"] = p.d;
        doc["e"] = p.e;
        out << doc.dump() << '\n';
    } else {
        out << "r=" << p.r << " s=" << p.s << " T=" << p.total_zeros << " S=" << p.total_ones
            << " t1_is_one=" << (p.t1_is_one ? "true" : "false") << " d=[" << join(p.d) << "] e=[" << join(p.e) << "]\n";
    }
    return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
    const GraphKind kind = parse_graph_kind(o.kind_text);
    const GeneratingSequence seq = parse_sequence(o.seq_text);
    CountOptions options{.cap = o.cap, .override_cap = o.cap_given};
    out << count_hamilton_cycles(materialize(seq, kind), options) << '\n';
    return kExitOk;
}

int cmd_min_chain(const Options& o, std::ostream& out) {
    const GeneratingSequence seq = min_cycle_chain_graph(o.order);
    out << to_string(seq);
    if (o.order <= o.cap)
        out << "  cycles=" << count_hamilton_cycles(materialize_chain(seq), {.cap = o.cap, .override_cap = o.cap_given});
    else
        out << "  cycles=2^" << (o.order / 2 - 2) << " (not counted, order above cap)";
    out << '\n';
    return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err) {
    const auto rows = census(o.order, {.cap = o.cap, .override_cap = o.cap_given});
    out << census_csv(rows);
    if (rows.empty()) return kExitOk;
    const auto minimum = rows.front().cycle_count;
    const auto at_minimum = std::count_if(rows.begin(), rows.end(), [&](const CensusRow& r) { return r.cycle_count == minimum; });
    const GeneratingSequence expected = min_cycle_chain_graph(o.order);
    if (at_minimum != 1 || !(rows.front().sequence == expected)) {
        err << "minimum count " << minimum << " attained by " << at_minimum << " sequence(s); expected only \""
            << to_string(expected) << "\"\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out) {
    const GraphKind kind = parse_graph_kind(o.kind_text);
    const GeneratingSequence seq = parse_sequence(o.seq_text);
    out << export_graph(materialize(seq, kind), parse_export_format(o.format_text));
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    VerifyOptions options;
    options.max_n = o.max_n;
    options.threads = o.threads;
    if (o.verify_kind == "threshold") {
        options.chain = false;
    } else if (o.verify_kind == "chain") {
        options.threshold = false;
    } else if (o.verify_kind != "both") {
        throw Error(ErrorCode::ParseError, "--kind must be both, threshold or chain");
    }
    const VerifyReport report = verify_all(options);
    out << format_report(report);
    if (!report.ok()) {
        err << report.mismatches.size() << " disagreement(s) between the linear decisions and the oracle\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
    using std::chrono::duration;
    for (GraphKind kind : {GraphKind::Threshold, GraphKind::Chain}) {
        const GeneratingSequence seq = kind == GraphKind::Threshold ? synthetic_threshold_sequence(o.blocks)
                                                                    : synthetic_chain_sequence(o.blocks);
        const Timing t = time_decision(seq, kind, o.repeat);
        out << to_string(kind) << " h=" << seq.levels() << " n=" << seq.order()
            << " best_ms=" << duration<double, std::milli>(t.best).count()
            << " median_ms=" << duration<double, std::milli>(t.median).count() << " work=" << t.verdict.work
            << " hamiltonian=" << (t.verdict.hamiltonian ? "true" : "false") << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hamiltonicity of threshold and chain graphs from generating sequences", "thg"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Decide Hamiltonicity in time linear in the number of blocks");
    check->add_option("kind", o.kind_text, "threshold or chain")->required();
    check->add_option("sequence", o.seq_text, "generating sequence, e.g. \"0^2 1^2 0^2 1^3\"")->required();
    check->add_flag("--witness", o.witness, "attach a Hamilton cycle found by brute force");
    check->add_flag("--json", o.json, "print the verdict as JSON");

    auto* reduce = app.add_subcommand("reduce", "Print the sequence of the trimmed threshold graph G*");
    reduce->add_option("sequence", o.seq_text)->required();
    reduce->add_flag("--json", o.json);

    auto* degrees = app.add_subcommand("degrees", "Print the closed-form degree profile");
    degrees->add_option("sequence", o.seq_text)->required();
    degrees->add_flag("--json", o.json);

    auto* count = app.add_subcommand("count", "Count Hamilton cycles by brute force");
    count->add_option("sequence", o.seq_text)->required();
    count->add_option("--kind", o.kind_text, "threshold or chain")->required();
    auto* count_cap = count->add_option("--cap", o.cap, "largest order to attempt");

    auto* min_chain = app.add_subcommand("min-chain", "Chain graph with the fewest Hamilton cycles of order n");
    min_chain->add_option("n", o.order)->required();
    auto* min_cap = min_chain->add_option("--cap", o.cap, "largest order to count");

    auto* census_cmd = app.add_subcommand("census", "CSV of all Hamiltonian chain graphs of order n with cycle counts");
    census_cmd->add_option("n", o.order)->required();
    auto* census_cap = census_cmd->add_option("--cap", o.cap, "largest order to count");

    auto* export_cmd = app.add_subcommand("export", "Serialize the materialized graph");
    export_cmd->add_option("sequence", o.seq_text)->required();
    export_cmd->add_option("--kind", o.kind_text, "threshold or chain")->required();
    export_cmd->add_option("--format", o.format_text, "dot, edgelist or json");

    auto* verify = app.add_subcommand("verify", "Cross-check both decisions against brute force for every n <= max-n");
    verify->add_option("--max-n", o.max_n)->required();
    verify->add_option("--kind", o.verify_kind, "both, threshold or chain");
    verify->add_option("--threads", o.threads, "worker threads, 0 for all cores");

    auto* bench = app.add_subcommand("bench", "Time both decisions on synthetic sequences with H blocks");
    bench->set_help_flag("--help", "Print this help message and exit");
    bench->add_option("--h", o.blocks, "number of blocks")->check(CLI::PositiveNumber);
    bench->add_option("--repeat", o.repeat, "timed repetitions")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    o.cap_given = count_cap->count() + min_cap->count() + census_cap->count() > 0;

    try {
        if (*check) return cmd_check(o, out);
        if (*reduce) return cmd_reduce(o, out);
        if (*degrees) return cmd_degrees(o, out);
        if (*count) return cmd_count(o, out);
        if (*min_chain) return cmd_min_chain(o, out);
        if (*census_cmd) return cmd_census(o, out, err);
        if (*export_cmd) return cmd_export(o, out);
        if (*verify) return cmd_verify(o, out, err);
        if (*bench) return cmd_bench(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace thg::cli
