#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "support/naive.hpp"
#include "thg/bench.hpp"
#include "thg/error.hpp"
#include "thg/hamiltonicity.hpp"
#include "thg/oracle.hpp"

using namespace thg;

namespace {

GeneratingSequence seq_of(std::vector<Run> runs) { return GeneratingSequence::from_runs(std::move(runs)); }

ErrorCode error_code(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("large threshold example") {
    const Verdict v = is_hamiltonian_threshold(parse_sequence("0^3 1^4 0^10 1^6 0^5 1^11 0^3 1^8"));
    CHECK(v.hamiltonian);
    CHECK(v.reason == Reason::InequalitiesHold);
    CHECK(v.r == 20);
    CHECK(v.s == 30);
    CHECK(v.total_zeros == 21);
    CHECK(v.total_ones == 29);
    REQUIRE(v.ell);
    CHECK(*v.ell == 1);
    CHECK_FALSE(v.failed_j);
}

TEST_CASE("large chain example fails at j = 2") {
    const Verdict v = is_hamiltonian_chain(parse_sequence("0^3 1^4 0^10 1^6 0^5 1^3 0^3 1^8"));
    CHECK_FALSE(v.hamiltonian);
    CHECK(v.r == 21);
    CHECK(v.s == 21);
    REQUIRE(v.failed_j);
    CHECK(*v.failed_j == 2);
    // t_1 = 3 < s_1 + 1 = 5 also trips the pendant test, which takes precedence
    CHECK(v.reason == Reason::PendantStructure);
}

TEST_CASE("complete split graphs") {
    for (std::uint64_t t = 1; t <= 11; ++t) {
        for (std::uint64_t s = 1; t + s <= 12; ++s) {
            const auto seq = seq_of({{t, s}});
            const bool rule = s >= t && !(t == 1 && s == 1);
            CAPTURE(t);
            CAPTURE(s);
            CHECK(is_hamiltonian_threshold(seq).hamiltonian == rule);
            CHECK(oracle_hamiltonian(materialize_threshold(seq)) == rule);
        }
    }
}

TEST_CASE("small cases") {
    CHECK(is_hamiltonian_threshold(seq_of({{1, 1}})).reason == Reason::TooFewVertices);
    CHECK(is_hamiltonian_chain(seq_of({{1, 1}})).reason == Reason::TooFewVertices);

    const Verdict k3 = is_hamiltonian_threshold(seq_of({{1, 2}}));
    CHECK(k3.hamiltonian);
    CHECK(k3.reason == Reason::SmallCaseR0);

    const Verdict r1 = is_hamiltonian_threshold(seq_of({{1, 1}, {1, 2}}));
    CHECK(r1.reason == Reason::SmallCaseR1);
    CHECK(r1.hamiltonian);

    // 0^2 1^2: the co-clique vertex outside the clique sees both V vertices
    CHECK(is_hamiltonian_threshold(seq_of({{2, 2}})).hamiltonian);
    // 0 1 0 1 is a triangle with a pendant vertex
    const Verdict paw = is_hamiltonian_threshold(seq_of({{1, 1}, {1, 1}}));
    CHECK(paw.reason == Reason::SmallCaseR1);
    CHECK_FALSE(paw.hamiltonian);
}

TEST_CASE("clique rejections") {
    CHECK(is_hamiltonian_threshold(seq_of({{4, 2}})).reason == Reason::CliqueTooSmall);
    CHECK(is_hamiltonian_threshold(seq_of({{3, 2}})).reason == Reason::ZeroDegreeInClique);
    // t_1 = 1: U_1 and V_1 together form the low end of the clique
    CHECK(is_hamiltonian_threshold(seq_of({{1, 2}, {2, 1}})).reason == Reason::ZeroDegreeInClique);
}

TEST_CASE("degree-one vertex after the trimming level is rejected") {
    // 0^2 1^2 0 1: the last zero has degree 1
    const Verdict v = is_hamiltonian_threshold(seq_of({{2, 2}, {1, 1}}));
    CHECK_FALSE(v.hamiltonian);
    CHECK_FALSE(oracle_hamiltonian(materialize_threshold(seq_of({{2, 2}, {1, 1}}))));
}

TEST_CASE("ell + 1 = h accepts") {
    const Verdict v = is_hamiltonian_threshold(seq_of({{2, 2}, {2, 3}}));
    CHECK(v.reason == Reason::EllPlusOneEqualsH);
    CHECK(v.hamiltonian);
    CHECK(*v.ell == 1);
}

TEST_CASE("chain reasons") {
    CHECK(is_hamiltonian_chain(seq_of({{2, 3}})).reason == Reason::UnequalClasses);
    const Verdict kmm = is_hamiltonian_chain(seq_of({{3, 3}}));
    CHECK(kmm.hamiltonian);
    CHECK(kmm.reason == Reason::InequalitiesHold);
    CHECK(is_hamiltonian_chain(seq_of({{2, 2}, {1, 1}})).reason == Reason::PendantStructure);
    const Verdict inner = is_hamiltonian_chain(seq_of({{2, 1}, {1, 2}, {2, 1}, {1, 2}}));
    CHECK(inner.reason == Reason::InequalityFailed);
    CHECK(*inner.failed_j == 3);
}

TEST_CASE("reasons agree with the verdict and all occur") {
    std::map<Reason, std::set<bool>> seen;
    for (std::size_t n = 2; n <= 12; ++n) {
        for (const GeneratingSequence& seq : connected_sequences(n)) {
            for (const Verdict& v : {is_hamiltonian_threshold(seq), is_hamiltonian_chain(seq)}) {
                seen[v.reason].insert(v.hamiltonian);
                switch (v.reason) {
                    case Reason::InequalitiesHold:
                    case Reason::EllPlusOneEqualsH: CHECK(v.hamiltonian); break;
                    case Reason::SmallCaseR0:
                    case Reason::SmallCaseR1: break;
                    default: CHECK_FALSE(v.hamiltonian);
                }
                if (v.reason == Reason::InequalityFailed) CHECK(v.failed_j.has_value());
            }
        }
    }
    CHECK(seen.size() == 10);
    CHECK(seen[Reason::SmallCaseR0].size() == 1);  // r = 0 with n >= 3 always has s >= 3
    CHECK(seen[Reason::SmallCaseR1].size() == 2);
}

TEST_CASE("decisions agree with the naive oracle up to n = 10") {
    for (std::size_t n = 3; n <= 10; ++n) {
        for (const std::string& word : naive::connected_words(n)) {
            const GeneratingSequence seq = parse_sequence(word);
            CAPTURE(word);
            CHECK(is_hamiltonian_threshold(seq).hamiltonian == naive::hamiltonian(naive::from_word(word, true)));
            CHECK(is_hamiltonian_chain(seq).hamiltonian == naive::hamiltonian(naive::from_word(word, false)));
        }
    }
}

TEST_CASE("reduction to G*") {
    CHECK(reduce_to_g_star(seq_of({{2, 2}, {2, 3}})) == seq_of({{3, 3}}));
    CHECK(reduce_to_g_star(parse_sequence("0^3 1^4 0^10 1^6 0^5 1^11 0^3 1^8")) ==
          seq_of({{12, 1}, {5, 11}, {3, 8}}));
    // ell = 0: only the first block shrinks
    CHECK(reduce_to_g_star(seq_of({{3, 5}})) == seq_of({{2, 2}}));
    CHECK(error_code([] { reduce_to_g_star(seq_of({{2, 3}})); }) == ErrorCode::ReductionNotApplicable);
    CHECK(error_code([] { reduce_to_g_star(seq_of({{4, 2}})); }) == ErrorCode::ReductionNotApplicable);
}

TEST_CASE("G* is balanced and preserves hamiltonicity up to n = 12") {
    std::size_t applied = 0;
    for (std::size_t n = 3; n <= 12; ++n) {
        for (const GeneratingSequence& seq : connected_sequences(n)) {
            GeneratingSequence reduced;
            try {
                reduced = reduce_to_g_star(seq);
            } catch (const Error&) {
                continue;
            }
            ++applied;
            CHECK(reduced.total_zeros() == reduced.total_ones());
            CHECK(oracle_hamiltonian(materialize_threshold(reduced)) == oracle_hamiltonian(materialize_threshold(seq)));
        }
    }
    CHECK(applied > 100);
}

TEST_CASE("trimming level") {
    const auto seq = parse_sequence("0^3 1^4 0^10 1^6 0^5 1^11 0^3 1^8");
    CHECK(trimming_level(seq, 3) == 0);
    CHECK(trimming_level(seq, 4) == 1);
    CHECK(trimming_level(seq, 9) == 1);
    CHECK(trimming_level(seq, 10) == 2);
    CHECK(trimming_level(seq, 29) == 4);
}

TEST_CASE("S_q system") {
    const std::vector<std::uint64_t> c4{2, 2};
    CHECK(check_sq_system(c4, c4, 0));
    CHECK(check_sq_system(c4, c4, 1));
    const std::vector<std::uint64_t> p4{1, 2};
    CHECK_FALSE(check_sq_system(p4, p4, 0));
    CHECK_FALSE(check_sq_system(p4, p4, 1));
    CHECK(error_code([&] { check_sq_system(c4, c4, 2); }) == ErrorCode::QOutOfRange);
    const std::vector<std::uint64_t> three{1, 2, 3};
    CHECK(error_code([&] { check_sq_system(c4, three, 0); }) == ErrorCode::UnbalancedClasses);
}

TEST_CASE("S_q is all-or-nothing and matches the oracle up to n = 12") {
    for (std::size_t n = 4; n <= 12; n += 2) {
        for (const GeneratingSequence& seq : connected_sequences(n)) {
            if (seq.total_zeros() != seq.total_ones()) continue;
            const ChainDegrees deg = chain_degrees(seq);
            const bool truth = oracle_hamiltonian(materialize_chain(seq));
            for (std::uint64_t q = 0; q < deg.u.size(); ++q) CHECK(check_sq_system(deg, q) == truth);
        }
    }
}

TEST_CASE("json verdict") {
    const auto doc = nlohmann::json::parse(to_json(is_hamiltonian_threshold(seq_of({{2, 2}, {2, 3}}))));
    CHECK(doc["hamiltonian"] == true);
    CHECK(doc["r"] == 3);
    CHECK(doc["s"] == 6);
    CHECK(doc["T"] == 4);
    CHECK(doc["S"] == 5);
    CHECK(doc["failed_j"].is_null());
    CHECK(doc["witness"].is_null());
    CHECK(doc["reason"] == "ELL_PLUS_ONE_EQUALS_H");
}

TEST_CASE("decisions reject the general kind") {
    CHECK_THROWS_AS(is_hamiltonian(seq_of({{2, 2}}), GraphKind::General), Error);
}

TEST_CASE("work grows linearly with the number of blocks") {
    for (GraphKind kind : {GraphKind::Threshold, GraphKind::Chain}) {
        const auto small = kind == GraphKind::Threshold ? synthetic_threshold_sequence(1000) : synthetic_chain_sequence(1000);
        const auto large = kind == GraphKind::Threshold ? synthetic_threshold_sequence(2000) : synthetic_chain_sequence(2000);
        const Verdict a = is_hamiltonian(small, kind);
        const Verdict b = is_hamiltonian(large, kind);
        CHECK(a.hamiltonian);
        CHECK(b.hamiltonian);
        CHECK(a.work >= 999);
        CHECK(b.work <= 2 * a.work + 2);
        CHECK(b.work >= 2 * a.work - 2);
    }
    // synthetic shapes are Hamiltonian at small h as well
    for (std::size_t h = 1; h <= 6; ++h) {
        CHECK(oracle_hamiltonian(materialize_threshold(synthetic_threshold_sequence(h))));
        CHECK(oracle_hamiltonian(materialize_chain(synthetic_chain_sequence(h))));
    }
}
