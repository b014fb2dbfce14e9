#include <doctest.h>

#include <algorithm>
#include <string>

#include "support/naive.hpp"
#include "thg/error.hpp"
#include "thg/graph.hpp"
#include "thg/graph_format.hpp"
#include "thg/oracle.hpp"

using namespace thg;

namespace {

naive::Matrix matrix_of(const Graph& g) { return naive::from_edges(g.vertex_count(), g.edges()); }

}  // namespace

TEST_CASE("materialize small graphs") {
    const Graph k3 = materialize_threshold(GeneratingSequence::from_runs({{1, 2}}));
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    const Graph c4 = materialize_chain(GeneratingSequence::from_runs({{2, 2}}));
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK_FALSE(c4.adjacent(0, 1));
    CHECK_FALSE(c4.adjacent(2, 3));

    const auto remark = GeneratingSequence::from_runs({{2, 2}, {2, 3}});
    const Graph g = materialize_threshold(remark);
    CHECK(g.vertex_count() == 9);
    const DegreeProfile p = degree_profile(remark);
    CHECK(p.s == 6);
    CHECK(p.r == 3);
}

TEST_CASE("cells follow insertion order") {
    const Graph g = materialize_chain(GeneratingSequence::from_runs({{2, 1}, {3, 2}}));
    REQUIRE(g.cells().size() == 2);
    CHECK(g.cells()[0].zeros == VertexRange{0, 2});
    CHECK(g.cells()[0].ones == VertexRange{2, 3});
    CHECK(g.cells()[1].zeros == VertexRange{3, 6});
    CHECK(g.cells()[1].ones == VertexRange{6, 8});
    CHECK(g.sides()[2] == Side::V);
    CHECK(g.sides()[5] == Side::U);
}

TEST_CASE("materialization matches the construction rule for every word up to n = 12") {
    for (std::size_t n = 2; n <= 12; ++n) {
        for (const GeneratingSequence& seq : connected_sequences(n)) {
            const std::string word = to_binary_word(seq);
            const Graph thr = materialize_threshold(seq);
            const Graph chain = materialize_chain(seq);
            CHECK(matrix_of(thr) == naive::from_word(word, true));
            CHECK(matrix_of(chain) == naive::from_word(word, false));
            CHECK(chain.edge_count() == chain_edge_count(seq));

            // Chain graph = threshold graph minus the clique on V.
            Graph stripped = thr;
            for (const Cell& a : thr.cells())
                for (const Cell& b : thr.cells())
                    for (Vertex u = a.ones.begin; u < a.ones.end; ++u)
                        for (Vertex v = b.ones.begin; v < b.ones.end; ++v)
                            if (u < v) stripped = stripped.without_edge(u, v);
            CHECK(stripped.edges() == chain.edges());
        }
    }
}

TEST_CASE("threshold graphs have no induced 2K2, P4 or C4") {
    for (std::size_t n = 4; n <= 10; ++n)
        for (const GeneratingSequence& seq : connected_sequences(n))
            CHECK_FALSE(naive::has_forbidden_induced(matrix_of(materialize_threshold(seq))));
    // and the checker does see them
    const std::vector<Edge> p4{{0, 1}, {1, 2}, {2, 3}};
    CHECK(naive::has_forbidden_induced(matrix_of(Graph::from_edges(4, p4))));
}

TEST_CASE("chain neighbourhoods are nested within each class") {
    const Graph g = materialize_chain(GeneratingSequence::from_runs({{3, 4}, {10, 6}, {5, 3}, {3, 8}}));
    std::vector<Vertex> order(g.vertex_count());
    for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
    for (Side side : {Side::U, Side::V}) {
        std::vector<Vertex> cls;
        for (Vertex v : order)
            if (g.sides()[v] == side) cls.push_back(v);
        std::sort(cls.begin(), cls.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
        for (std::size_t k = 0; k + 1 < cls.size(); ++k) {
            auto small = g.neighbors(cls[k]);
            auto large = g.neighbors(cls[k + 1]);
            CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
        }
    }
}

TEST_CASE("degree profile closed form") {
    SUBCASE("t1 != 1") {
        const DegreeProfile p = degree_profile(GeneratingSequence::from_runs({{2, 2}, {2, 3}}));
        CHECK(p.d == std::vector<std::uint64_t>{3, 3, 5});
        CHECK(p.e == std::vector<std::uint64_t>{0, 1, 1, 3, 3, 3});
        CHECK(p.r == 3);
        CHECK(p.s == 6);
        CHECK_FALSE(p.t1_is_one);
    }
    SUBCASE("complete graph") {
        const DegreeProfile p = degree_profile(GeneratingSequence::from_runs({{1, 4}}));
        CHECK(p.d.empty());
        CHECK(p.e == std::vector<std::uint64_t>(5, 0));
        CHECK(p.r == 0);
        CHECK(p.s == 5);
        CHECK(p.t1_is_one);
    }
    SUBCASE("t1 = 1 with later levels") {
        const DegreeProfile p = degree_profile(GeneratingSequence::from_runs({{1, 2}, {2, 1}, {1, 3}}));
        CHECK(p.d == std::vector<std::uint64_t>{3, 4, 4});
        CHECK(p.e == std::vector<std::uint64_t>{0, 0, 0, 2, 3, 3, 3});
    }
    SUBCASE("larger instance") {
        const DegreeProfile p = degree_profile(GeneratingSequence::from_runs({{3, 4}, {10, 6}, {5, 11}, {3, 8}}));
        CHECK(p.r == 20);
        CHECK(p.s == 30);
        CHECK(p.d.size() == 20);
        CHECK(p.e.size() == 30);
        CHECK(std::is_sorted(p.d.begin(), p.d.end()));
        CHECK(std::is_sorted(p.e.begin(), p.e.end()));
    }
}

TEST_CASE("closed-form degree profile equals counted profile up to n = 12") {
    std::size_t with_t1_one = 0;
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 12; ++n) {
        for (const GeneratingSequence& seq : connected_sequences(n)) {
            const DegreeProfile closed = degree_profile(seq);
            CHECK(closed == counted_degree_profile(seq));
            CHECK(closed.r == seq.total_zeros() - 1);
            CHECK(closed.s == seq.total_ones() + 1);
            with_t1_one += closed.t1_is_one;
            ++checked;
        }
    }
    CHECK(with_t1_one > 0);
    CHECK(with_t1_one < checked);
}

TEST_CASE("chain class degrees by formula and by counting") {
    for (std::size_t n = 2; n <= 10; ++n) {
        for (const GeneratingSequence& seq : connected_sequences(n)) {
            const ChainDegrees a = chain_degrees(seq);
            const ChainDegrees b = chain_degrees(materialize_chain(seq));
            CHECK(a.u == b.u);
            CHECK(a.v == b.v);
        }
    }
}

TEST_CASE("edge removal and relabeling") {
    const Graph c4 = materialize_chain(GeneratingSequence::from_runs({{2, 2}}));
    const Graph p4 = c4.without_edge(0, 2);
    CHECK(p4.edge_count() == 3);
    CHECK_FALSE(p4.adjacent(2, 0));
    CHECK(p4.cells().empty());
    CHECK(p4.sides().size() == 4);
    CHECK(c4.without_edge(0, 1).edge_count() == 4);

    const std::vector<Vertex> perm{3, 2, 1, 0};
    const Graph r = c4.relabeled(perm);
    CHECK(r.adjacent(3, 1));
    CHECK(r.sides()[3] == Side::U);
    CHECK(r.sides()[0] == Side::V);
}

TEST_CASE("from_edges validates and deduplicates") {
    const std::vector<Edge> dup{{0, 1}, {1, 0}, {1, 2}};
    CHECK(Graph::from_edges(3, dup).edge_count() == 2);
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), Error);
    const std::vector<Edge> out_of_range{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(3, out_of_range), Error);
}

TEST_CASE("export formats") {
    const Graph c4 = materialize_chain(GeneratingSequence::from_runs({{2, 2}}));
    const std::string edges = export_graph(c4, ExportFormat::EdgeList);
    CHECK(edges == "0 2\n0 3\n1 2\n1 3\n");

    const Graph g = materialize_threshold(GeneratingSequence::from_runs({{2, 2}, {2, 3}}));
    const std::string dot = export_graph(g, ExportFormat::Dot);
    CHECK(dot.rfind("graph G {", 0) == 0);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.find("->") == std::string::npos);
    // every node appears in exactly one rank group
    std::size_t ranked = 0;
    for (std::size_t pos = dot.find("rank=same"); pos != std::string::npos; pos = dot.find("rank=same", pos + 1)) {
        const std::size_t line2 = dot.find('\n', dot.find('\n', pos) + 1);
        const std::string body = dot.substr(dot.find('\n', pos) + 1, line2 - dot.find('\n', pos) - 1);
        ranked += static_cast<std::size_t>(std::count(body.begin(), body.end(), ';'));
    }
    CHECK(ranked == 9);
    CHECK(std::count(dot.begin(), dot.end(), '-') == 2 * static_cast<long>(g.edge_count()));
}

TEST_CASE("json export round-trips") {
    for (std::size_t n = 3; n <= 8; ++n) {
        for (const GeneratingSequence& seq : connected_sequences(n)) {
            for (GraphKind kind : {GraphKind::Threshold, GraphKind::Chain}) {
                const Graph g = materialize(seq, kind);
                const Graph back = graph_from_json(export_graph(g, ExportFormat::Json));
                CHECK(back.edges() == g.edges());
                CHECK(back.kind() == kind);
                CHECK(back.cells().size() == seq.levels());
            }
        }
    }
    CHECK_THROWS_AS(graph_from_json("{\"n\": 3}"), Error);
    CHECK_THROWS_AS(graph_from_json("not json"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"n":4,"kind":"chain","runs":[[2,2]],"edges":[[0,2]]})"), Error);
    const Graph general = graph_from_json(R"({"n":3,"kind":"general","runs":[],"edges":[[0,1],[1,2]]})");
    CHECK(general.edge_count() == 2);
}
