#include "doctest.h"

#include <set>

#include "secdom/digraph.hpp"
#include "secdom/families.hpp"
#include "secdom/io.hpp"
#include "secdom/rng.hpp"
#include "secdom/vertex_set.hpp"

using namespace secdom;

TEST_SUITE_BEGIN("digraph");

TEST_CASE("vertex set basics") {
    VertexSet s(70);
    CHECK(s.empty());
    s.add(0);
    s.add(65);
    s.add(33);
    CHECK(s.count() == 3);
    CHECK(s.contains(65));
    CHECK_FALSE(s.contains(64));
    CHECK(s.to_vector() == std::vector<int>{0, 33, 65});
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 33);
    CHECK(s.next(33) == 65);
    CHECK(s.next(65) == -1);
    CHECK(s.complement().count() == 67);
    CHECK(VertexSet::full(70).is_full());
    CHECK_THROWS_AS(s.add(70), std::out_of_range);
}

TEST_CASE("vertex set lexicographic order on sorted sequences") {
    // {1,2,5} < {1,3,4}: first differing element decides
    auto a = VertexSet::of(6, {1, 2, 5});
    auto b = VertexSet::of(6, {1, 3, 4});
    CHECK(a.lex_less(b));
    CHECK_FALSE(b.lex_less(a));
    CHECK_FALSE(a.lex_less(a));
}

TEST_CASE("build digraph") {
    auto d = Digraph::from_arcs(2, {{0, 1}});
    CHECK(d.out_degree(0) == 1);
    CHECK(d.in_degree(1) == 1);
    CHECK(d.arc_count() == 1);

    auto c3 = dicycle(3);
    CHECK(c3.arc_count() == 3);
    CHECK(c3.has_arc(2, 0));

    auto k1 = Digraph::from_arcs(1, {});
    CHECK(k1.order() == 1);

    // duplicates collapse silently
    auto dup = Digraph::from_arcs(2, {{0, 1}, {0, 1}});
    CHECK(dup.arc_count() == 1);

    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph::from_arcs(0, {}), std::invalid_argument);
}

TEST_CASE("reverse") {
    auto p3 = dipath(3);
    auto r = p3.reversed();
    CHECK(r.has_arc(2, 1));
    CHECK(r.has_arc(1, 0));
    CHECK(r.arc_count() == 2);

    auto sym = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
    CHECK(sym.reversed() == sym);

    SplitMix64 rng(7);
    for (int i = 0; i < 20; ++i) {
        auto d = random_digraph(6, 0.4, true, rng.next());
        CHECK(d.reversed().reversed() == d);
        CHECK(d.symmetric_closure() == d.reversed().symmetric_closure());
    }
}

TEST_CASE("symmetric closure") {
    auto p2 = dipath(2);
    auto s = p2.symmetric_closure();
    CHECK(s.has_arc(0, 1));
    CHECK(s.has_arc(1, 0));

    auto c3s = dicycle(3).symmetric_closure();
    CHECK(c3s.arc_count() == 6);

    // fixture: 11 arcs, no opposite pairs, so 11 underlying edges
    CHECK(separating_fixture().symmetric_closure().arc_count() == 22);
}

TEST_CASE("degree stats") {
    auto c4 = dicycle(4).degree_stats();
    CHECK(c4.min_out == 1);
    CHECK(c4.min_in == 1);
    CHECK(c4.max_out == 1);
    CHECK(c4.max_in == 1);
    CHECK(c4.min_degree == 1);

    auto p3 = dipath(3).degree_stats();
    CHECK(p3.min_out == 0);
    CHECK(p3.min_in == 0);
    CHECK(p3.min_degree == 0);

    auto fx = separating_fixture().degree_stats();
    CHECK(fx.max_out == 5);  // v4
    CHECK(fx.max_in == 3);   // v5
    CHECK(fx.min_out == 0);  // v6, v7
    CHECK(fx.min_in == 1);
    CHECK(fx.min_degree == 0);
}

TEST_CASE("symmetric arc detection") {
    CHECK_FALSE(dicycle(3).has_symmetric_arcs());
    CHECK(Digraph::from_arcs(2, {{0, 1}, {1, 0}}).has_symmetric_arcs());
    CHECK_FALSE(separating_fixture().has_symmetric_arcs());
}

TEST_CASE("degree sums match arc count") {
    SplitMix64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto d = random_digraph(7, 0.35, true, rng.next());
        int out_sum = 0, in_sum = 0;
        for (int v = 0; v < d.order(); ++v) {
            out_sum += d.out_degree(v);
            in_sum += d.in_degree(v);
        }
        CHECK(out_sum == d.arc_count());
        CHECK(in_sum == d.arc_count());
    }
}

TEST_CASE("families") {
    auto p4 = dipath(4);
    CHECK(p4.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    auto sp = spider(2);
    CHECK(sp.order() == 5);
    CHECK(sp.has_arc(0, 2));
    CHECK(sp.has_arc(1, 3));
    CHECK(sp.has_arc(2, 4));
    CHECK(sp.has_arc(3, 4));
    CHECK(sp.arc_count() == 4);

    auto tt = transitive_tournament(3);
    CHECK(tt.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(tt.is_tournament());

    CHECK_THROWS_AS(dicycle(2), std::invalid_argument);
    CHECK_THROWS_AS(spider(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_family(Family::RandomTournament, 4, {}), std::invalid_argument);
}

TEST_CASE("spider degrees") {
    for (int k = 1; k <= 5; ++k) {
        auto sp = spider(k);
        CHECK(sp.degree_stats().max_out == 1);
        CHECK(sp.in_degree(2 * k) == k);
        for (int v = k; v < 2 * k; ++v) CHECK(sp.in_degree(v) == 1);
    }
}

TEST_CASE("random tournament invariants") {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        auto t = random_tournament(8, seed);
        CHECK(t.arc_count() == 28);
        CHECK_FALSE(t.has_symmetric_arcs());
        CHECK(t.is_tournament());
        CHECK(t == random_tournament(8, seed));
    }
}

TEST_CASE("random digraph invariants") {
    auto a = random_digraph(9, 0.5, false, 5);
    CHECK_FALSE(a.has_symmetric_arcs());
    CHECK(a == random_digraph(9, 0.5, false, 5));
    auto b = random_digraph(9, 1.0, true, 5);
    CHECK(b.arc_count() == 72);
}

TEST_CASE("fixture structure") {
    auto fx = separating_fixture();
    CHECK(fx.order() == 7);
    CHECK(fx.arc_count() == 11);
    std::set<std::pair<int, int>> want{{3, 0}, {3, 1}, {3, 4}, {3, 5}, {3, 6}, {4, 2},
                                       {4, 5}, {4, 6}, {0, 4}, {1, 4}, {2, 3}};
    auto arcs = fx.arcs();
    CHECK(std::set<std::pair<int, int>>(arcs.begin(), arcs.end()) == want);
}

TEST_CASE("parse and serialize") {
    auto p2 = parse_digraph("p digraph 2 1\na 1 2\n");
    CHECK(p2 == dipath(2));

    CHECK(serialize_digraph(dicycle(3)) == "p digraph 3 3\na 1 2\na 2 3\na 3 1\n");

    // comments and blank lines are fine
    auto with_comment = parse_digraph("c a comment\np digraph 2 1\n\na 2 1\n");
    CHECK(with_comment.has_arc(1, 0));

    SplitMix64 rng(3);
    for (int i = 0; i < 20; ++i) {
        auto d = random_digraph(7, 0.4, true, rng.next());
        auto text = serialize_digraph(d);
        CHECK(parse_digraph(text) == d);
        CHECK(serialize_digraph(parse_digraph(text)) == text);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_line = [](const char* text, int line) {
        try {
            parse_digraph(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("p digraph 2 1\na 1 1\n", 2);            // loop
    expect_line("p digraph 2 2\na 1 2\na 1 2\n", 3);     // duplicate
    expect_line("p digraph 2 1\na 1 3\n", 2);            // out of range
    expect_line("p graph 2 1\na 1 2\n", 1);              // wrong header kind
    expect_line("p digraph 2 nope\n", 1);                // malformed header
    expect_line("a 1 2\n", 1);                           // arc before header
    CHECK_THROWS_AS(parse_digraph("p digraph 3 2\na 1 2\n"), ParseError);  // count mismatch
}

TEST_CASE("graph parse and serialize") {
    auto g = parse_graph("p graph 3 2\ne 1 2\ne 3 2\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(serialize_graph(g) == "p graph 3 2\ne 1 2\ne 2 3\n");
    CHECK_THROWS_AS(parse_graph("p graph 3 2\ne 1 2\ne 2 1\n"), ParseError);  // dup edge
}

TEST_CASE("underlying graph collapses opposite arc pairs") {
    CHECK(underlying_graph(separating_fixture()).edge_count() == 11);
    auto two_way = Digraph::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}});
    auto g = underlying_graph(two_way);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.symmetric_digraph() == two_way.symmetric_closure());
}

TEST_CASE("graph round trips") {
    SplitMix64 rng(23);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (rng.next_unit() < 0.5) edges.emplace_back(u, v);
        auto g = UndirectedGraph::from_edges(6, edges);
        auto text = serialize_graph(g);
        auto back = parse_graph(text);
        CHECK(back.edges() == g.edges());
        CHECK(serialize_graph(back) == text);
    }
}

TEST_CASE("digest is stable") {
    CHECK(digest_hex("") == "cbf29ce484222325");
    CHECK(digest_hex("p digraph 1 0\n") == digest_hex("p digraph 1 0\n"));
    CHECK(digest_hex("a") != digest_hex("b"));
}

TEST_SUITE_END();
