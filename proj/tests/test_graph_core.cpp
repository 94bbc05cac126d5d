#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ckgraph/graph.hpp"
#include "helpers.hpp"

using namespace ckgraph;
using testutil::make_graph;

namespace {

// Brute-force return-path classifier: DFS over individual edge copies,
// counting distinct based return paths up to 2. Interior vertices may be
// visited at most twice — a path revisiting one three times contains an
// excisable loop, which already witnesses a second, shorter return path.
int count_return_paths_capped(const Graph& g, int v, int at, std::vector<int>& visits) {
    int total = 0;
    for (int w = 0; w < g.size(); ++w) {
        ExtendedNat m = g.mult(at, w);
        if (m.is_zero())
            continue;
        long copies = m.is_omega() ? 2 : static_cast<long>(std::min<std::uint64_t>(m.finite(), 2));
        if (w == v) {
            total += static_cast<int>(copies);
        } else if (visits[w] < 2) {
            ++visits[w];
            total += static_cast<int>(copies) * count_return_paths_capped(g, v, w, visits);
            --visits[w];
        }
        if (total >= 2)
            return 2;
    }
    return total;
}

ReturnPathClass brute_return_class(const Graph& g, int v) {
    std::vector<int> visits(g.size(), 0);
    int n = count_return_paths_capped(g, v, v, visits);
    if (n == 0)
        return ReturnPathClass::Zero;
    return n == 1 ? ReturnPathClass::One : ReturnPathClass::TwoOrMore;
}

} // namespace

TEST_CASE("vertex classification") {
    Graph g = make_graph({"r", "s", "i"}, {{"r", "s", 2}, {"i", "r", -1}, {"i", "i", 1}});
    CHECK(vertex_class(g, "r") == VertexClass::Regular);
    CHECK(vertex_class(g, "s") == VertexClass::Sink);
    CHECK(vertex_class(g, "i") == VertexClass::InfiniteEmitter);
    CHECK_THROWS_AS(g.index_of("nope"), parse_error);
}

TEST_CASE("reachability is the length-at-least-one relation") {
    Graph g = make_graph({"a", "b"}, {{"a", "b", 1}});
    CHECK(reaches(g, "a", "b"));
    CHECK_FALSE(reaches(g, "a", "a")); // no cycle through a
    CHECK(reaches_refl(g, "a", "a"));
    CHECK_FALSE(reaches(g, "b", "a"));

    Graph loop = testutil::single_loop_graph("v", 1);
    CHECK(reaches(loop, "v", "v"));
}

TEST_CASE("return path classes on hand-checked graphs") {
    CHECK(return_path_class(testutil::single_loop_graph("v", 1), "v") == ReturnPathClass::One);
    CHECK(return_path_class(testutil::single_loop_graph("v", 2), "v") == ReturnPathClass::TwoOrMore);
    CHECK(return_path_class(make_graph({"v"}, {}), "v") == ReturnPathClass::Zero);

    // Bare 2-cycle: exactly one return path at each vertex.
    Graph c2 = make_graph({"a", "b"}, {{"a", "b", 1}, {"b", "a", 1}});
    CHECK(return_path_class(c2, "a") == ReturnPathClass::One);
    CHECK(return_path_class(c2, "b") == ReturnPathClass::One);

    // Doubling one edge of the cycle gives two return paths everywhere.
    Graph c2d = make_graph({"a", "b"}, {{"a", "b", 2}, {"b", "a", 1}});
    CHECK(return_path_class(c2d, "a") == ReturnPathClass::TwoOrMore);
    CHECK(return_path_class(c2d, "b") == ReturnPathClass::TwoOrMore);

    // A loop hanging off the cycle: still two return paths at a.
    Graph fig8 = make_graph({"a", "b"}, {{"a", "b", 1}, {"b", "a", 1}, {"b", "b", 1}});
    CHECK(return_path_class(fig8, "a") == ReturnPathClass::TwoOrMore);
}

TEST_CASE("return path class agrees with the brute-force path enumerator") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t) {
        Graph g = testutil::random_graph(rng, 5, 2);
        for (int v = 0; v < g.size(); ++v)
            CHECK(return_path_class(g, v) == brute_return_class(g, v));
    }
}

TEST_CASE("condition (K)") {
    CHECK_FALSE(condition_K(testutil::single_loop_graph("v", 1)));
    CHECK(condition_K(testutil::single_loop_graph("v", 2)));
    CHECK(condition_K(make_graph({"v"}, {}))); // no cycles at all
    Graph c2 = make_graph({"a", "b"}, {{"a", "b", 1}, {"b", "a", 1}});
    CHECK_FALSE(condition_K(c2));
}

TEST_CASE("breaking vertices") {
    // v emits ω to a sink and finitely many edges back onto its own cycle.
    Graph g = make_graph({"v", "w", "u"},
                         {{"v", "w", -1}, {"v", "u", 1}, {"u", "v", 1}, {"u", "u", 2}});
    CHECK(breaking_vertices(g) == std::set<std::string>{"v"});

    // All of v's returning multiplicity is infinite: not breaking.
    Graph h = make_graph({"v", "u"}, {{"v", "u", -1}, {"u", "v", 1}, {"u", "u", 2}});
    CHECK(breaking_vertices(h).empty());

    CHECK(breaking_vertices(testutil::single_loop_graph("v", 2)).empty());
}

TEST_CASE("maximal tails of small graphs") {
    Graph loop2 = testutil::single_loop_graph("v", 2);
    auto tails = maximal_tails(loop2);
    REQUIRE(tails.size() == 1);
    CHECK(tails[0] == std::set<std::string>{"v"});

    // Chain with loops at both ends: {w2} and {w1,w2} are maximal tails.
    Graph chain = make_graph({"w1", "w2"}, {{"w1", "w1", 3}, {"w1", "w2", 1}, {"w2", "w2", 3}});
    auto ct = maximal_tails(chain);
    CHECK(ct.size() == 2);
}

TEST_CASE("purely infinite criteria verdicts") {
    auto ok = purely_infinite_report(testutil::single_loop_graph("v", 3));
    CHECK(ok.verdict());
    CHECK(ok.failing_criterion().empty());

    auto one = purely_infinite_report(testutil::single_loop_graph("v", 1));
    CHECK_FALSE(one.verdict());
    CHECK(one.failing_criterion() == "condition-K");

    // Sink: the tail {s} contains no cycle.
    auto sink = purely_infinite_report(make_graph({"s"}, {}));
    CHECK_FALSE(sink.verdict());
    CHECK(sink.failing_criterion() == "tails-connect-to-cycles");

    Graph breaking = make_graph({"v", "w", "u"},
                                {{"v", "w", -1}, {"v", "u", 1}, {"u", "v", 1}, {"u", "u", 2},
                                 {"w", "w", 2}});
    auto br = purely_infinite_report(breaking);
    CHECK_FALSE(br.verdict());
    CHECK(br.failing_criterion() == "no-breaking-vertices");
}

TEST_CASE("adjacency matrix extraction") {
    Graph chain = make_graph({"w1", "w2"}, {{"w1", "w1", 3}, {"w1", "w2", 1}, {"w2", "w2", 3}});
    IntMatrix a = adjacency_matrix(chain, {"w1", "w2"}, {"w1", "w2"});
    CHECK(a == IntMatrix{{3, 1}, {0, 3}});
    IntMatrix sub = adjacency_matrix(chain, {"w2"}, {"w2"});
    CHECK(sub == IntMatrix{{3}});

    Graph inf = make_graph({"v", "w"}, {{"v", "w", -1}});
    CHECK_THROWS_WITH_AS(adjacency_matrix(inf), doctest::Contains("v"), error);
}

TEST_CASE("graph surgery helpers") {
    Graph g = make_graph({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 1}, {"c", "a", 1}});
    Graph without = g.without_vertex(g.index_of("b"));
    CHECK(without.size() == 2);
    CHECK(without.mult("c", "a") == ExtendedNat(1));
    CHECK(without.mult("a", "a").is_zero());

    Graph ind = g.induced({g.index_of("b"), g.index_of("c")});
    CHECK(ind.vertices() == std::vector<std::string>{"b", "c"});
    CHECK(ind.mult("b", "c") == ExtendedNat(1));

    Graph plus = g.with_vertex("d");
    CHECK(plus.size() == 4);
    CHECK(plus.out_mult(plus.index_of("d")).is_zero());
}

TEST_CASE("brute force bound guards subset enumeration") {
    std::vector<std::string> vs;
    for (int i = 0; i < 20; ++i)
        vs.push_back("v" + std::to_string(i));
    Graph big(vs);
    CHECK_THROWS_AS(maximal_tails(big), size_limit_error);
}
