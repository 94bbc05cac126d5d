#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ckgraph/moves.hpp"
#include "ckgraph/xk.hpp"
#include "helpers.hpp"

using namespace ckgraph;
using testutil::make_graph;

namespace {

Graph chain_graph() {
    return make_graph({"w1", "w2"}, {{"w1", "w1", 3}, {"w1", "w2", 1}, {"w2", "w2", 3}});
}

// Additive order of the class of e modulo colspan(rel), up to `cap`.
int class_order(const IntMatrix& rel, const std::vector<mpz_class>& e, int cap) {
    for (int k = 1; k <= cap; ++k) {
        std::vector<mpz_class> ke(e.size());
        for (size_t i = 0; i < e.size(); ++i)
            ke[i] = k * e[i];
        if (solve(rel, ke).has_value())
            return k;
    }
    return 0;
}

} // namespace

TEST_CASE("k matrix of the chain") {
    CHECK(k_matrix(chain_graph()) == IntMatrix{{2, 0}, {1, 2}});
}

TEST_CASE("k matrix drops singular columns") {
    // Sink s contributes a row but no column.
    Graph g = make_graph({"v", "s"}, {{"v", "v", 2}, {"v", "s", 1}});
    IntMatrix m = k_matrix(g);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 1);
    CHECK(m == IntMatrix{{1}, {1}});

    Graph inf = make_graph({"v", "w"}, {{"v", "w", -1}, {"w", "w", 2}});
    IntMatrix mi = k_matrix(inf);
    CHECK(mi.cols() == 1); // only w is regular
}

TEST_CASE("k theory of hand-checked graphs") {
    // One vertex, three loops.
    GradedGroup o3 = k_theory(testutil::single_loop_graph("v", 3));
    CHECK(o3.k0.str() == "Z/2");
    CHECK(o3.k1.is_trivial());

    // A lone sink.
    GradedGroup sink = k_theory(make_graph({"s"}, {}));
    CHECK(sink.k0.str() == "Z");
    CHECK(sink.k1.is_trivial());

    // One vertex, two loops: both groups vanish.
    GradedGroup o2 = k_theory(testutil::single_loop_graph("v", 2));
    CHECK(o2.k0.is_trivial());
    CHECK(o2.k1.is_trivial());

    // One vertex, one loop: K0 = K1 = Z.
    GradedGroup circle = k_theory(testutil::single_loop_graph("v", 1));
    CHECK(circle.k0.str() == "Z");
    CHECK(circle.k1.str() == "Z");

    // The chain: Z/4 in degree 0.
    GradedGroup chain = k_theory(chain_graph());
    CHECK(chain.k0.str() == "Z/4");
    CHECK(chain.k1.is_trivial());
}

TEST_CASE("k theory is invariant under the splice on hand examples") {
    for (long loops : {2, 3, 5}) {
        Graph g = testutil::single_loop_graph("v", loops);
        GradedGroup before = k_theory(g);
        GradedGroup after = k_theory(cuntz_splice(g, "v").graph);
        CHECK(graded_groups_isomorphic(before, after));
    }
    GradedGroup before = k_theory(chain_graph());
    GradedGroup after = k_theory(cuntz_splice(chain_graph(), "w1").graph);
    CHECK(graded_groups_isomorphic(before, after));
}

TEST_CASE("graded group comparison") {
    GradedGroup a, b;
    a.k0.torsion = {mpz_class(2)};
    b.k0.torsion = {mpz_class(2)};
    CHECK(graded_groups_isomorphic(a, b));
    b.k1.free_rank = 1;
    CHECK_FALSE(graded_groups_isomorphic(a, b));
}

TEST_CASE("filtered xk of the chain") {
    Graph g = chain_graph();
    PrimSpace x = prim_space(ideal_lattice(g));
    XKModule mod = filtered_xk(g, x);

    int a = x.h_of[0].size() == 1 ? 0 : 1; // the {w2} point
    int b = 1 - a;
    CHECK(mod.at[a].k0.str() == "Z/2");
    CHECK(mod.at[a].k1.is_trivial());
    CHECK(mod.at[b].k0.str() == "Z/4");
    CHECK(mod.at[b].k1.is_trivial());

    // The transition a → b in degree 0: Z/2 → Z/4 sends the generator to
    // twice a generator, hence is injective.
    REQUIRE(mod.trans.count({a, b}) == 1);
    const IntMatrix& incl = mod.trans.at({a, b}).first;
    REQUIRE(incl.rows() == 2);
    REQUIRE(incl.cols() == 1);
    std::vector<mpz_class> image = incl.col(0);
    const IntMatrix& rel = mod.at[b].k0_relations;
    CHECK(class_order(rel, image, 8) == 2); // = order of 2·generator in Z/4
}

TEST_CASE("filtered xk respects the distinguished-vertex enumeration") {
    Graph g = chain_graph();
    PrimSpace x = prim_space(ideal_lattice(g));
    XKModule mod = filtered_xk(g, x, std::string("w1"));
    for (int i = 0; i < x.size(); ++i)
        if (x.h_of[i].count("w1"))
            CHECK(mod.enum_of[i].front() == "w1");
}

TEST_CASE("filtered xk needs a regular graph") {
    Graph inf = make_graph({"v", "w"}, {{"v", "w", -1}, {"v", "v", 2}, {"w", "w", 2}});
    PrimSpace x = prim_space(ideal_lattice(inf));
    CHECK_THROWS_WITH_AS(filtered_xk(inf, x), doctest::Contains("desingular"),
                         precondition_error);
}

TEST_CASE("filtered xk on a three-point chain space") {
    Graph g = make_graph({"a", "b", "c"},
                         {{"a", "a", 2}, {"a", "b", 1}, {"b", "b", 2}, {"b", "c", 1},
                          {"c", "c", 2}});
    PrimSpace x = prim_space(ideal_lattice(g));
    REQUIRE(x.size() == 3);
    XKModule mod = filtered_xk(g, x);
    CHECK(mod.trans.size() == 3); // three strict comparabilities in a 3-chain
    for (int i = 0; i < 3; ++i) {
        CHECK(mod.at[i].k0.is_trivial());
        CHECK(mod.at[i].k1.is_trivial());
        CHECK(mod.enum_of[i].size() == x.h_of[i].size());
    }
}

TEST_CASE("filtered groups transported along the splice homeomorphism") {
    Graph g = chain_graph();
    PrimSpace x = prim_space(ideal_lattice(g));
    XKModule mod = filtered_xk(g, x);

    SpliceResult sp = cuntz_splice(g, "w1");
    PrimSpace xc = prim_space(ideal_lattice(sp.graph));
    XKModule modc = filtered_xk(sp.graph, xc);

    auto homeo = prim_homeo_under_splice(g, "w1");
    for (const auto& [p, q] : homeo) {
        int i = x.index_of(p);
        int j = xc.index_of(q);
        CHECK(graded_groups_isomorphic(mod.at[i], modc.at[j]));
    }
}
