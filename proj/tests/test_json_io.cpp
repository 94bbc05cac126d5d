#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "ckgraph/json_io.hpp"
#include "helpers.hpp"

using namespace ckgraph;
using nlohmann::json;
using testutil::make_graph;

TEST_CASE("graph json round trip") {
    Graph g = make_graph({"v", "w"}, {{"v", "w", 3}, {"v", "v", -1}, {"w", "v", 1}});
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back == g);
    CHECK(back.mult("v", "v").is_omega());
}

TEST_CASE("graph json round trip on random graphs") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 60; ++t) {
        Graph g = testutil::random_graph(rng, 7, 4, true);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
}

TEST_CASE("graph parsing accepts the documented format") {
    Graph g = graph_from_json_string(
        R"({"vertices":["v","w"],"edges":[{"src":"v","dst":"w","mult":3},{"src":"v","dst":"v","mult":"inf"}]})");
    CHECK(g.size() == 2);
    CHECK(g.mult("v", "w") == ExtendedNat(3));
    CHECK(g.mult("v", "v").is_omega());
    CHECK(g.mult("w", "v").is_zero());
}

TEST_CASE("graph parsing rejects malformed input") {
    CHECK_THROWS_AS(graph_from_json_string("not json"), parse_error);
    CHECK_THROWS_AS(graph_from_json_string(R"({"edges":[]})"), parse_error);
    // Unknown endpoint.
    CHECK_THROWS_AS(
        graph_from_json_string(R"({"vertices":["v"],"edges":[{"src":"v","dst":"x","mult":1}]})"),
        parse_error);
    // Duplicate vertex id.
    CHECK_THROWS_AS(graph_from_json_string(R"({"vertices":["v","v"],"edges":[]})"), parse_error);
    // Duplicate (src,dst) pair.
    CHECK_THROWS_AS(graph_from_json_string(
                        R"({"vertices":["v"],"edges":[{"src":"v","dst":"v","mult":1},{"src":"v","dst":"v","mult":2}]})"),
                    parse_error);
    // Bad multiplicity spellings.
    CHECK_THROWS_AS(graph_from_json_string(
                        R"({"vertices":["v"],"edges":[{"src":"v","dst":"v","mult":"lots"}]})"),
                    parse_error);
    CHECK_THROWS_AS(graph_from_json_string(
                        R"({"vertices":["v"],"edges":[{"src":"v","dst":"v","mult":-2}]})"),
                    parse_error);
}

TEST_CASE("dot export mentions every vertex and renders ω dashed") {
    Graph g = make_graph({"v", "w"}, {{"v", "w", -1}, {"w", "w", 2}});
    std::string dot = graph_to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"v\"") != std::string::npos);
    CHECK(dot.find("\"w\"") != std::string::npos);
    CHECK(dot.find("ω") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);
    CHECK(dot.find("2") != std::string::npos);
}

TEST_CASE("tail orders from json") {
    auto orders = tail_orders_from_json(
        json::parse(R"([{"vertex":"v","pattern":["w","x"],"period_start":1}])"));
    REQUIRE(orders.count("v") == 1);
    CHECK(orders.at("v").pattern == std::vector<std::string>{"w", "x"});
    CHECK(orders.at("v").period_start == 1);
    CHECK_THROWS_AS(tail_orders_from_json(json::parse(R"([{"pattern":[]}])")), parse_error);
}

TEST_CASE("matrix and group serialization") {
    json m = matrix_to_json(IntMatrix{{2, 0}, {1, 2}});
    CHECK(m[1][0] == 1);
    FgAbelianGroup g;
    g.free_rank = 1;
    g.torsion = {mpz_class(4)};
    json jg = group_to_json(g);
    CHECK(jg["free_rank"] == 1);
    CHECK(jg["pretty"] == "Z + Z/4");
}

TEST_CASE("report serializers carry the verdict fields") {
    Graph o3 = testutil::single_loop_graph("v", 3);
    json check = purely_infinite_to_json(purely_infinite_report(o3));
    CHECK(check["verdict"] == true);

    json lat = lattice_to_json(ideal_lattice(o3));
    CHECK(lat["pairs"].size() == 2);

    PrimSpace x = prim_space(ideal_lattice(o3));
    json px = prim_space_to_json(x);
    CHECK(px["points"].size() == 1);
    std::string hasse = prim_space_to_dot(x);
    CHECK(hasse.find("digraph") != std::string::npos);

    json inv = invariance_to_json(verify_cuntz_splice_invariance(o3, "v"), true);
    CHECK(inv["verdict"] == true);
    CHECK(inv.contains("cube"));
    CHECK(inv.contains("quasi_iso"));
}
