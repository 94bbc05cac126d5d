#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "ckgraph.h"

namespace {

constexpr const char* kO3 = R"({"vertices":["v"],"edges":[{"src":"v","dst":"v","mult":3}]})";
constexpr const char* kOneLoop = R"({"vertices":["v"],"edges":[{"src":"v","dst":"v","mult":1}]})";

struct Owned {
    char* s = nullptr;
    ~Owned() { ckg_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

} // namespace

TEST_CASE("graph handle lifecycle and round trip") {
    ckg_graph* g = nullptr;
    REQUIRE(ckg_graph_from_json(kO3, &g) == CKG_OK);
    Owned out;
    REQUIRE(ckg_graph_to_json(g, &out.s) == CKG_OK);
    CHECK(out.str().find("\"v\"") != std::string::npos);

    ckg_graph* g2 = nullptr;
    REQUIRE(ckg_graph_from_json(out.s, &g2) == CKG_OK);
    Owned dot;
    CHECK(ckg_graph_to_dot(g2, &dot.s) == CKG_OK);
    CHECK(dot.str().find("digraph") != std::string::npos);
    ckg_graph_free(g);
    ckg_graph_free(g2);
}

TEST_CASE("parse errors set the thread-local message") {
    ckg_graph* g = nullptr;
    CHECK(ckg_graph_from_json("nonsense", &g) == CKG_ERROR);
    CHECK(std::strlen(ckg_last_error()) > 0);
    CHECK(ckg_graph_from_json(nullptr, &g) == CKG_ERROR);
}

TEST_CASE("verdict-style return codes") {
    ckg_graph* good = nullptr;
    ckg_graph* bad = nullptr;
    REQUIRE(ckg_graph_from_json(kO3, &good) == CKG_OK);
    REQUIRE(ckg_graph_from_json(kOneLoop, &bad) == CKG_OK);

    Owned r1, r2;
    CHECK(ckg_check(good, &r1.s) == CKG_OK);
    CHECK(ckg_check(bad, &r2.s) == CKG_VERDICT_FALSE);
    CHECK(r2.str().find("condition") != std::string::npos);

    ckg_graph_free(good);
    ckg_graph_free(bad);
}

TEST_CASE("invariants through the c api") {
    ckg_graph* g = nullptr;
    REQUIRE(ckg_graph_from_json(kO3, &g) == CKG_OK);

    Owned k;
    REQUIRE(ckg_k_theory(g, &k.s) == CKG_OK);
    CHECK(k.str().find("Z/2") != std::string::npos);

    Owned lat, prim, xk;
    CHECK(ckg_ideal_lattice(g, &lat.s) == CKG_OK);
    CHECK(ckg_prim_space(g, &prim.s) == CKG_OK);
    CHECK(ckg_filtered_xk(g, 0, &xk.s) == CKG_OK);

    Owned sp;
    REQUIRE(ckg_cuntz_splice(g, "v", &sp.s) == CKG_OK);
    CHECK(sp.str().find("u1") != std::string::npos);
    CHECK(ckg_cuntz_splice(g, "zz", &sp.s) == CKG_ERROR);

    Owned ver, broken;
    CHECK(ckg_verify(g, "v", 0, 0, &ver.s) == CKG_OK);
    CHECK(ckg_verify(g, "v", 1, 0, &broken.s) == CKG_VERDICT_FALSE);

    ckg_graph_free(g);
}

TEST_CASE("desingularization and commutation through the c api") {
    ckg_graph* g = nullptr;
    const char* text =
        R"({"vertices":["v","w"],"edges":[{"src":"v","dst":"v","mult":2},{"src":"v","dst":"w","mult":"inf"},{"src":"w","dst":"w","mult":2},{"src":"w","dst":"v","mult":1}]})";
    REQUIRE(ckg_graph_from_json(text, &g) == CKG_OK);
    const char* orders = R"([{"vertex":"v","pattern":["v","v","w"],"period_start":2}])";

    Owned des;
    REQUIRE(ckg_desingularize(g, orders, 4, &des.s) == CKG_OK);
    CHECK(des.str().find("frontier") != std::string::npos);
    CHECK(ckg_desingularize(g, "", 4, &des.s) == CKG_ERROR); // missing order

    Owned com;
    CHECK(ckg_commute(g, "v", orders, 5, &com.s) == CKG_OK);
    ckg_graph_free(g);
}

TEST_CASE("fuzz through the c api") {
    Owned sum;
    CHECK(ckg_fuzz(3, 10, 6, 3, 0, &sum.s) == CKG_OK);
    CHECK(sum.str().find("\"passes\": 10") != std::string::npos);
    CHECK(ckg_fuzz(3, 10, 6, 3, 1, &sum.s) == CKG_VERDICT_FALSE);
}
