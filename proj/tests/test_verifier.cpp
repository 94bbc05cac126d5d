#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ckgraph/fuzz.hpp"
#include "ckgraph/verifier.hpp"
#include "helpers.hpp"

using namespace ckgraph;
using testutil::make_graph;

namespace {

Graph chain_graph() {
    return make_graph({"w1", "w2"}, {{"w1", "w1", 3}, {"w1", "w2", 1}, {"w2", "w2", 3}});
}

} // namespace

TEST_CASE("complex construction pins the block enumeration") {
    Graph o3 = testutil::single_loop_graph("v", 3);
    SpliceResult sp = cuntz_splice(o3, "v");
    PrimSpace x = prim_space(ideal_lattice(o3));
    REQUIRE(x.size() == 1);

    DiagramComplex c_e = build_complex(o3, x, std::string("v"));
    CHECK(c_e.enum_of[0] == std::vector<std::string>{"v"});
    CHECK(c_e.phi[0] == IntMatrix{{2}});

    std::vector<std::set<std::string>> h_ec{{sp.v, sp.u1, sp.u2}};
    DiagramComplex c_ec = build_complex(sp.graph, x, h_ec, {sp.u2, sp.u1, sp.v});
    CHECK(c_ec.enum_of[0] == std::vector<std::string>{sp.u2, sp.u1, sp.v});
    CHECK(c_ec.phi[0] == IntMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 2}});
    CHECK(smith(c_ec.phi[0]).diagonal() == std::vector<mpz_class>{1, 1, 2});
}

TEST_CASE("complex inclusions are verified module maps") {
    Graph g = chain_graph();
    PrimSpace x = prim_space(ideal_lattice(g));
    DiagramComplex c = build_complex(g, x, std::string("w1"));
    REQUIRE(c.incl.size() == 1);
    const auto& [edge, incl] = *c.incl.begin();
    // The inclusion intertwines the differentials.
    CHECK(incl * c.phi[edge.first] == c.phi[edge.second] * incl);
    // 0/1 coordinate inclusion.
    for (int r = 0; r < incl.rows(); ++r)
        for (int col = 0; col < incl.cols(); ++col)
            CHECK((incl.at(r, col) == 0 || incl.at(r, col) == 1));
}

TEST_CASE("prefix enumeration convention is enforced") {
    Graph g = chain_graph();
    PrimSpace x = prim_space(ideal_lattice(g));
    // A prefix that cuts H_top in half (w1 present, phantom absent) is fine;
    // one that intersects some H_x properly is rejected.
    CHECK_NOTHROW(build_complex(g, x, std::string("w1")));
    std::vector<std::set<std::string>> h{x.h_of.begin(), x.h_of.end()};
    CHECK_THROWS_AS(build_complex(g, x, h, {"w2", "w1", "missing"}), error);
}

TEST_CASE("psi blocks at points with and without the splice vertex") {
    Graph g = chain_graph();
    PrimSpace x = prim_space(ideal_lattice(g));
    ChainMap psi = build_psi(g, "w1", x, false);
    int a = x.h_of[0].count("w1") ? 1 : 0; // the {w2} point
    int b = 1 - a;

    // Without v: identities.
    CHECK(psi.psi1[a] == IntMatrix::identity(1));
    CHECK(psi.psi0[a] == IntMatrix::identity(1));

    // With v: [0 0 | 1] and the sign block.
    CHECK(psi.psi1[b] == IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(psi.psi0[b] == IntMatrix{{-1, 0, 1, 0}, {0, 0, 0, 1}});

    ChainMap bad = build_psi(g, "w1", x, true);
    CHECK(bad.psi0[b].at(0, 0) == 1);
}

TEST_CASE("full invariance pipeline on worked examples") {
    for (long loops : {2, 3, 5}) {
        InvarianceReport rep =
            verify_cuntz_splice_invariance(testutil::single_loop_graph("v", loops), "v");
        CHECK(rep.verdict);
        CHECK(rep.failing_stage.empty());
        CHECK(rep.cube.overall);
        CHECK(rep.quasi_iso.overall);
        CHECK(rep.xk_groups_match);
    }

    InvarianceReport chain = verify_cuntz_splice_invariance(chain_graph(), "w1");
    CHECK(chain.verdict);
    REQUIRE(chain.k0_at_points.size() == 2);
    for (const auto& [before, after] : chain.k0_at_points)
        CHECK(before == after);

    // Splice at the downstream vertex as well.
    CHECK(verify_cuntz_splice_invariance(chain_graph(), "w2").verdict);
}

TEST_CASE("corrupted sign block fails exactly the top face") {
    InvarianceReport rep =
        verify_cuntz_splice_invariance(testutil::single_loop_graph("v", 3), "v", true);
    CHECK_FALSE(rep.verdict);
    CHECK(rep.failing_stage == "cube");
    CHECK_FALSE(rep.cube.overall);
    REQUIRE(rep.cube.top.size() == 1);
    CHECK_FALSE(rep.cube.top[0]);
    // ψ₁ is untouched, so the kernel-side checks still pass.
    for (bool k : rep.quasi_iso.ker_iso)
        CHECK(k);

    // On the chain, only the point containing w1 sees the corruption.
    InvarianceReport chain = verify_cuntz_splice_invariance(chain_graph(), "w1", true);
    CHECK_FALSE(chain.verdict);
    int bad = 0;
    for (bool ok : chain.cube.top)
        bad += ok ? 0 : 1;
    CHECK(bad == 1);
}

TEST_CASE("pipeline preconditions name the failing criterion") {
    CHECK_THROWS_WITH_AS(verify_cuntz_splice_invariance(testutil::single_loop_graph("v", 1), "v"),
                         doctest::Contains("condition-K"), precondition_error);
    Graph sink = make_graph({"v", "s"}, {{"v", "v", 2}, {"v", "s", 1}});
    CHECK_THROWS_AS(verify_cuntz_splice_invariance(sink, "v"), precondition_error);
    Graph inf = make_graph({"v", "w"}, {{"v", "v", 2}, {"v", "w", -1}, {"w", "w", 2}});
    CHECK_THROWS_WITH_AS(verify_cuntz_splice_invariance(inf, "v"),
                         doctest::Contains("regular"), precondition_error);
}

TEST_CASE("random instance generation is deterministic and well-formed") {
    FuzzConfig cfg;
    cfg.seed = 5;
    cfg.trials = 30;
    for (int t = 0; t < cfg.trials; ++t) {
        auto a = gen_random_instance(cfg, t);
        auto b = gen_random_instance(cfg, t);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(a->first == b->first);
        CHECK(a->second == b->second);
        CHECK(purely_infinite_report(a->first).verdict());
        CHECK(return_path_class(a->first, a->second) == ReturnPathClass::TwoOrMore);
    }
}

TEST_CASE("fuzz run passes and its negative control fails everywhere") {
    FuzzConfig cfg;
    cfg.seed = 9;
    cfg.trials = 25;
    FuzzSummary ok = fuzz_run(cfg, false);
    CHECK(ok.passes == 25);
    CHECK(ok.failures == 0);
    CHECK(ok.skips == 0);

    FuzzSummary broken = fuzz_run(cfg, true);
    CHECK(broken.failures == 25);
    CHECK(broken.passes == 0);
    CHECK(broken.failing_instances.size() == 25);
}
