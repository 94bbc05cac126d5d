#include "ckgraph.h"

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "ckgraph/fuzz.hpp"
#include "ckgraph/json_io.hpp"
#include "ckgraph/verifier.hpp"

using nlohmann::json;

struct ckg_graph {
    ckgraph::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(const std::string& msg) {
    g_last_error = msg;
    return CKG_ERROR;
}

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return fail(e.what());
    } catch (...) {
        return fail("unknown error");
    }
}

int require(const void* p, const char* what) {
    if (!p)
        return fail(std::string("null ") + what);
    return CKG_OK;
}

} // namespace

extern "C" {

int ckg_graph_from_json(const char* text, ckg_graph** out) {
    if (require(text, "json") || require(out, "out"))
        return CKG_ERROR;
    return guarded([&] {
        *out = new ckg_graph{ckgraph::graph_from_json_string(text)};
        return CKG_OK;
    });
}

void ckg_graph_free(ckg_graph* g) { delete g; }

int ckg_graph_to_json(const ckg_graph* g, char** out_json) {
    if (require(g, "graph") || require(out_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        *out_json = dup_string(ckgraph::graph_to_json(g->g).dump(2));
        return CKG_OK;
    });
}

int ckg_graph_to_dot(const ckg_graph* g, char** out_dot) {
    if (require(g, "graph") || require(out_dot, "out"))
        return CKG_ERROR;
    return guarded([&] {
        *out_dot = dup_string(ckgraph::graph_to_dot(g->g));
        return CKG_OK;
    });
}

int ckg_check(const ckg_graph* g, char** out_report_json) {
    if (require(g, "graph") || require(out_report_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        ckgraph::PurelyInfiniteReport rep = ckgraph::purely_infinite_report(g->g);
        *out_report_json = dup_string(ckgraph::purely_infinite_to_json(rep).dump(2));
        return rep.verdict() ? CKG_OK : CKG_VERDICT_FALSE;
    });
}

int ckg_ideal_lattice(const ckg_graph* g, char** out_json) {
    if (require(g, "graph") || require(out_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        *out_json = dup_string(ckgraph::lattice_to_json(ckgraph::ideal_lattice(g->g)).dump(2));
        return CKG_OK;
    });
}

int ckg_prim_space(const ckg_graph* g, char** out_json) {
    if (require(g, "graph") || require(out_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        auto x = ckgraph::prim_space(ckgraph::ideal_lattice(g->g));
        *out_json = dup_string(ckgraph::prim_space_to_json(x).dump(2));
        return CKG_OK;
    });
}

int ckg_prim_space_dot(const ckg_graph* g, char** out_dot) {
    if (require(g, "graph") || require(out_dot, "out"))
        return CKG_ERROR;
    return guarded([&] {
        auto x = ckgraph::prim_space(ckgraph::ideal_lattice(g->g));
        *out_dot = dup_string(ckgraph::prim_space_to_dot(x));
        return CKG_OK;
    });
}

int ckg_k_theory(const ckg_graph* g, char** out_json) {
    if (require(g, "graph") || require(out_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        ckgraph::GradedGroup k = ckgraph::k_theory(g->g);
        json j;
        j["k0"] = ckgraph::group_to_json(k.k0);
        j["k1"] = ckgraph::group_to_json(k.k1);
        j["formula"] = "unfiltered";
        *out_json = dup_string(j.dump(2));
        return CKG_OK;
    });
}

int ckg_filtered_xk(const ckg_graph* g, int verbose, char** out_json) {
    if (require(g, "graph") || require(out_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        auto x = ckgraph::prim_space(ckgraph::ideal_lattice(g->g));
        auto mod = ckgraph::filtered_xk(g->g, x);
        *out_json = dup_string(ckgraph::xk_to_json(mod, verbose != 0).dump(2));
        return CKG_OK;
    });
}

int ckg_cuntz_splice(const ckg_graph* g, const char* v, char** out_json) {
    if (require(g, "graph") || require(v, "vertex") || require(out_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        ckgraph::SpliceResult sp = ckgraph::cuntz_splice(g->g, v);
        json j;
        j["graph"] = ckgraph::graph_to_json(sp.graph);
        j["v"] = sp.v;
        j["u1"] = sp.u1;
        j["u2"] = sp.u2;
        *out_json = dup_string(j.dump(2));
        return CKG_OK;
    });
}

int ckg_verify(const ckg_graph* g, const char* v, int break_psi, int verbose,
               char** out_report_json) {
    if (require(g, "graph") || require(v, "vertex") || require(out_report_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        auto rep = ckgraph::verify_cuntz_splice_invariance(g->g, v, break_psi != 0);
        *out_report_json = dup_string(ckgraph::invariance_to_json(rep, verbose != 0).dump(2));
        return rep.verdict ? CKG_OK : CKG_VERDICT_FALSE;
    });
}

int ckg_desingularize(const ckg_graph* g, const char* order_json, int depth, char** out_json) {
    if (require(g, "graph") || require(out_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        std::map<std::string, ckgraph::TailOrder> orders;
        if (order_json && *order_json)
            orders = ckgraph::tail_orders_from_json(json::parse(order_json));
        ckgraph::TruncatedDesing td = ckgraph::desingularize_truncated(g->g, orders, depth);
        json j;
        j["graph"] = ckgraph::graph_to_json(td.graph);
        j["frontier"] = std::vector<std::string>(td.frontier.begin(), td.frontier.end());
        j["depth"] = td.depth;
        json tails = json::object();
        for (const auto& [vid, tail] : td.tail_map)
            tails[vid] = tail;
        j["tails"] = std::move(tails);
        *out_json = dup_string(j.dump(2));
        return CKG_OK;
    });
}

int ckg_commute(const ckg_graph* g, const char* v, const char* order_json, int depth,
                char** out_report_json) {
    if (require(g, "graph") || require(v, "vertex") || require(out_report_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        std::map<std::string, ckgraph::TailOrder> orders;
        if (order_json && *order_json)
            orders = ckgraph::tail_orders_from_json(json::parse(order_json));
        ckgraph::CommuteReport rep = ckgraph::verify_desing_splice_commutes(g->g, v, orders, depth);
        *out_report_json = dup_string(ckgraph::commute_to_json(rep).dump(2));
        return rep.commutes ? CKG_OK : CKG_VERDICT_FALSE;
    });
}

int ckg_fuzz(uint64_t seed, int trials, int max_vertices, int max_mult, int break_psi,
             char** out_summary_json) {
    if (require(out_summary_json, "out"))
        return CKG_ERROR;
    return guarded([&] {
        ckgraph::FuzzConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.max_vertices = max_vertices;
        cfg.max_mult = max_mult;
        ckgraph::FuzzSummary sum = ckgraph::fuzz_run(cfg, break_psi != 0);
        json j;
        j["passes"] = sum.passes;
        j["failures"] = sum.failures;
        j["skips"] = sum.skips;
        json dumps = json::array();
        for (const auto& d : sum.failing_instances)
            dumps.push_back(json::parse(d));
        j["failing_instances"] = std::move(dumps);
        *out_summary_json = dup_string(j.dump(2));
        return sum.failures == 0 ? CKG_OK : CKG_VERDICT_FALSE;
    });
}

const char* ckg_last_error(void) { return g_last_error.c_str(); }

void ckg_string_free(char* s) { delete[] s; }

} // extern "C"
