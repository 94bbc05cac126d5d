// Command-line front end. Talks to the core library exclusively through
// the C API in ckgraph.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ckgraph.h"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct GraphHandle {
    ckg_graph* g = nullptr;
    ~GraphHandle() { ckg_graph_free(g); }
};

struct StringOut {
    char* s = nullptr;
    ~StringOut() { ckg_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

int load_graph(const std::string& path, GraphHandle& h) {
    std::string text = read_file(path);
    return ckg_graph_from_json(text.c_str(), &h.g);
}

int report_errors(int rc) {
    if (rc == CKG_ERROR)
        std::cerr << "error: " << ckg_last_error() << "\n";
    return rc;
}

std::string group_pretty(const json& g) { return g.value("pretty", "?"); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact graph C*-algebra invariants, Cuntz Splice moves and verification"};
    app.require_subcommand(1);

    std::string graph_path, vertex, order_path, dump_dir;
    int depth = 4;
    bool verbose = false, break_psi = false, as_dot = false;
    std::uint64_t seed = 0;
    int trials = 200, max_vertices = 8, max_mult = 3;

    auto* c_check = app.add_subcommand("check", "Purely-infinite criteria report");
    c_check->add_option("graph", graph_path)->required();

    auto* c_ideals = app.add_subcommand("ideals", "Ideal lattice of admissible pairs");
    c_ideals->add_option("graph", graph_path)->required();

    auto* c_prim = app.add_subcommand("prim", "Primitive-ideal space");
    c_prim->add_option("graph", graph_path)->required();
    c_prim->add_flag("--dot", as_dot, "Emit the Hasse diagram as DOT");

    auto* c_k = app.add_subcommand("k", "K-theory (K0, K1)");
    c_k->add_option("graph", graph_path)->required();

    auto* c_xk = app.add_subcommand("xk", "Filtered K-theory diagram");
    c_xk->add_option("graph", graph_path)->required();
    c_xk->add_flag("--verbose", verbose, "Include presentation and transition matrices");

    auto* c_splice = app.add_subcommand("splice", "Cuntz Splice at a vertex");
    c_splice->add_option("graph", graph_path)->required();
    c_splice->add_option("vertex", vertex)->required();

    auto* c_verify = app.add_subcommand("verify", "Full splice-invariance verification");
    c_verify->add_option("graph", graph_path)->required();
    c_verify->add_option("vertex", vertex)->required();
    c_verify->add_flag("--verbose", verbose);
    c_verify->add_flag("--break-psi", break_psi, "Negative control: corrupt the sign block of psi0");

    auto* c_desing = app.add_subcommand("desing", "Depth-truncated desingularization");
    c_desing->add_option("graph", graph_path)->required();
    c_desing->add_option("--depth", depth)->required();
    c_desing->add_option("--order", order_path, "Tail-order JSON file");

    auto* c_commute = app.add_subcommand("commute", "Desingularization/splice commutation check");
    c_commute->add_option("graph", graph_path)->required();
    c_commute->add_option("vertex", vertex)->required();
    c_commute->add_option("--depth", depth)->required();
    c_commute->add_option("--order", order_path, "Tail-order JSON file");

    auto* c_fuzz = app.add_subcommand("fuzz", "Randomized verification runs");
    c_fuzz->add_option("--seed", seed);
    c_fuzz->add_option("--trials", trials);
    c_fuzz->add_option("--max-vertices", max_vertices);
    c_fuzz->add_option("--max-mult", max_mult);
    c_fuzz->add_flag("--break-psi", break_psi);
    c_fuzz->add_option("--dump-dir", dump_dir, "Write failing instances here for replay");

    auto* c_dot = app.add_subcommand("dot", "DOT export of a graph");
    c_dot->add_option("graph", graph_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        StringOut out;
        if (c_check->parsed()) {
            GraphHandle g;
            if (int rc = load_graph(graph_path, g))
                return report_errors(rc);
            int rc = ckg_check(g.g, &out.s);
            if (rc == CKG_ERROR)
                return report_errors(rc);
            std::cout << out.str() << "\n";
            return rc;
        }
        if (c_ideals->parsed()) {
            GraphHandle g;
            if (int rc = load_graph(graph_path, g))
                return report_errors(rc);
            int rc = ckg_ideal_lattice(g.g, &out.s);
            if (rc == CKG_OK)
                std::cout << out.str() << "\n";
            return report_errors(rc);
        }
        if (c_prim->parsed()) {
            GraphHandle g;
            if (int rc = load_graph(graph_path, g))
                return report_errors(rc);
            int rc = as_dot ? ckg_prim_space_dot(g.g, &out.s) : ckg_prim_space(g.g, &out.s);
            if (rc == CKG_OK)
                std::cout << out.str() << (as_dot ? "" : "\n");
            return report_errors(rc);
        }
        if (c_k->parsed()) {
            GraphHandle g;
            if (int rc = load_graph(graph_path, g))
                return report_errors(rc);
            int rc = ckg_k_theory(g.g, &out.s);
            if (rc == CKG_ERROR)
                return report_errors(rc);
            json j = json::parse(out.str());
            std::cout << "K0 = " << group_pretty(j["k0"]) << "\n"
                      << "K1 = " << group_pretty(j["k1"]) << "\n";
            return rc;
        }
        if (c_xk->parsed()) {
            GraphHandle g;
            if (int rc = load_graph(graph_path, g))
                return report_errors(rc);
            int rc = ckg_filtered_xk(g.g, verbose ? 1 : 0, &out.s);
            if (rc == CKG_ERROR)
                return report_errors(rc);
            json j = json::parse(out.str());
            std::cout << "point  K0  K1\n";
            for (const auto& e : j["at"])
                std::cout << e["point"].get<std::string>() << "  "
                          << group_pretty(e["groups"]["k0"]) << "  "
                          << group_pretty(e["groups"]["k1"]) << "\n";
            if (verbose)
                std::cout << j.dump(2) << "\n";
            return rc;
        }
        if (c_splice->parsed()) {
            GraphHandle g;
            if (int rc = load_graph(graph_path, g))
                return report_errors(rc);
            int rc = ckg_cuntz_splice(g.g, vertex.c_str(), &out.s);
            if (rc == CKG_OK)
                std::cout << out.str() << "\n";
            return report_errors(rc);
        }
        if (c_verify->parsed()) {
            GraphHandle g;
            if (int rc = load_graph(graph_path, g))
                return report_errors(rc);
            int rc = ckg_verify(g.g, vertex.c_str(), break_psi ? 1 : 0, verbose ? 1 : 0, &out.s);
            if (rc == CKG_ERROR)
                return report_errors(rc);
            std::cout << out.str() << "\n";
            return rc;
        }
        if (c_desing->parsed() || c_commute->parsed()) {
            GraphHandle g;
            if (int rc = load_graph(graph_path, g))
                return report_errors(rc);
            std::string orders = order_path.empty() ? "" : read_file(order_path);
            int rc = c_desing->parsed()
                         ? ckg_desingularize(g.g, orders.c_str(), depth, &out.s)
                         : ckg_commute(g.g, vertex.c_str(), orders.c_str(), depth, &out.s);
            if (rc == CKG_ERROR)
                return report_errors(rc);
            std::cout << out.str() << "\n";
            return rc;
        }
        if (c_fuzz->parsed()) {
            int rc = ckg_fuzz(seed, trials, max_vertices, max_mult, break_psi ? 1 : 0, &out.s);
            if (rc == CKG_ERROR)
                return report_errors(rc);
            json j = json::parse(out.str());
            std::cout << "passes: " << j["passes"] << "  failures: " << j["failures"]
                      << "  skips: " << j["skips"] << "\n";
            if (!dump_dir.empty())
                for (const auto& inst : j["failing_instances"]) {
                    std::string path =
                        dump_dir + "/fail_" + std::to_string(inst["trial"].get<int>()) + ".json";
                    std::ofstream of(path);
                    of << inst.dump(2) << "\n";
                    std::cout << "dumped " << path << "\n";
                }
            return rc;
        }
        if (c_dot->parsed()) {
            GraphHandle g;
            if (int rc = load_graph(graph_path, g))
                return report_errors(rc);
            int rc = ckg_graph_to_dot(g.g, &out.s);
            if (rc == CKG_OK)
                std::cout << out.str();
            return report_errors(rc);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
