#pragma once

// Shared test utilities: small graph builders and deterministic random
// generation for property suites.

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ckgraph/graph.hpp"

namespace testutil {

// Multiplicity -1 stands for ω.
inline ckgraph::Graph make_graph(std::vector<std::string> vs,
                                 const std::vector<std::tuple<std::string, std::string, long>>& es) {
    ckgraph::Graph g(std::move(vs));
    for (const auto& [s, d, m] : es)
        g.set_mult(s, d, m < 0 ? ckgraph::ExtendedNat::omega() : ckgraph::ExtendedNat(m));
    return g;
}

inline ckgraph::Graph single_loop_graph(const std::string& v, long loops) {
    return make_graph({v}, {{v, v, loops}});
}

// Unrepaired random graph: edge density 1/3, multiplicities 1..max_mult,
// optional small chance of an ω edge.
inline ckgraph::Graph random_graph(std::mt19937_64& rng, int max_vertices, int max_mult,
                                   bool allow_omega = false) {
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i)
        vs.push_back("v" + std::to_string(i));
    ckgraph::Graph g(std::move(vs));
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            if (rng() % 3 == 0) {
                if (allow_omega && rng() % 12 == 0)
                    g.set_mult(u, w, ckgraph::ExtendedNat::omega());
                else
                    g.set_mult(u, w, ckgraph::ExtendedNat(1 + rng() % max_mult));
            }
    return g;
}

} // namespace testutil
