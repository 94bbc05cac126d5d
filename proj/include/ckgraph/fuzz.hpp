#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ckgraph/graph.hpp"

namespace ckgraph {

/// Deterministic instance stream: the same (seed, trial index) always
/// yields the same instance.
struct FuzzConfig {
    std::uint64_t seed = 0;
    int trials = 0;
    int max_vertices = 8;
    int max_mult = 3;
};

/// A regular graph whose purely-infinite verdict is true together with a
/// vertex of return-path class TwoOrMore, produced by rejection sampling
/// with repair. nullopt = skip (repair failed within the attempt budget).
std::optional<std::pair<Graph, std::string>> gen_random_instance(const FuzzConfig& cfg, int trial);

struct FuzzSummary {
    int passes = 0;
    int failures = 0;
    int skips = 0;
    std::vector<std::string> failing_instances; // graph JSON + vertex, for replay
};

/// Runs verify_cuntz_splice_invariance on every generated instance.
/// corrupt_sign is the negative-control hook (breaks ψ₀ on purpose).
FuzzSummary fuzz_run(const FuzzConfig& cfg, bool corrupt_sign = false);

} // namespace ckgraph
