#include "ckgraph/fuzz.hpp"

#include <random>

#include <nlohmann/json.hpp>

#include "ckgraph/json_io.hpp"
#include "ckgraph/verifier.hpp"

namespace ckgraph {

namespace {

constexpr int kRestarts = 64;
constexpr int kRepairRounds = 32;

bool connects_to_cycle(const std::vector<std::vector<bool>>& reach, int u) {
    int n = static_cast<int>(reach.size());
    for (int w = 0; w < n; ++w)
        if (reach[w][w] && (u == w || reach[u][w]))
            return true;
    return false;
}

// One rejection-sampling-with-repair attempt. Repairs stay within max_mult;
// an instance needing more gets rejected.
std::optional<std::pair<Graph, std::string>> try_once(std::mt19937_64& rng, int max_vertices,
                                                      int max_mult) {
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i)
        vs.push_back("v" + std::to_string(i));
    Graph g(std::move(vs));
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            if (rng() % 3 == 0)
                g.set_mult(u, w, ExtendedNat(1 + rng() % max_mult));

    for (int round = 0; round < kRepairRounds; ++round) {
        bool repaired = false;

        // No sinks: give empty rows a random edge.
        for (int u = 0; u < n; ++u)
            if (g.out_mult(u).is_zero()) {
                g.set_mult(u, static_cast<int>(rng() % n), ExtendedNat(1 + rng() % max_mult));
                repaired = true;
            }
        if (repaired)
            continue;

        // Condition (K): a class-One vertex sits on a bare cycle; double up
        // one of its cycle edges.
        for (int u = 0; u < n && !repaired; ++u) {
            if (return_path_class(g, u) != ReturnPathClass::One)
                continue;
            for (int w = 0; w < n && !repaired; ++w)
                if (g.mult(u, w) == ExtendedNat(1) && reaches_refl(g, w, u)) {
                    if (max_mult < 2)
                        return std::nullopt;
                    g.add_mult(u, w, ExtendedNat(1));
                    repaired = true;
                }
        }
        if (repaired)
            continue;

        // Every vertex must connect to a cycle; route stragglers into one.
        auto reach = reach_matrix(g);
        int cyc = -1;
        for (int w = 0; w < n && cyc < 0; ++w)
            if (reach[w][w])
                cyc = w;
        if (cyc < 0)
            return std::nullopt; // no cycle at all and no class-One repair fired
        for (int u = 0; u < n && !repaired; ++u)
            if (!connects_to_cycle(reach, u)) {
                g.add_mult(u, cyc, ExtendedNat(1));
                repaired = true;
            }
        if (repaired)
            continue;

        if (!purely_infinite_report(g).verdict())
            return std::nullopt;
        for (int u = 0; u < n; ++u)
            if (return_path_class(g, u) == ReturnPathClass::TwoOrMore)
                return std::make_pair(g, g.vertex(u));
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::pair<Graph, std::string>> gen_random_instance(const FuzzConfig& cfg, int trial) {
    if (cfg.max_vertices < 1 || cfg.max_mult < 1)
        throw precondition_error("gen_random_instance: bounds must be >= 1");
    std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(trial) + 1);
    for (int r = 0; r < kRestarts; ++r)
        if (auto inst = try_once(rng, cfg.max_vertices, cfg.max_mult))
            return inst;
    return std::nullopt;
}

FuzzSummary fuzz_run(const FuzzConfig& cfg, bool corrupt_sign) {
    FuzzSummary sum;
    for (int t = 0; t < cfg.trials; ++t) {
        auto inst = gen_random_instance(cfg, t);
        if (!inst) {
            ++sum.skips;
            continue;
        }
        InvarianceReport rep = verify_cuntz_splice_invariance(inst->first, inst->second, corrupt_sign);
        if (rep.verdict) {
            ++sum.passes;
        } else {
            ++sum.failures;
            nlohmann::json dump;
            dump["graph"] = graph_to_json(inst->first);
            dump["vertex"] = inst->second;
            dump["trial"] = t;
            dump["failing_stage"] = rep.failing_stage;
            sum.failing_instances.push_back(dump.dump());
        }
    }
    return sum;
}

} // namespace ckgraph
