#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ckgraph/graph.hpp"

namespace ckgraph {

/// Result of the Cuntz Splice at v: the original graph plus the two-vertex
/// segment v ⇄ u₁ ⇄ u₂ with loops at u₁ and u₂.
struct SpliceResult {
    Graph graph;
    std::string v;
    std::string u1;
    std::string u2;
};

/// Requires return_path_class(g, v) = TwoOrMore.
SpliceResult cuntz_splice(const Graph& g, const std::string& v);

/// Eventually periodic enumeration of the outgoing edges of a singular
/// vertex: targets pattern[0], pattern[1], …, looping back to
/// pattern[period_start] after the end. Finite-multiplicity targets must
/// appear exactly their multiplicity many times before period_start;
/// ω-targets must appear in the periodic part.
struct TailOrder {
    std::vector<std::string> pattern;
    int period_start = 0;

    /// i-th target of the enumeration, 0-based.
    const std::string& target(int i) const;
};

/// Depth-truncated Drinen–Tomforde desingularization. Frontier vertices
/// are the depth-d tail ends (sinks in the truncation); everything at
/// depth < d agrees with the infinite construction.
struct TruncatedDesing {
    Graph graph;
    std::set<std::string> frontier;
    int depth = 0;
    std::map<std::string, std::vector<std::string>> tail_map; // singular vertex -> (v1, ..., vd)
};

TruncatedDesing desingularize_truncated(const Graph& g,
                                        const std::map<std::string, TailOrder>& order, int depth);

/// Crisp–Gow contraction of a single regular vertex w without a loop:
/// mult(u,x) += mult(u,w)·mult(w,x) for all u, x ≠ w, then w is removed.
Graph contract_vertex(const Graph& g, const std::string& w);

/// Multiplicity-preserving vertex bijection, if one exists. Deterministic
/// backtracking search; size-guarded (default 24 vertices, environment
/// variable CKGRAPH_MAX_ISO_VERTICES).
std::optional<std::map<std::string, std::string>> graphs_isomorphic(const Graph& g1,
                                                                    const Graph& g2);

/// Structural verification that truncated desingularization commutes with
/// the Cuntz Splice (splice∘desing vs. contract(v₁)∘desing∘splice, frontier
/// layers stripped before comparison).
struct CommuteReport {
    bool commutes = false;
    bool splice_class_two_or_more = false; // v supports >= 2 return paths in F
    bool trivial = false;                  // no singular vertices: desing is the identity
    std::map<std::string, std::string> bijection;
};

CommuteReport verify_desing_splice_commutes(const Graph& g, const std::string& v,
                                            const std::map<std::string, TailOrder>& order,
                                            int depth);

} // namespace ckgraph
