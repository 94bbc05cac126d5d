#pragma once

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ckgraph/graph.hpp"
#include "ckgraph/ideals.hpp"
#include "ckgraph/moves.hpp"
#include "ckgraph/verifier.hpp"
#include "ckgraph/xk.hpp"

namespace ckgraph {

/// {"vertices": [...], "edges": [{"src","dst","mult": n | "inf"}]}.
/// Absent pairs have multiplicity 0; duplicate (src,dst) entries are rejected.
Graph graph_from_json(const nlohmann::json& j);
Graph graph_from_json_string(const std::string& text);
nlohmann::json graph_to_json(const Graph& g);

/// One node per vertex; finite multiplicities as edge labels, ω rendered
/// as "ω" with a dashed style.
std::string graph_to_dot(const Graph& g);

/// [{"vertex": "v", "pattern": ["w","x"], "period_start": 0}, ...]
std::map<std::string, TailOrder> tail_orders_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json group_to_json(const FgAbelianGroup& g);
nlohmann::json graded_group_to_json(const GradedGroup& g, bool verbose);

nlohmann::json purely_infinite_to_json(const PurelyInfiniteReport& r);
nlohmann::json lattice_to_json(const IdealLattice& lat);
nlohmann::json prim_space_to_json(const PrimSpace& x);
std::string prim_space_to_dot(const PrimSpace& x);
nlohmann::json xk_to_json(const XKModule& m, bool verbose);
nlohmann::json invariance_to_json(const InvarianceReport& r, bool verbose);
nlohmann::json commute_to_json(const CommuteReport& r);

} // namespace ckgraph
