#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckgraph/graph.hpp"
#include "ckgraph/ideals.hpp"
#include "ckgraph/intmatrix.hpp"

namespace ckgraph {

/// ℤ/2-graded K-theory value. K₀ carries its presentation (ambient rank
/// plus relation matrix) and K₁ an explicit kernel basis, so that diagram
/// maps can be stated as exact matrices rather than lost in canonical forms.
struct GradedGroup {
    FgAbelianGroup k0;
    FgAbelianGroup k1;
    int k0_ambient_rank = 0;
    IntMatrix k0_relations;   // K0 = Z^ambient / colspan(relations)
    IntMatrix k1_kernel_basis; // columns in Z^ambient
};

/// True iff invariant factors and free ranks match in both degrees.
/// Pointwise group comparison only; says nothing about diagram maps.
bool graded_groups_isomorphic(const GradedGroup& a, const GradedGroup& b);

/// The matrix of (A^E − 𝟙)^t with rows indexed by all vertices and columns
/// by regular vertices only.
IntMatrix k_matrix(const Graph& g);

/// K₀ = coker, K₁ = ker of k_matrix (the "unfiltered formula"; valid for
/// graphs with sinks and infinite emitters as well).
GradedGroup k_theory(const Graph& g);

/// XK(C*(E)): a graded group per point of X with transition matrices per
/// comparable pair.
struct XKModule {
    PrimSpace space;
    std::vector<std::vector<std::string>> enum_of; // chosen enumeration of H_x
    std::vector<GradedGroup> at;
    /// (x, y) with x ≥ y, x ≠ y → (K₀ ambient inclusion, K₁ basis-change).
    std::map<std::pair<int, int>, std::pair<IntMatrix, IntMatrix>> trans;
};

/// Requires every vertex Regular (the regular-case hypothesis); with
/// singular vertices present the per-ideal K-theory formula is out of
/// scope and a scope error directing to desingularization is thrown.
/// If v_first is given, it heads the enumeration of every H_x containing it.
XKModule filtered_xk(const Graph& g, const PrimSpace& x,
                     const std::optional<std::string>& v_first = std::nullopt);

} // namespace ckgraph
