#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ckgraph/graph.hpp"

namespace ckgraph {

/// (H, B): H hereditary and saturated, B ⊆ H_∞^fin. Indexes the ideal
/// J_(H,B) of the graph algebra.
struct AdmissiblePair {
    std::set<std::string> h;
    std::set<std::string> b;

    friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
    friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// All admissible pairs with the order (H,B) ≤ (H′,B′) iff H ⊆ H′ and
/// B ⊆ H′ ∪ B′.
struct IdealLattice {
    std::vector<AdmissiblePair> pairs;
    std::vector<std::vector<bool>> leq; // leq[i][j]: pairs[i] <= pairs[j]

    int size() const { return static_cast<int>(pairs.size()); }
    int index_of(const AdmissiblePair& p) const;
    int bottom() const;
    int top() const;

    /// Least upper bound of elements i, j, if it exists.
    std::optional<int> join(int i, int j) const;
    std::optional<int> meet(int i, int j) const;
    bool is_lattice() const;
    bool is_distributive() const;
    std::vector<int> join_irreducibles() const;
};

/// Finite T₀ space: points are the non-bottom join-irreducible elements of
/// the ideal lattice; x ≥ y iff pair_of(x) ≤ pair_of(y) (U_x ⊆ U_y).
struct PrimSpace {
    std::vector<std::string> points;
    std::vector<std::vector<bool>> geq; // geq[i][j]: points[i] >= points[j]
    std::vector<AdmissiblePair> pair_of;
    std::vector<std::set<std::string>> h_of;

    int size() const { return static_cast<int>(points.size()); }
    int index_of(const std::string& point) const;
};

/// Smallest hereditary and saturated superset of S.
std::set<std::string> hs_closure(const Graph& g, const std::set<std::string>& s);

bool is_hereditary(const Graph& g, const std::set<std::string>& s);
bool is_saturated(const Graph& g, const std::set<std::string>& s);

/// All hereditary and saturated subsets, ordered by (size, lexicographic).
std::vector<std::set<std::string>> enumerate_hs(const Graph& g);

/// Infinite emitters outside H emitting a finite non-zero number of edges
/// into the complement of H. Throws if H is not hereditary and saturated.
std::set<std::string> h_infinity_fin(const Graph& g, const std::set<std::string>& h);

/// Requires Condition (K) (else the pair/ideal bijection fails) and the
/// brute-force size bound.
IdealLattice ideal_lattice(const Graph& g);

/// The order isomorphism 𝔸ℙ(E) → 𝔸ℙ(E_C^v) of the Cuntz Splice:
/// (H,B) ↦ (H,B) if v ∉ H, (H ∪ {u₁,u₂}, B) if v ∈ H. Verified to be a
/// bijection preserving and reflecting ≤; a failure would falsify the
/// underlying proposition and raises internal_error.
std::map<AdmissiblePair, AdmissiblePair> splice_lattice_map(const Graph& g, const std::string& v);

/// Join-irreducible realization of the primitive-ideal space. Refuses
/// non-lattice or non-distributive inputs with a structural error.
PrimSpace prim_space(const IdealLattice& lat);

/// The order isomorphism of PrimSpaces induced by splice_lattice_map,
/// as a map from points of prim(E) to points of prim(E_C^v).
std::map<std::string, std::string> prim_homeo_under_splice(const Graph& g, const std::string& v);

} // namespace ckgraph
