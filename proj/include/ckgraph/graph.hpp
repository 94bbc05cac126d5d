#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ckgraph/extnat.hpp"
#include "ckgraph/intmatrix.hpp"

namespace ckgraph {

/// A finite directed graph with edge multiplicities in ℕ ∪ {ω}. Edges are
/// stored as multiplicities only; individual edge identities never matter
/// except for desingularization, where an explicit enumeration is supplied
/// by the caller (see moves.hpp).
///
/// Treated as an immutable value once built; all operations below are pure.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> vertices);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex(int i) const { return vertices_[i]; }

    bool has_vertex(const std::string& id) const;
    /// Throws parse_error on unknown ids.
    int index_of(const std::string& id) const;

    ExtendedNat mult(int u, int w) const { return mult_[static_cast<size_t>(u) * size() + w]; }
    ExtendedNat mult(const std::string& u, const std::string& w) const {
        return mult(index_of(u), index_of(w));
    }
    void set_mult(int u, int w, ExtendedNat m) { mult_[static_cast<size_t>(u) * size() + w] = m; }
    void set_mult(const std::string& u, const std::string& w, ExtendedNat m) {
        set_mult(index_of(u), index_of(w), m);
    }
    void add_mult(int u, int w, ExtendedNat m) { set_mult(u, w, mult(u, w) + m); }

    /// Total outgoing multiplicity of vertex u.
    ExtendedNat out_mult(int u) const;

    /// New graph with an extra vertex appended (multiplicities 0).
    Graph with_vertex(const std::string& id) const;
    /// New graph with vertex i removed (all other multiplicities kept).
    Graph without_vertex(int i) const;
    /// Restriction to a vertex subset, in the induced order.
    Graph induced(const std::vector<int>& keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> vertices_;
    std::map<std::string, int> index_;
    std::vector<ExtendedNat> mult_;
};

enum class VertexClass { Regular, Sink, InfiniteEmitter };

enum class ReturnPathClass { Zero, One, TwoOrMore };

std::string to_string(VertexClass c);
std::string to_string(ReturnPathClass c);

VertexClass vertex_class(const Graph& g, const std::string& v);
VertexClass vertex_class(const Graph& g, int v);

/// v ≥ w: there is a path of length ≥ 1 from v to w. In particular
/// reaches(g, v, v) holds iff v lies on a cycle.
bool reaches(const Graph& g, int v, int w);
bool reaches(const Graph& g, const std::string& v, const std::string& w);

/// Reflexive variant: additionally true when v = w.
bool reaches_refl(const Graph& g, int v, int w);
bool reaches_refl(const Graph& g, const std::string& v, const std::string& w);

/// reach[v][w] = reaches(g, v, w), computed once for all pairs.
std::vector<std::vector<bool>> reach_matrix(const Graph& g);

/// Strongly connected component of v under mutual length-≥1 reachability.
/// A vertex with no loop and no mutual partner yields the singleton {v}
/// with v not on a cycle.
std::vector<int> scc_of(const Graph& g, int v);

/// Classifies the set of return paths based at v. "One" is the case
/// forbidden by Condition (K): the SCC of v is a bare simple cycle with
/// multiplicity-1 edges and no further internal edges.
ReturnPathClass return_path_class(const Graph& g, const std::string& v);
ReturnPathClass return_path_class(const Graph& g, int v);

/// No vertex supports precisely one return path.
bool condition_K(const Graph& g);

/// Infinite emitters whose total multiplicity of edges leading back to
/// themselves (range equals v or reaches v) is finite and non-zero.
std::set<std::string> breaking_vertices(const Graph& g);

/// Size guard for subset enumerations; configurable via the environment
/// variable CKGRAPH_MAX_BRUTE_VERTICES (default 16).
int brute_force_vertex_bound();

/// All maximal tails, by brute force over non-empty vertex subsets.
std::vector<std::set<std::string>> maximal_tails(const Graph& g);

/// The three Hong–Szymański criteria plus their conjunction.
struct PurelyInfiniteReport {
    bool condition_k = false;
    bool no_breaking_vertices = false;
    bool tails_connect_to_cycles = false;
    bool verdict() const { return condition_k && no_breaking_vertices && tails_connect_to_cycles; }
    /// Name of the first failing criterion, or empty.
    std::string failing_criterion() const;
};

PurelyInfiniteReport purely_infinite_report(const Graph& g);

/// Submatrix of A^E with the given row/column orderings. Throws error
/// naming the offending pair if a selected entry is ω.
IntMatrix adjacency_matrix(const Graph& g, const std::vector<std::string>& rows,
                           const std::vector<std::string>& cols);
IntMatrix adjacency_matrix(const Graph& g);

} // namespace ckgraph
