#include "ckgraph/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace ckgraph {

Graph::Graph(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    for (int i = 0; i < size(); ++i) {
        auto [it, fresh] = index_.emplace(vertices_[i], i);
        if (!fresh)
            throw parse_error("duplicate vertex id: " + vertices_[i]);
    }
    mult_.assign(static_cast<size_t>(size()) * size(), ExtendedNat(0));
}

bool Graph::has_vertex(const std::string& id) const { return index_.count(id) != 0; }

int Graph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw parse_error("unknown vertex id: " + id);
    return it->second;
}

ExtendedNat Graph::out_mult(int u) const {
    ExtendedNat total(0);
    for (int w = 0; w < size(); ++w)
        total += mult(u, w);
    return total;
}

Graph Graph::with_vertex(const std::string& id) const {
    auto vs = vertices_;
    vs.push_back(id);
    Graph g(std::move(vs));
    for (int u = 0; u < size(); ++u)
        for (int w = 0; w < size(); ++w)
            g.set_mult(u, w, mult(u, w));
    return g;
}

Graph Graph::without_vertex(int i) const {
    std::vector<int> keep;
    for (int j = 0; j < size(); ++j)
        if (j != i)
            keep.push_back(j);
    return induced(keep);
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<std::string> vs;
    vs.reserve(keep.size());
    for (int i : keep)
        vs.push_back(vertices_[i]);
    Graph g(std::move(vs));
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b)
            g.set_mult(static_cast<int>(a), static_cast<int>(b), mult(keep[a], keep[b]));
    return g;
}

std::string to_string(VertexClass c) {
    switch (c) {
    case VertexClass::Regular: return "regular";
    case VertexClass::Sink: return "sink";
    case VertexClass::InfiniteEmitter: return "infinite-emitter";
    }
    return "?";
}

std::string to_string(ReturnPathClass c) {
    switch (c) {
    case ReturnPathClass::Zero: return "zero";
    case ReturnPathClass::One: return "one";
    case ReturnPathClass::TwoOrMore: return "two-or-more";
    }
    return "?";
}

VertexClass vertex_class(const Graph& g, int v) {
    ExtendedNat total = g.out_mult(v);
    if (total.is_zero())
        return VertexClass::Sink;
    if (total.is_omega())
        return VertexClass::InfiniteEmitter;
    return VertexClass::Regular;
}

VertexClass vertex_class(const Graph& g, const std::string& v) {
    return vertex_class(g, g.index_of(v));
}

std::vector<std::vector<bool>> reach_matrix(const Graph& g) {
    int n = g.size();
    // step[u][w]: edge u -> w
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            reach[u][w] = !g.mult(u, w).is_zero();
    // Reachability by paths of length >= 1: closure without adding the
    // diagonal for free.
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            if (reach[u][k])
                for (int w = 0; w < n; ++w)
                    if (reach[k][w])
                        reach[u][w] = true;
    return reach;
}

bool reaches(const Graph& g, int v, int w) { return reach_matrix(g)[v][w]; }

bool reaches(const Graph& g, const std::string& v, const std::string& w) {
    return reaches(g, g.index_of(v), g.index_of(w));
}

bool reaches_refl(const Graph& g, int v, int w) { return v == w || reaches(g, v, w); }

bool reaches_refl(const Graph& g, const std::string& v, const std::string& w) {
    return reaches_refl(g, g.index_of(v), g.index_of(w));
}

std::vector<int> scc_of(const Graph& g, int v) {
    auto reach = reach_matrix(g);
    std::vector<int> comp;
    for (int w = 0; w < g.size(); ++w)
        if (w == v || (reach[v][w] && reach[w][v]))
            comp.push_back(w);
    return comp;
}

ReturnPathClass return_path_class(const Graph& g, int v) {
    auto reach = reach_matrix(g);
    if (!reach[v][v])
        return ReturnPathClass::Zero;
    // v lies on a cycle; its SCC consists of the vertices mutually
    // reachable with v. One return path iff the SCC is a bare simple
    // cycle: every SCC vertex has exactly one edge into the SCC, with
    // multiplicity 1.
    std::vector<int> comp = scc_of(g, v);
    for (int u : comp) {
        ExtendedNat inside(0);
        for (int w : comp)
            inside += g.mult(u, w);
        if (!(inside == ExtendedNat(1)))
            return ReturnPathClass::TwoOrMore;
    }
    return ReturnPathClass::One;
}

ReturnPathClass return_path_class(const Graph& g, const std::string& v) {
    return return_path_class(g, g.index_of(v));
}

bool condition_K(const Graph& g) {
    for (int v = 0; v < g.size(); ++v)
        if (return_path_class(g, v) == ReturnPathClass::One)
            return false;
    return true;
}

std::set<std::string> breaking_vertices(const Graph& g) {
    std::set<std::string> out;
    auto reach = reach_matrix(g);
    for (int v = 0; v < g.size(); ++v) {
        if (vertex_class(g, v) != VertexClass::InfiniteEmitter)
            continue;
        ExtendedNat back(0);
        for (int w = 0; w < g.size(); ++w)
            if (w == v || reach[w][v])
                back += g.mult(v, w);
        if (!back.is_zero() && !back.is_omega())
            out.insert(g.vertex(v));
    }
    return out;
}

int brute_force_vertex_bound() {
    if (const char* env = std::getenv("CKGRAPH_MAX_BRUTE_VERTICES"))
        return std::atoi(env);
    return 16;
}

namespace {

bool is_maximal_tail(const Graph& g, const std::vector<std::vector<bool>>& reach, unsigned mask) {
    int n = g.size();
    auto in = [&](int w) { return (mask >> w) & 1u; };
    // (1) upward closed: v >= w and w in M implies v in M.
    for (int v = 0; v < n; ++v)
        if (!in(v))
            for (int w = 0; w < n; ++w)
                if (in(w) && reach[v][w])
                    return false;
    // (2) regular vertices in M emit at least one edge into M.
    for (int v = 0; v < n; ++v) {
        if (!in(v) || vertex_class(g, v) != VertexClass::Regular)
            continue;
        bool hit = false;
        for (int w = 0; w < n && !hit; ++w)
            hit = in(w) && !g.mult(v, w).is_zero();
        if (!hit)
            return false;
    }
    // (3) downward directed (with reflexive >=).
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            if (!in(v) || !in(w))
                continue;
            bool ok = false;
            for (int y = 0; y < n && !ok; ++y)
                ok = in(y) && (v == y || reach[v][y]) && (w == y || reach[w][y]);
            if (!ok)
                return false;
        }
    return true;
}

} // namespace

std::vector<std::set<std::string>> maximal_tails(const Graph& g) {
    int n = g.size();
    if (n > brute_force_vertex_bound())
        throw size_limit_error("maximal_tails: vertex count exceeds brute-force bound");
    auto reach = reach_matrix(g);
    std::vector<std::set<std::string>> tails;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        if (is_maximal_tail(g, reach, mask)) {
            std::set<std::string> m;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1u)
                    m.insert(g.vertex(v));
            tails.push_back(std::move(m));
        }
    return tails;
}

std::string PurelyInfiniteReport::failing_criterion() const {
    if (!condition_k)
        return "condition-K";
    if (!no_breaking_vertices)
        return "no-breaking-vertices";
    if (!tails_connect_to_cycles)
        return "tails-connect-to-cycles";
    return "";
}

PurelyInfiniteReport purely_infinite_report(const Graph& g) {
    PurelyInfiniteReport rep;
    rep.condition_k = condition_K(g);
    rep.no_breaking_vertices = breaking_vertices(g).empty();
    rep.tails_connect_to_cycles = true;
    auto reach = reach_matrix(g);
    for (const auto& tail : maximal_tails(g)) {
        std::vector<int> idx;
        for (const auto& id : tail)
            idx.push_back(g.index_of(id));
        // Cycle vertices within the induced subgraph on the tail.
        Graph sub = g.induced(idx);
        auto subreach = reach_matrix(sub);
        for (int v : idx) {
            bool connects = false;
            for (size_t yi = 0; yi < idx.size() && !connects; ++yi)
                if (subreach[yi][yi] && reaches_refl(g, v, idx[yi]))
                    connects = true;
            if (!connects) {
                rep.tails_connect_to_cycles = false;
                break;
            }
        }
        if (!rep.tails_connect_to_cycles)
            break;
    }
    return rep;
}

IntMatrix adjacency_matrix(const Graph& g, const std::vector<std::string>& rows,
                           const std::vector<std::string>& cols) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) {
            ExtendedNat e = g.mult(rows[r], cols[c]);
            if (e.is_omega())
                throw error("adjacency_matrix: infinite multiplicity at (" + rows[r] + ", " +
                            cols[c] + ")");
            m.at(static_cast<int>(r), static_cast<int>(c)) = mpz_class(static_cast<unsigned long>(e.finite()));
        }
    return m;
}

IntMatrix adjacency_matrix(const Graph& g) {
    return adjacency_matrix(g, g.vertices(), g.vertices());
}

} // namespace ckgraph
