#include "ckgraph/moves.hpp"

#include <algorithm>
#include <cstdlib>

namespace ckgraph {

namespace {

std::string fresh_id(const Graph& g, std::string base) {
    while (g.has_vertex(base))
        base += "'";
    return base;
}

} // namespace

SpliceResult cuntz_splice(const Graph& g, const std::string& v) {
    ReturnPathClass cls = return_path_class(g, v);
    if (cls != ReturnPathClass::TwoOrMore)
        throw precondition_error("cuntz_splice: " + v + " must support at least two return paths (found class " +
                                 to_string(cls) + ")");
    std::string u1 = fresh_id(g, "u1");
    Graph g1 = g.with_vertex(u1);
    std::string u2 = fresh_id(g1, "u2");
    Graph out = g1.with_vertex(u2);
    out.set_mult(v, u1, ExtendedNat(1));
    out.set_mult(u1, v, ExtendedNat(1));
    out.set_mult(u1, u1, ExtendedNat(1));
    out.set_mult(u1, u2, ExtendedNat(1));
    out.set_mult(u2, u1, ExtendedNat(1));
    out.set_mult(u2, u2, ExtendedNat(1));
    return {std::move(out), v, u1, u2};
}

const std::string& TailOrder::target(int i) const {
    int len = static_cast<int>(pattern.size());
    if (i < len)
        return pattern[i];
    int period = len - period_start;
    return pattern[period_start + (i - period_start) % period];
}

namespace {

void validate_order(const Graph& g, int v, const TailOrder& ord) {
    const std::string& id = g.vertex(v);
    int len = static_cast<int>(ord.pattern.size());
    if (ord.period_start < 0 || ord.period_start >= len)
        throw parse_error("tail order for " + id + ": period_start out of range");
    std::map<std::string, int> pre, cyc;
    for (int i = 0; i < len; ++i) {
        const std::string& t = ord.pattern[i];
        if (g.mult(id, t).is_zero())
            throw parse_error("tail order for " + id + ": " + t + " is not a target");
        (i < ord.period_start ? pre : cyc)[t] += 1;
    }
    for (int w = 0; w < g.size(); ++w) {
        ExtendedNat m = g.mult(v, w);
        if (m.is_zero())
            continue;
        const std::string& t = g.vertex(w);
        if (m.is_omega()) {
            if (cyc[t] == 0)
                throw parse_error("tail order for " + id + ": ω-target " + t +
                                  " missing from the periodic part");
        } else {
            if (cyc[t] != 0 || pre[t] != static_cast<int>(m.finite()))
                throw parse_error("tail order for " + id + ": enumeration does not exhaust edges to " + t);
        }
    }
}

} // namespace

TruncatedDesing desingularize_truncated(const Graph& g, const std::map<std::string, TailOrder>& order,
                                        int depth) {
    if (depth < 1)
        throw precondition_error("desingularize_truncated: depth must be >= 1");
    std::vector<int> singular;
    for (int v = 0; v < g.size(); ++v)
        if (vertex_class(g, v) != VertexClass::Regular)
            singular.push_back(v);

    TruncatedDesing out;
    out.depth = depth;
    Graph work = g;
    for (int v : singular) {
        const std::string& id = g.vertex(v);
        bool emitter = vertex_class(g, v) == VertexClass::InfiniteEmitter;
        const TailOrder* ord = nullptr;
        if (emitter) {
            auto it = order.find(id);
            if (it == order.end())
                throw parse_error("desingularize_truncated: no tail order for infinite emitter " + id);
            validate_order(g, v, it->second);
            ord = &it->second;
        }
        std::vector<std::string> tail;
        for (int i = 1; i <= depth; ++i) {
            std::string t = fresh_id(work, id + "#" + std::to_string(i));
            work = work.with_vertex(t);
            tail.push_back(t);
        }
        // Replace the singular vertex's outgoing edges by the tail.
        for (int w = 0; w < work.size(); ++w)
            work.set_mult(work.index_of(id), w, ExtendedNat(0));
        work.set_mult(id, tail[0], ExtendedNat(1));
        if (emitter)
            work.add_mult(work.index_of(id), work.index_of(ord->target(0)), ExtendedNat(1));
        for (int i = 1; i < depth; ++i) {
            work.set_mult(tail[i - 1], tail[i], ExtendedNat(1));
            if (emitter)
                work.add_mult(work.index_of(tail[i - 1]), work.index_of(ord->target(i)),
                              ExtendedNat(1));
        }
        out.frontier.insert(tail.back());
        out.tail_map[id] = std::move(tail);
    }
    out.graph = std::move(work);
    return out;
}

Graph contract_vertex(const Graph& g, const std::string& wid) {
    int w = g.index_of(wid);
    if (vertex_class(g, w) != VertexClass::Regular)
        throw precondition_error("contract_vertex: " + wid + " is not regular");
    if (!g.mult(w, w).is_zero())
        throw precondition_error("contract_vertex: " + wid + " has a loop");
    Graph out = g;
    for (int u = 0; u < g.size(); ++u) {
        if (u == w)
            continue;
        for (int x = 0; x < g.size(); ++x) {
            if (x == w)
                continue;
            out.add_mult(u, x, g.mult(u, w) * g.mult(w, x));
        }
    }
    return out.without_vertex(w);
}

namespace {

int iso_vertex_bound() {
    if (const char* env = std::getenv("CKGRAPH_MAX_ISO_VERTICES"))
        return std::atoi(env);
    return 24;
}

// Degree signature: sorted out-row and in-column multiplicity multisets.
std::vector<std::pair<std::vector<ExtendedNat>, std::vector<ExtendedNat>>> signatures(const Graph& g) {
    int n = g.size();
    std::vector<std::pair<std::vector<ExtendedNat>, std::vector<ExtendedNat>>> sig(n);
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
            sig[v].first.push_back(g.mult(v, w));
            sig[v].second.push_back(g.mult(w, v));
        }
        std::sort(sig[v].first.begin(), sig[v].first.end());
        std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    return sig;
}

bool extend_iso(const Graph& g1, const Graph& g2, std::vector<int>& map12, int next,
                const std::vector<std::vector<bool>>& candidate) {
    int n = g1.size();
    if (next == n)
        return true;
    std::vector<bool> used(n, false);
    for (int v = 0; v < next; ++v)
        used[map12[v]] = true;
    for (int c = 0; c < n; ++c) {
        if (used[c] || !candidate[next][c])
            continue;
        bool ok = true;
        for (int v = 0; v <= next && ok; ++v) {
            int cv = v == next ? c : map12[v];
            ok = g1.mult(next, v) == g2.mult(c, cv) && g1.mult(v, next) == g2.mult(cv, c);
        }
        if (!ok)
            continue;
        map12[next] = c;
        if (extend_iso(g1, g2, map12, next + 1, candidate))
            return true;
    }
    return false;
}

} // namespace

std::optional<std::map<std::string, std::string>> graphs_isomorphic(const Graph& g1, const Graph& g2) {
    int bound = iso_vertex_bound();
    if (g1.size() > bound || g2.size() > bound)
        throw size_limit_error("graphs_isomorphic: vertex count exceeds bound");
    if (g1.size() != g2.size())
        return std::nullopt;
    int n = g1.size();
    auto s1 = signatures(g1);
    auto s2 = signatures(g2);
    std::vector<std::vector<bool>> candidate(n, std::vector<bool>(n));
    for (int a = 0; a < n; ++a) {
        bool any = false;
        for (int b = 0; b < n; ++b) {
            candidate[a][b] = s1[a] == s2[b];
            any = any || candidate[a][b];
        }
        if (!any)
            return std::nullopt;
    }
    std::vector<int> map12(n, -1);
    if (!extend_iso(g1, g2, map12, 0, candidate))
        return std::nullopt;
    std::map<std::string, std::string> out;
    for (int v = 0; v < n; ++v)
        out[g1.vertex(v)] = g2.vertex(map12[v]);
    return out;
}

namespace {

// Keep only the first `keep` vertices of each tail and delete the out-edges
// of the last kept one, so both composition orders truncate identically.
Graph strip_tails(const Graph& g, const std::map<std::string, std::vector<std::string>>& tails,
                  int keep) {
    Graph work = g;
    std::set<std::string> drop;
    for (const auto& [_, tail] : tails) {
        for (size_t i = keep; i < tail.size(); ++i)
            drop.insert(tail[i]);
        if (keep >= 1 && keep <= static_cast<int>(tail.size())) {
            int last = work.index_of(tail[keep - 1]);
            for (int w = 0; w < work.size(); ++w)
                work.set_mult(last, w, ExtendedNat(0));
        }
    }
    std::vector<int> kept;
    for (int v = 0; v < work.size(); ++v)
        if (!drop.count(work.vertex(v)))
            kept.push_back(v);
    return work.induced(kept);
}

} // namespace

CommuteReport verify_desing_splice_commutes(const Graph& g, const std::string& v,
                                            const std::map<std::string, TailOrder>& order,
                                            int depth) {
    if (depth < 3)
        throw precondition_error("verify_desing_splice_commutes: depth must be >= 3");
    if (return_path_class(g, v) != ReturnPathClass::TwoOrMore)
        throw precondition_error("verify_desing_splice_commutes: splice precondition fails at " + v);

    CommuteReport rep;
    bool any_singular = false;
    for (int i = 0; i < g.size(); ++i)
        any_singular = any_singular || vertex_class(g, i) != VertexClass::Regular;
    if (!any_singular) {
        rep.trivial = true;
        rep.commutes = true;
        rep.splice_class_two_or_more = true;
        return rep;
    }

    bool v_emitter = vertex_class(g, v) == VertexClass::InfiniteEmitter;

    // Side A: desingularize, then splice.
    TruncatedDesing td_f = desingularize_truncated(g, order, depth);
    rep.splice_class_two_or_more =
        return_path_class(td_f.graph, v) == ReturnPathClass::TwoOrMore;
    SpliceResult fc = cuntz_splice(td_f.graph, v);

    // Side B: splice, then desingularize with the enumeration (f1, e1, e2, ...)
    // at v, then contract the first tail vertex of v.
    SpliceResult ec = cuntz_splice(g, v);
    std::map<std::string, TailOrder> order_b = order;
    if (v_emitter) {
        TailOrder shifted;
        shifted.pattern.push_back(ec.u1);
        auto it = order.find(v);
        if (it == order.end())
            throw parse_error("verify_desing_splice_commutes: no tail order for " + v);
        shifted.pattern.insert(shifted.pattern.end(), it->second.pattern.begin(),
                               it->second.pattern.end());
        shifted.period_start = it->second.period_start + 1;
        order_b[v] = shifted;
    }
    TruncatedDesing td_d = desingularize_truncated(ec.graph, order_b, depth);
    Graph side_b = td_d.graph;
    auto tails_b = td_d.tail_map;
    if (v_emitter) {
        const std::string v1 = tails_b[v][0];
        side_b = contract_vertex(side_b, v1);
        tails_b[v].erase(tails_b[v].begin());
    }

    int keep = depth - 2;
    Graph a = strip_tails(fc.graph, td_f.tail_map, keep);
    Graph b = strip_tails(side_b, tails_b, keep);
    auto bij = graphs_isomorphic(a, b);
    rep.commutes = bij.has_value();
    if (bij)
        rep.bijection = *bij;
    return rep;
}

} // namespace ckgraph
