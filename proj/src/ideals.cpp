#include "ckgraph/ideals.hpp"

#include <algorithm>

#include "ckgraph/moves.hpp"

namespace ckgraph {

int IdealLattice::index_of(const AdmissiblePair& p) const {
    for (int i = 0; i < size(); ++i)
        if (pairs[i] == p)
            return i;
    throw error("IdealLattice: pair not found");
}

int IdealLattice::bottom() const { return index_of(AdmissiblePair{}); }

int IdealLattice::top() const {
    for (int i = 0; i < size(); ++i) {
        bool top = true;
        for (int j = 0; j < size() && top; ++j)
            top = leq[j][i];
        if (top)
            return i;
    }
    throw error("IdealLattice: no top element");
}

std::optional<int> IdealLattice::join(int i, int j) const {
    std::vector<int> ub;
    for (int k = 0; k < size(); ++k)
        if (leq[i][k] && leq[j][k])
            ub.push_back(k);
    for (int k : ub) {
        bool least = true;
        for (int l : ub)
            least = least && leq[k][l];
        if (least)
            return k;
    }
    return std::nullopt;
}

std::optional<int> IdealLattice::meet(int i, int j) const {
    std::vector<int> lb;
    for (int k = 0; k < size(); ++k)
        if (leq[k][i] && leq[k][j])
            lb.push_back(k);
    for (int k : lb) {
        bool greatest = true;
        for (int l : lb)
            greatest = greatest && leq[l][k];
        if (greatest)
            return k;
    }
    return std::nullopt;
}

bool IdealLattice::is_lattice() const {
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (!join(i, j) || !meet(i, j))
                return false;
    return true;
}

bool IdealLattice::is_distributive() const {
    for (int x = 0; x < size(); ++x)
        for (int y = 0; y < size(); ++y)
            for (int z = 0; z < size(); ++z) {
                auto yz = join(y, z);
                auto xy = meet(x, y);
                auto xz = meet(x, z);
                if (!yz || !xy || !xz)
                    return false;
                auto lhs = meet(x, *yz);
                auto rhs = join(*xy, *xz);
                if (!lhs || !rhs || *lhs != *rhs)
                    return false;
            }
    return true;
}

std::vector<int> IdealLattice::join_irreducibles() const {
    std::vector<int> out;
    int bot = bottom();
    for (int i = 0; i < size(); ++i) {
        if (i == bot)
            continue;
        // i is join-irreducible iff it is not the join of the strictly
        // smaller elements.
        int acc = bot;
        for (int j = 0; j < size(); ++j)
            if (leq[j][i] && j != i) {
                auto jo = join(acc, j);
                if (!jo)
                    throw error("IdealLattice: join undefined");
                acc = *jo;
            }
        if (acc != i)
            out.push_back(i);
    }
    return out;
}

int PrimSpace::index_of(const std::string& point) const {
    for (int i = 0; i < size(); ++i)
        if (points[i] == point)
            return i;
    throw parse_error("unknown point id: " + point);
}

bool is_hereditary(const Graph& g, const std::set<std::string>& s) {
    auto reach = reach_matrix(g);
    for (const auto& vid : s) {
        int v = g.index_of(vid);
        for (int w = 0; w < g.size(); ++w)
            if (reach[v][w] && !s.count(g.vertex(w)))
                return false;
    }
    return true;
}

bool is_saturated(const Graph& g, const std::set<std::string>& s) {
    for (int v = 0; v < g.size(); ++v) {
        if (vertex_class(g, v) != VertexClass::Regular || s.count(g.vertex(v)))
            continue;
        bool all_in = true;
        for (int w = 0; w < g.size() && all_in; ++w)
            if (!g.mult(v, w).is_zero())
                all_in = s.count(g.vertex(w)) != 0;
        if (all_in)
            return false;
    }
    return true;
}

std::set<std::string> hs_closure(const Graph& g, const std::set<std::string>& s) {
    for (const auto& id : s)
        g.index_of(id); // validate
    std::set<std::string> k = s;
    auto reach = reach_matrix(g);
    bool changed = true;
    while (changed) {
        changed = false;
        // hereditary descent
        for (int v = 0; v < g.size(); ++v)
            if (k.count(g.vertex(v)))
                for (int w = 0; w < g.size(); ++w)
                    if (reach[v][w] && k.insert(g.vertex(w)).second)
                        changed = true;
        // saturation ascent
        for (int v = 0; v < g.size(); ++v) {
            if (vertex_class(g, v) != VertexClass::Regular || k.count(g.vertex(v)))
                continue;
            bool all_in = true;
            for (int w = 0; w < g.size() && all_in; ++w)
                if (!g.mult(v, w).is_zero())
                    all_in = k.count(g.vertex(w)) != 0;
            if (all_in) {
                k.insert(g.vertex(v));
                changed = true;
            }
        }
    }
    return k;
}

std::vector<std::set<std::string>> enumerate_hs(const Graph& g) {
    int n = g.size();
    if (n > brute_force_vertex_bound())
        throw size_limit_error("enumerate_hs: vertex count exceeds brute-force bound");
    std::vector<std::set<std::string>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<std::string> s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u)
                s.insert(g.vertex(v));
        if (is_hereditary(g, s) && is_saturated(g, s))
            out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::set<std::string> h_infinity_fin(const Graph& g, const std::set<std::string>& h) {
    if (!is_hereditary(g, h) || !is_saturated(g, h))
        throw precondition_error("h_infinity_fin: H is not hereditary and saturated");
    std::set<std::string> out;
    for (int v = 0; v < g.size(); ++v) {
        if (h.count(g.vertex(v)) || vertex_class(g, v) != VertexClass::InfiniteEmitter)
            continue;
        ExtendedNat outside(0);
        for (int w = 0; w < g.size(); ++w)
            if (!h.count(g.vertex(w)))
                outside += g.mult(v, w);
        if (!outside.is_zero() && !outside.is_omega())
            out.insert(g.vertex(v));
    }
    return out;
}

IdealLattice ideal_lattice(const Graph& g) {
    if (!condition_K(g))
        throw precondition_error("ideal_lattice: graph does not satisfy Condition (K)");
    IdealLattice lat;
    for (const auto& h : enumerate_hs(g)) {
        std::set<std::string> fin = h_infinity_fin(g, h);
        std::vector<std::string> fv(fin.begin(), fin.end());
        unsigned nb = 1u << fv.size();
        std::vector<AdmissiblePair> with_b;
        for (unsigned mask = 0; mask < nb; ++mask) {
            AdmissiblePair p;
            p.h = h;
            for (size_t i = 0; i < fv.size(); ++i)
                if ((mask >> i) & 1u)
                    p.b.insert(fv[i]);
            with_b.push_back(std::move(p));
        }
        std::sort(with_b.begin(), with_b.end());
        for (auto& p : with_b)
            lat.pairs.push_back(std::move(p));
    }
    int n = lat.size();
    lat.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& [h, b] = lat.pairs[i];
            const auto& [h2, b2] = lat.pairs[j];
            bool hs = std::includes(h2.begin(), h2.end(), h.begin(), h.end());
            bool bs = std::all_of(b.begin(), b.end(),
                                  [&](const std::string& x) { return h2.count(x) || b2.count(x); });
            lat.leq[i][j] = hs && bs;
        }
    return lat;
}

namespace {

AdmissiblePair spliced_pair(const AdmissiblePair& p, const std::string& v, const std::string& u1,
                            const std::string& u2) {
    AdmissiblePair q = p;
    if (q.h.count(v)) {
        q.h.insert(u1);
        q.h.insert(u2);
    }
    return q;
}

} // namespace

std::map<AdmissiblePair, AdmissiblePair> splice_lattice_map(const Graph& g, const std::string& v) {
    SpliceResult sp = cuntz_splice(g, v);
    IdealLattice le = ideal_lattice(g);
    IdealLattice lc = ideal_lattice(sp.graph);

    std::map<AdmissiblePair, AdmissiblePair> out;
    std::vector<int> image(le.size());
    std::set<int> hit;
    for (int i = 0; i < le.size(); ++i) {
        AdmissiblePair q = spliced_pair(le.pairs[i], v, sp.u1, sp.u2);
        image[i] = lc.index_of(q); // throws if the image is not admissible
        hit.insert(image[i]);
        out[le.pairs[i]] = std::move(q);
    }
    if (le.size() != lc.size() || static_cast<int>(hit.size()) != lc.size())
        throw internal_error("splice_lattice_map: not a bijection (falsifies the order-isomorphism)");
    for (int i = 0; i < le.size(); ++i)
        for (int j = 0; j < le.size(); ++j)
            if (le.leq[i][j] != lc.leq[image[i]][image[j]])
                throw internal_error("splice_lattice_map: order not preserved and reflected");
    return out;
}

PrimSpace prim_space(const IdealLattice& lat) {
    if (!lat.is_lattice())
        throw error("prim_space: the partial order is not a lattice");
    if (!lat.is_distributive())
        throw error("prim_space: lattice is not distributive; refusing to build the point space");
    PrimSpace x;
    std::vector<int> ji = lat.join_irreducibles();
    for (size_t i = 0; i < ji.size(); ++i) {
        x.points.push_back("p" + std::to_string(i));
        x.pair_of.push_back(lat.pairs[ji[i]]);
        x.h_of.push_back(lat.pairs[ji[i]].h);
    }
    int n = x.size();
    x.geq.assign(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            x.geq[a][b] = lat.leq[ji[a]][ji[b]];
    return x;
}

std::map<std::string, std::string> prim_homeo_under_splice(const Graph& g, const std::string& v) {
    SpliceResult sp = cuntz_splice(g, v);
    auto pmap = splice_lattice_map(g, v);
    PrimSpace xe = prim_space(ideal_lattice(g));
    PrimSpace xc = prim_space(ideal_lattice(sp.graph));
    if (xe.size() != xc.size())
        throw internal_error("prim_homeo_under_splice: point counts differ");
    std::map<std::string, std::string> out;
    for (int a = 0; a < xe.size(); ++a) {
        const AdmissiblePair& target = pmap.at(xe.pair_of[a]);
        bool found = false;
        for (int b = 0; b < xc.size() && !found; ++b)
            if (xc.pair_of[b] == target) {
                out[xe.points[a]] = xc.points[b];
                found = true;
            }
        if (!found)
            throw internal_error("prim_homeo_under_splice: image of a join-irreducible is not a point");
    }
    return out;
}

} // namespace ckgraph
