#include "ckgraph/xk.hpp"

#include <algorithm>

namespace ckgraph {

bool graded_groups_isomorphic(const GradedGroup& a, const GradedGroup& b) {
    return a.k0 == b.k0 && a.k1 == b.k1;
}

IntMatrix k_matrix(const Graph& g) {
    std::vector<std::string> regular;
    for (int v = 0; v < g.size(); ++v)
        if (vertex_class(g, v) == VertexClass::Regular)
            regular.push_back(g.vertex(v));
    // (A^E - 1)^t restricted to regular columns: entry (w, v) = A(v, w) - delta.
    IntMatrix m(g.size(), static_cast<int>(regular.size()));
    for (int w = 0; w < g.size(); ++w)
        for (size_t c = 0; c < regular.size(); ++c) {
            ExtendedNat e = g.mult(regular[c], g.vertex(w));
            m.at(w, static_cast<int>(c)) = mpz_class(static_cast<unsigned long>(e.finite()));
            if (g.vertex(w) == regular[c])
                m.at(w, static_cast<int>(c)) -= 1;
        }
    return m;
}

namespace {

GradedGroup graded_group_of(const IntMatrix& m) {
    GradedGroup g;
    g.k0 = cokernel_group(m);
    g.k0_ambient_rank = m.rows();
    g.k0_relations = m;
    g.k1_kernel_basis = kernel_basis(m);
    g.k1.free_rank = g.k1_kernel_basis.cols();
    return g;
}

} // namespace

GradedGroup k_theory(const Graph& g) { return graded_group_of(k_matrix(g)); }

XKModule filtered_xk(const Graph& g, const PrimSpace& x, const std::optional<std::string>& v_first) {
    for (int v = 0; v < g.size(); ++v)
        if (vertex_class(g, v) != VertexClass::Regular)
            throw precondition_error(
                "filtered_xk: vertex " + g.vertex(v) + " is " + to_string(vertex_class(g, v)) +
                "; the filtered formula requires a regular graph (desingularize first)");

    XKModule mod;
    mod.space = x;
    for (int p = 0; p < x.size(); ++p) {
        std::vector<std::string> en;
        if (v_first && x.h_of[p].count(*v_first))
            en.push_back(*v_first);
        for (int v = 0; v < g.size(); ++v)
            if (x.h_of[p].count(g.vertex(v)) && !(v_first && g.vertex(v) == *v_first))
                en.push_back(g.vertex(v));
        IntMatrix phi = adjacency_matrix(g, en, en).transpose() -
                        IntMatrix::identity(static_cast<int>(en.size()));
        mod.enum_of.push_back(std::move(en));
        mod.at.push_back(graded_group_of(phi));
    }
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b) {
            if (a == b || !x.geq[a][b])
                continue;
            const auto& ea = mod.enum_of[a];
            const auto& eb = mod.enum_of[b];
            IntMatrix incl(static_cast<int>(eb.size()), static_cast<int>(ea.size()));
            for (size_t c = 0; c < ea.size(); ++c) {
                auto it = std::find(eb.begin(), eb.end(), ea[c]);
                if (it == eb.end())
                    throw internal_error("filtered_xk: H_x not contained in H_y for x >= y");
                incl.at(static_cast<int>(it - eb.begin()), static_cast<int>(c)) = 1;
            }
            // K1-level: express included kernel vectors in the target basis.
            auto r = solve_matrix(mod.at[b].k1_kernel_basis, incl * mod.at[a].k1_kernel_basis);
            if (!r)
                throw internal_error("filtered_xk: inclusion does not map kernel into kernel basis span");
            mod.trans[{a, b}] = {std::move(incl), std::move(*r)};
        }
    // Functoriality: trans(x,z) = trans(y,z) ∘ trans(x,y) whenever x >= y >= z.
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b)
            for (int c = 0; c < x.size(); ++c) {
                if (a == b || b == c || a == c)
                    continue;
                if (!x.geq[a][b] || !x.geq[b][c])
                    continue;
                const auto& ab = mod.trans.at({a, b});
                const auto& bc = mod.trans.at({b, c});
                const auto& ac = mod.trans.at({a, c});
                if (bc.first * ab.first != ac.first || bc.second * ab.second != ac.second)
                    throw internal_error("filtered_xk: functoriality check failed");
            }
    return mod;
}

} // namespace ckgraph
