#include "ckgraph/json_io.hpp"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ckgraph {

using nlohmann::json;

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw parse_error("graph JSON: expected object with a \"vertices\" array");
    std::vector<std::string> vs;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string())
            throw parse_error("graph JSON: vertex ids must be strings");
        vs.push_back(v.get<std::string>());
    }
    Graph g(std::move(vs));
    std::set<std::pair<std::string, std::string>> seen;
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw parse_error("graph JSON: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_object() || !e.contains("src") || !e.contains("dst") || !e.contains("mult"))
                throw parse_error("graph JSON: edge entries need src, dst, mult");
            std::string src = e["src"].get<std::string>();
            std::string dst = e["dst"].get<std::string>();
            if (!seen.insert({src, dst}).second)
                throw parse_error("graph JSON: duplicate edge entry (" + src + ", " + dst + ")");
            ExtendedNat m;
            if (e["mult"].is_string()) {
                if (e["mult"].get<std::string>() != "inf")
                    throw parse_error("graph JSON: mult must be a non-negative integer or \"inf\"");
                m = ExtendedNat::omega();
            } else if (e["mult"].is_number_integer() && e["mult"].get<long long>() >= 0) {
                m = ExtendedNat(static_cast<std::uint64_t>(e["mult"].get<long long>()));
            } else {
                throw parse_error("graph JSON: mult must be a non-negative integer or \"inf\"");
            }
            g.set_mult(src, dst, m);
        }
    }
    return g;
}

Graph graph_from_json_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw parse_error("malformed JSON");
    return graph_from_json(j);
}

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (int u = 0; u < g.size(); ++u)
        for (int w = 0; w < g.size(); ++w) {
            ExtendedNat m = g.mult(u, w);
            if (m.is_zero())
                continue;
            json e;
            e["src"] = g.vertex(u);
            e["dst"] = g.vertex(w);
            if (m.is_omega())
                e["mult"] = "inf";
            else
                e["mult"] = m.finite();
            edges.push_back(std::move(e));
        }
    j["edges"] = std::move(edges);
    return j;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string graph_to_dot(const Graph& g) {
    std::ostringstream os;
    os << "digraph E {\n";
    for (int v = 0; v < g.size(); ++v)
        os << "  " << dot_quote(g.vertex(v)) << ";\n";
    for (int u = 0; u < g.size(); ++u)
        for (int w = 0; w < g.size(); ++w) {
            ExtendedNat m = g.mult(u, w);
            if (m.is_zero())
                continue;
            os << "  " << dot_quote(g.vertex(u)) << " -> " << dot_quote(g.vertex(w));
            if (m.is_omega())
                os << " [label=\"ω\", style=dashed]";
            else
                os << " [label=\"" << m.finite() << "\"]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::map<std::string, TailOrder> tail_orders_from_json(const json& j) {
    if (!j.is_array())
        throw parse_error("tail orders JSON: expected an array");
    std::map<std::string, TailOrder> out;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("vertex") || !e.contains("pattern"))
            throw parse_error("tail orders JSON: entries need vertex and pattern");
        TailOrder ord;
        for (const auto& t : e["pattern"])
            ord.pattern.push_back(t.get<std::string>());
        ord.period_start = e.value("period_start", 0);
        std::string v = e["vertex"].get<std::string>();
        if (!out.emplace(v, std::move(ord)).second)
            throw parse_error("tail orders JSON: duplicate vertex " + v);
    }
    return out;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) {
            const mpz_class& x = m.at(r, c);
            if (x.fits_slong_p())
                row.push_back(x.get_si());
            else
                row.push_back(x.get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json group_to_json(const FgAbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank;
    json t = json::array();
    for (const auto& d : g.torsion) {
        if (d.fits_slong_p())
            t.push_back(d.get_si());
        else
            t.push_back(d.get_str());
    }
    j["torsion"] = std::move(t);
    j["pretty"] = g.str();
    return j;
}

json graded_group_to_json(const GradedGroup& g, bool verbose) {
    json j;
    j["k0"] = group_to_json(g.k0);
    j["k1"] = group_to_json(g.k1);
    if (verbose) {
        j["k0_ambient_rank"] = g.k0_ambient_rank;
        j["k0_relations"] = matrix_to_json(g.k0_relations);
        j["k1_kernel_basis"] = matrix_to_json(g.k1_kernel_basis);
    }
    return j;
}

json purely_infinite_to_json(const PurelyInfiniteReport& r) {
    json j;
    j["condition_K"] = r.condition_k;
    j["no_breaking_vertices"] = r.no_breaking_vertices;
    j["tails_connect_to_cycles"] = r.tails_connect_to_cycles;
    j["verdict"] = r.verdict();
    if (!r.verdict())
        j["failing_criterion"] = r.failing_criterion();
    return j;
}

namespace {

json pair_to_json(const AdmissiblePair& p) {
    json j;
    j["H"] = std::vector<std::string>(p.h.begin(), p.h.end());
    j["B"] = std::vector<std::string>(p.b.begin(), p.b.end());
    return j;
}

} // namespace

json lattice_to_json(const IdealLattice& lat) {
    json j;
    json pairs = json::array();
    for (const auto& p : lat.pairs)
        pairs.push_back(pair_to_json(p));
    j["pairs"] = std::move(pairs);
    json order = json::array();
    for (int a = 0; a < lat.size(); ++a)
        for (int b = 0; b < lat.size(); ++b)
            if (a != b && lat.leq[a][b])
                order.push_back(json::array({a, b}));
    j["leq"] = std::move(order);
    return j;
}

json prim_space_to_json(const PrimSpace& x) {
    json j;
    json pts = json::array();
    for (int p = 0; p < x.size(); ++p) {
        json pt;
        pt["id"] = x.points[p];
        pt["pair"] = pair_to_json(x.pair_of[p]);
        pt["H"] = std::vector<std::string>(x.h_of[p].begin(), x.h_of[p].end());
        pts.push_back(std::move(pt));
    }
    j["points"] = std::move(pts);
    json geq = json::array();
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b)
            if (a != b && x.geq[a][b])
                geq.push_back(json::array({x.points[a], x.points[b]}));
    j["geq"] = std::move(geq);
    return j;
}

std::string prim_space_to_dot(const PrimSpace& x) {
    // Hasse diagram of the specialization order.
    std::ostringstream os;
    os << "digraph Prim {\n";
    for (int p = 0; p < x.size(); ++p) {
        std::string label = x.points[p] + " H={";
        bool first = true;
        for (const auto& v : x.h_of[p]) {
            label += (first ? "" : ",") + v;
            first = false;
        }
        label += "}";
        os << "  " << dot_quote(x.points[p]) << " [label=" << dot_quote(label) << "];\n";
    }
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b) {
            if (a == b || !x.geq[a][b])
                continue;
            bool covering = true;
            for (int c = 0; c < x.size() && covering; ++c)
                covering = c == a || c == b || !(x.geq[a][c] && x.geq[c][b]);
            if (covering)
                os << "  " << dot_quote(x.points[a]) << " -> " << dot_quote(x.points[b]) << ";\n";
        }
    os << "}\n";
    return os.str();
}

json xk_to_json(const XKModule& m, bool verbose) {
    json j;
    j["space"] = prim_space_to_json(m.space);
    json at = json::array();
    for (int p = 0; p < m.space.size(); ++p) {
        json e;
        e["point"] = m.space.points[p];
        e["enumeration"] = m.enum_of[p];
        e["groups"] = graded_group_to_json(m.at[p], verbose);
        at.push_back(std::move(e));
    }
    j["at"] = std::move(at);
    json trans = json::array();
    for (const auto& [key, maps] : m.trans) {
        json e;
        e["from"] = m.space.points[key.first];
        e["to"] = m.space.points[key.second];
        e["k0_map"] = matrix_to_json(maps.first);
        e["k1_map"] = matrix_to_json(maps.second);
        trans.push_back(std::move(e));
    }
    j["transitions"] = std::move(trans);
    return j;
}

json invariance_to_json(const InvarianceReport& r, bool verbose) {
    json j;
    j["purely_infinite"] = purely_infinite_to_json(r.purely_infinite);
    j["lattice_order_iso"] = r.lattice_order_iso;
    j["prim_homeo"] = r.prim_homeo;
    json cube;
    cube["top_faces"] = r.cube.top;
    json faces = json::array();
    for (const auto& [key, f] : r.cube.faces) {
        json e;
        e["pair"] = json::array({key.first, key.second});
        e["front"] = f.front;
        e["back"] = f.back;
        e["left"] = f.left;
        e["right"] = f.right;
        faces.push_back(std::move(e));
    }
    cube["faces"] = std::move(faces);
    cube["overall"] = r.cube.overall;
    j["cube"] = std::move(cube);
    json qi;
    qi["ker_iso"] = r.quasi_iso.ker_iso;
    qi["coker_iso"] = r.quasi_iso.coker_iso;
    qi["overall"] = r.quasi_iso.overall;
    j["quasi_iso"] = std::move(qi);
    j["xk_groups_match"] = r.xk_groups_match;
    if (verbose) {
        json groups = json::array();
        for (const auto& [a, b] : r.k0_at_points)
            groups.push_back(json::array({group_to_json(a), group_to_json(b)}));
        j["k0_at_points"] = std::move(groups);
    }
    j["verdict"] = r.verdict;
    if (!r.verdict)
        j["failing_stage"] = r.failing_stage;
    return j;
}

json commute_to_json(const CommuteReport& r) {
    json j;
    j["commutes"] = r.commutes;
    j["splice_class_two_or_more"] = r.splice_class_two_or_more;
    j["trivial"] = r.trivial;
    json bij = json::object();
    for (const auto& [a, b] : r.bijection)
        bij[a] = b;
    j["bijection"] = std::move(bij);
    return j;
}

} // namespace ckgraph
