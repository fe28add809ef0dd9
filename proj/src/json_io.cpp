#include "semideco/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semideco/errors.hpp"

namespace semideco {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw input_error(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::vector<std::pair<std::string, std::string>> string_pairs(const Json& j,
                                                              const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array");
    std::vector<std::pair<std::string, std::string>> out;
    for (const Json& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string())
            throw input_error(std::string(what) +
                              " entries must be [string, string] pairs");
        out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return out;
}

}  // namespace

FiniteSpace space_from_json(const Json& j) {
    const Json& points = field(j, "points");
    if (!points.is_array()) throw input_error("\"points\" must be an array");
    std::vector<std::string> names;
    for (const Json& p : points) {
        if (!p.is_string()) throw input_error("point identifiers must be strings");
        names.push_back(p.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> generators;
    if (j.contains("le")) generators = string_pairs(j.at("le"), "\"le\"");
    return FiniteSpace::build(std::move(names), generators);
}

SemiDecomposition semidec_from_json(const Json& j) {
    FiniteSpace space = space_from_json(field(j, "space"));
    const bool has_elements = j.contains("elements");
    const bool has_preorder = j.contains("preorder");
    if (has_elements == has_preorder)
        throw input_error("exactly one of \"elements\" and \"preorder\" is required");

    if (has_preorder) {
        const auto pairs = string_pairs(j.at("preorder"), "\"preorder\"");
        const int n = space.size();
        RelMatrix order(n, std::vector<bool>(n, false));
        for (const auto& [lo, hi] : pairs)
            order[space.require_index(lo)][space.require_index(hi)] = true;
        close_reflexive_transitive(order);
        return SemiDecomposition::from_preorder(std::move(space), order);
    }

    const Json& elements = j.at("elements");
    if (!elements.is_object()) throw input_error("\"elements\" must be an object");
    std::vector<PointSet> element(space.size());
    std::vector<bool> defined(space.size(), false);
    for (const auto& [name, members] : elements.items()) {
        const int x = space.require_index(name);
        if (!members.is_array())
            throw input_error("element of \"" + name + "\" must be an array");
        std::vector<int> idx;
        for (const Json& m : members) {
            if (!m.is_string()) throw input_error("element members must be strings");
            idx.push_back(space.require_index(m.get<std::string>()));
        }
        element[x] = PointSet(std::move(idx));
        defined[x] = true;
    }
    for (int x = 0; x < space.size(); ++x)
        if (!defined[x])
            throw input_error("element map does not define \"" + space.point_name(x) +
                              "\"");
    return SemiDecomposition::make(std::move(space), std::move(element));
}

SimplicialComplex simplicial_from_json(const Json& j) {
    const Json& simplices = field(j, "simplices");
    if (!simplices.is_array()) throw input_error("\"simplices\" must be an array");
    std::set<long long> used;
    std::vector<std::vector<long long>> faces_raw;
    for (const Json& face : simplices) {
        if (!face.is_array() || face.empty())
            throw input_error("simplices must be non-empty arrays of vertex numbers");
        std::vector<long long> f;
        for (const Json& v : face) {
            if (!v.is_number_integer())
                throw input_error("simplex vertices must be integers");
            f.push_back(v.get<long long>());
            used.insert(f.back());
        }
        faces_raw.push_back(std::move(f));
    }
    std::map<long long, int> index;
    std::vector<std::string> names;
    for (long long v : used) {
        index[v] = static_cast<int>(names.size());
        names.push_back(std::to_string(v));
    }
    std::vector<std::vector<int>> faces;
    for (const auto& f : faces_raw) {
        std::vector<int> face;
        for (long long v : f) face.push_back(index.at(v));
        faces.push_back(std::move(face));
    }
    return SimplicialComplex::from_maximal(std::move(names), faces);
}

Digraph digraph_from_json(const Json& j) {
    const Json& vertices = field(j, "vertices");
    if (!vertices.is_array()) throw input_error("\"vertices\" must be an array");
    std::vector<std::string> names;
    for (const Json& v : vertices) {
        if (!v.is_string()) throw input_error("vertex identifiers must be strings");
        names.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) edges = string_pairs(j.at("edges"), "\"edges\"");
    return Digraph::make(std::move(names), edges);
}

TriSurfaceFn surface_from_json(const Json& j) {
    const Json& vertices = field(j, "vertices");
    const Json& triangles = field(j, "triangles");
    if (!vertices.is_array() || !triangles.is_array())
        throw input_error("\"vertices\" and \"triangles\" must be arrays");
    std::map<long long, int> index;
    std::vector<double> values;
    for (const Json& v : vertices) {
        const Json& id = field(v, "id");
        const Json& f = field(v, "f");
        if (!id.is_number_integer() || !f.is_number())
            throw input_error("mesh vertices need an integer \"id\" and numeric \"f\"");
        if (!index.emplace(id.get<long long>(), static_cast<int>(values.size())).second)
            throw input_error("duplicate mesh vertex id");
        values.push_back(f.get<double>());
    }
    std::vector<std::array<int, 3>> tris;
    for (const Json& t : triangles) {
        if (!t.is_array() || t.size() != 3)
            throw input_error("triangles must be triples of vertex ids");
        std::array<int, 3> tri{};
        for (int k = 0; k < 3; ++k) {
            if (!t[k].is_number_integer())
                throw input_error("triangle entries must be integers");
            auto it = index.find(t[k].get<long long>());
            if (it == index.end()) throw input_error("triangle references unknown vertex");
            tri[k] = it->second;
        }
        tris.push_back(tri);
    }
    return TriSurfaceFn::make(std::move(values), std::move(tris));
}

Json space_to_json(const FiniteSpace& s) {
    Json j;
    j["points"] = Json::array();
    for (const std::string& name : s.point_names()) j["points"].push_back(name);
    j["le"] = Json::array();
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b)
            if (a != b && s.le(a, b))
                j["le"].push_back({s.point_name(a), s.point_name(b)});
    return j;
}

Json point_set_to_json(const FiniteSpace& s, const PointSet& a) {
    Json j = Json::array();
    for (int i : a.items()) j.push_back(s.point_name(i));
    return j;
}

Json semidec_to_json(const SemiDecomposition& f) {
    Json j;
    j["space"] = space_to_json(f.space());
    Json elements;
    for (int x = 0; x < f.space().size(); ++x)
        elements[f.space().point_name(x)] = point_set_to_json(f.space(), f.element(x));
    j["elements"] = std::move(elements);
    return j;
}

Json classification_to_json(const FiniteSpace& s, const Classification& c) {
    Json j;
    j["cl"] = point_set_to_json(s, c.cl);
    j["p"] = point_set_to_json(s, c.p);
    j["r"] = point_set_to_json(s, c.r);
    j["recurrent"] = point_set_to_json(s, c.recurrent);
    return j;
}

Json invariance_to_json(const InvarianceReport& r) {
    Json j;
    j["cond1"] = r.cond1;
    j["cond2"] = r.cond2;
    j["cond3"] = r.cond3;
    j["overall"] = r.overall;
    return j;
}

Json abstract_partition_to_json(const FiniteSpace& s, const AbstractPartition& p) {
    Json j;
    j["kind"] =
        p.kind == AbstractPartition::Kind::element ? "element" : "weak_element";
    j["classes"] = Json::array();
    for (const PointSet& cls : p.classes) j["classes"].push_back(point_set_to_json(s, cls));
    j["raw_relation_transitive"] = p.raw_relation_transitive;
    return j;
}

Json morse_to_json(const FiniteSpace& s, const MorseOutcome& m) {
    Json j;
    j["ok"] = m.ok();
    if (m.ok()) {
        const MorseAssignment& a = *m.assignment;
        j["vertices"] = Json::array();
        for (const PointSet& v : a.graph.vertices)
            j["vertices"].push_back(point_set_to_json(s, v));
        j["edges"] = a.graph.edges;
        Json membership;
        for (const auto& [x, index_set] : a.membership)
            membership[s.point_name(x)] = index_set;
        j["membership"] = std::move(membership);
    } else {
        j["failures"] = Json::array();
        for (const NotCoveredDiagnostic& d : m.failures) {
            Json f;
            f["point"] = s.point_name(d.point);
            f["derived"] = point_set_to_json(s, d.derived);
            f["uncovered"] = point_set_to_json(s, d.uncovered);
            j["failures"].push_back(std::move(f));
        }
    }
    if (m.witness_pieces_invariant.has_value())
        j["witness_pieces_invariant"] = *m.witness_pieces_invariant;
    return j;
}

Json analyze_report(const SemiDecomposition& f) {
    const FiniteSpace& s = f.space();
    Json j;
    j["space"] = space_to_json(s);
    j["classification"] = classification_to_json(s, classify_points(f));

    Json hat = Json::array();
    for (const PointSet& cls : class_decomposition(f))
        hat.push_back(point_set_to_json(s, cls));
    j["class_decomposition"] = std::move(hat);

    const SemiDecomposition tilde = class_semidecomposition(f);
    Json tilde_json;
    for (int x = 0; x < s.size(); ++x)
        tilde_json[s.point_name(x)] = point_set_to_json(s, tilde.element(x));
    j["class_semidecomposition"] = std::move(tilde_json);

    j["invariance"] = invariance_to_json(check_invariance(f));

    const AbstractPartition elements = abstract_elements(f);
    const AbstractPartition weak = abstract_weak_elements(f);
    j["abstract_elements"] = abstract_partition_to_json(s, elements);
    j["abstract_weak_elements"] = abstract_partition_to_json(s, weak);
    j["element_space"] = space_to_json(elements.space.target);
    j["weak_element_space"] = space_to_json(weak.space.target);

    j["maximal_points"] = point_set_to_json(s, maximal_points(f));
    j["quasi_recurrent"] = point_set_to_json(s, quasi_recurrent(f, elements));

    const MorseOutcome morse = morse_hypergraph(f, elements);
    j["morse"] = morse_to_json(s, morse);
    j["quotient_relation_ok"] =
        morse.ok() ? verify_quotient_relation(f, elements, *morse.assignment).ok : false;
    return j;
}

Json simplicial_report(const SimplicialComplex& k) {
    Json j;
    j["strata_count"] = static_cast<int>(k.simplices().size());
    const FacePosetCheck check = check_face_poset(k);
    Json c;
    c["ok"] = check.ok;
    c["class_count"] = check.class_count;
    if (check.ok) {
        Json witness = Json::array();
        for (const auto& [cls, simplex] : check.witness)
            witness.push_back({cls, simplex});
        c["witness"] = std::move(witness);
    } else {
        c["counterexample"] = check.counterexample;
    }
    j["face_poset_check"] = std::move(c);
    return j;
}

Json digraph_report(const Digraph& g) {
    Json j;
    const OrbitSpaceResult r = orbit_space(g);
    const FiniteSpace& s = r.instance.strata();

    Json orbit;
    orbit["classes"] = Json::array();
    for (const PointSet& cls : r.weak.classes)
        orbit["classes"].push_back(point_set_to_json(s, cls));
    orbit["edge_like"] = r.edge_like;
    orbit["raw_relation_transitive"] = r.weak.raw_relation_transitive;
    Json labels;
    for (int x = 0; x < s.size(); ++x)
        labels[s.point_name(x)] = r.instance.oracle().label[x];
    orbit["orbit_types"] = std::move(labels);
    j["orbit_space"] = std::move(orbit);

    const CollapseResult collapse = collapse_oracle(g);
    Json c;
    c["vertices"] = collapse.vertex_cells;
    c["edges"] = Json::array();
    for (const auto& [from, to, name] : collapse.edges)
        c["edges"].push_back({Json(name), Json(from), Json(to)});
    j["collapse_oracle"] = std::move(c);

    const OrbitMultigraph om = orbit_space_multigraph(g, r);
    const bool match = !om.degenerate &&
                       directed_multigraph_isomorphic(om.graph, collapse.as_multigraph());
    j["discrepancy"] = !match;
    return j;
}

Json reeb_report(const TriSurfaceFn& s) {
    Json j;
    Json surface;
    surface["vertex_count"] = s.vertex_count();
    surface["triangle_count"] = static_cast<int>(s.triangles().size());
    surface["genus"] = s.genus();
    surface["critical_vertices"] = s.critical_vertices();
    j["surface"] = std::move(surface);

    const MergeTree tree = merge_tree(s);
    Json mt;
    mt["minima"] = tree.minima_count();
    mt["joins"] = tree.join_count;
    Json nodes = Json::array();
    for (const auto& node : tree.nodes) {
        Json n;
        n["kind"] = node.kind == MergeTree::Node::Kind::birth   ? "birth"
                    : node.kind == MergeTree::Node::Kind::join ? "join"
                                                               : "finish";
        n["vertex"] = node.vertex;
        n["value"] = node.value;
        n["component"] = node.component;
        if (!node.merged.empty()) n["merged"] = node.merged;
        nodes.push_back(std::move(n));
    }
    mt["nodes"] = std::move(nodes);
    Json arcs = Json::array();
    for (const auto& arc : tree.arcs)
        arcs.push_back({Json(arc.component), Json(arc.from_value), Json(arc.to_value)});
    mt["arcs"] = std::move(arcs);
    j["merge_tree"] = std::move(mt);

    const ReebComparison cmp = compare_reeb(s);
    Json weak;
    weak["cells"] = cmp.weak.cell_count();
    weak["node_cells"] = cmp.weak.node_cells;
    weak["band_cells"] = cmp.weak.band_cells;
    Json cell_types = Json::array();
    for (const PointSet& cls : cmp.weak.cells.classes)
        cell_types.push_back(cmp.weak.strata.type[cls.items().front()].to_string());
    weak["cell_types"] = std::move(cell_types);
    j["weak_element_space"] = std::move(weak);

    Json reeb;
    reeb["vertices"] = cmp.reeb.vertices;
    reeb["edges"] = cmp.reeb.edges;
    j["reeb_graph"] = std::move(reeb);

    Json comparison;
    comparison["weak_cells"] = cmp.weak_cells;
    comparison["reeb_cells"] = cmp.reeb_cells;
    comparison["isomorphic_as_multigraphs"] = cmp.isomorphic_as_multigraphs;
    j["comparison"] = std::move(comparison);
    return j;
}

}  // namespace semideco
