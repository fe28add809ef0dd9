#include "semideco/dot_export.hpp"

#include <map>
#include <sstream>

namespace semideco {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string set_label(const FiniteSpace& space, const PointSet& a) {
    std::string label = "{";
    for (std::size_t i = 0; i < a.items().size(); ++i) {
        if (i) label += ",";
        label += space.point_name(a.items()[i]);
    }
    return label + "}";
}

}  // namespace

std::string morse_dot(const FiniteSpace& space, const MorseAssignment& assignment) {
    std::ostringstream out;
    out << "graph morse {\n";
    for (std::size_t v = 0; v < assignment.graph.vertices.size(); ++v)
        out << "  v" << v << " [label=" << quote(set_label(space, assignment.graph.vertices[v]))
            << "];\n";
    // hyper-edge labels carry the assigned points
    std::map<std::vector<int>, PointSet> edge_points;
    for (const auto& [x, index_set] : assignment.membership)
        if (!index_set.empty())
            edge_points[index_set] =
                set_union(edge_points[index_set], PointSet({x}));
    int h = 0;
    for (const auto& edge : assignment.graph.edges) {
        out << "  h" << h << " [shape=square";
        if (edge.size() == 1) out << ", peripheries=2";
        auto it = edge_points.find(edge);
        out << ", label=" << quote(it == edge_points.end() ? std::string("{}")
                                                           : set_label(space, it->second))
            << "];\n";
        for (int v : edge) out << "  v" << v << " -- h" << h << ";\n";
        ++h;
    }
    out << "}\n";
    return out.str();
}

std::string orbit_space_dot(const Digraph& g, const OrbitSpaceResult& result) {
    const FiniteSpace& strata = result.instance.strata();
    const int nv = static_cast<int>(g.vertices.size());
    std::ostringstream out;
    out << "digraph orbit_space {\n";
    for (std::size_t c = 0; c < result.weak.classes.size(); ++c)
        if (!result.edge_like[c])
            out << "  c" << c << " [label="
                << quote(set_label(strata, result.weak.classes[c])) << "];\n";
    for (std::size_t c = 0; c < result.weak.classes.size(); ++c) {
        if (!result.edge_like[c]) continue;
        for (int x : result.weak.classes[c].items()) {
            const int e = x - nv;
            out << "  c" << result.weak.class_index_of(g.edges[e].first) << " -> c"
                << result.weak.class_index_of(g.edges[e].second)
                << " [label=" << quote(strata.point_name(x)) << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string poset_dot(const FiniteSpace& space) {
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=BT;\n";
    for (int i = 0; i < space.size(); ++i)
        out << "  p" << i << " [label=" << quote(space.point_name(i)) << "];\n";
    for (int a = 0; a < space.size(); ++a)
        for (int b = 0; b < space.size(); ++b) {
            if (a == b || !space.le(a, b) || space.le(b, a)) continue;
            bool cover = true;
            for (int z = 0; z < space.size() && cover; ++z)
                if (z != a && z != b && space.le(a, z) && space.le(z, b) &&
                    !space.le(z, a) && !space.le(b, z))
                    cover = false;
            if (cover) out << "  p" << a << " -> p" << b << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string reeb_dot(const TriSurfaceFn& s, const WeakElementSpace& weak,
                     const ReebGraph& reeb) {
    std::ostringstream out;
    out << "graph sublevel_comparison {\n";
    out << "  subgraph cluster_weak {\n    label=\"weak element space\";\n";
    for (int c = 0; c < weak.cell_count(); ++c)
        if (weak.cell_node[c] != -1)
            out << "    w" << weak.cell_node[c] << " [label="
                << quote(weak.strata.type[weak.cells.classes[c].items().front()]
                             .to_string())
                << "];\n";
    for (auto [a, b] : weak.graph.edges) out << "    w" << a << " -- w" << b << ";\n";
    out << "  }\n";
    out << "  subgraph cluster_reeb {\n    label=\"Reeb graph\";\n";
    for (std::size_t k = 0; k < reeb.vertices.size(); ++k)
        out << "    r" << k << " [label=" << quote("v" + std::to_string(reeb.vertices[k]) +
                                                   " (f=" +
                                                   std::to_string(s.value(reeb.vertices[k])) +
                                                   ")")
            << "];\n";
    for (auto [a, b] : reeb.edges) out << "    r" << a << " -- r" << b << ";\n";
    out << "  }\n}\n";
    return out.str();
}

}  // namespace semideco
