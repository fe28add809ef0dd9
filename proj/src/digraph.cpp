#include <algorithm>
#include <functional>
#include <map>

#include "semideco/adapters.hpp"
#include "semideco/errors.hpp"

namespace semideco {

std::string edge_stratum_name(int index) { return "e" + std::to_string(index + 1); }

Digraph Digraph::make(std::vector<std::string> vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
    Digraph g;
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        if (!index.emplace(vertices[i], i).second)
            throw input_error("duplicate vertex identifier: " + vertices[i]);
    }
    g.vertices = std::move(vertices);
    for (const auto& [from, to] : edges) {
        auto a = index.find(from);
        auto b = index.find(to);
        if (a == index.end() || b == index.end())
            throw input_error("edge references unknown vertex: (" + from + ", " + to + ")");
        g.edges.emplace_back(a->second, b->second);
    }
    return g;
}

namespace {

// vertex reachability following edge direction, start included
std::vector<std::vector<bool>> reachability(const Digraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> out(n);
    for (auto [a, b] : g.edges) out[a].push_back(b);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack{s};
        reach[s][s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : out[u])
                if (!reach[s][v]) {
                    reach[s][v] = true;
                    stack.push_back(v);
                }
        }
    }
    return reach;
}

// The positive orbit of a vertex as a directed multigraph: the reachable
// subgraph. For an interior edge point, the reachable subgraph from the
// target plus a pendant arc, unless the edge itself is reachable from its
// target (it lies on a directed cycle), in which case the arc is already
// part of the subgraph.
DirectedMultiGraph orbit_graph_of_vertex(const Digraph& g,
                                         const std::vector<std::vector<bool>>& reach,
                                         int v) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<int> remap(n, -1);
    DirectedMultiGraph og;
    for (int u = 0; u < n; ++u)
        if (reach[v][u]) remap[u] = og.vertex_count++;
    for (auto [a, b] : g.edges)
        if (reach[v][a]) og.add_edge(remap[a], remap[b]);
    return og;
}

DirectedMultiGraph orbit_graph_of_edge(const Digraph& g,
                                       const std::vector<std::vector<bool>>& reach,
                                       int e) {
    const auto [source, target] = g.edges[e];
    DirectedMultiGraph og = orbit_graph_of_vertex(g, reach, target);
    if (!reach[target][source]) {
        const int pendant = og.vertex_count++;
        // remapped id of the target: reachable vertices below it in index order
        int pos = 0;
        for (int u = 0; u < target; ++u)
            if (reach[target][u]) ++pos;
        og.add_edge(pendant, pos);
    }
    return og;
}

}  // namespace

StratifiedInstance digraph_to_instance(const Digraph& g) {
    const int nv = static_cast<int>(g.vertices.size());
    const int ne = static_cast<int>(g.edges.size());

    std::vector<std::string> names = g.vertices;
    for (int e = 0; e < ne; ++e) {
        std::string name = edge_stratum_name(e);
        if (std::find(g.vertices.begin(), g.vertices.end(), name) != g.vertices.end())
            throw input_error("vertex name collides with edge stratum id: " + name);
        names.push_back(std::move(name));
    }

    std::vector<std::pair<std::string, std::string>> generators;
    for (int e = 0; e < ne; ++e) {
        generators.emplace_back(g.vertices[g.edges[e].first], edge_stratum_name(e));
        generators.emplace_back(g.vertices[g.edges[e].second], edge_stratum_name(e));
    }
    FiniteSpace strata = FiniteSpace::build(std::move(names), generators);

    const auto reach = reachability(g);
    // footprint of vertex v: reachable vertices plus edges leaving them
    std::vector<PointSet> element(nv + ne);
    for (int v = 0; v < nv; ++v) {
        std::vector<int> fp;
        for (int u = 0; u < nv; ++u)
            if (reach[v][u]) fp.push_back(u);
        for (int e = 0; e < ne; ++e)
            if (reach[v][g.edges[e].first]) fp.push_back(nv + e);
        element[v] = PointSet(std::move(fp));
    }
    for (int e = 0; e < ne; ++e)
        element[nv + e] =
            set_union(element[g.edges[e].second], PointSet({nv + e}));

    DirectedGraphTypeRegistry registry;
    ElementTypeOracle oracle;
    oracle.label.reserve(nv + ne);
    for (int v = 0; v < nv; ++v)
        oracle.label.push_back(registry.label_of(orbit_graph_of_vertex(g, reach, v)));
    for (int e = 0; e < ne; ++e)
        oracle.label.push_back(registry.label_of(orbit_graph_of_edge(g, reach, e)));

    StratifiedInstance inst;
    inst.semidec =
        SemiDecomposition::make(std::move(strata), std::move(element), std::move(oracle));

    // Positive orbits of a finite directed graph are closed; verified, not
    // assumed. Closedness is the geometric rule: the orbit owns the target
    // of every edge it meets (it meets a pendant starting edge only in a
    // half-open arc, so the face-order down-closure is the wrong test).
    for (int x = 0; x < inst.strata().size(); ++x)
        for (int item : inst.semidec.element(x).items())
            if (item >= nv && !inst.semidec.element(x).contains(g.edges[item - nv].second))
                throw error("positive orbit is not closed at stratum " +
                            inst.strata().point_name(x));

    inst.provenance.reserve(nv + ne);
    for (int v = 0; v < nv; ++v) inst.provenance.push_back("vertex " + g.vertices[v]);
    for (int e = 0; e < ne; ++e)
        inst.provenance.push_back("open edge " + g.vertices[g.edges[e].first] + "->" +
                                  g.vertices[g.edges[e].second]);
    return inst;
}

OrbitSpaceResult orbit_space(const Digraph& g) {
    OrbitSpaceResult out;
    out.instance = digraph_to_instance(g);
    // every stratum is closed-case: orbits of finite digraphs are closed
    Classification all_closed;
    all_closed.cl = out.instance.strata().all_points();
    all_closed.recurrent = all_closed.cl;
    out.weak = abstract_weak_elements(out.instance.semidec, out.instance.oracle(),
                                      all_closed);
    const int nv = static_cast<int>(g.vertices.size());
    out.edge_like.reserve(out.weak.classes.size());
    for (const PointSet& cls : out.weak.classes) {
        bool pure_edges = true;
        for (int x : cls.items())
            if (x < nv) pure_edges = false;
        out.edge_like.push_back(pure_edges);
    }
    return out;
}

std::pair<Digraph, std::vector<int>> condensation(const Digraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    // Tarjan strongly connected components
    std::vector<std::vector<int>> out_edges(n);
    for (auto [a, b] : g.edges) out_edges[a].push_back(b);
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<bool> on_stack(n, false);
    int next_index = 0, comp_count = 0;
    std::function<void(int)> strongconnect = [&](int v) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : out_edges[v]) {
            if (index[w] == -1) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = comp_count;
                if (w == v) break;
            }
            ++comp_count;
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] == -1) strongconnect(v);

    // collapse only components that contain an edge
    std::vector<bool> has_edge(comp_count, false);
    for (auto [a, b] : g.edges)
        if (comp[a] == comp[b]) has_edge[comp[a]] = true;

    std::vector<int> group(n, -1);
    int next_group = 0;
    std::vector<std::string> names;
    // keep vertex order: first occurrence names the group
    for (int v = 0; v < n; ++v) {
        if (group[v] != -1) continue;
        if (has_edge[comp[v]]) {
            std::string name = g.vertices[v];
            for (int u = v; u < n; ++u)
                if (comp[u] == comp[v]) group[u] = next_group;
            names.push_back(std::move(name));
        } else {
            group[v] = next_group;
            names.push_back(g.vertices[v]);
        }
        ++next_group;
    }

    Digraph condensed;
    condensed.vertices = std::move(names);
    for (auto [a, b] : g.edges)
        if (comp[a] != comp[b]) condensed.edges.emplace_back(group[a], group[b]);
    return {std::move(condensed), std::move(group)};
}

DirectedMultiGraph CollapseResult::as_multigraph() const {
    DirectedMultiGraph g;
    g.vertex_count = static_cast<int>(vertex_cells.size());
    for (const auto& [from, to, name] : edges) g.add_edge(from, to);
    return g;
}

CollapseResult collapse_oracle(const Digraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    auto [condensed, group] = condensation(g);

    const int m = static_cast<int>(condensed.vertices.size());
    std::vector<std::vector<std::string>> cells(m);
    for (int v = 0; v < n; ++v) cells[group[v]].push_back(g.vertices[v]);
    // absorbed cycle edges join their component's cell
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        if (group[g.edges[e].first] == group[g.edges[e].second])
            cells[group[g.edges[e].first]].push_back(edge_stratum_name(e));

    // surviving edges carry their original identity
    std::vector<std::tuple<int, int, std::string>> edges;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const int a = group[g.edges[e].first];
        const int b = group[g.edges[e].second];
        if (a != b) edges.emplace_back(a, b, edge_stratum_name(e));
    }

    // repeatedly absorb out-degree-one vertices into their outgoing edge
    std::vector<bool> alive(m, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < m && !changed; ++v) {
            if (!alive[v]) continue;
            int out_count = 0, the_edge = -1;
            for (int e = 0; e < static_cast<int>(edges.size()); ++e)
                if (std::get<0>(edges[e]) == v) {
                    ++out_count;
                    the_edge = e;
                }
            if (out_count != 1) continue;
            const int target = std::get<1>(edges[the_edge]);
            // acyclic after condensation, so target != v
            cells[target].insert(cells[target].end(), cells[v].begin(), cells[v].end());
            cells[target].push_back(std::get<2>(edges[the_edge]));
            edges.erase(edges.begin() + the_edge);
            for (auto& [from, to, name] : edges) {
                if (from == v) from = target;
                if (to == v) to = target;
            }
            alive[v] = false;
            changed = true;
        }
    }

    CollapseResult out;
    std::vector<int> remap(m, -1);
    for (int v = 0; v < m; ++v)
        if (alive[v]) {
            remap[v] = static_cast<int>(out.vertex_cells.size());
            std::sort(cells[v].begin(), cells[v].end());
            out.vertex_cells.push_back(std::move(cells[v]));
        }
    for (auto& [from, to, name] : edges)
        out.edges.emplace_back(remap[from], remap[to], name);
    return out;
}

OrbitMultigraph orbit_space_multigraph(const Digraph& g, const OrbitSpaceResult& result) {
    const int nv = static_cast<int>(g.vertices.size());
    OrbitMultigraph out;
    // node ids for non-pure-edge classes
    std::vector<int> node_of(result.weak.classes.size(), -1);
    for (int c = 0; c < static_cast<int>(result.weak.classes.size()); ++c)
        if (!result.edge_like[c]) node_of[c] = out.graph.vertex_count++;
    for (int c = 0; c < static_cast<int>(result.weak.classes.size()); ++c) {
        if (!result.edge_like[c]) continue;
        // endpoints via any member stratum; inconsistent endpoints make the
        // multigraph reading degenerate
        int from = -1, to = -1;
        for (int x : result.weak.classes[c].items()) {
            const int e = x - nv;
            const int cf = result.weak.class_index_of(g.edges[e].first);
            const int ct = result.weak.class_index_of(g.edges[e].second);
            if (from == -1) {
                from = cf;
                to = ct;
            } else if (from != cf || to != ct) {
                out.degenerate = true;
            }
        }
        if (result.edge_like[from] || result.edge_like[to]) {
            out.degenerate = true;
            continue;
        }
        out.graph.add_edge(node_of[from], node_of[to]);
    }
    return out;
}

}  // namespace semideco
