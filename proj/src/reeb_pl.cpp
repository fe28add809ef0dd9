#include "semideco/reeb_pl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "semideco/errors.hpp"

namespace semideco {

namespace {

std::pair<int, int> edge_key(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

TriSurfaceFn TriSurfaceFn::make(std::vector<double> vertex_values,
                                std::vector<std::array<int, 3>> triangles) {
    TriSurfaceFn s;
    s.values_ = std::move(vertex_values);
    s.triangles_ = std::move(triangles);
    const int n = s.vertex_count();
    if (n == 0) throw input_error("surface has no vertices");

    {
        std::vector<double> sorted = s.values_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("vertex values must be pairwise distinct");
    }

    std::map<std::pair<int, int>, std::vector<int>> edge_triangles;
    for (int t = 0; t < static_cast<int>(s.triangles_.size()); ++t) {
        const auto& tri = s.triangles_[t];
        for (int v : tri)
            if (v < 0 || v >= n) throw input_error("triangle references unknown vertex");
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
            throw input_error("degenerate triangle");
        for (int k = 0; k < 3; ++k)
            edge_triangles[edge_key(tri[k], tri[(k + 1) % 3])].push_back(t);
    }
    for (const auto& [e, ts] : edge_triangles) {
        if (ts.size() != 2)
            throw input_error("not a closed surface: an edge lies in " +
                              std::to_string(ts.size()) + " triangles");
        s.edges_.push_back(e);
    }

    // vertex links must be single cycles
    s.link_cycles_.resize(n);
    for (int v = 0; v < n; ++v) {
        std::map<int, std::vector<int>> link_adj;
        int incident = 0;
        for (const auto& tri : s.triangles_) {
            if (tri[0] != v && tri[1] != v && tri[2] != v) continue;
            ++incident;
            std::vector<int> rest;
            for (int w : tri)
                if (w != v) rest.push_back(w);
            link_adj[rest[0]].push_back(rest[1]);
            link_adj[rest[1]].push_back(rest[0]);
        }
        if (incident == 0) throw input_error("isolated vertex");
        for (const auto& [w, nb] : link_adj)
            if (nb.size() != 2) throw input_error("vertex link is not a cycle");
        std::vector<int> cycle;
        int start = link_adj.begin()->first;
        int prev = -1, cur = start;
        do {
            cycle.push_back(cur);
            const auto& nb = link_adj[cur];
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        } while (cur != start && static_cast<int>(cycle.size()) <= incident);
        if (static_cast<int>(cycle.size()) != incident ||
            static_cast<int>(link_adj.size()) != incident)
            throw input_error("vertex link is not a single cycle");
        s.link_cycles_[v] = std::move(cycle);
    }

    // orientability: propagate consistent triangle orientations
    {
        const int nt = static_cast<int>(s.triangles_.size());
        std::vector<int> flip(nt, -1);
        for (int seed = 0; seed < nt; ++seed) {
            if (flip[seed] != -1) continue;
            flip[seed] = 0;
            std::vector<int> stack{seed};
            while (!stack.empty()) {
                const int t = stack.back();
                stack.pop_back();
                const auto& tri = s.triangles_[t];
                for (int k = 0; k < 3; ++k) {
                    const int a = tri[k], b = tri[(k + 1) % 3];
                    for (int other : edge_triangles[edge_key(a, b)]) {
                        if (other == t) continue;
                        // directed traversal of (a, b) within `other`
                        const auto& o = s.triangles_[other];
                        bool same_direction = false;
                        for (int j = 0; j < 3; ++j)
                            if (o[j] == a && o[(j + 1) % 3] == b) same_direction = true;
                        const int expected = flip[t] ^ (same_direction ? 1 : 0);
                        if (flip[other] == -1) {
                            flip[other] = expected;
                            stack.push_back(other);
                        } else if (flip[other] != expected) {
                            throw input_error("surface is not orientable");
                        }
                    }
                }
            }
        }
    }

    // connectivity
    {
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : s.link_cycles_[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != n) throw input_error("surface is not connected");
    }

    const long long chi = s.euler_characteristic();
    if ((2 - chi) % 2 != 0 || chi > 2)
        throw input_error("Euler characteristic is not that of a closed surface");

    s.sweep_order_.resize(n);
    std::iota(s.sweep_order_.begin(), s.sweep_order_.end(), 0);
    std::sort(s.sweep_order_.begin(), s.sweep_order_.end(),
              [&](int a, int b) { return s.values_[a] < s.values_[b]; });
    return s;
}

long long TriSurfaceFn::euler_characteristic() const {
    return static_cast<long long>(values_.size()) -
           static_cast<long long>(edges_.size()) +
           static_cast<long long>(triangles_.size());
}

int TriSurfaceFn::genus() const {
    return static_cast<int>((2 - euler_characteristic()) / 2);
}

int TriSurfaceFn::lower_link_runs(int v) const {
    const auto& cycle = link_cycles_[v];
    const int k = static_cast<int>(cycle.size());
    int below = 0;
    for (int w : cycle)
        if (values_[w] < values_[v]) ++below;
    if (below == 0) return 0;
    if (below == k) return -1;
    int runs = 0;
    for (int i = 0; i < k; ++i) {
        const bool here = values_[cycle[i]] < values_[v];
        const bool next = values_[cycle[(i + 1) % k]] < values_[v];
        if (here && !next) ++runs;
    }
    return runs;
}

TriSurfaceFn::VertexKind TriSurfaceFn::vertex_kind(int v) const {
    const int runs = lower_link_runs(v);
    if (runs == 0) return VertexKind::minimum;
    if (runs == -1) return VertexKind::maximum;
    if (runs == 1) return VertexKind::regular;
    return VertexKind::saddle;
}

std::vector<int> TriSurfaceFn::critical_vertices() const {
    std::vector<int> out;
    for (int v : sweep_order_)
        if (vertex_kind(v) != VertexKind::regular) out.push_back(v);
    return out;
}

int MergeTree::minima_count() const {
    int count = 0;
    for (const auto& node : nodes)
        if (node.kind == Node::Kind::birth) ++count;
    return count;
}

namespace {

struct ElderUnionFind {
    const TriSurfaceFn* s;
    std::vector<int> parent;

    explicit ElderUnionFind(const TriSurfaceFn& surface)
        : s(&surface), parent(surface.vertex_count()) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // the older (lower-valued) root survives
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (s->value(a) > s->value(b)) std::swap(a, b);
        parent[b] = a;
        return a;
    }
};

}  // namespace

MergeTree merge_tree(const TriSurfaceFn& s) {
    MergeTree tree;
    ElderUnionFind uf(s);
    std::map<int, double> birth_value;
    std::map<int, double> death_value;

    for (int v : s.sweep_order()) {
        std::vector<int> lower_roots;
        for (int w : s.link_cycle(v))
            if (s.value(w) < s.value(v)) lower_roots.push_back(uf.find(w));
        std::sort(lower_roots.begin(), lower_roots.end());
        lower_roots.erase(std::unique(lower_roots.begin(), lower_roots.end()),
                          lower_roots.end());

        if (lower_roots.empty()) {
            birth_value[v] = s.value(v);
            tree.nodes.push_back(
                {MergeTree::Node::Kind::birth, v, s.value(v), v, {}});
            continue;
        }
        if (lower_roots.size() == 1) {
            uf.unite(v, lower_roots.front());
            continue;
        }
        int survivor = lower_roots.front();
        for (int r : lower_roots) survivor = uf.unite(survivor, r);
        uf.unite(v, survivor);
        std::vector<int> merged;
        for (int r : lower_roots)
            if (r != survivor) {
                merged.push_back(r);
                death_value[r] = s.value(v);
            }
        tree.join_count += static_cast<int>(merged.size());
        tree.nodes.push_back(
            {MergeTree::Node::Kind::join, v, s.value(v), survivor, std::move(merged)});
    }

    const int top = s.sweep_order().back();
    const int root = uf.find(top);
    tree.nodes.push_back(
        {MergeTree::Node::Kind::finish, top, s.value(top), root, {}});
    for (const auto& [comp, born] : birth_value) {
        const double died =
            death_value.count(comp) ? death_value[comp] : s.value(top);
        tree.arcs.push_back({comp, born, died});
    }
    return tree;
}

std::string SublevelType::to_string() const {
    switch (kind) {
        case Kind::point:
            return "pt";
        case Kind::manifold:
            return "g" + std::to_string(genus) + "b" + std::to_string(boundary);
        default: {
            std::string out = "chi" + std::to_string(chi) + "b" + std::to_string(boundary);
            for (int p : pinch_degrees) out += "p" + std::to_string(p);
            return out;
        }
    }
}

namespace {

// sublevel component of `rep` at level c as a vertex set; empty optional
// when rep is above c
std::vector<bool> component_vertices(const TriSurfaceFn& s, int rep, double c) {
    if (s.value(rep) > c) throw input_error("component not alive at the queried level");
    std::vector<bool> in_comp(s.vertex_count(), false);
    in_comp[rep] = true;
    std::vector<int> stack{rep};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : s.link_cycle(v))
            if (!in_comp[w] && s.value(w) <= c) {
                in_comp[w] = true;
                stack.push_back(w);
            }
    }
    return in_comp;
}

long long subcomplex_chi(const TriSurfaceFn& s, const std::vector<bool>& w) {
    long long vertices = 0, edges = 0, faces = 0;
    for (int v = 0; v < s.vertex_count(); ++v)
        if (w[v]) ++vertices;
    for (const auto& [a, b] : s.edges())
        if (w[a] && w[b]) ++edges;
    for (const auto& tri : s.triangles())
        if (w[tri[0]] && w[tri[1]] && w[tri[2]]) ++faces;
    return vertices - edges + faces;
}

// Counts the boundary curves of the sublevel component W at level c by
// tracing level segments through mixed triangles. When c is the value of a
// vertex, the curve through that vertex is a single component no matter how
// many times it passes through it.
int boundary_curves(const TriSurfaceFn& s, const std::vector<bool>& in_comp, double c,
                    int at_vertex) {
    // node ids: one per strictly mixed edge, plus one for the vertex at c
    std::map<std::pair<int, int>, int> node_of_edge;
    const auto strictly_mixed = [&](int a, int b) {
        return (s.value(a) < c && s.value(b) > c) || (s.value(b) < c && s.value(a) > c);
    };
    for (const auto& [a, b] : s.edges())
        if (strictly_mixed(a, b)) {
            const int id = static_cast<int>(node_of_edge.size());
            node_of_edge[{a, b}] = id;
        }
    int node_count = static_cast<int>(node_of_edge.size());
    int vertex_node = -1;
    if (at_vertex >= 0) vertex_node = node_count++;

    std::vector<int> parent(node_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    std::vector<bool> node_used(node_count, false);
    for (const auto& tri : s.triangles()) {
        std::vector<int> segment_nodes;
        bool has_at = false;
        for (int k = 0; k < 3; ++k) {
            if (tri[k] == at_vertex) has_at = true;
            const int a = tri[k], b = tri[(k + 1) % 3];
            if (strictly_mixed(a, b)) segment_nodes.push_back(node_of_edge[edge_key(a, b)]);
        }
        if (has_at && segment_nodes.size() == 1) segment_nodes.push_back(vertex_node);
        if (segment_nodes.size() == 2) {
            unite(segment_nodes[0], segment_nodes[1]);
            node_used[segment_nodes[0]] = node_used[segment_nodes[1]] = true;
        }
    }

    // count curve components that bound this sublevel component
    std::set<int> roots;
    for (const auto& [e, id] : node_of_edge) {
        if (!node_used[id]) continue;  // cannot happen on a closed surface
        const int below = s.value(e.first) < c ? e.first : e.second;
        if (in_comp[below]) roots.insert(find(id));
    }
    if (vertex_node != -1 && node_used[vertex_node] && in_comp[at_vertex])
        roots.insert(find(vertex_node));
    return static_cast<int>(roots.size());
}

int vertex_at_level(const TriSurfaceFn& s, double c) {
    for (int v = 0; v < s.vertex_count(); ++v)
        if (s.value(v) == c) return v;
    return -1;
}

SublevelType type_of_component(const TriSurfaceFn& s, const std::vector<bool>& in_comp,
                               double c) {
    const int at_vertex = vertex_at_level(s, c);
    int size = 0, only = -1;
    for (int v = 0; v < s.vertex_count(); ++v)
        if (in_comp[v]) {
            ++size;
            only = v;
        }

    SublevelType out;
    if (size == 1 && only == at_vertex) {
        out.kind = SublevelType::Kind::point;
        out.chi = 1;
        return out;
    }

    out.chi = subcomplex_chi(s, in_comp);
    out.boundary = boundary_curves(s, in_comp, c, at_vertex);
    if (at_vertex >= 0 && in_comp[at_vertex]) {
        const int runs = s.lower_link_runs(at_vertex);
        if (runs >= 2) out.pinch_degrees.push_back(runs);
    }
    if (out.pinch_degrees.empty()) {
        out.kind = SublevelType::Kind::manifold;
        const long long twice_genus = 2 - out.chi - out.boundary;
        if (twice_genus < 0 || twice_genus % 2 != 0)
            throw error("sublevel component has an impossible manifold fingerprint");
        out.genus = static_cast<int>(twice_genus / 2);
    } else {
        out.kind = SublevelType::Kind::singular;
    }
    return out;
}

}  // namespace

SublevelType sublevel_type(const TriSurfaceFn& s, int component, double c) {
    if (component < 0 || component >= s.vertex_count())
        throw input_error("unknown component representative");
    const std::vector<bool> in_comp = component_vertices(s, component, c);
    // elder rule: the representative must be the oldest vertex of its
    // component, otherwise the component merged away below c
    for (int v = 0; v < s.vertex_count(); ++v)
        if (in_comp[v] && s.value(v) < s.value(component))
            throw input_error("component not alive at the queried level");
    return type_of_component(s, in_comp, c);
}

WeakElementSpace weak_element_space(const TriSurfaceFn& s) {
    const int n = s.vertex_count();
    const auto& order = s.sweep_order();

    // component roots alive after each sweep step
    ElderUnionFind uf(s);
    std::vector<std::vector<int>> alive(n);
    std::vector<std::map<int, int>> carried(n);  // step i -> root at step i of
                                                 // each root alive at i-1
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        for (int w : s.link_cycle(v))
            if (s.value(w) < s.value(v)) uf.unite(v, w);
        if (i > 0)
            for (int old_root : alive[i - 1]) carried[i][old_root] = uf.find(old_root);
        std::set<int> roots;
        for (int j = 0; j <= i; ++j) roots.insert(uf.find(order[j]));
        alive[i].assign(roots.begin(), roots.end());
    }

    // strata: nodes per (step, component), intervals per (step < n-1, component)
    std::map<std::pair<int, int>, int> node_id, interval_id;
    std::vector<std::string> names;
    WeakElementSpace out;
    auto& strata = out.strata;
    const auto add_stratum = [&](bool interval, int step, int comp) {
        const int id = static_cast<int>(names.size());
        names.push_back((interval ? "a" : "n") + std::to_string(step) + ":" +
                        std::to_string(comp));
        strata.is_interval.push_back(interval);
        strata.component.push_back(comp);
        const double low = s.value(order[step]);
        const double high = interval ? s.value(order[step + 1]) : low;
        strata.low_value.push_back(low);
        strata.high_value.push_back(high);
        (interval ? interval_id : node_id)[{step, comp}] = id;
        return id;
    };
    for (int i = 0; i < n; ++i) {
        for (int comp : alive[i]) add_stratum(false, i, comp);
        if (i + 1 < n)
            for (int comp : alive[i]) add_stratum(true, i, comp);
    }

    std::vector<std::pair<std::string, std::string>> generators;
    for (int i = 0; i + 1 < n; ++i)
        for (int comp : alive[i]) {
            const int arc = interval_id[{i, comp}];
            generators.emplace_back(names[node_id[{i, comp}]], names[arc]);
            generators.emplace_back(names[node_id[{i + 1, carried[i + 1][comp]}]],
                                    names[arc]);
        }
    strata.space = FiniteSpace::build(names, generators);

    // per-stratum sublevel types
    strata.type.reserve(names.size());
    for (std::size_t k = 0; k < names.size(); ++k) {
        const double c = strata.is_interval[k]
                             ? 0.5 * (strata.low_value[k] + strata.high_value[k])
                             : strata.low_value[k];
        strata.type.push_back(sublevel_type(s, strata.component[k], c));
    }

    // cells: connected components of constant-type strata sets; adjacency is
    // exactly the generator list
    {
        std::vector<int> parent(names.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& [lo, hi] : generators) {
            const int a = strata.space.require_index(lo);
            const int b = strata.space.require_index(hi);
            if (strata.type[a] == strata.type[b]) parent[find(a)] = find(b);
        }
        std::map<int, std::vector<int>> classes;
        for (int k = 0; k < static_cast<int>(names.size()); ++k)
            classes[find(k)].push_back(k);
        std::vector<PointSet> partition;
        for (auto& [root, members] : classes) partition.emplace_back(std::move(members));
        out.cells = quotient(strata.space, std::move(partition));
    }

    // multigraph reading: cells without interval strata are nodes, band
    // cells are edges between their adjacent node cells
    const int cell_count = static_cast<int>(out.cells.classes.size());
    std::vector<bool> band(cell_count, false);
    for (int c = 0; c < cell_count; ++c)
        for (int x : out.cells.classes[c].items())
            if (strata.is_interval[x]) band[c] = true;
    out.cell_node.assign(cell_count, -1);
    for (int c = 0; c < cell_count; ++c)
        if (!band[c]) {
            out.cell_node[c] = out.graph.vertex_count++;
            ++out.node_cells;
        }
    for (int c = 0; c < cell_count; ++c) {
        if (!band[c]) continue;
        ++out.band_cells;
        std::set<int> adjacent;
        for (const auto& [lo, hi] : generators) {
            const int a = out.cells.project[strata.space.require_index(lo)];
            const int b = out.cells.project[strata.space.require_index(hi)];
            if (a == c && b != c) adjacent.insert(b);
            if (b == c && a != c) adjacent.insert(a);
        }
        bool all_nodes = true;
        for (int other : adjacent)
            if (band[other]) all_nodes = false;
        if (adjacent.size() != 2 || !all_nodes) {
            out.degenerate = true;
            continue;
        }
        const int u = out.cell_node[*adjacent.begin()];
        const int v = out.cell_node[*std::next(adjacent.begin())];
        out.graph.add_edge(u, v);
    }
    return out;
}

MultiGraph ReebGraph::as_multigraph() const {
    MultiGraph g;
    g.vertex_count = static_cast<int>(vertices.size());
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

namespace {

// level circles strictly between two consecutive vertex values, as sorted
// lists of mixed-edge ids
std::vector<std::vector<int>> circles_at(const TriSurfaceFn& s,
                                         const std::vector<bool>& below) {
    std::map<std::pair<int, int>, int> edge_index;
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e)
        edge_index[s.edges()[e]] = e;

    std::vector<int> parent(s.edges().size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto mixed = [&](int a, int b) { return below[a] != below[b]; };

    std::vector<bool> is_mixed(s.edges().size(), false);
    for (const auto& tri : s.triangles()) {
        std::vector<int> seg;
        for (int k = 0; k < 3; ++k) {
            const int a = tri[k], b = tri[(k + 1) % 3];
            if (mixed(a, b)) seg.push_back(edge_index[edge_key(a, b)]);
        }
        if (seg.size() == 2) {
            parent[find(seg[0])] = find(seg[1]);
            is_mixed[seg[0]] = is_mixed[seg[1]] = true;
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e)
        if (is_mixed[e]) groups[find(e)].push_back(e);
    std::vector<std::vector<int>> circles;
    for (auto& [root, members] : groups) circles.push_back(std::move(members));
    std::sort(circles.begin(), circles.end());
    return circles;
}

}  // namespace

ReebGraph reeb_graph(const TriSurfaceFn& s) {
    const int n = s.vertex_count();
    const auto& order = s.sweep_order();

    ReebGraph out;
    std::map<int, int> reeb_vertex;  // surface vertex -> node index
    for (int v : s.critical_vertices()) {
        reeb_vertex[v] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(v);
    }

    struct Chain {
        int lower_vertex;
    };
    std::vector<Chain> chains;
    std::vector<int> active_chain;  // per circle at the current level
    std::vector<std::vector<int>> prev_circles;

    std::vector<bool> below(n, false);
    for (int i = 0; i + 1 < n; ++i) {
        below[order[i]] = true;
        std::vector<std::vector<int>> circles = circles_at(s, below);
        std::vector<int> next_chain(circles.size(), -1);

        const int v = order[i];  // the vertex between the previous and this level
        const auto kind = s.vertex_kind(v);

        if (i == 0) {
            // single circle around the global minimum
            for (std::size_t c = 0; c < circles.size(); ++c) {
                next_chain[c] = static_cast<int>(chains.size());
                chains.push_back({reeb_vertex.at(v)});
            }
        } else {
            // a previous circle touched v when one of its edges ends at v
            std::vector<bool> prev_touch(prev_circles.size(), false);
            for (std::size_t p = 0; p < prev_circles.size(); ++p)
                for (int e : prev_circles[p]) {
                    const auto [a, b] = s.edges()[e];
                    if (a == v || b == v) prev_touch[p] = true;
                }
            // a new circle touches v when its below endpoint is v
            std::vector<bool> new_touch(circles.size(), false);
            for (std::size_t c = 0; c < circles.size(); ++c)
                for (int e : circles[c]) {
                    const auto [a, b] = s.edges()[e];
                    if ((below[a] ? a : b) == v) new_touch[c] = true;
                }

            std::map<int, int> circle_of_edge;
            for (std::size_t c = 0; c < circles.size(); ++c)
                for (int e : circles[c]) circle_of_edge[e] = static_cast<int>(c);

            const bool critical = kind != TriSurfaceFn::VertexKind::regular;
            for (std::size_t p = 0; p < prev_circles.size(); ++p) {
                if (critical && prev_touch[p]) {
                    // the circle runs into the critical vertex: its arc ends
                    out.edges.emplace_back(chains[active_chain[p]].lower_vertex,
                                           reeb_vertex.at(v));
                    continue;
                }
                // carry the chain to the unique successor: shared surviving
                // edge, or through a regular vertex
                int successor = -1;
                for (int e : prev_circles[p]) {
                    auto it = circle_of_edge.find(e);
                    if (it != circle_of_edge.end()) {
                        successor = it->second;
                        break;
                    }
                }
                if (successor == -1)
                    for (std::size_t c = 0; c < circles.size(); ++c)
                        if (new_touch[c]) successor = static_cast<int>(c);
                if (successor == -1 || (critical && next_chain[successor] != -1))
                    throw error("level sweep lost track of a circle");
                next_chain[successor] = active_chain[p];
            }
            for (std::size_t c = 0; c < circles.size(); ++c) {
                if (next_chain[c] != -1) continue;
                // fresh circle: born at a minimum or emerging from a saddle
                next_chain[c] = static_cast<int>(chains.size());
                chains.push_back({reeb_vertex.at(v)});
            }
        }
        prev_circles = std::move(circles);
        active_chain = std::move(next_chain);
    }

    // all remaining circles die at the global maximum
    const int top = order.back();
    for (int chain_id : active_chain)
        out.edges.emplace_back(chains[chain_id].lower_vertex, reeb_vertex.at(top));
    return out;
}

ReebComparison compare_reeb(const TriSurfaceFn& s) {
    ReebComparison out;
    out.weak = weak_element_space(s);
    out.reeb = reeb_graph(s);
    out.weak_cells = out.weak.cell_count();
    out.reeb_cells = out.reeb.cell_count();
    out.isomorphic_as_multigraphs =
        !out.weak.degenerate &&
        multigraph_isomorphic(out.weak.graph, out.reeb.as_multigraph());
    return out;
}

}  // namespace semideco
