#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "mesh_fixtures.hpp"
#include "reeb_oracle.hpp"
#include "semideco/errors.hpp"
#include "semideco/reeb_pl.hpp"

using namespace semideco;

namespace {

SublevelType manifold_type(int genus, int boundary) {
    SublevelType t;
    t.kind = SublevelType::Kind::manifold;
    t.genus = genus;
    t.boundary = boundary;
    t.chi = 2 - 2 * genus - boundary;
    return t;
}

// independent circle counter at a non-vertex level: cycles of mixed edges
int count_level_circles(const TriSurfaceFn& s, double c) {
    std::map<std::pair<int, int>, int> id;
    for (const auto& e : s.edges())
        if ((s.value(e.first) < c) != (s.value(e.second) < c)) {
            const int next = static_cast<int>(id.size());
            id[e] = next;
        }
    std::vector<int> parent(id.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& tri : s.triangles()) {
        std::vector<int> seg;
        for (int k = 0; k < 3; ++k) {
            int a = tri[k], b = tri[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            auto it = id.find({a, b});
            if (it != id.end()) seg.push_back(it->second);
        }
        if (seg.size() == 2) parent[find(seg[0])] = find(seg[1]);
    }
    std::set<int> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

// all component representatives alive at level c: local minima below c that
// are the oldest vertex of their sublevel component
std::vector<int> alive_components(const TriSurfaceFn& s, double c) {
    std::vector<int> reps;
    for (int v = 0; v < s.vertex_count(); ++v) {
        if (s.vertex_kind(v) != TriSurfaceFn::VertexKind::minimum || s.value(v) > c)
            continue;
        bool older_found = false;
        std::vector<bool> seen(s.vertex_count(), false);
        std::vector<int> stack{v};
        seen[v] = true;
        while (!stack.empty() && !older_found) {
            const int u = stack.back();
            stack.pop_back();
            if (s.value(u) < s.value(v)) older_found = true;
            for (int w : s.link_cycle(u))
                if (!seen[w] && s.value(w) <= c) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        if (!older_found) reps.push_back(v);
    }
    return reps;
}

int count_parallel_pairs(const MultiGraph& g) {
    std::map<std::pair<int, int>, int> mult;
    for (auto e : g.edges) ++mult[e];
    int pairs = 0;
    for (auto& [e, m] : mult) pairs += m * (m - 1) / 2;
    return pairs;
}

}  // namespace

TEST_SUITE_BEGIN("reeb_pl");

TEST_CASE("surface validation") {
    CHECK_NOTHROW(mesh::octahedron());
    CHECK_NOTHROW(mesh::csaszar_torus());
    CHECK_NOTHROW(mesh::pear());

    SUBCASE("duplicate values rejected") {
        std::vector<double> f = {0.0, 0.0, 1.0, 2.0};
        std::vector<std::array<int, 3>> tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
        CHECK_THROWS_AS(TriSurfaceFn::make(std::move(f), std::move(tris)), input_error);
    }
    SUBCASE("open meshes rejected") {
        std::vector<double> f = {0.0, 1.0, 2.0};
        std::vector<std::array<int, 3>> tris = {{0, 1, 2}};
        CHECK_THROWS_AS(TriSurfaceFn::make(std::move(f), std::move(tris)), input_error);
    }
    SUBCASE("tetrahedron is fine") {
        std::vector<double> f = {0.0, 1.0, 2.0, 3.0};
        std::vector<std::array<int, 3>> tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
        TriSurfaceFn s = TriSurfaceFn::make(std::move(f), std::move(tris));
        CHECK(s.genus() == 0);
    }
}

TEST_CASE("vertex classification of the fixtures") {
    TriSurfaceFn octa = mesh::octahedron();
    CHECK(octa.vertex_kind(1) == TriSurfaceFn::VertexKind::minimum);
    CHECK(octa.vertex_kind(0) == TriSurfaceFn::VertexKind::maximum);
    for (int v : {2, 3, 4, 5})
        CHECK(octa.vertex_kind(v) == TriSurfaceFn::VertexKind::regular);

    TriSurfaceFn torus = mesh::csaszar_torus();
    CHECK(torus.genus() == 1);
    CHECK(torus.vertex_kind(0) == TriSurfaceFn::VertexKind::minimum);
    CHECK(torus.vertex_kind(2) == TriSurfaceFn::VertexKind::saddle);
    CHECK(torus.vertex_kind(4) == TriSurfaceFn::VertexKind::saddle);
    CHECK(torus.vertex_kind(6) == TriSurfaceFn::VertexKind::maximum);
    for (int v : {1, 3, 5})
        CHECK(torus.vertex_kind(v) == TriSurfaceFn::VertexKind::regular);

    TriSurfaceFn pear = mesh::pear();
    CHECK(pear.vertex_kind(0) == TriSurfaceFn::VertexKind::minimum);
    CHECK(pear.vertex_kind(1) == TriSurfaceFn::VertexKind::minimum);
    CHECK(pear.vertex_kind(2) == TriSurfaceFn::VertexKind::saddle);
    CHECK(pear.vertex_kind(7) == TriSurfaceFn::VertexKind::maximum);
}

TEST_CASE("merge trees") {
    SUBCASE("octahedron: single component from minimum to maximum") {
        MergeTree t = merge_tree(mesh::octahedron());
        CHECK(t.minima_count() == 1);
        CHECK(t.join_count == 0);
        CHECK(t.arcs.size() == 1);
    }
    SUBCASE("torus: path tree, no joins") {
        MergeTree t = merge_tree(mesh::csaszar_torus());
        CHECK(t.minima_count() == 1);
        CHECK(t.join_count == 0);
    }
    SUBCASE("pear: one join at the saddle") {
        MergeTree t = merge_tree(mesh::pear());
        CHECK(t.minima_count() == 2);
        CHECK(t.join_count == 1);
        bool join_found = false;
        for (const auto& node : t.nodes)
            if (node.kind == MergeTree::Node::Kind::join) {
                join_found = true;
                CHECK(node.vertex == 2);
                CHECK(node.component == 0);  // elder minimum survives
                CHECK(node.merged == std::vector<int>{1});
            }
        CHECK(join_found);
    }
    SUBCASE("join count is minima minus one, also after subdivision") {
        for (const TriSurfaceFn& s :
             {mesh::octahedron(), mesh::csaszar_torus(), mesh::pear()}) {
            MergeTree t = merge_tree(s);
            CHECK(t.join_count == t.minima_count() - 1);
            TriSurfaceFn sub = mesh::barycentric_subdivision(s);
            MergeTree ts = merge_tree(sub);
            CHECK(ts.join_count == ts.minima_count() - 1);
            CHECK(ts.minima_count() == t.minima_count());
        }
    }
}

TEST_CASE("sublevel types") {
    TriSurfaceFn octa = mesh::octahedron();
    SUBCASE("sphere regular level is a disk") {
        CHECK(sublevel_type(octa, 1, 0.5) == manifold_type(0, 1));
    }
    SUBCASE("above the maximum the type is the whole surface") {
        CHECK(sublevel_type(octa, 1, 2.0) == manifold_type(0, 0));
        CHECK(sublevel_type(mesh::csaszar_torus(), 0, 7.5) == manifold_type(1, 0));
    }
    SUBCASE("birth level is a point") {
        SublevelType t = sublevel_type(octa, 1, -1.0);
        CHECK(t.kind == SublevelType::Kind::point);
    }
    SUBCASE("torus between the saddles is a cylinder") {
        CHECK(sublevel_type(mesh::csaszar_torus(), 0, 3.5) == manifold_type(0, 2));
    }
    SUBCASE("torus after the second saddle is a genus-one piece") {
        CHECK(sublevel_type(mesh::csaszar_torus(), 0, 5.5) == manifold_type(1, 1));
    }
    SUBCASE("saddle levels are pinched") {
        SublevelType s1 = sublevel_type(mesh::csaszar_torus(), 0, 2.0);
        CHECK(s1.kind == SublevelType::Kind::singular);
        CHECK(s1.pinch_degrees == std::vector<int>{2});
        SublevelType s2 = sublevel_type(mesh::csaszar_torus(), 0, 4.0);
        CHECK(s2.kind == SublevelType::Kind::singular);
        CHECK(s1.chi != s2.chi);
    }
    SUBCASE("dead components are rejected") {
        TriSurfaceFn pear = mesh::pear();
        CHECK_NOTHROW(sublevel_type(pear, 1, 0.1));   // second minimum alive
        CHECK_THROWS_AS(sublevel_type(pear, 1, 0.4), input_error);  // merged at 0.3
        CHECK_THROWS_AS(sublevel_type(pear, 7, 0.1), input_error);  // not yet born
    }
}

TEST_CASE("level circles match the per-component boundary counts") {
    for (const TriSurfaceFn& s :
         {mesh::octahedron(), mesh::csaszar_torus(), mesh::pear()}) {
        const auto& order = s.sweep_order();
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            const double c = 0.5 * (s.value(order[i]) + s.value(order[i + 1]));
            int total_b = 0;
            for (int rep : alive_components(s, c)) {
                SublevelType t = sublevel_type(s, rep, c);
                REQUIRE(t.kind == SublevelType::Kind::manifold);
                total_b += t.boundary;
            }
            CHECK(total_b == count_level_circles(s, c));
        }
    }
}

TEST_CASE("sublevel types are invariant under barycentric subdivision") {
    for (const TriSurfaceFn& s :
         {mesh::octahedron(), mesh::csaszar_torus(), mesh::pear()}) {
        TriSurfaceFn sub = mesh::barycentric_subdivision(s);
        // new vertices are regular: critical structure is preserved
        for (int v = s.vertex_count(); v < sub.vertex_count(); ++v)
            CHECK(sub.vertex_kind(v) == TriSurfaceFn::VertexKind::regular);
        const auto& order = s.sweep_order();
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            const double c = 0.5 * (s.value(order[i]) + s.value(order[i + 1]));
            for (int rep : alive_components(s, c))
                CHECK(sublevel_type(s, rep, c) == sublevel_type(sub, rep, c));
        }
    }
}

TEST_CASE("weak element spaces of the fixtures") {
    SUBCASE("octahedron: point, disk band, closed surface") {
        WeakElementSpace w = weak_element_space(mesh::octahedron());
        REQUIRE(w.cell_count() == 3);
        CHECK(w.node_cells == 2);
        CHECK(w.band_cells == 1);
        CHECK_FALSE(w.degenerate);
        std::set<std::string> types;
        for (const auto& cls : w.cells.classes)
            types.insert(w.strata.type[cls.items().front()].to_string());
        CHECK(types == std::set<std::string>{"pt", "g0b1", "g0b0"});
    }
    SUBCASE("torus: seven cells along the path") {
        WeakElementSpace w = weak_element_space(mesh::csaszar_torus());
        REQUIRE(w.cell_count() == 7);
        CHECK(w.node_cells == 4);
        CHECK(w.band_cells == 3);
        std::multiset<std::string> types;
        for (const auto& cls : w.cells.classes)
            types.insert(w.strata.type[cls.items().front()].to_string());
        CHECK(types.count("pt") == 1);
        CHECK(types.count("g0b1") == 1);
        CHECK(types.count("g0b2") == 1);
        CHECK(types.count("g1b1") == 1);
        CHECK(types.count("g1b0") == 1);
    }
    SUBCASE("pear: seven cells, three disk bands kept apart by the tree") {
        WeakElementSpace w = weak_element_space(mesh::pear());
        REQUIRE(w.cell_count() == 7);
        CHECK(w.node_cells == 4);
        CHECK(w.band_cells == 3);
        int disk_bands = 0;
        for (int c = 0; c < w.cell_count(); ++c)
            if (w.cell_node[c] == -1 &&
                w.strata.type[w.cells.classes[c].items().front()] == manifold_type(0, 1))
                ++disk_bands;
        CHECK(disk_bands == 3);
    }
    SUBCASE("cells only break at critical vertex levels") {
        for (const TriSurfaceFn& s :
             {mesh::octahedron(), mesh::csaszar_torus(), mesh::pear()}) {
            WeakElementSpace w = weak_element_space(s);
            for (int c = 0; c < w.cell_count(); ++c) {
                if (w.cell_node[c] == -1) continue;  // band
                // a pure node cell sits at a critical vertex value
                const int stratum = w.cells.classes[c].items().front();
                const double value = w.strata.low_value[stratum];
                bool at_critical = false;
                for (int v : s.critical_vertices())
                    if (s.value(v) == value) at_critical = true;
                CHECK(at_critical);
            }
        }
    }
}

TEST_CASE("reeb graphs of the fixtures") {
    SUBCASE("octahedron: two vertices, one edge") {
        ReebGraph r = reeb_graph(mesh::octahedron());
        CHECK(r.vertices.size() == 2);
        CHECK(r.edges.size() == 1);
    }
    SUBCASE("torus: four vertices, one parallel pair between the saddles") {
        ReebGraph r = reeb_graph(mesh::csaszar_torus());
        REQUIRE(r.vertices == std::vector<int>{0, 2, 4, 6});
        CHECK(r.edges.size() == 4);
        CHECK(count_parallel_pairs(r.as_multigraph()) == 1);
        std::multiset<std::pair<int, int>> edges(r.edges.begin(), r.edges.end());
        CHECK(edges.count({1, 2}) == 2);  // the two circles between the saddles
        CHECK(edges.count({0, 1}) == 1);
        CHECK(edges.count({2, 3}) == 1);
    }
    SUBCASE("pear: both minima feed the saddle") {
        ReebGraph r = reeb_graph(mesh::pear());
        REQUIRE(r.vertices == std::vector<int>{0, 1, 2, 7});
        CHECK(r.edges.size() == 3);
        std::multiset<std::pair<int, int>> edges(r.edges.begin(), r.edges.end());
        CHECK(edges.count({0, 2}) == 1);
        CHECK(edges.count({1, 2}) == 1);
        CHECK(edges.count({2, 3}) == 1);
    }
    SUBCASE("vertex minus edge count equals one minus genus on the fixtures") {
        for (const TriSurfaceFn& s :
             {mesh::octahedron(), mesh::csaszar_torus(), mesh::pear()}) {
            ReebGraph r = reeb_graph(s);
            CHECK(static_cast<int>(r.vertices.size()) -
                      static_cast<int>(r.edges.size()) ==
                  1 - s.genus());
        }
    }
}

TEST_CASE("reeb graph against the region-growing oracle") {
    for (const TriSurfaceFn& s :
         {mesh::octahedron(), mesh::csaszar_torus(), mesh::pear()}) {
        ReebGraph r = reeb_graph(s);
        oracles::OracleReeb o = oracles::region_growing_reeb(s);
        CHECK(multigraph_isomorphic(r.as_multigraph(), o.as_multigraph()));
    }
    // the oracle run on a barycentric subdivision agrees with the original
    TriSurfaceFn torus = mesh::csaszar_torus();
    oracles::OracleReeb sub_oracle =
        oracles::region_growing_reeb(mesh::barycentric_subdivision(torus));
    CHECK(multigraph_isomorphic(reeb_graph(torus).as_multigraph(),
                                sub_oracle.as_multigraph()));
    CHECK(count_parallel_pairs(sub_oracle.as_multigraph()) == 1);
}

TEST_CASE("compare_reeb reports") {
    SUBCASE("sphere: 3 = 3, isomorphic") {
        ReebComparison r = compare_reeb(mesh::octahedron());
        CHECK(r.weak_cells == 3);
        CHECK(r.reeb_cells == 3);
        CHECK(r.isomorphic_as_multigraphs);
    }
    SUBCASE("torus: 7 weak cells against 8 reeb cells") {
        ReebComparison r = compare_reeb(mesh::csaszar_torus());
        CHECK(r.weak_cells == 7);
        CHECK(r.reeb_cells == 8);
        CHECK_FALSE(r.isomorphic_as_multigraphs);
    }
    SUBCASE("pear: both pipelines agree") {
        ReebComparison r = compare_reeb(mesh::pear());
        CHECK(r.weak_cells == 7);
        CHECK(r.reeb_cells == 7);
        CHECK(r.isomorphic_as_multigraphs);
    }
}

TEST_SUITE_END();
