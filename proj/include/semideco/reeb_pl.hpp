#ifndef SEMIDECO_REEB_PL_HPP
#define SEMIDECO_REEB_PL_HPP

#include <array>
#include <string>
#include <vector>

#include "semideco/finite_space.hpp"
#include "semideco/graphs.hpp"

namespace semideco {

/// A generic PL function on a triangulated closed orientable connected
/// surface: distinct vertex values, every edge in two triangles, single-cycle
/// vertex links, consistent orientation.
class TriSurfaceFn {
public:
    static TriSurfaceFn make(std::vector<double> vertex_values,
                             std::vector<std::array<int, 3>> triangles);

    int vertex_count() const { return static_cast<int>(values_.size()); }
    double value(int v) const { return values_[v]; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// vertices sorted by increasing value
    const std::vector<int>& sweep_order() const { return sweep_order_; }

    long long euler_characteristic() const;
    int genus() const;

    enum class VertexKind { minimum, regular, saddle, maximum };
    VertexKind vertex_kind(int v) const;
    /// components of the lower link; 0 for a minimum, -1 when the lower link
    /// is the whole circle (a maximum)
    int lower_link_runs(int v) const;
    std::vector<int> critical_vertices() const;  // in sweep order

    /// link vertices of v in cyclic order
    const std::vector<int>& link_cycle(int v) const { return link_cycles_[v]; }

private:
    std::vector<double> values_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> link_cycles_;
    std::vector<int> sweep_order_;
};

/// Merge tree of the sublevel filtration: the decomposition space of the
/// sublevel-component semi-decomposition. Components are named by their
/// oldest vertex (elder rule).
struct MergeTree {
    struct Node {
        enum class Kind { birth, join, finish };
        Kind kind;
        int vertex;     // the event vertex
        double value;
        int component;  // surviving component id (its birth minimum)
        std::vector<int> merged;  // for joins: component ids absorbed here
    };
    struct Arc {
        int component;
        double from_value;
        double to_value;
    };
    std::vector<Node> nodes;  // in sweep order
    std::vector<Arc> arcs;
    int join_count = 0;

    int minima_count() const;
};

MergeTree merge_tree(const TriSurfaceFn& s);

/// Homeomorphism fingerprint of one sublevel-set component. Regular levels
/// give compact surfaces with boundary (genus, boundary circles); the exact
/// level of a vertex may pinch, in which case the fingerprint is the Euler
/// characteristic, the boundary-curve component count and the multiset of
/// pinch degrees. A freshly born component is a single point.
struct SublevelType {
    enum class Kind { point, manifold, singular };
    Kind kind = Kind::point;
    int genus = 0;
    int boundary = 0;
    long long chi = 0;
    std::vector<int> pinch_degrees;  // sorted

    friend bool operator==(const SublevelType&, const SublevelType&) = default;
    std::string to_string() const;
};

/// Type of the sublevel component identified by its oldest vertex at level
/// c; c may or may not be a vertex value. Throws input_error when the
/// component is not alive at c.
SublevelType sublevel_type(const TriSurfaceFn& s, int component, double c);

/// The merge tree refined into strata: one point per (vertex value,
/// component) and one per (open value interval, component), carrying the
/// face order of the tree.
struct MergeTreeStrata {
    FiniteSpace space;
    std::vector<bool> is_interval;
    std::vector<int> component;
    std::vector<double> low_value;   // node: the value; interval: lower end
    std::vector<double> high_value;  // node: the value; interval: upper end
    std::vector<SublevelType> type;
};

/// Cells of the abstract weak element space of the sublevel
/// semi-decomposition: connected components of constant-type subsets of the
/// merge tree. Band cells (those containing an interval) read as edges of a
/// multigraph whose vertices are the remaining cells.
struct WeakElementSpace {
    MergeTreeStrata strata;
    QuotientMap cells;
    MultiGraph graph;
    std::vector<int> cell_node;  // cell -> graph vertex, -1 for band cells
    int band_cells = 0;
    int node_cells = 0;
    bool degenerate = false;  // a band cell without two node endpoints

    int cell_count() const { return static_cast<int>(cells.classes.size()); }
};

WeakElementSpace weak_element_space(const TriSurfaceFn& s);

/// Classical Reeb graph from a level-circle sweep: vertices are the critical
/// vertices, edges the maximal circle lifespans between critical levels.
struct ReebGraph {
    std::vector<int> vertices;               // surface vertex ids
    std::vector<std::pair<int, int>> edges;  // indices into vertices

    MultiGraph as_multigraph() const;
    int cell_count() const {
        return static_cast<int>(vertices.size() + edges.size());
    }
};

ReebGraph reeb_graph(const TriSurfaceFn& s);

/// The sublevel-versus-Reeb comparison, run as a report: both pipelines are
/// computed independently and the outcome is recorded, never asserted.
struct ReebComparison {
    int weak_cells = 0;
    int reeb_cells = 0;
    bool isomorphic_as_multigraphs = false;
    WeakElementSpace weak;
    ReebGraph reeb;
};

ReebComparison compare_reeb(const TriSurfaceFn& s);

}  // namespace semideco

#endif
