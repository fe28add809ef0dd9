#ifndef SEMIDECO_GRAPHS_HPP
#define SEMIDECO_GRAPHS_HPP

#include <string>
#include <utility>
#include <vector>

namespace semideco {

/// Undirected multigraph on vertices 0..n-1; parallel edges and loops
/// allowed, each entry one edge.
struct MultiGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // stored with first <= second

    void add_edge(int a, int b);
};

/// Directed multigraph; entries are (source, target).
struct DirectedMultiGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    void add_edge(int from, int to) { edges.emplace_back(from, to); }
};

/// Suppress every vertex with exactly one incoming and one outgoing edge,
/// splicing the two edges, except when both are the same loop (an isolated
/// directed circle keeps one vertex carrying the loop). The result is the
/// canonical form for orientation-respecting homeomorphism of directed
/// graphs.
DirectedMultiGraph smooth_directed(DirectedMultiGraph g);

/// Undirected smoothing: suppress degree-2 vertices (a loop contributes 2),
/// keeping a vertex whose two slots are one loop.
MultiGraph smooth_undirected(MultiGraph g);

/// Exact isomorphism of small multigraphs, multiplicities included.
bool multigraph_isomorphic(const MultiGraph& a, const MultiGraph& b);
bool directed_multigraph_isomorphic(const DirectedMultiGraph& a,
                                    const DirectedMultiGraph& b);

/// Equal labels iff the smoothed graphs are isomorphic. Labels are assigned
/// in registration order, so label text is deterministic for a fixed call
/// sequence.
class DirectedGraphTypeRegistry {
public:
    std::string label_of(const DirectedMultiGraph& g);

private:
    std::vector<DirectedMultiGraph> reps_;
    std::vector<std::string> labels_;
};

}  // namespace semideco

#endif
