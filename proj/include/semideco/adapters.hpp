#ifndef SEMIDECO_ADAPTERS_HPP
#define SEMIDECO_ADAPTERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "semideco/abstract_elements.hpp"
#include "semideco/finite_space.hpp"
#include "semideco/graphs.hpp"
#include "semideco/semidecomp.hpp"

namespace semideco {

/// Finite abstract simplicial complex; simplices are stored as sorted
/// vertex-index lists, ordered by dimension then lexicographically.
class SimplicialComplex {
public:
    /// Closure of the given faces under non-empty subsets.
    static SimplicialComplex from_maximal(std::vector<std::string> vertices,
                                          const std::vector<std::vector<int>>& faces);
    /// Takes the simplex family as given; rejects duplicates and
    /// face-closure violations.
    static SimplicialComplex make(std::vector<std::string> vertices,
                                  std::vector<std::vector<int>> simplices);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& simplices() const { return simplices_; }
    int dim(int s) const { return static_cast<int>(simplices_[s].size()) - 1; }
    std::string simplex_name(int s) const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::vector<int>> simplices_;
};

/// Finite directed multigraph; list position is the edge identity.
struct Digraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;  // (source, target) indices

    static Digraph make(std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges);
};

/// A geometric input reduced to strata: the finite carrier all the
/// machinery runs on, one point per open cell, with the element-type oracle
/// attached to the semi-decomposition and a human-readable description per
/// stratum.
struct StratifiedInstance {
    SemiDecomposition semidec;
    std::vector<std::string> provenance;

    const FiniteSpace& strata() const { return semidec.space(); }
    const ElementTypeOracle& oracle() const { return *semidec.type_oracle(); }
};

/// Strata are the simplices with the face order; the element of a simplex
/// is its set of faces; the type label is the dimension.
StratifiedInstance simplicial_to_instance(const SimplicialComplex& k);

/// The simplex poset (K, subset-of) as a finite space.
FiniteSpace face_poset(const SimplicialComplex& k);

struct FacePosetCheck {
    bool ok = false;
    int class_count = 0;
    /// class representative stratum -> simplex it maps to, the witness
    /// order-isomorphism when ok
    std::vector<std::pair<std::string, std::string>> witness;
    std::string counterexample;  // set when !ok
};

/// Computes the abstract weak element space of the stratified instance and
/// tests it against the face poset: every class must be the open-cell
/// stratum itself and the induced map an order isomorphism.
FacePosetCheck check_face_poset(const SimplicialComplex& k);

/// Strata are vertices plus open edges. The element of a stratum is its
/// positive orbit's footprint; the type label is the canonical form of the
/// orbit as a directed multigraph (pendant arc included only when the edge
/// does not lie on a directed cycle, in which case the arc is already part
/// of the reachable subgraph).
StratifiedInstance digraph_to_instance(const Digraph& g);

struct OrbitSpaceResult {
    StratifiedInstance instance;
    AbstractPartition weak;
    /// per class: true when the class consists solely of open-edge strata
    std::vector<bool> edge_like;
};

/// The abstract weak element space of the positive-orbit semi-decomposition.
OrbitSpaceResult orbit_space(const Digraph& g);

/// The proof-derived comparison target: collapse every strongly connected
/// component containing an edge, then repeatedly absorb each vertex of
/// out-degree one into its outgoing edge.
struct CollapseResult {
    /// surviving vertices as groups of original cell names (vertex names and
    /// absorbed edge names)
    std::vector<std::vector<std::string>> vertex_cells;
    std::vector<std::tuple<int, int, std::string>> edges;  // (from, to, edge name)

    DirectedMultiGraph as_multigraph() const;
};

CollapseResult collapse_oracle(const Digraph& g);

/// Condensation of the digraph: strongly connected components with at least
/// one internal edge become single vertices. Returns the condensed digraph
/// and the vertex-of map.
std::pair<Digraph, std::vector<int>> condensation(const Digraph& g);

/// The weak element space read as a directed multigraph: classes containing
/// a vertex stratum are nodes, pure edge classes are arrows. degenerate is
/// set when a pure edge class has inconsistent endpoints and no faithful
/// multigraph reading exists.
struct OrbitMultigraph {
    DirectedMultiGraph graph;
    bool degenerate = false;
};

OrbitMultigraph orbit_space_multigraph(const Digraph& g, const OrbitSpaceResult& result);

/// Edge name used for the stratum of edge index i ("e1", "e2", ...).
std::string edge_stratum_name(int index);

}  // namespace semideco

#endif
