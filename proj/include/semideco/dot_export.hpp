#ifndef SEMIDECO_DOT_EXPORT_HPP
#define SEMIDECO_DOT_EXPORT_HPP

#include <string>

#include "semideco/adapters.hpp"
#include "semideco/morse_hypergraph.hpp"
#include "semideco/reeb_pl.hpp"

namespace semideco {

/// Morse hyper-graph: vertices as oval nodes. Hyper-edges with two or more
/// endpoints expand through an auxiliary square node; cardinality-one
/// hyper-edges attach a doubly-bordered square as a half-edge marker.
std::string morse_dot(const FiniteSpace& space, const MorseAssignment& assignment);

/// Weak element space of a digraph: vertex-like classes as nodes, edge-like
/// classes as directed edges between the classes of their endpoints.
std::string orbit_space_dot(const Digraph& g, const OrbitSpaceResult& result);

/// Hasse diagram of a finite space (cover relations, drawn low to high).
std::string poset_dot(const FiniteSpace& space);

/// Both graphs of the sublevel comparison as clusters of one graph.
std::string reeb_dot(const TriSurfaceFn& s, const WeakElementSpace& weak,
                     const ReebGraph& reeb);

}  // namespace semideco

#endif
