#ifndef SEMIDECO_MORSE_HYPERGRAPH_HPP
#define SEMIDECO_MORSE_HYPERGRAPH_HPP

#include <map>
#include <optional>
#include <vector>

#include "semideco/abstract_elements.hpp"
#include "semideco/finite_space.hpp"
#include "semideco/semidecomp.hpp"

namespace semideco {

/// Vertices are pairwise disjoint point sets; each edge is a non-empty set
/// of vertex indices. Edges of cardinality one are genuine hyper-edges.
struct HyperGraph {
    std::vector<PointSet> vertices;
    std::vector<std::vector<int>> edges;  // distinct sorted index sets
};

/// A hyper-edge assignment: every point outside the vertex family carries
/// the index set I of vertices its derived set meets, with the witness
/// pieces C_i = derived(x) n X_i. Points with empty derived set carry I = {}
/// and do not contribute an edge.
struct MorseAssignment {
    HyperGraph graph;
    std::map<int, std::vector<int>> membership;      // outside point -> I
    std::map<int, std::vector<PointSet>> witnesses;  // outside point -> (C_i)
};

/// Why a family fails to induce a Morse hyper-graph at some point.
struct NotCoveredDiagnostic {
    int point = -1;
    PointSet derived;    // cl F(x) - F(x)
    PointSet uncovered;  // part of the derived set outside the family
};

/// Existence is guaranteed for invariant semi-decompositions but genuinely
/// fails for some general ones, so failures travel in the result instead of
/// unwinding the stack.
struct MorseOutcome {
    std::optional<MorseAssignment> assignment;
    std::vector<NotCoveredDiagnostic> failures;
    /// Set by morse_hypergraph_for when both the semi-decomposition and the
    /// supplied superset are invariant: whether every witness piece is
    /// invariant too.
    std::optional<bool> witness_pieces_invariant;

    bool ok() const { return assignment.has_value(); }
};

/// Assigns hyper-edges for an arbitrary pairwise-disjoint family. Family
/// overlap is a precondition violation (input_error); a derived set leaking
/// outside the family is a NotCovered failure in the outcome.
MorseOutcome hyper_edges(const SemiDecomposition& f, std::vector<PointSet> family);

/// Canonical construction: the family is the set of preimages under the
/// abstract-element quotient of the connected components of the image of
/// Q(F).
MorseOutcome morse_hypergraph(const SemiDecomposition& f);
MorseOutcome morse_hypergraph(const SemiDecomposition& f, const AbstractPartition& elements);

/// Variant over the decomposition space: the family comes from the
/// connected components of the image of a superset Q' of Q(F) in X/F.
/// Throws superset_violation when Q' does not contain Q(F).
MorseOutcome morse_hypergraph_for(const SemiDecomposition& f, const PointSet& q_prime);

struct QuotientRelationCheck {
    bool ok = false;
    PointSet witness_class;  // an abstract element split by the assignment
};

/// True iff the partition {X_lambda} + {H_I} is coarser than the abstract
/// element partition.
QuotientRelationCheck verify_quotient_relation(const SemiDecomposition& f,
                                               const AbstractPartition& elements,
                                               const MorseAssignment& assignment);
QuotientRelationCheck verify_quotient_relation(const SemiDecomposition& f,
                                               const MorseAssignment& assignment);

}  // namespace semideco

#endif
