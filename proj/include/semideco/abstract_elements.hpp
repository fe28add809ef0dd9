#ifndef SEMIDECO_ABSTRACT_ELEMENTS_HPP
#define SEMIDECO_ABSTRACT_ELEMENTS_HPP

#include <vector>

#include "semideco/finite_space.hpp"
#include "semideco/semidecomp.hpp"

namespace semideco {

/// Equivalence classes of the abstract (weak) element relation together
/// with the quotient onto the abstract (weak) element space.
///
/// The defining relation relates two points of the same Cl/P/R case when
/// witnesses x' in F(x), y' in F(y) project into one connected component of
/// the projected case set (weak variant: the case set is further cut by the
/// element-type labels). The relation as written is reflexive and symmetric
/// but not obviously transitive; classes are the equivalence closure and
/// raw_relation_transitive records whether closing added anything.
struct AbstractPartition {
    enum class Kind { element, weak_element };
    Kind kind = Kind::element;
    std::vector<PointSet> classes;  // sorted by smallest member
    QuotientMap space;              // quotient by the classes
    bool raw_relation_transitive = true;

    int class_index_of(int point) const { return space.project[point]; }
    const PointSet& class_of(int point) const { return classes[space.project[point]]; }
};

AbstractPartition abstract_elements(const SemiDecomposition& f);

/// Uses the given oracle; the overload without one takes the
/// semi-decomposition's own oracle, falling back to finite-space
/// isomorphism of the element subspaces.
AbstractPartition abstract_weak_elements(const SemiDecomposition& f,
                                         const ElementTypeOracle& oracle);
AbstractPartition abstract_weak_elements(const SemiDecomposition& f);

/// Variant for stratified reductions of geometric inputs whose point
/// classification is known geometrically and need not match the one the
/// strata order would suggest (a positive orbit entering an open edge from
/// its interior is closed in the graph, yet its footprint is not a down-set
/// of the face order). The supplied classification replaces classify_points.
AbstractPartition abstract_weak_elements(const SemiDecomposition& f,
                                         const ElementTypeOracle& oracle,
                                         const Classification& classification);

QuotientMap abstract_element_space(const SemiDecomposition& f);
QuotientMap abstract_weak_element_space(const SemiDecomposition& f,
                                        const ElementTypeOracle& oracle);

/// Points x such that no element closure strictly contains the closure of
/// element(x).
PointSet maximal_points(const SemiDecomposition& f);

/// Q(F): the union of abstract elements of recurrent or non-maximal points.
PointSet quasi_recurrent(const SemiDecomposition& f);
PointSet quasi_recurrent(const SemiDecomposition& f, const AbstractPartition& elements);

/// Abstract elements computed from the projection formula that is provable
/// for decompositions: the class of x is the preimage under p_{X/F} of the
/// connected component of the projected case set containing p(x). Returned
/// per point; forms a partition when F is a decomposition.
std::vector<PointSet> abstract_elements_by_projection_formula(const SemiDecomposition& f);

/// The space-level variant for invariant decompositions with connected
/// elements: the class of x is the connected component of its case set
/// (taken in X) that contains x.
std::vector<PointSet> abstract_elements_by_component_formula(const SemiDecomposition& f);

}  // namespace semideco

#endif
