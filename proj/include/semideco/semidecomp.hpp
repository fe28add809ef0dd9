#ifndef SEMIDECO_SEMIDECOMP_HPP
#define SEMIDECO_SEMIDECOMP_HPP

#include <optional>
#include <string>
#include <vector>

#include "semideco/finite_space.hpp"

namespace semideco {

/// Per-point equivalence labels standing in for "the elements F(x) and F(y)
/// are homeomorphic". Adapters install geometric labels; the default labels
/// group element subspaces by finite-space isomorphism.
struct ElementTypeOracle {
    std::vector<std::string> label;  // one label per point of the carrier
};

/// A semi-decomposition on a finite space: each point x owns a set
/// element(x) with
///   (1) x in element(x), and
///   (2) x in element(y) implies element(x) subset of element(y).
/// Values are immutable once constructed; make() enforces both axioms and
/// names a witness on failure.
class SemiDecomposition {
public:
    static SemiDecomposition make(FiniteSpace space, std::vector<PointSet> element,
                                  std::optional<ElementTypeOracle> oracle = std::nullopt);

    /// element(x) = {x} for every point.
    static SemiDecomposition singletons(FiniteSpace space);

    /// element(y) = down-set of y in the given pre-order. Rejects input that
    /// is not reflexive-transitive.
    static SemiDecomposition from_preorder(FiniteSpace space, const RelMatrix& order);

    const FiniteSpace& space() const { return space_; }
    const PointSet& element(int x) const { return element_[x]; }
    const std::vector<PointSet>& elements() const { return element_; }
    const std::optional<ElementTypeOracle>& type_oracle() const { return oracle_; }

    /// The induced pre-order: x <= y iff x in element(y).
    RelMatrix to_preorder() const;

    /// closure(element(x)), cached at construction; used everywhere.
    const PointSet& element_closure(int x) const { return closure_[x]; }
    /// element_closure(x) - element(x).
    const PointSet& derived_set(int x) const { return derived_[x]; }

private:
    FiniteSpace space_;
    std::vector<PointSet> element_;
    std::vector<PointSet> closure_;
    std::vector<PointSet> derived_;
    std::optional<ElementTypeOracle> oracle_;
};

/// The Cl / P / R split: cl holds the closed points (element closure equals
/// the element), p the non-closed points with closed derived set, r the
/// rest. recurrent = cl + r.
struct Classification {
    PointSet cl;
    PointSet p;
    PointSet r;
    PointSet recurrent;

    /// 0 = closed, 1 = proper non-closed, 2 = non-closed non-proper.
    int case_of(int x) const;
};

Classification classify_points(const SemiDecomposition& f);

/// Union of elements over A.
PointSet saturation(const SemiDecomposition& f, const PointSet& a);

bool is_invariant_set(const SemiDecomposition& f, const PointSet& a);

/// Requires A invariant (throws not_invariant_error); true iff
/// closure(element(x)) == A for every x in A.
bool is_minimal_set(const SemiDecomposition& f, const PointSet& a);

/// Quotient by equality of elements; the projection p_{X/F}.
QuotientMap decomposition_space(const SemiDecomposition& f);

/// The element class of x: points whose element closure equals that of x.
PointSet element_class(const SemiDecomposition& f, int x);

/// Partition of the space into element classes.
std::vector<PointSet> class_decomposition(const SemiDecomposition& f);

/// The relation x'' <= x iff some x' in element(x) has the same element
/// closure as x''; raw generating step before transitive closure.
RelMatrix class_preorder_step(const SemiDecomposition& f);

/// Transitive closure of class_preorder_step.
RelMatrix class_preorder(const SemiDecomposition& f);

/// The class semi-decomposition: element(x) = down-set of x in
/// class_preorder. Valid by construction (and re-validated).
SemiDecomposition class_semidecomposition(const SemiDecomposition& f);

/// True iff elements are pairwise disjoint, i.e. the induced pre-order is
/// an equivalence.
bool is_decomposition(const SemiDecomposition& f);

struct InvarianceReport {
    bool cond1 = false;  // closures of invariant sets stay invariant
    bool cond2 = false;  // Cl, P, R are each invariant
    bool cond3 = false;  // derived sets of proper points are invariant
    bool overall = false;
};

/// cond1 is evaluated by the per-point reduction: every closure(element(x))
/// must be invariant. The exhaustive subset check is kept in the tests.
InvarianceReport check_invariance(const SemiDecomposition& f);

/// Default oracle: group the subspaces element(x) by finite-space
/// isomorphism; labels are "t<k>" in first-seen order by point index.
ElementTypeOracle default_element_types(const SemiDecomposition& f);

}  // namespace semideco

#endif
