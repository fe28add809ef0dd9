#ifndef SEMIDECO_TESTS_FIXTURES_HPP
#define SEMIDECO_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "semideco/finite_space.hpp"
#include "semideco/semidecomp.hpp"

namespace fixtures {

using semideco::FiniteSpace;
using semideco::PointSet;
using semideco::SemiDecomposition;

// Three-point fan: s and t incomparable below o.
inline FiniteSpace arc_space() {
    return FiniteSpace::build({"s", "t", "o"}, {{"s", "o"}, {"t", "o"}});
}

inline SemiDecomposition arc_singletons() {
    return SemiDecomposition::singletons(arc_space());
}

// Same space, with the top point dragging t into its element.
inline SemiDecomposition semiarc() {
    FiniteSpace space = arc_space();
    const int s = space.require_index("s");
    const int t = space.require_index("t");
    const int o = space.require_index("o");
    std::vector<PointSet> element(3);
    element[s] = PointSet({s});
    element[t] = PointSet({t});
    element[o] = PointSet({o, t});
    return SemiDecomposition::make(std::move(space), std::move(element));
}

// Total order c < p < r carrying one closed, one proper, one recurrent point.
inline FiniteSpace chain_space() {
    return FiniteSpace::build({"c", "p", "r"}, {{"c", "p"}, {"p", "r"}});
}

inline SemiDecomposition chain_fixture() {
    FiniteSpace space = chain_space();
    const int c = space.require_index("c");
    const int p = space.require_index("p");
    const int r = space.require_index("r");
    std::vector<PointSet> element(3);
    element[c] = PointSet({c});
    element[p] = PointSet({p});
    element[r] = PointSet({r, c});
    return SemiDecomposition::make(std::move(space), std::move(element));
}

// Two-point chain where the class semi-decomposition strictly exceeds the
// class decomposition.
inline SemiDecomposition e_fixture() {
    FiniteSpace space = FiniteSpace::build({"c", "p"}, {{"c", "p"}});
    const int c = space.require_index("c");
    const int p = space.require_index("p");
    std::vector<PointSet> element(2);
    element[c] = PointSet({c});
    element[p] = PointSet({c, p});
    return SemiDecomposition::make(std::move(space), std::move(element));
}

// Deterministic witness that the canonical Morse construction can fail for
// a non-invariant semi-decomposition: on the chain z < y < x with
// F(x) = {x}, F(y) = {x, y}, F(z) = {z}, the derived set of x contains the
// maximal proper point y, which lies outside Q(F) = {z}.
inline SemiDecomposition uncoverable_fixture() {
    FiniteSpace space = FiniteSpace::build({"z", "y", "x"}, {{"z", "y"}, {"y", "x"}});
    const int z = space.require_index("z");
    const int y = space.require_index("y");
    const int x = space.require_index("x");
    std::vector<PointSet> element(3);
    element[z] = PointSet({z});
    element[y] = PointSet({x, y});
    element[x] = PointSet({x});
    return SemiDecomposition::make(std::move(space), std::move(element));
}

}  // namespace fixtures

#endif
