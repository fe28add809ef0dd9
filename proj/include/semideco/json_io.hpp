#ifndef SEMIDECO_JSON_IO_HPP
#define SEMIDECO_JSON_IO_HPP

#include <json.hpp>

#include "semideco/abstract_elements.hpp"
#include "semideco/adapters.hpp"
#include "semideco/morse_hypergraph.hpp"
#include "semideco/reeb_pl.hpp"
#include "semideco/semidecomp.hpp"

namespace semideco {

/// ordered_json keeps insertion order, so reports serialize with stable key
/// order and identical runs produce identical bytes.
using Json = nlohmann::ordered_json;

// -- parsing; all throw input_error with a field diagnostic ---------------

/// {"points": ["s","t","o"], "le": [["s","o"],["t","o"]]}; the pairs are
/// generators, closed under reflexivity and transitivity.
FiniteSpace space_from_json(const Json& j);

/// {"space": {...}, "elements": {"o": ["o","t"], ...}} or
/// {"space": {...}, "preorder": [["c","p"], ...]} (mutually exclusive; the
/// preorder pairs are generators and are closed before use).
SemiDecomposition semidec_from_json(const Json& j);

/// {"simplices": [[0,1,2],[1,2,3]]}: maximal faces; closure generated.
SimplicialComplex simplicial_from_json(const Json& j);

/// {"vertices": ["a","b"], "edges": [["a","b"],["a","b"]]}; list position is
/// the edge identity.
Digraph digraph_from_json(const Json& j);

/// {"vertices": [{"id":0,"f":0.12}, ...], "triangles": [[0,1,2], ...]}.
TriSurfaceFn surface_from_json(const Json& j);

// -- serialization --------------------------------------------------------

Json space_to_json(const FiniteSpace& s);
Json point_set_to_json(const FiniteSpace& s, const PointSet& a);
Json semidec_to_json(const SemiDecomposition& f);
Json classification_to_json(const FiniteSpace& s, const Classification& c);
Json invariance_to_json(const InvarianceReport& r);
Json abstract_partition_to_json(const FiniteSpace& s, const AbstractPartition& p);
Json morse_to_json(const FiniteSpace& s, const MorseOutcome& m);

// -- full per-command reports ---------------------------------------------

Json analyze_report(const SemiDecomposition& f);
Json simplicial_report(const SimplicialComplex& k);
Json digraph_report(const Digraph& g);
Json reeb_report(const TriSurfaceFn& s);

}  // namespace semideco

#endif
