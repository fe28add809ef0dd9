#include "semideco/morse_hypergraph.hpp"

#include <algorithm>
#include <set>

#include "semideco/errors.hpp"

namespace semideco {

MorseOutcome hyper_edges(const SemiDecomposition& f, std::vector<PointSet> family) {
    std::sort(family.begin(), family.end());
    PointSet covered;
    for (const PointSet& member : family) {
        if (!set_intersection(covered, member).empty())
            throw input_error("hyper-edge family members overlap");
        covered = set_union(covered, member);
    }

    MorseOutcome out;
    MorseAssignment assignment;
    assignment.graph.vertices = family;

    std::set<std::vector<int>> edge_set;
    for (int x = 0; x < f.space().size(); ++x) {
        if (covered.contains(x)) continue;
        const PointSet& derived = f.derived_set(x);
        const PointSet uncovered = set_difference(derived, covered);
        if (!uncovered.empty()) {
            out.failures.push_back({x, derived, uncovered});
            continue;
        }
        std::vector<int> index_set;
        std::vector<PointSet> pieces;
        for (int i = 0; i < static_cast<int>(family.size()); ++i) {
            PointSet piece = set_intersection(derived, family[i]);
            if (!piece.empty()) {
                index_set.push_back(i);
                pieces.push_back(std::move(piece));
            }
        }
        if (!index_set.empty()) edge_set.insert(index_set);
        assignment.membership.emplace(x, std::move(index_set));
        assignment.witnesses.emplace(x, std::move(pieces));
    }

    if (!out.failures.empty()) return out;
    assignment.graph.edges.assign(edge_set.begin(), edge_set.end());
    out.assignment = std::move(assignment);
    return out;
}

MorseOutcome morse_hypergraph(const SemiDecomposition& f) {
    return morse_hypergraph(f, abstract_elements(f));
}

MorseOutcome morse_hypergraph(const SemiDecomposition& f, const AbstractPartition& elements) {
    const PointSet q = quasi_recurrent(f, elements);
    const PointSet image = elements.space.image(q);
    std::vector<PointSet> family;
    for (const PointSet& comp : connected_components(elements.space.target, image))
        family.push_back(elements.space.preimage(comp));
    return hyper_edges(f, std::move(family));
}

MorseOutcome morse_hypergraph_for(const SemiDecomposition& f, const PointSet& q_prime) {
    const PointSet q = quasi_recurrent(f);
    if (!is_subset(q, q_prime))
        throw superset_violation("supplied set does not contain the quasi-recurrent set");

    const QuotientMap p = decomposition_space(f);
    const PointSet image = p.image(q_prime);
    std::vector<PointSet> family;
    for (const PointSet& comp : connected_components(p.target, image))
        family.push_back(p.preimage(comp));
    MorseOutcome out = hyper_edges(f, std::move(family));

    if (out.ok() && check_invariance(f).overall && is_invariant_set(f, q_prime)) {
        bool all_invariant = true;
        for (const auto& [x, pieces] : out.assignment->witnesses)
            for (const PointSet& piece : pieces)
                if (!is_invariant_set(f, piece)) all_invariant = false;
        out.witness_pieces_invariant = all_invariant;
    }
    return out;
}

QuotientRelationCheck verify_quotient_relation(const SemiDecomposition& f,
                                               const AbstractPartition& elements,
                                               const MorseAssignment& assignment) {
    // Block id per point: vertex index, or the edge class of its index set.
    const int n = f.space().size();
    std::vector<int> block(n, -1);
    for (int v = 0; v < static_cast<int>(assignment.graph.vertices.size()); ++v)
        for (int x : assignment.graph.vertices[v].items()) block[x] = v;
    std::map<std::vector<int>, int> edge_block;
    int next_block = static_cast<int>(assignment.graph.vertices.size());
    for (const auto& [x, index_set] : assignment.membership) {
        auto [it, inserted] = edge_block.emplace(index_set, next_block);
        if (inserted) ++next_block;
        block[x] = it->second;
    }

    for (const PointSet& cls : elements.classes) {
        const int first = block[cls.items().front()];
        for (int x : cls.items())
            if (block[x] != first) return {false, cls};
    }
    return {true, PointSet{}};
}

QuotientRelationCheck verify_quotient_relation(const SemiDecomposition& f,
                                               const MorseAssignment& assignment) {
    return verify_quotient_relation(f, abstract_elements(f), assignment);
}

}  // namespace semideco
