#include "semideco/abstract_elements.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "semideco/errors.hpp"

namespace semideco {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Group key: the case plus the data the relating set fixes (derived set for
// P, element closure for R), plus the type label in the weak variant.
using GroupKey = std::tuple<int, PointSet, std::string>;

GroupKey group_key_of(const SemiDecomposition& f, const Classification& cls, int x,
                      const ElementTypeOracle* oracle) {
    const int c = cls.case_of(x);
    PointSet data;
    if (c == 1) data = f.derived_set(x);
    if (c == 2) data = f.element_closure(x);
    std::string label = oracle ? oracle->label[x] : std::string();
    return {c, std::move(data), std::move(label)};
}

AbstractPartition build_partition(const SemiDecomposition& f,
                                  const ElementTypeOracle* oracle,
                                  AbstractPartition::Kind kind,
                                  const Classification* classification = nullptr) {
    const int n = f.space().size();
    const Classification cls = classification ? *classification : classify_points(f);
    const QuotientMap p = decomposition_space(f);

    std::map<GroupKey, std::vector<int>> groups;
    for (int x = 0; x < n; ++x) groups[group_key_of(f, cls, x, oracle)].push_back(x);

    UnionFind uf(n);
    // witness_comps[x]: component ids of the projected case set reachable
    // from the element of x. Two group members are raw-related iff their
    // witness component sets intersect.
    std::vector<std::vector<int>> witness_comps(n);
    for (const auto& [key, members] : groups) {
        const PointSet case_set{members};
        const PointSet image = p.image(case_set);
        const std::vector<PointSet> comps = connected_components(p.target, image);
        for (int x : members) {
            std::vector<int> reach;
            for (int witness : f.element(x).items()) {
                const int q = p.class_of(witness);
                if (!image.contains(q)) continue;
                for (int c = 0; c < static_cast<int>(comps.size()); ++c)
                    if (comps[c].contains(q)) {
                        reach.push_back(c);
                        break;
                    }
            }
            std::sort(reach.begin(), reach.end());
            reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
            witness_comps[x] = std::move(reach);
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                std::vector<int> common;
                std::set_intersection(
                    witness_comps[members[i]].begin(), witness_comps[members[i]].end(),
                    witness_comps[members[j]].begin(), witness_comps[members[j]].end(),
                    std::back_inserter(common));
                if (!common.empty()) uf.unite(members[i], members[j]);
            }
    }

    std::map<int, std::vector<int>> by_root;
    for (int x = 0; x < n; ++x) by_root[uf.find(x)].push_back(x);
    std::vector<PointSet> classes;
    classes.reserve(by_root.size());
    for (auto& [root, members] : by_root) classes.emplace_back(std::move(members));
    std::sort(classes.begin(), classes.end());

    // The raw relation is transitive iff every closure class is a clique of
    // the raw relation. Cross-group pairs are never related, and closure
    // classes never span groups, so checking witness-set intersections
    // within each class suffices.
    bool raw_transitive = true;
    for (const auto& cls_set : classes) {
        const auto& m = cls_set.items();
        for (std::size_t i = 0; i < m.size() && raw_transitive; ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                std::vector<int> common;
                std::set_intersection(witness_comps[m[i]].begin(), witness_comps[m[i]].end(),
                                      witness_comps[m[j]].begin(), witness_comps[m[j]].end(),
                                      std::back_inserter(common));
                if (common.empty()) {
                    raw_transitive = false;
                    break;
                }
            }
    }

    AbstractPartition out;
    out.kind = kind;
    out.space = quotient(f.space(), classes);
    out.classes = out.space.classes;
    out.raw_relation_transitive = raw_transitive;
    return out;
}

}  // namespace

AbstractPartition abstract_elements(const SemiDecomposition& f) {
    return build_partition(f, nullptr, AbstractPartition::Kind::element);
}

AbstractPartition abstract_weak_elements(const SemiDecomposition& f,
                                         const ElementTypeOracle& oracle) {
    if (static_cast<int>(oracle.label.size()) != f.space().size())
        throw input_error("type oracle must label every point");
    return build_partition(f, &oracle, AbstractPartition::Kind::weak_element);
}

AbstractPartition abstract_weak_elements(const SemiDecomposition& f) {
    if (f.type_oracle()) return abstract_weak_elements(f, *f.type_oracle());
    return abstract_weak_elements(f, default_element_types(f));
}

AbstractPartition abstract_weak_elements(const SemiDecomposition& f,
                                         const ElementTypeOracle& oracle,
                                         const Classification& classification) {
    if (static_cast<int>(oracle.label.size()) != f.space().size())
        throw input_error("type oracle must label every point");
    return build_partition(f, &oracle, AbstractPartition::Kind::weak_element,
                           &classification);
}

QuotientMap abstract_element_space(const SemiDecomposition& f) {
    return abstract_elements(f).space;
}

QuotientMap abstract_weak_element_space(const SemiDecomposition& f,
                                        const ElementTypeOracle& oracle) {
    return abstract_weak_elements(f, oracle).space;
}

PointSet maximal_points(const SemiDecomposition& f) {
    const int n = f.space().size();
    std::vector<int> out;
    for (int x = 0; x < n; ++x) {
        bool dominated = false;
        for (int y = 0; y < n && !dominated; ++y)
            if (!(f.element_closure(x) == f.element_closure(y)) &&
                is_subset(f.element_closure(x), f.element_closure(y)))
                dominated = true;
        if (!dominated) out.push_back(x);
    }
    return PointSet(std::move(out));
}

PointSet quasi_recurrent(const SemiDecomposition& f) {
    return quasi_recurrent(f, abstract_elements(f));
}

PointSet quasi_recurrent(const SemiDecomposition& f, const AbstractPartition& elements) {
    const Classification cls = classify_points(f);
    const PointSet max = maximal_points(f);
    PointSet q;
    for (int x = 0; x < f.space().size(); ++x)
        if (cls.recurrent.contains(x) || !max.contains(x))
            q = set_union(q, elements.class_of(x));
    return q;
}

namespace {

// The relating set of x under the strong relation: its whole case for
// closed points, equal derived sets within P, equal closures within R.
PointSet case_set_of(const SemiDecomposition& f, const Classification& cls, int x) {
    switch (cls.case_of(x)) {
        case 0:
            return cls.cl;
        case 1: {
            std::vector<int> zs;
            for (int z : cls.p.items())
                if (f.derived_set(z) == f.derived_set(x)) zs.push_back(z);
            return PointSet(std::move(zs));
        }
        default: {
            std::vector<int> zs;
            for (int z : cls.r.items())
                if (f.element_closure(z) == f.element_closure(x)) zs.push_back(z);
            return PointSet(std::move(zs));
        }
    }
}

}  // namespace

std::vector<PointSet> abstract_elements_by_projection_formula(const SemiDecomposition& f) {
    const Classification cls = classify_points(f);
    const QuotientMap p = decomposition_space(f);
    std::vector<PointSet> out(f.space().size());
    for (int x = 0; x < f.space().size(); ++x) {
        const PointSet image = p.image(case_set_of(f, cls, x));
        const int px = p.class_of(x);
        for (const PointSet& comp : connected_components(p.target, image))
            if (comp.contains(px)) {
                out[x] = p.preimage(comp);
                break;
            }
    }
    return out;
}

std::vector<PointSet> abstract_elements_by_component_formula(const SemiDecomposition& f) {
    const Classification cls = classify_points(f);
    std::vector<PointSet> out(f.space().size());
    for (int x = 0; x < f.space().size(); ++x) {
        for (const PointSet& comp : connected_components(f.space(), case_set_of(f, cls, x)))
            if (comp.contains(x)) {
                out[x] = comp;
                break;
            }
    }
    return out;
}

}  // namespace semideco
