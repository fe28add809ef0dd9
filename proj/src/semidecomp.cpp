#include "semideco/semidecomp.hpp"

#include <algorithm>
#include <map>

#include "semideco/errors.hpp"

namespace semideco {

SemiDecomposition SemiDecomposition::make(FiniteSpace space,
                                          std::vector<PointSet> element,
                                          std::optional<ElementTypeOracle> oracle) {
    const int n = space.size();
    if (static_cast<int>(element.size()) != n)
        throw input_error("element map must be defined on every point");
    for (int x = 0; x < n; ++x) {
        for (int y : element[x].items())
            if (y < 0 || y >= n)
                throw input_error("element of " + space.point_name(x) +
                                  " references a point outside the space");
        if (!element[x].contains(x))
            throw axiom_violation(1, space.point_name(x), "");
    }
    for (int y = 0; y < n; ++y)
        for (int x : element[y].items())
            if (!is_subset(element[x], element[y]))
                throw axiom_violation(2, space.point_name(x), space.point_name(y));
    if (oracle && static_cast<int>(oracle->label.size()) != n)
        throw input_error("type oracle must label every point");

    SemiDecomposition f;
    f.space_ = std::move(space);
    f.element_ = std::move(element);
    f.oracle_ = std::move(oracle);
    f.closure_.reserve(n);
    f.derived_.reserve(n);
    for (int x = 0; x < n; ++x) {
        f.closure_.push_back(closure(f.space_, f.element_[x]));
        f.derived_.push_back(set_difference(f.closure_[x], f.element_[x]));
    }
    return f;
}

SemiDecomposition SemiDecomposition::singletons(FiniteSpace space) {
    std::vector<PointSet> element;
    element.reserve(space.size());
    for (int x = 0; x < space.size(); ++x) element.push_back(PointSet({x}));
    return make(std::move(space), std::move(element));
}

SemiDecomposition SemiDecomposition::from_preorder(FiniteSpace space,
                                                   const RelMatrix& order) {
    const int n = space.size();
    if (static_cast<int>(order.size()) != n)
        throw input_error("pre-order size does not match the space");
    if (!is_reflexive(order)) throw input_error("pre-order is not reflexive");
    if (!is_transitive(order)) throw input_error("pre-order is not transitive");
    std::vector<PointSet> element;
    element.reserve(n);
    for (int y = 0; y < n; ++y) {
        std::vector<int> down;
        for (int x = 0; x < n; ++x)
            if (order[x][y]) down.push_back(x);
        element.emplace_back(std::move(down));
    }
    return make(std::move(space), std::move(element));
}

RelMatrix SemiDecomposition::to_preorder() const {
    const int n = space_.size();
    RelMatrix order(n, std::vector<bool>(n, false));
    for (int y = 0; y < n; ++y)
        for (int x : element_[y].items()) order[x][y] = true;
    return order;
}

int Classification::case_of(int x) const {
    if (cl.contains(x)) return 0;
    if (p.contains(x)) return 1;
    return 2;
}

Classification classify_points(const SemiDecomposition& f) {
    std::vector<int> cl, p, r;
    for (int x = 0; x < f.space().size(); ++x) {
        if (f.derived_set(x).empty()) {
            cl.push_back(x);
        } else if (is_closed_set(f.space(), f.derived_set(x))) {
            p.push_back(x);
        } else {
            r.push_back(x);
        }
    }
    Classification out;
    out.cl = PointSet(std::move(cl));
    out.p = PointSet(std::move(p));
    out.r = PointSet(std::move(r));
    out.recurrent = set_union(out.cl, out.r);
    return out;
}

PointSet saturation(const SemiDecomposition& f, const PointSet& a) {
    PointSet out;
    for (int x : a.items()) out = set_union(out, f.element(x));
    return out;
}

bool is_invariant_set(const SemiDecomposition& f, const PointSet& a) {
    return saturation(f, a) == a;
}

bool is_minimal_set(const SemiDecomposition& f, const PointSet& a) {
    if (!is_invariant_set(f, a))
        throw not_invariant_error("minimality queried on a non-invariant set");
    for (int x : a.items())
        if (!(f.element_closure(x) == a)) return false;
    return true;
}

QuotientMap decomposition_space(const SemiDecomposition& f) {
    std::map<PointSet, std::vector<int>> by_element;
    for (int x = 0; x < f.space().size(); ++x)
        by_element[f.element(x)].push_back(x);
    std::vector<PointSet> classes;
    classes.reserve(by_element.size());
    for (auto& [elt, members] : by_element) classes.emplace_back(std::move(members));
    return quotient(f.space(), std::move(classes));
}

PointSet element_class(const SemiDecomposition& f, int x) {
    std::vector<int> out;
    for (int y = 0; y < f.space().size(); ++y)
        if (f.element_closure(y) == f.element_closure(x)) out.push_back(y);
    return PointSet(std::move(out));
}

std::vector<PointSet> class_decomposition(const SemiDecomposition& f) {
    std::map<PointSet, std::vector<int>> by_closure;
    for (int x = 0; x < f.space().size(); ++x)
        by_closure[f.element_closure(x)].push_back(x);
    std::vector<PointSet> classes;
    classes.reserve(by_closure.size());
    for (auto& [cl, members] : by_closure) classes.emplace_back(std::move(members));
    std::sort(classes.begin(), classes.end());
    return classes;
}

RelMatrix class_preorder_step(const SemiDecomposition& f) {
    const int n = f.space().size();
    RelMatrix step(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int witness : f.element(x).items())
            for (int below = 0; below < n; ++below)
                if (f.element_closure(below) == f.element_closure(witness))
                    step[below][x] = true;
    return step;
}

RelMatrix class_preorder(const SemiDecomposition& f) {
    RelMatrix order = class_preorder_step(f);
    close_reflexive_transitive(order);
    return order;
}

SemiDecomposition class_semidecomposition(const SemiDecomposition& f) {
    return SemiDecomposition::from_preorder(f.space(), class_preorder(f));
}

bool is_decomposition(const SemiDecomposition& f) {
    for (int y = 0; y < f.space().size(); ++y)
        for (int x : f.element(y).items())
            if (!(f.element(x) == f.element(y))) return false;
    return true;
}

InvarianceReport check_invariance(const SemiDecomposition& f) {
    InvarianceReport rep;
    rep.cond1 = true;
    for (int x = 0; x < f.space().size() && rep.cond1; ++x)
        if (!is_invariant_set(f, f.element_closure(x))) rep.cond1 = false;

    const Classification cls = classify_points(f);
    rep.cond2 = is_invariant_set(f, cls.cl) && is_invariant_set(f, cls.p) &&
                is_invariant_set(f, cls.r);

    rep.cond3 = true;
    for (int x : cls.p.items())
        if (!is_invariant_set(f, f.derived_set(x))) {
            rep.cond3 = false;
            break;
        }
    rep.overall = rep.cond1 && rep.cond2 && rep.cond3;
    return rep;
}

ElementTypeOracle default_element_types(const SemiDecomposition& f) {
    ElementTypeOracle oracle;
    oracle.label.resize(f.space().size());
    std::vector<FiniteSpace> reps;
    std::vector<std::string> rep_labels;
    for (int x = 0; x < f.space().size(); ++x) {
        FiniteSpace sub = subspace(f.space(), f.element(x));
        bool matched = false;
        for (std::size_t k = 0; k < reps.size(); ++k) {
            if (is_homeomorphic(sub, reps[k])) {
                oracle.label[x] = rep_labels[k];
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::string label = "t" + std::to_string(reps.size());
            reps.push_back(std::move(sub));
            rep_labels.push_back(label);
            oracle.label[x] = label;
        }
    }
    return oracle;
}

}  // namespace semideco
