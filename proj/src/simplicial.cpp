#include <algorithm>
#include <set>

#include "semideco/adapters.hpp"
#include "semideco/errors.hpp"

namespace semideco {

namespace {

bool simplex_order(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(
    std::vector<std::string> vertices, const std::vector<std::vector<int>>& faces) {
    std::set<std::vector<int>> closed;
    for (const auto& face : faces) {
        std::vector<int> f = face;
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) throw input_error("empty simplex");
        for (int v : f)
            if (v < 0 || v >= static_cast<int>(vertices.size()))
                throw input_error("simplex references unknown vertex");
        const int m = static_cast<int>(f.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) sub.push_back(f[i]);
            closed.insert(std::move(sub));
        }
    }
    std::vector<std::vector<int>> simplices(closed.begin(), closed.end());
    return make(std::move(vertices), std::move(simplices));
}

SimplicialComplex SimplicialComplex::make(std::vector<std::string> vertices,
                                          std::vector<std::vector<int>> simplices) {
    std::set<std::vector<int>> present;
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        if (s.empty()) throw input_error("empty simplex");
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw input_error("simplex repeats a vertex");
        for (int v : s)
            if (v < 0 || v >= static_cast<int>(vertices.size()))
                throw input_error("simplex references unknown vertex");
        if (!present.insert(s).second) throw input_error("duplicate simplex");
    }
    for (const auto& s : present) {
        const int m = static_cast<int>(s.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) sub.push_back(s[i]);
            if (!present.count(sub)) {
                std::string msg = "face-closure violation: missing face of {";
                for (int v : s) msg += vertices[v] + ",";
                msg.back() = '}';
                throw input_error(msg);
            }
        }
    }
    SimplicialComplex k;
    k.vertices_ = std::move(vertices);
    k.simplices_ = std::move(simplices);
    std::sort(k.simplices_.begin(), k.simplices_.end(), simplex_order);
    return k;
}

std::string SimplicialComplex::simplex_name(int s) const {
    std::string name = "{";
    for (std::size_t i = 0; i < simplices_[s].size(); ++i) {
        if (i) name += ",";
        name += vertices_[simplices_[s][i]];
    }
    return name + "}";
}

FiniteSpace face_poset(const SimplicialComplex& k) {
    const int n = static_cast<int>(k.simplices().size());
    std::vector<std::string> names;
    names.reserve(n);
    for (int s = 0; s < n; ++s) names.push_back(k.simplex_name(s));
    RelMatrix rel(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            rel[a][b] = std::includes(k.simplices()[b].begin(), k.simplices()[b].end(),
                                      k.simplices()[a].begin(), k.simplices()[a].end());
    return FiniteSpace::from_relation(std::move(names), std::move(rel));
}

StratifiedInstance simplicial_to_instance(const SimplicialComplex& k) {
    FiniteSpace strata = face_poset(k);
    const int n = strata.size();

    std::vector<PointSet> element;
    element.reserve(n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> faces;
        for (int t = 0; t < n; ++t)
            if (strata.le(t, s)) faces.push_back(t);
        element.emplace_back(std::move(faces));
    }

    ElementTypeOracle oracle;
    oracle.label.reserve(n);
    for (int s = 0; s < n; ++s)
        oracle.label.push_back("dim" + std::to_string(k.dim(s)));

    StratifiedInstance inst;
    inst.semidec = SemiDecomposition::make(std::move(strata), std::move(element),
                                           std::move(oracle));
    inst.provenance.reserve(n);
    for (int s = 0; s < n; ++s)
        inst.provenance.push_back("open " + std::to_string(k.dim(s)) + "-cell " +
                                  k.simplex_name(s));
    return inst;
}

FacePosetCheck check_face_poset(const SimplicialComplex& k) {
    const StratifiedInstance inst = simplicial_to_instance(k);
    const AbstractPartition weak = abstract_weak_elements(inst.semidec);
    const FiniteSpace poset = face_poset(k);

    FacePosetCheck out;
    out.class_count = static_cast<int>(weak.classes.size());
    for (const PointSet& cls : weak.classes) {
        if (cls.size() != 1) {
            out.counterexample = "class of " +
                                 inst.strata().point_name(cls.items().front()) +
                                 " is not a single open cell";
            return out;
        }
    }
    // classes are singleton strata, so the natural map sends the class of a
    // stratum to the simplex it names; both spaces share point order
    for (int a = 0; a < poset.size(); ++a)
        for (int b = 0; b < poset.size(); ++b) {
            const int ca = weak.class_index_of(a);
            const int cb = weak.class_index_of(b);
            if (weak.space.target.le(ca, cb) != poset.le(a, b)) {
                out.counterexample = "order mismatch between " + poset.point_name(a) +
                                     " and " + poset.point_name(b);
                return out;
            }
        }
    out.ok = true;
    for (int c = 0; c < static_cast<int>(weak.classes.size()); ++c) {
        const int stratum = weak.classes[c].items().front();
        out.witness.emplace_back(weak.space.target.point_name(c),
                                 poset.point_name(stratum));
    }
    return out;
}

}  // namespace semideco
