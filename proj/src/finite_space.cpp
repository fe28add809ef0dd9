#include "semideco/finite_space.hpp"

#include <algorithm>
#include <numeric>

#include "semideco/errors.hpp"

namespace semideco {

PointSet::PointSet(std::vector<int> indices) : items_(std::move(indices)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool PointSet::contains(int i) const {
    return std::binary_search(items_.begin(), items_.end(), i);
}

PointSet set_union(const PointSet& a, const PointSet& b) {
    std::vector<int> out;
    std::set_union(a.items().begin(), a.items().end(), b.items().begin(),
                   b.items().end(), std::back_inserter(out));
    return PointSet(std::move(out));
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
    std::vector<int> out;
    std::set_intersection(a.items().begin(), a.items().end(), b.items().begin(),
                          b.items().end(), std::back_inserter(out));
    return PointSet(std::move(out));
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
    std::vector<int> out;
    std::set_difference(a.items().begin(), a.items().end(), b.items().begin(),
                        b.items().end(), std::back_inserter(out));
    return PointSet(std::move(out));
}

bool is_subset(const PointSet& a, const PointSet& b) {
    return std::includes(b.items().begin(), b.items().end(), a.items().begin(),
                         a.items().end());
}

void close_reflexive_transitive(RelMatrix& rel) {
    const int n = static_cast<int>(rel.size());
    for (int i = 0; i < n; ++i) rel[i][i] = true;
    // Warshall
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (rel[i][k])
                for (int j = 0; j < n; ++j)
                    if (rel[k][j]) rel[i][j] = true;
}

bool is_reflexive(const RelMatrix& rel) {
    for (int i = 0; i < static_cast<int>(rel.size()); ++i)
        if (!rel[i][i]) return false;
    return true;
}

bool is_transitive(const RelMatrix& rel) {
    const int n = static_cast<int>(rel.size());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (rel[i][k])
                for (int j = 0; j < n; ++j)
                    if (rel[k][j] && !rel[i][j]) return false;
    return true;
}

FiniteSpace FiniteSpace::build(
    std::vector<std::string> points,
    const std::vector<std::pair<std::string, std::string>>& generators) {
    FiniteSpace s;
    s.names_ = std::move(points);
    for (int i = 0; i < static_cast<int>(s.names_.size()); ++i) {
        auto [it, inserted] = s.index_.emplace(s.names_[i], i);
        if (!inserted) throw input_error("duplicate point identifier: " + s.names_[i]);
    }
    const int n = s.size();
    s.le_.assign(n, std::vector<bool>(n, false));
    for (const auto& [lo, hi] : generators) {
        auto a = s.index_of(lo);
        auto b = s.index_of(hi);
        if (!a || !b)
            throw input_error("generator pair references unknown point: (" + lo +
                              ", " + hi + ")");
        s.le_[*a][*b] = true;
    }
    close_reflexive_transitive(s.le_);
    return s;
}

FiniteSpace FiniteSpace::from_relation(std::vector<std::string> points, RelMatrix le) {
    if (le.size() != points.size())
        throw input_error("relation size does not match point count");
    for (const auto& row : le)
        if (row.size() != points.size())
            throw input_error("relation is not square");
    if (!is_reflexive(le)) throw input_error("relation is not reflexive");
    if (!is_transitive(le)) throw input_error("relation is not transitive");
    FiniteSpace s;
    s.names_ = std::move(points);
    for (int i = 0; i < static_cast<int>(s.names_.size()); ++i) {
        auto [it, inserted] = s.index_.emplace(s.names_[i], i);
        if (!inserted) throw input_error("duplicate point identifier: " + s.names_[i]);
    }
    s.le_ = std::move(le);
    return s;
}

std::optional<int> FiniteSpace::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FiniteSpace::require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw input_error("unknown point: " + std::string(name));
    return *i;
}

PointSet FiniteSpace::all_points() const {
    std::vector<int> idx(names_.size());
    std::iota(idx.begin(), idx.end(), 0);
    return PointSet(std::move(idx));
}

PointSet closure(const FiniteSpace& space, const PointSet& a) {
    std::vector<int> out;
    for (int x = 0; x < space.size(); ++x)
        for (int p : a.items())
            if (space.le(x, p)) {
                out.push_back(x);
                break;
            }
    return PointSet(std::move(out));
}

PointSet up_set(const FiniteSpace& space, const PointSet& a) {
    std::vector<int> out;
    for (int x = 0; x < space.size(); ++x)
        for (int p : a.items())
            if (space.le(p, x)) {
                out.push_back(x);
                break;
            }
    return PointSet(std::move(out));
}

bool is_closed_set(const FiniteSpace& space, const PointSet& a) {
    return closure(space, a) == a;
}

bool is_open_set(const FiniteSpace& space, const PointSet& a) {
    return up_set(space, a) == a;
}

std::vector<PointSet> connected_components(const FiniteSpace& space, const PointSet& a) {
    std::vector<PointSet> comps;
    std::vector<bool> seen(space.size(), false);
    for (int start : a.items()) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : a.items())
                if (!seen[v] && (space.le(u, v) || space.le(v, u))) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        comps.emplace_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

FiniteSpace subspace(const FiniteSpace& space, const PointSet& a) {
    std::vector<std::string> names;
    names.reserve(a.size());
    for (int i : a.items()) names.push_back(space.point_name(i));
    const int m = a.size();
    RelMatrix rel(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            rel[i][j] = space.le(a.items()[i], a.items()[j]);
    return FiniteSpace::from_relation(std::move(names), std::move(rel));
}

PointSet QuotientMap::image(const PointSet& a) const {
    std::vector<int> out;
    for (int i : a.items()) out.push_back(project[i]);
    return PointSet(std::move(out));
}

PointSet QuotientMap::preimage(const PointSet& class_indices) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(project.size()); ++i)
        if (class_indices.contains(project[i])) out.push_back(i);
    return PointSet(std::move(out));
}

QuotientMap quotient(const FiniteSpace& space, std::vector<PointSet> partition) {
    std::sort(partition.begin(), partition.end());
    std::vector<int> project(space.size(), -1);
    for (int c = 0; c < static_cast<int>(partition.size()); ++c) {
        if (partition[c].empty()) throw input_error("partition contains an empty class");
        for (int i : partition[c].items()) {
            if (i < 0 || i >= space.size())
                throw input_error("partition references a point outside the space");
            if (project[i] != -1) throw input_error("partition classes overlap");
            project[i] = c;
        }
    }
    for (int i = 0; i < space.size(); ++i)
        if (project[i] == -1)
            throw input_error("partition does not cover point " + space.point_name(i));

    const int m = static_cast<int>(partition.size());
    RelMatrix rel(m, std::vector<bool>(m, false));
    for (int x = 0; x < space.size(); ++x)
        for (int y = 0; y < space.size(); ++y)
            if (space.le(x, y)) rel[project[x]][project[y]] = true;
    close_reflexive_transitive(rel);

    std::vector<std::string> names;
    names.reserve(m);
    for (const auto& cls : partition)
        names.push_back(space.point_name(cls.items().front()));

    QuotientMap q;
    q.source = space;
    q.classes = std::move(partition);
    q.target = FiniteSpace::from_relation(std::move(names), std::move(rel));
    q.project = std::move(project);
    return q;
}

namespace {

// Per-point invariant used for the pre-screen and to cut the backtracking
// search: (|down-set|, |up-set|), refined by the multiset of neighbour
// signatures until stable.
std::vector<long long> refine_signatures(const FiniteSpace& s) {
    const int n = s.size();
    std::vector<long long> sig(n);
    for (int i = 0; i < n; ++i) {
        int down = 0, up = 0;
        for (int j = 0; j < n; ++j) {
            if (s.le(j, i)) ++down;
            if (s.le(i, j)) ++up;
        }
        sig[i] = down * 1024LL + up;
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<long long>> key(n);
        for (int i = 0; i < n; ++i) {
            std::vector<long long> below, above;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                if (s.le(j, i)) below.push_back(sig[j]);
                if (s.le(i, j)) above.push_back(sig[j]);
            }
            std::sort(below.begin(), below.end());
            std::sort(above.begin(), above.end());
            key[i].push_back(sig[i]);
            key[i].insert(key[i].end(), below.begin(), below.end());
            key[i].push_back(-1);
            key[i].insert(key[i].end(), above.begin(), above.end());
        }
        std::vector<std::vector<long long>> sorted = key;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<long long> next(n);
        for (int i = 0; i < n; ++i)
            next[i] = static_cast<long long>(
                std::lower_bound(sorted.begin(), sorted.end(), key[i]) - sorted.begin());
        if (next == sig) break;
        sig = std::move(next);
    }
    return sig;
}

bool extend_isomorphism(const FiniteSpace& a, const FiniteSpace& b,
                        const std::vector<long long>& sig_a,
                        const std::vector<long long>& sig_b, int next,
                        std::vector<int>& map_ab, std::vector<bool>& used_b) {
    const int n = a.size();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used_b[cand] || sig_a[next] != sig_b[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < next; ++prev) {
            if (a.le(prev, next) != b.le(map_ab[prev], cand) ||
                a.le(next, prev) != b.le(cand, map_ab[prev])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map_ab[next] = cand;
        used_b[cand] = true;
        if (extend_isomorphism(a, b, sig_a, sig_b, next + 1, map_ab, used_b)) return true;
        used_b[cand] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> is_homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.size() == 0) return std::vector<int>{};
    auto sig_a = refine_signatures(a);
    auto sig_b = refine_signatures(b);
    auto sorted_a = sig_a;
    auto sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;

    std::vector<int> map_ab(a.size(), -1);
    std::vector<bool> used_b(b.size(), false);
    if (extend_isomorphism(a, b, sig_a, sig_b, 0, map_ab, used_b)) return map_ab;
    return std::nullopt;
}

}  // namespace semideco
