#include "semideco/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace semideco {

void MultiGraph::add_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
}

namespace {

template <typename Graph>
Graph compact_vertices(const Graph& g, const std::vector<bool>& keep) {
    std::vector<int> remap(g.vertex_count, -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (keep[v]) remap[v] = next++;
    Graph out;
    out.vertex_count = next;
    for (auto [a, b] : g.edges) out.edges.emplace_back(remap[a], remap[b]);
    return out;
}

}  // namespace

DirectedMultiGraph smooth_directed(DirectedMultiGraph g) {
    std::vector<bool> alive(g.vertex_count, true);
    std::vector<bool> edge_alive(g.edges.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.vertex_count && !changed; ++v) {
            if (!alive[v]) continue;
            int in_edge = -1, out_edge = -1, in_count = 0, out_count = 0;
            for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
                if (!edge_alive[e]) continue;
                if (g.edges[e].second == v) {
                    ++in_count;
                    in_edge = e;
                }
                if (g.edges[e].first == v) {
                    ++out_count;
                    out_edge = e;
                }
            }
            if (in_count != 1 || out_count != 1) continue;
            if (in_edge == out_edge) continue;  // isolated directed circle
            // splice: a -> v -> b becomes a -> b
            const int a = g.edges[in_edge].first;
            const int b = g.edges[out_edge].second;
            g.edges[in_edge] = {a, b};
            edge_alive[out_edge] = false;
            alive[v] = false;
            changed = true;
        }
    }
    DirectedMultiGraph pruned;
    pruned.vertex_count = g.vertex_count;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        if (edge_alive[e]) pruned.edges.push_back(g.edges[e]);
    return compact_vertices(pruned, alive);
}

MultiGraph smooth_undirected(MultiGraph g) {
    std::vector<bool> alive(g.vertex_count, true);
    std::vector<bool> edge_alive(g.edges.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.vertex_count && !changed; ++v) {
            if (!alive[v]) continue;
            std::vector<int> slots;
            for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
                if (!edge_alive[e]) continue;
                if (g.edges[e].first == v) slots.push_back(e);
                if (g.edges[e].second == v) slots.push_back(e);
            }
            if (slots.size() != 2) continue;
            if (slots[0] == slots[1]) continue;  // lone loop: a circle
            const auto other = [&](int e) {
                return g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
            };
            int a = other(slots[0]);
            int b = other(slots[1]);
            if (a > b) std::swap(a, b);
            g.edges[slots[0]] = {a, b};
            edge_alive[slots[1]] = false;
            alive[v] = false;
            changed = true;
        }
    }
    MultiGraph pruned;
    pruned.vertex_count = g.vertex_count;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        if (edge_alive[e]) pruned.edges.push_back(g.edges[e]);
    return compact_vertices(pruned, alive);
}

namespace {

// Multiplicity matrix keyed on ordered pairs; undirected graphs are stored
// symmetrically with loops counted once.
std::map<std::pair<int, int>, int> directed_multiplicities(const DirectedMultiGraph& g) {
    std::map<std::pair<int, int>, int> m;
    for (auto e : g.edges) ++m[e];
    return m;
}

std::map<std::pair<int, int>, int> undirected_multiplicities(const MultiGraph& g) {
    std::map<std::pair<int, int>, int> m;
    for (auto [a, b] : g.edges) ++m[{a, b}];
    return m;
}

template <typename Mult>
int mult_at(const Mult& m, int a, int b) {
    auto it = m.find({a, b});
    return it == m.end() ? 0 : it->second;
}

// Degree signatures cut the permutation search; exact edge multiplicities
// are enforced during extension.
template <typename Mult>
bool extend(int next, int n, const Mult& ma, const Mult& mb,
            const std::vector<long long>& sig_a, const std::vector<long long>& sig_b,
            std::vector<int>& map_ab, std::vector<bool>& used, bool directed) {
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || sig_a[next] != sig_b[cand]) continue;
        bool ok = mult_at(ma, next, next) == mult_at(mb, cand, cand);
        for (int prev = 0; prev < next && ok; ++prev) {
            ok = mult_at(ma, prev, next) == mult_at(mb, map_ab[prev], cand);
            if (ok && directed)
                ok = mult_at(ma, next, prev) == mult_at(mb, cand, map_ab[prev]);
        }
        if (!ok) continue;
        map_ab[next] = cand;
        used[cand] = true;
        if (extend(next + 1, n, ma, mb, sig_a, sig_b, map_ab, used, directed)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool multigraph_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size())
        return false;
    const int n = a.vertex_count;
    auto ma = undirected_multiplicities(a);
    auto mb = undirected_multiplicities(b);
    // store symmetrically for constant-time lookups both ways
    auto symm = [](std::map<std::pair<int, int>, int>& m) {
        auto copy = m;
        for (auto& [k, v] : copy)
            if (k.first != k.second) m[{k.second, k.first}] = v;
    };
    symm(ma);
    symm(mb);
    auto signature = [n](const std::map<std::pair<int, int>, int>& m) {
        std::vector<long long> sig(n, 0);
        for (auto& [k, v] : m) {
            if (k.first == k.second)
                sig[k.first] += 1000000LL * v;  // loops weighted apart
            else
                sig[k.first] += v;
        }
        return sig;
    };
    auto sig_a = signature(ma);
    auto sig_b = signature(mb);
    auto sorted_a = sig_a, sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
    std::vector<int> map_ab(n, -1);
    std::vector<bool> used(n, false);
    return extend(0, n, ma, mb, sig_a, sig_b, map_ab, used, false);
}

bool directed_multigraph_isomorphic(const DirectedMultiGraph& a,
                                    const DirectedMultiGraph& b) {
    if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size())
        return false;
    const int n = a.vertex_count;
    auto ma = directed_multiplicities(a);
    auto mb = directed_multiplicities(b);
    auto signature = [n](const std::map<std::pair<int, int>, int>& m) {
        std::vector<long long> sig(n, 0);
        for (auto& [k, v] : m) {
            if (k.first == k.second) {
                sig[k.first] += 1000000000LL * v;
            } else {
                sig[k.first] += 1000LL * v;   // out-degree
                sig[k.second] += v;           // in-degree
            }
        }
        return sig;
    };
    auto sig_a = signature(ma);
    auto sig_b = signature(mb);
    auto sorted_a = sig_a, sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
    std::vector<int> map_ab(n, -1);
    std::vector<bool> used(n, false);
    return extend(0, n, ma, mb, sig_a, sig_b, map_ab, used, true);
}

std::string DirectedGraphTypeRegistry::label_of(const DirectedMultiGraph& g) {
    DirectedMultiGraph canon = smooth_directed(g);
    for (std::size_t k = 0; k < reps_.size(); ++k)
        if (directed_multigraph_isomorphic(canon, reps_[k])) return labels_[k];
    std::string label = "o" + std::to_string(reps_.size());
    reps_.push_back(std::move(canon));
    labels_.push_back(label);
    return label;
}

}  // namespace semideco
