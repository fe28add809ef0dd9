#ifndef SEMIDECO_FINITE_SPACE_HPP
#define SEMIDECO_FINITE_SPACE_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semideco {

/// A subset of a finite space's points, stored as sorted unique indices.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<int> indices);

    bool contains(int i) const;
    bool empty() const { return items_.empty(); }
    int size() const { return static_cast<int>(items_.size()); }
    const std::vector<int>& items() const { return items_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;
    /// Lexicographic order on the sorted index lists; used for canonical
    /// ordering of partitions and hyper-edges.
    friend auto operator<=>(const PointSet& a, const PointSet& b) {
        return a.items_ <=> b.items_;
    }

private:
    std::vector<int> items_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
bool is_subset(const PointSet& a, const PointSet& b);

/// Reflexive-transitive relation as a dense boolean matrix;
/// rel[x][y] reads "x is below y".
using RelMatrix = std::vector<std::vector<bool>>;

void close_reflexive_transitive(RelMatrix& rel);
bool is_reflexive(const RelMatrix& rel);
bool is_transitive(const RelMatrix& rel);

/// A finite topological space in Alexandroff form: the specialization
/// pre-order is the whole datum. le(x, y) reads "x lies in the closure of
/// {y}", so closed sets are down-sets and open sets are up-sets.
class FiniteSpace {
public:
    FiniteSpace() = default;

    /// Builds a space from generator pairs (x, y) meaning x <= y; the
    /// relation is closed under reflexivity and transitivity. Throws
    /// input_error on duplicate points or pairs naming unknown points.
    static FiniteSpace build(
        std::vector<std::string> points,
        const std::vector<std::pair<std::string, std::string>>& generators);

    /// Wraps an already reflexive-transitive relation; validates it.
    static FiniteSpace from_relation(std::vector<std::string> points, RelMatrix le);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& point_name(int i) const { return names_[i]; }
    const std::vector<std::string>& point_names() const { return names_; }
    std::optional<int> index_of(std::string_view name) const;
    /// index_of that throws input_error when the point is unknown.
    int require_index(std::string_view name) const;

    bool le(int a, int b) const { return le_[a][b]; }
    const RelMatrix& relation() const { return le_; }

    PointSet all_points() const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int, std::less<>> index_;
    RelMatrix le_;
};

/// Down-closure {x : x <= a for some a in A}; equals the topological
/// closure of A.
PointSet closure(const FiniteSpace& space, const PointSet& a);

/// Up-closure {x : a <= x for some a in A}; the smallest open set
/// containing A.
PointSet up_set(const FiniteSpace& space, const PointSet& a);

bool is_closed_set(const FiniteSpace& space, const PointSet& a);
bool is_open_set(const FiniteSpace& space, const PointSet& a);

/// Components of the comparability graph restricted to A. For Alexandroff
/// spaces this is exactly topological connectedness of the subspace.
std::vector<PointSet> connected_components(const FiniteSpace& space, const PointSet& a);

/// The subspace on A, with points renamed to the ambient names.
FiniteSpace subspace(const FiniteSpace& space, const PointSet& a);

/// A quotient of a finite space by a partition. The target relation is the
/// reflexive-transitive closure of the induced class relation, which is the
/// specialization pre-order of the quotient topology.
struct QuotientMap {
    FiniteSpace source;
    std::vector<PointSet> classes;  // sorted by smallest member
    FiniteSpace target;             // one point per class
    std::vector<int> project;       // source index -> class index

    int class_of(int source_index) const { return project[source_index]; }
    PointSet image(const PointSet& a) const;
    PointSet preimage(const PointSet& class_indices) const;
};

/// Throws input_error if the partition does not cover the points exactly.
QuotientMap quotient(const FiniteSpace& space, std::vector<PointSet> partition);

/// Pre-order isomorphism test; for finite spaces this is exactly
/// homeomorphism. Returns the witness bijection a-index -> b-index when one
/// exists. Invariant pre-screen first, then backtracking.
std::optional<std::vector<int>> is_homeomorphic(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace semideco

#endif
