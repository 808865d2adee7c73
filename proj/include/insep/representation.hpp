#pragma once

// Diagonal representation of quartered point sets.
//
// A representation lists, for each of the four quadrants around the red
// cross, the indices of the diagonals that are fully occupied. Quadrants are
// numbered counterclockwise starting from the top-right one. In the
// canonical embedding the cross sits at (1/2, 1/2) and diagonal d of a
// quadrant is the set of d points with local coordinates u + v = d + 1,
// u, v >= 1, mapped to the plane by
//   Q1 (u, v) -> (u, v)        Q2 (u, v) -> (1 - u, v)
//   Q3 (u, v) -> (1 - u, 1 - v) Q4 (u, v) -> (u, 1 - v)

#include <array>
#include <compare>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

#include "insep/lattice.hpp"

namespace insep {

/// Strictly increasing, nonempty list of positive diagonal indices.
class DiagonalList {
public:
    DiagonalList() = default;
    /// Throws ValidationError if empty, non-positive or not strictly increasing.
    explicit DiagonalList(std::vector<int> values);
    DiagonalList(std::initializer_list<int> values);

    std::size_t size() const noexcept { return values_.size(); }
    int sum() const noexcept { return sum_; }
    int front() const noexcept { return values_.front(); }
    int back() const noexcept { return values_.back(); }
    bool contains(int d) const noexcept;
    /// Number of entries <= d.
    int count_at_most(int d) const noexcept;

    std::span<const int> values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    friend bool operator==(const DiagonalList& a, const DiagonalList& b) noexcept { return a.values_ == b.values_; }
    friend auto operator<=>(const DiagonalList& a, const DiagonalList& b) noexcept { return a.values_ <=> b.values_; }

private:
    std::vector<int> values_;
    int sum_ = 0;
};

/// theta = [L1 L2 L3 L4]; lists are indexed by quadrant 1..4.
class Theta {
public:
    Theta() = default;
    Theta(DiagonalList q1, DiagonalList q2, DiagonalList q3, DiagonalList q4)
        : lists_{std::move(q1), std::move(q2), std::move(q3), std::move(q4)} {}
    explicit Theta(std::array<DiagonalList, 4> lists) : lists_(std::move(lists)) {}

    /// Quadrant 1..4.
    const DiagonalList& operator[](int quadrant) const { return lists_[static_cast<std::size_t>(quadrant - 1)]; }
    const std::array<DiagonalList, 4>& lists() const noexcept { return lists_; }

    int n() const noexcept;

    friend bool operator==(const Theta&, const Theta&) = default;

private:
    std::array<DiagonalList, 4> lists_;
};

/// Lexicographic order on the concatenation L1 L2 L3 L4, list lengths as the
/// tie-break. A strict total order.
std::strong_ordering compare_flat(const Theta& a, const Theta& b);

struct ThetaLess {
    bool operator()(const Theta& a, const Theta& b) const { return compare_flat(a, b) < 0; }
};

struct TypeVector {
    std::array<int, 4> lengths{};

    int variation() const noexcept;
    /// Lengths sorted ascending.
    std::array<int, 4> multiset() const noexcept;

    friend bool operator==(const TypeVector&, const TypeVector&) = default;
};

struct Metrics {
    int n = 0;
    std::array<int, 4> sums{};     // Y1..Y4
    std::array<int, 4> lengths{};  // N1..N4
    TypeVector type;
    int variation = 0;
};

Metrics metrics(const Theta& theta);

/// Plane position of a quadrant-local point in the canonical embedding.
Point local_to_plane(int quadrant, int u, int v) noexcept;

PointSet realize(const Theta& theta);

/// Red lines y = horizontal + 1/2 and x = vertical + 1/2.
struct Quartering {
    int horizontal = 0;
    int vertical = 0;

    friend bool operator==(const Quartering&, const Quartering&) = default;
};

/// An axis-parallel line already halves the set.
struct FriendlyAxis {
    MonotonePath path;
};

/// Throws EmptySetError.
std::variant<Quartering, FriendlyAxis> quarter(const PointSet& set);

/// Reported by extract() when some quadrant is empty (diagonal == 0) or some
/// diagonal is only partly occupied.
struct NotDiagonalComplete {
    int quadrant = 0;
    int diagonal = 0;
};

/// Throws ValidationError if `q` is not the quartering of `set`.
std::variant<Theta, NotDiagonalComplete> extract(const PointSet& set, const Quartering& q);

/// Element k < 4 is the rotation by k quarter turns; element 4 + k is that
/// rotation applied after the mirror in the diagonal line x = y.
Theta dihedral_image(const Theta& theta, int element);
std::array<Theta, 8> dihedral_images(const Theta& theta);
/// The plane isometry matching dihedral_image() on realized sets.
Point dihedral_point(Point p, int element) noexcept;

/// Least of the eight images under compare_flat().
Theta canonical(const Theta& theta);

/// Number of dihedral elements fixing theta: 1, 2, 4 or 8.
int stabilizer_order(const Theta& theta);

}  // namespace insep
