#pragma once

// Monotone lattice paths over finite point sets: evaluation of a path
// against a set and an exact decision procedure for friendly paths.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace insep {

struct Point {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Finite set of distinct lattice points, kept sorted by (x, y).
class PointSet {
public:
    PointSet() = default;
    /// Throws ValidationError on duplicates.
    explicit PointSet(std::vector<Point> points);
    PointSet(std::initializer_list<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    bool contains(Point p) const;

    std::span<const Point> points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    PointSet translated(int dx, int dy) const;
    /// Applies an arbitrary point map; the image must stay injective.
    PointSet transformed(const std::function<Point(Point)>& f) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
};

struct Rect {
    int x0 = 0;
    int x1 = 0;
    int y0 = 0;
    int y1 = 0;

    int width() const noexcept { return x1 - x0; }
    int height() const noexcept { return y1 - y0; }
    Rect expanded(int margin) const noexcept { return {x0 - margin, x1 + margin, y0 - margin, y1 + margin}; }
    bool contains(Point p) const noexcept { return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1; }
    bool contains(const Rect& r) const noexcept { return x0 <= r.x0 && r.x1 <= x1 && y0 <= r.y0 && r.y1 <= y1; }

    friend bool operator==(const Rect&, const Rect&) = default;
};

enum class Direction : std::uint8_t { Uphill, Downhill };

enum class Step : char { East = 'E', North = 'N', South = 'S' };

/// A finite staircase standing in for a doubly infinite monotone path.
/// Uphill paths use East/North steps, downhill paths East/South steps.
struct MonotonePath {
    Direction direction = Direction::Uphill;
    Point start;
    std::vector<Step> steps;

    Point finish() const;
    /// Every lattice vertex visited, start included.
    std::vector<Point> vertices() const;
    /// Steps separated by single spaces, e.g. "E N N E".
    std::string step_string() const;

    friend bool operator==(const MonotonePath&, const MonotonePath&) = default;
};

/// Left/right shore counts of a path. For an uphill path the left shore is
/// the north-west side; for a downhill path it is the north-east side.
struct PathEvaluation {
    int left = 0;
    int right = 0;
    int on_path = 0;

    int balance() const noexcept { return left - right; }
    bool friendly() const noexcept { return left == right; }

    friend bool operator==(const PathEvaluation&, const PathEvaluation&) = default;
};

/// Throws EmptySetError.
Rect bounding_box(const PointSet& set);

/// Corner-to-corner staircase of `box` expanded by one: uphill from
/// (x0-1, y0-1) to (x1+1, y1+1), downhill from (x0-1, y1+1) to (x1+1, y0-1).
Point staircase_start(const Rect& box, Direction direction) noexcept;
Point staircase_finish(const Rect& box, Direction direction) noexcept;

/// Throws BoxTooSmallError unless the path spans the bounding box of `set`
/// expanded by one in every direction.
PathEvaluation evaluate_path(const MonotonePath& path, const PointSet& set);

inline constexpr std::uint64_t kDefaultStaircaseCap = 10'000'000;

/// Number of staircases all_staircases() would produce, saturating at
/// UINT64_MAX.
std::uint64_t staircase_count(const Rect& box) noexcept;

/// Every corner-to-corner staircase of the one-expanded box, in
/// lexicographic order of step strings (E first). Throws TooManyPathsError.
std::vector<MonotonePath> all_staircases(const Rect& box, Direction direction,
                                         std::uint64_t cap = kDefaultStaircaseCap);

/// Visits the same sequence as all_staircases() without materialising it.
/// The visitor returns false to stop early.
void for_each_staircase(const Rect& box, Direction direction,
                        const std::function<bool(const MonotonePath&)>& visit,
                        std::uint64_t cap = kDefaultStaircaseCap);

/// Exact friendly-path oracle. Dynamic program over (vertex, balance) on the
/// one-expanded bounding box, uphill first and then downhill. The witness is
/// the lexicographically first balanced staircase of the first direction
/// that has one.
std::optional<MonotonePath> find_friendly_path(const PointSet& set);

/// Brute-force counterpart of find_friendly_path(). Throws TooManyPathsError.
bool has_friendly_path_exhaustive(const PointSet& set, std::uint64_t cap = kDefaultStaircaseCap);

}  // namespace insep
