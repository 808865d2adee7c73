#include "insep/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "insep/errors.hpp"

namespace insep {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end()) {
        throw ValidationError("duplicate point (" + std::to_string(dup->x) + "," + std::to_string(dup->y) + ")");
    }
}

PointSet::PointSet(std::initializer_list<Point> points) : PointSet(std::vector<Point>(points)) {}

bool PointSet::contains(Point p) const { return std::binary_search(points_.begin(), points_.end(), p); }

PointSet PointSet::translated(int dx, int dy) const {
    return transformed([dx, dy](Point p) { return Point{p.x + dx, p.y + dy}; });
}

PointSet PointSet::transformed(const std::function<Point(Point)>& f) const {
    std::vector<Point> out;
    out.reserve(points_.size());
    for (Point p : points_) out.push_back(f(p));
    return PointSet(std::move(out));
}

Point MonotonePath::finish() const {
    Point p = start;
    for (Step s : steps) {
        switch (s) {
            case Step::East: ++p.x; break;
            case Step::North: ++p.y; break;
            case Step::South: --p.y; break;
        }
    }
    return p;
}

std::vector<Point> MonotonePath::vertices() const {
    std::vector<Point> out{start};
    out.reserve(steps.size() + 1);
    Point p = start;
    for (Step s : steps) {
        switch (s) {
            case Step::East: ++p.x; break;
            case Step::North: ++p.y; break;
            case Step::South: --p.y; break;
        }
        out.push_back(p);
    }
    return out;
}

std::string MonotonePath::step_string() const {
    std::string out;
    out.reserve(steps.size() * 2);
    for (Step s : steps) {
        if (!out.empty()) out.push_back(' ');
        out.push_back(static_cast<char>(s));
    }
    return out;
}

Rect bounding_box(const PointSet& set) {
    if (set.empty()) throw EmptySetError();
    Rect r{set.begin()->x, set.begin()->x, set.begin()->y, set.begin()->y};
    for (Point p : set) {
        r.x0 = std::min(r.x0, p.x);
        r.x1 = std::max(r.x1, p.x);
        r.y0 = std::min(r.y0, p.y);
        r.y1 = std::max(r.y1, p.y);
    }
    return r;
}

Point staircase_start(const Rect& box, Direction direction) noexcept {
    return direction == Direction::Uphill ? Point{box.x0 - 1, box.y0 - 1} : Point{box.x0 - 1, box.y1 + 1};
}

Point staircase_finish(const Rect& box, Direction direction) noexcept {
    return direction == Direction::Uphill ? Point{box.x1 + 1, box.y1 + 1} : Point{box.x1 + 1, box.y0 - 1};
}

namespace {

struct ColumnSpan {
    int lo;
    int hi;
};

// Vertical extent of the path in each column it visits.
std::vector<ColumnSpan> column_spans(const MonotonePath& path) {
    const Step vertical = path.direction == Direction::Uphill ? Step::North : Step::South;
    std::vector<ColumnSpan> spans{{path.start.y, path.start.y}};
    int y = path.start.y;
    for (Step s : path.steps) {
        if (s == Step::East) {
            spans.push_back({y, y});
        } else if (s == vertical) {
            y += s == Step::North ? 1 : -1;
            spans.back().lo = std::min(spans.back().lo, y);
            spans.back().hi = std::max(spans.back().hi, y);
        } else {
            throw ValidationError("step direction does not match path direction");
        }
    }
    return spans;
}

}  // namespace

PathEvaluation evaluate_path(const MonotonePath& path, const PointSet& set) {
    const auto spans = column_spans(path);
    PathEvaluation ev;
    if (set.empty()) return ev;

    const Rect need = bounding_box(set).expanded(1);
    const Point a = path.start;
    const Point b = path.finish();
    const bool spans_box = path.direction == Direction::Uphill
                               ? a.x <= need.x0 && a.y <= need.y0 && b.x >= need.x1 && b.y >= need.y1
                               : a.x <= need.x0 && a.y >= need.y1 && b.x >= need.x1 && b.y <= need.y0;
    if (!spans_box) throw BoxTooSmallError("path does not span the expanded bounding box");

    // North of the path is the left shore in both directions.
    for (Point p : set) {
        const ColumnSpan& c = spans[static_cast<std::size_t>(p.x - a.x)];
        if (p.y > c.hi) {
            ++ev.left;
        } else if (p.y < c.lo) {
            ++ev.right;
        } else {
            ++ev.on_path;
        }
    }
    return ev;
}

std::uint64_t staircase_count(const Rect& box) noexcept {
    const std::uint64_t e = static_cast<std::uint64_t>(box.width()) + 2;
    const std::uint64_t v = static_cast<std::uint64_t>(box.height()) + 2;
    const std::uint64_t k = std::min(e, v);
    // C(e+v, k), computed incrementally; each prefix is itself a binomial.
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = e + v - k + i;
        if (result > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
        result = result * num / i;
    }
    return result;
}

namespace {

void walk_staircases(int east_left, int vert_left, Step vertical, MonotonePath& path,
                     const std::function<bool(const MonotonePath&)>& visit, bool& keep_going) {
    if (!keep_going) return;
    if (east_left == 0 && vert_left == 0) {
        keep_going = visit(path);
        return;
    }
    if (east_left > 0) {
        path.steps.push_back(Step::East);
        walk_staircases(east_left - 1, vert_left, vertical, path, visit, keep_going);
        path.steps.pop_back();
    }
    if (vert_left > 0) {
        path.steps.push_back(vertical);
        walk_staircases(east_left, vert_left - 1, vertical, path, visit, keep_going);
        path.steps.pop_back();
    }
}

}  // namespace

void for_each_staircase(const Rect& box, Direction direction,
                        const std::function<bool(const MonotonePath&)>& visit, std::uint64_t cap) {
    const std::uint64_t count = staircase_count(box);
    if (count > cap) {
        throw TooManyPathsError(std::to_string(count) + " staircases exceed the cap of " + std::to_string(cap));
    }
    MonotonePath path{direction, staircase_start(box, direction), {}};
    path.steps.reserve(static_cast<std::size_t>(box.width() + box.height() + 4));
    bool keep_going = true;
    walk_staircases(box.width() + 2, box.height() + 2, direction == Direction::Uphill ? Step::North : Step::South,
                    path, visit, keep_going);
}

std::vector<MonotonePath> all_staircases(const Rect& box, Direction direction, std::uint64_t cap) {
    std::vector<MonotonePath> out;
    for_each_staircase(
        box, direction,
        [&out](const MonotonePath& p) {
            out.push_back(p);
            return true;
        },
        cap);
    return out;
}

namespace {

// Set of integers in [-n, n] as a packed bit vector.
class BalanceSets {
public:
    BalanceSets(std::size_t count, int n)
        : n_(n), words_((static_cast<std::size_t>(2 * n + 1) + 63) / 64), bits_(count * words_, 0) {}

    bool test(std::size_t set, int value) const {
        if (value < -n_ || value > n_) return false;
        const auto bit = static_cast<std::size_t>(value + n_);
        return (bits_[set * words_ + bit / 64] >> (bit % 64)) & 1U;
    }

    void insert(std::size_t set, int value) {
        const auto bit = static_cast<std::size_t>(value + n_);
        bits_[set * words_ + bit / 64] |= std::uint64_t{1} << (bit % 64);
    }

    void merge(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
    }

    // dst |= {v + shift : v in src} restricted to [-n, n].
    void merge_shifted(std::size_t dst, std::size_t src, int shift) {
        if (shift == 0) return merge(dst, src);
        const std::size_t mag = static_cast<std::size_t>(shift > 0 ? shift : -shift);
        const std::size_t ws = mag / 64;
        const std::size_t bs = mag % 64;
        std::uint64_t* d = &bits_[dst * words_];
        const std::uint64_t* s = &bits_[src * words_];
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t v = 0;
            if (shift > 0) {
                if (w >= ws) {
                    v = s[w - ws] << bs;
                    if (bs != 0 && w >= ws + 1) v |= s[w - ws - 1] >> (64 - bs);
                }
            } else {
                if (w + ws < words_) {
                    v = s[w + ws] >> bs;
                    if (bs != 0 && w + ws + 1 < words_) v |= s[w + ws + 1] << (64 - bs);
                }
            }
            d[w] |= v;
        }
        // Clear bits beyond 2n.
        const std::size_t used = static_cast<std::size_t>(2 * n_ + 1) % 64;
        if (used != 0) d[words_ - 1] &= (std::uint64_t{1} << used) - 1;
    }

private:
    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Balanced east/north staircase across the one-expanded box of `points`.
std::optional<std::vector<Step>> balanced_uphill(const std::vector<Point>& points, const Rect& box) {
    const int n = static_cast<int>(points.size());
    const int cols = box.width() + 3;  // vertex columns of the expanded box
    const int rows = box.height() + 3;
    const int x_origin = box.x0 - 1;
    const int y_origin = box.y0 - 1;

    // below[c][r] = points in column c with row index < r.
    std::vector<int> below(static_cast<std::size_t>(cols * (rows + 1)), 0);
    std::vector<int> column_total(static_cast<std::size_t>(cols), 0);
    {
        std::vector<int> occ(static_cast<std::size_t>(cols * rows), 0);
        for (Point p : points) {
            occ[static_cast<std::size_t>((p.x - x_origin) * rows + (p.y - y_origin))] = 1;
            ++column_total[static_cast<std::size_t>(p.x - x_origin)];
        }
        for (int c = 0; c < cols; ++c) {
            for (int r = 0; r < rows; ++r) {
                below[static_cast<std::size_t>(c * (rows + 1) + r + 1)] =
                    below[static_cast<std::size_t>(c * (rows + 1) + r)] + occ[static_cast<std::size_t>(c * rows + r)];
            }
        }
    }
    auto count_below = [&](int c, int r) { return below[static_cast<std::size_t>(c * (rows + 1) + r)]; };
    auto count_above = [&](int c, int r) {
        return column_total[static_cast<std::size_t>(c)] - below[static_cast<std::size_t>(c * (rows + 1) + r + 1)];
    };
    // Balance change of an east step from vertex (c, r): column c is closed
    // at height r and column c+1 is opened at height r.
    auto east_gain = [&](int c, int r) { return count_above(c, r) - count_below(c + 1, r); };

    auto idx = [rows](int c, int r) { return static_cast<std::size_t>(c * rows + r); };
    // future[v] = balances the remaining walk from vertex v can still collect.
    BalanceSets future(static_cast<std::size_t>(cols * rows), n);
    future.insert(idx(cols - 1, rows - 1), 0);
    for (int c = cols - 1; c >= 0; --c) {
        for (int r = rows - 1; r >= 0; --r) {
            if (r + 1 < rows) future.merge(idx(c, r), idx(c, r + 1));
            if (c + 1 < cols) future.merge_shifted(idx(c, r), idx(c + 1, r), east_gain(c, r));
        }
    }
    if (!future.test(idx(0, 0), 0)) return std::nullopt;

    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(cols + rows - 2));
    int c = 0, r = 0, acc = 0;
    while (c != cols - 1 || r != rows - 1) {
        if (c + 1 < cols && future.test(idx(c + 1, r), -acc - east_gain(c, r))) {
            acc += east_gain(c, r);
            ++c;
            steps.push_back(Step::East);
        } else {
            ++r;
            steps.push_back(Step::North);
        }
    }
    return steps;
}

}  // namespace

std::optional<MonotonePath> find_friendly_path(const PointSet& set) {
    if (set.empty()) {
        const Rect box{0, 0, 0, 0};
        return MonotonePath{Direction::Uphill, staircase_start(box, Direction::Uphill),
                            {Step::East, Step::East, Step::North, Step::North}};
    }
    const Rect box = bounding_box(set);
    std::vector<Point> pts(set.begin(), set.end());
    if (auto steps = balanced_uphill(pts, box)) {
        return MonotonePath{Direction::Uphill, staircase_start(box, Direction::Uphill), std::move(*steps)};
    }
    // Downhill paths become uphill after y -> -y; balance only changes sign.
    for (Point& p : pts) p.y = -p.y;
    const Rect mirrored{box.x0, box.x1, -box.y1, -box.y0};
    if (auto steps = balanced_uphill(pts, mirrored)) {
        for (Step& s : *steps) {
            if (s == Step::North) s = Step::South;
        }
        return MonotonePath{Direction::Downhill, staircase_start(box, Direction::Downhill), std::move(*steps)};
    }
    return std::nullopt;
}

bool has_friendly_path_exhaustive(const PointSet& set, std::uint64_t cap) {
    if (set.empty()) return true;
    const Rect box = bounding_box(set);
    bool found = false;
    for (Direction d : {Direction::Uphill, Direction::Downhill}) {
        for_each_staircase(
            box, d,
            [&](const MonotonePath& p) {
                found = evaluate_path(p, set).friendly();
                return !found;
            },
            cap);
        if (found) return true;
    }
    return false;
}

}  // namespace insep
