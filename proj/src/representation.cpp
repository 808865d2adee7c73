#include "insep/representation.hpp"

#include <algorithm>
#include <map>

#include "insep/errors.hpp"

namespace insep {

DiagonalList::DiagonalList(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw ValidationError("diagonal list is empty");
    if (values_.front() < 1) throw ValidationError("diagonal indices must be positive");
    for (std::size_t k = 1; k < values_.size(); ++k) {
        if (values_[k] <= values_[k - 1]) throw ValidationError("diagonal list is not strictly increasing");
    }
    for (int v : values_) sum_ += v;
}

DiagonalList::DiagonalList(std::initializer_list<int> values) : DiagonalList(std::vector<int>(values)) {}

bool DiagonalList::contains(int d) const noexcept { return std::binary_search(values_.begin(), values_.end(), d); }

int DiagonalList::count_at_most(int d) const noexcept {
    return static_cast<int>(std::upper_bound(values_.begin(), values_.end(), d) - values_.begin());
}

int Theta::n() const noexcept {
    int total = 0;
    for (const auto& l : lists_) total += l.sum();
    return total;
}

std::strong_ordering compare_flat(const Theta& a, const Theta& b) {
    auto flat = [](const Theta& t) {
        std::vector<int> out;
        for (const auto& l : t.lists()) out.insert(out.end(), l.begin(), l.end());
        return out;
    };
    if (auto c = flat(a) <=> flat(b); c != 0) return c;
    for (std::size_t q = 0; q < 4; ++q) {
        if (auto c = a.lists()[q].size() <=> b.lists()[q].size(); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

int TypeVector::variation() const noexcept {
    const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
    return *hi - *lo;
}

std::array<int, 4> TypeVector::multiset() const noexcept {
    auto out = lengths;
    std::sort(out.begin(), out.end());
    return out;
}

Metrics metrics(const Theta& theta) {
    Metrics m;
    for (int q = 0; q < 4; ++q) {
        const auto& l = theta.lists()[static_cast<std::size_t>(q)];
        m.sums[static_cast<std::size_t>(q)] = l.sum();
        m.lengths[static_cast<std::size_t>(q)] = static_cast<int>(l.size());
        m.n += l.sum();
    }
    m.type.lengths = m.lengths;
    m.variation = m.type.variation();
    return m;
}

Point local_to_plane(int quadrant, int u, int v) noexcept {
    switch (quadrant) {
        case 1: return {u, v};
        case 2: return {1 - u, v};
        case 3: return {1 - u, 1 - v};
        default: return {u, 1 - v};
    }
}

PointSet realize(const Theta& theta) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(theta.n()));
    for (int q = 1; q <= 4; ++q) {
        for (int d : theta[q]) {
            for (int u = 1; u <= d; ++u) pts.push_back(local_to_plane(q, u, d + 1 - u));
        }
    }
    return PointSet(std::move(pts));
}

namespace {

// Balances of horizontal lines y = k (left shore is north) and of upward
// vertical lines x = k (left shore is west), from sorted coordinates.
int horizontal_balance(const std::vector<int>& ys, int k) {
    const auto lo = std::lower_bound(ys.begin(), ys.end(), k) - ys.begin();
    const auto hi = ys.end() - std::upper_bound(ys.begin(), ys.end(), k);
    return static_cast<int>(hi - lo);
}

int vertical_balance(const std::vector<int>& xs, int k) {
    const auto lo = std::lower_bound(xs.begin(), xs.end(), k) - xs.begin();
    const auto hi = xs.end() - std::upper_bound(xs.begin(), xs.end(), k);
    return static_cast<int>(lo - hi);
}

std::pair<std::vector<int>, std::vector<int>> sorted_coordinates(const PointSet& set) {
    std::vector<int> xs, ys;
    for (Point p : set) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    return {std::move(xs), std::move(ys)};
}

MonotonePath horizontal_path(const Rect& box, int y) {
    MonotonePath p{Direction::Uphill, staircase_start(box, Direction::Uphill), {}};
    p.steps.insert(p.steps.end(), static_cast<std::size_t>(y - box.y0 + 1), Step::North);
    p.steps.insert(p.steps.end(), static_cast<std::size_t>(box.width() + 2), Step::East);
    p.steps.insert(p.steps.end(), static_cast<std::size_t>(box.y1 + 1 - y), Step::North);
    return p;
}

MonotonePath vertical_path(const Rect& box, int x) {
    MonotonePath p{Direction::Uphill, staircase_start(box, Direction::Uphill), {}};
    p.steps.insert(p.steps.end(), static_cast<std::size_t>(x - box.x0 + 1), Step::East);
    p.steps.insert(p.steps.end(), static_cast<std::size_t>(box.height() + 2), Step::North);
    p.steps.insert(p.steps.end(), static_cast<std::size_t>(box.x1 + 1 - x), Step::East);
    return p;
}

}  // namespace

std::variant<Quartering, FriendlyAxis> quarter(const PointSet& set) {
    const Rect box = bounding_box(set);
    const auto [xs, ys] = sorted_coordinates(set);

    Quartering q;
    // Horizontal balance is non-increasing in y: positive at y0 unless zero.
    for (int y = box.y0; y <= box.y1; ++y) {
        const int b = horizontal_balance(ys, y);
        if (b == 0) return FriendlyAxis{horizontal_path(box, y)};
        if (b < 0) {
            q.horizontal = y - 1;
            break;
        }
    }
    for (int x = box.x0; x <= box.x1; ++x) {
        const int b = vertical_balance(xs, x);
        if (b == 0) return FriendlyAxis{vertical_path(box, x)};
        if (b > 0) {
            q.vertical = x - 1;
            break;
        }
    }
    return q;
}

std::variant<Theta, NotDiagonalComplete> extract(const PointSet& set, const Quartering& q) {
    if (set.empty()) throw EmptySetError();
    const auto [xs, ys] = sorted_coordinates(set);
    const bool proper = horizontal_balance(ys, q.horizontal + 1) < 0 && horizontal_balance(ys, q.horizontal) > 0 &&
                        vertical_balance(xs, q.vertical) < 0 && vertical_balance(xs, q.vertical + 1) > 0;
    if (!proper) throw ValidationError("quartering does not match the point set");

    std::array<std::map<int, int>, 4> occupancy;
    for (Point p : set) {
        const int x = p.x - q.vertical;
        const int y = p.y - q.horizontal;
        int quadrant, u, v;
        if (x >= 1 && y >= 1) {
            quadrant = 1, u = x, v = y;
        } else if (y >= 1) {
            quadrant = 2, u = 1 - x, v = y;
        } else if (x <= 0) {
            quadrant = 3, u = 1 - x, v = 1 - y;
        } else {
            quadrant = 4, u = x, v = 1 - y;
        }
        ++occupancy[static_cast<std::size_t>(quadrant - 1)][u + v - 1];
    }

    std::array<DiagonalList, 4> lists;
    for (int quadrant = 1; quadrant <= 4; ++quadrant) {
        const auto& occ = occupancy[static_cast<std::size_t>(quadrant - 1)];
        if (occ.empty()) return NotDiagonalComplete{quadrant, 0};
        std::vector<int> full;
        for (const auto& [d, count] : occ) {
            if (count != d) return NotDiagonalComplete{quadrant, d};
            full.push_back(d);
        }
        lists[static_cast<std::size_t>(quadrant - 1)] = DiagonalList(std::move(full));
    }
    return Theta(std::move(lists));
}

Theta dihedral_image(const Theta& theta, int element) {
    const auto& l = theta.lists();
    std::array<DiagonalList, 4> cur = l;
    if (element >= 4) cur = {l[0], l[3], l[2], l[1]};  // mirror in x = y swaps Q2 and Q4
    for (int k = 0; k < element % 4; ++k) {
        // A quarter turn carries quadrant r onto quadrant r + 1.
        cur = {cur[3], cur[0], cur[1], cur[2]};
    }
    return Theta(std::move(cur));
}

std::array<Theta, 8> dihedral_images(const Theta& theta) {
    std::array<Theta, 8> out;
    for (int e = 0; e < 8; ++e) out[static_cast<std::size_t>(e)] = dihedral_image(theta, e);
    return out;
}

Point dihedral_point(Point p, int element) noexcept {
    if (element >= 4) p = {p.y, p.x};
    for (int k = 0; k < element % 4; ++k) p = {1 - p.y, p.x};
    return p;
}

Theta canonical(const Theta& theta) {
    Theta best = theta;
    for (int e = 1; e < 8; ++e) {
        Theta img = dihedral_image(theta, e);
        if (compare_flat(img, best) < 0) best = std::move(img);
    }
    return best;
}

int stabilizer_order(const Theta& theta) {
    int fixed = 0;
    for (int e = 0; e < 8; ++e) {
        if (dihedral_image(theta, e) == theta) ++fixed;
    }
    return fixed;
}

}  // namespace insep
