#include "insep/criteria.hpp"

#include <algorithm>
#include <cstdlib>

#include "insep/errors.hpp"

namespace insep {

Layout::Layout(const Theta& theta) {
    for (int q = 1; q <= 4; ++q) {
        const auto k = static_cast<std::size_t>(q - 1);
        lists[k] = &theta[q];
        sums[k] = theta[q].sum();
        lengths[k] = static_cast<int>(theta[q].size());
        n += sums[k];
    }
}

bool PairResult::passes() const noexcept {
    switch (kind) {
        case Kind::NoCandidate: return true;
        case Kind::GapStart: return gap_condition;
        case Kind::Evaluated: return far_side > near_side;
    }
    return false;
}

bool test0(const Layout& l) {
    const int parity = l.n % 2;
    return (l.length(1) + l.length(3)) % 2 == parity && (l.length(2) + l.length(4)) % 2 == parity;
}

bool test0(const Theta& theta) { return test0(Layout(theta)); }

bool testA(const Layout& l) {
    const int upper_minus_lower = l.sum(1) + l.sum(2) - l.sum(3) - l.sum(4);
    const int right_minus_left = l.sum(1) + l.sum(4) - l.sum(2) - l.sum(3);
    return -l.length(3) - l.length(4) < upper_minus_lower && upper_minus_lower < l.length(1) + l.length(2) &&
           -l.length(2) - l.length(3) < right_minus_left && right_minus_left < l.length(1) + l.length(4);
}

bool testA(const Theta& theta) { return testA(Layout(theta)); }

PairResult testB_pair(const Layout& l, int j, int i) {
    if (!adjacent_quadrants(i, j)) {
        throw NotAdjacentError("quadrants " + std::to_string(i) + " and " + std::to_string(j) + " are not neighbors");
    }
    const DiagonalList& li = l.list(i);
    const DiagonalList& lj = l.list(j);
    const int opposite = quadrant_add(i, 2);
    const int other = quadrant_add(j, 2);  // the neighbor of i that is not j

    PairResult res;
    if (li.front() > 1) {
        // The path through local (1, 1) has no parity shortcut; it and its
        // shifted variants stay unfriendly exactly when this holds.
        res.kind = PairResult::Kind::GapStart;
        res.gap_condition = std::abs(l.sum(i) - l.sum(opposite)) >
                            l.sum(quadrant_add(i, 1)) + l.sum(quadrant_add(i, -1)) - l.length(quadrant_add(i, 1)) -
                                l.length(quadrant_add(i, -1));
        return res;
    }

    // Least p >= 2 where diagonal p of L_i and diagonal p - 1 of L_j differ
    // in occupancy; moving the turn past p changes the on-path parity.
    const int bound = std::max(li.back(), lj.back());
    int p = 2;
    while (p <= bound && li.contains(p) == lj.contains(p - 1)) ++p;
    if (p == bound + 1) return res;

    res.kind = PairResult::Kind::Evaluated;
    res.turn = p;
    res.on_path = l.length(other) + l.length(j) + (li.contains(p) ? 2 : 0);

    const int in_i = li.count_at_most(p);
    const int in_j = res.on_path - in_i - l.length(other);
    int beyond = 0;  // quadrant-j points past the path, away from quadrant i + 2
    for (int d : lj) {
        if (d > p) beyond += d - p;
    }
    res.far_side = l.sum(opposite) + l.sum(j) - in_j - beyond;
    res.near_side = l.n - res.on_path - res.far_side;
    return res;
}

PairResult testB_pair(const Theta& theta, int j, int i) { return testB_pair(Layout(theta), j, i); }

bool testB(const Theta& theta) {
    const Layout l(theta);
    return std::all_of(kNeighborPairs.begin(), kNeighborPairs.end(),
                       [&](const auto& ij) { return testB_pair(l, ij[1], ij[0]).passes(); });
}

namespace {

int first_missing(const DiagonalList& list) {
    int s = 1;
    while (list.contains(s)) ++s;
    return s;
}

}  // namespace

bool testC_quadrant(const Layout& l, int i) {
    const int s = first_missing(l.list(i));
    const DiagonalList& next = l.list(quadrant_add(i, 1));
    const DiagonalList& prev = l.list(quadrant_add(i, -1));
    // Turn points on the empty diagonal s, strictly inside the quadrant. The
    // ray into quadrant i + 1 sits at distance s - t, the other at t + 1.
    for (int t = 1; t <= s - 2; ++t) {
        int beyond = 0;
        int on_path = 0;
        auto crossed = [&](const DiagonalList& list, int offset) {
            for (int d : list) {
                if (d == offset) ++on_path;
                if (d > offset) {
                    beyond += d - offset;
                    ++on_path;
                }
            }
        };
        crossed(next, s - t);
        crossed(prev, t + 1);
        // The rectangle cut off by the turn holds every diagonal below s.
        const int near = beyond + l.sum(i) - (t + 1) * (s - t) + 1;
        on_path += s - 1;
        const int far = l.n - on_path - near;
        if (far <= near) return false;
    }
    return true;
}

bool testC_quadrant(const Theta& theta, int i) { return testC_quadrant(Layout(theta), i); }

bool testC(const Theta& theta) {
    const Layout l(theta);
    for (int i = 1; i <= 4; ++i) {
        if (!testC_quadrant(l, i)) return false;
    }
    return true;
}

bool is_inseparable_rep(const Theta& theta) { return evaluate_criteria(theta).inseparable(); }

std::string to_string(Stage stage) {
    switch (stage) {
        case Stage::AxisLine: return "axis-line";
        case Stage::PartialDiagonal: return "partial-diagonal";
        case Stage::Test0: return "test0";
        case Stage::TestA: return "testA";
        case Stage::TestB: return "testB";
        case Stage::TestC: return "testC";
    }
    return "?";
}

CriteriaReport evaluate_criteria(const Theta& theta) {
    const Layout l(theta);
    CriteriaReport r;
    r.test0 = test0(l);
    r.testA = testA(l);

    std::optional<FailedStage> b_fail;
    for (const auto& [i, j] : kNeighborPairs) {
        if (!testB_pair(l, j, i).passes()) {
            b_fail = FailedStage{Stage::TestB, i, j};
            break;
        }
    }
    r.testB = !b_fail;

    std::optional<FailedStage> c_fail;
    for (int i = 1; i <= 4 && !c_fail; ++i) {
        if (!testC_quadrant(l, i)) c_fail = FailedStage{Stage::TestC, i, 0};
    }
    r.testC = !c_fail;

    if (!r.test0) {
        r.first_failure = FailedStage{Stage::Test0};
    } else if (!r.testA) {
        r.first_failure = FailedStage{Stage::TestA};
    } else if (b_fail) {
        r.first_failure = b_fail;
    } else if (c_fail) {
        r.first_failure = c_fail;
    }
    return r;
}

Verdict classify_point_set(const PointSet& set) {
    Verdict v;
    auto q = quarter(set);
    if (auto* axis = std::get_if<FriendlyAxis>(&q)) {
        v.failed_stage = FailedStage{Stage::AxisLine};
        v.witness = axis->path;
        return v;
    }
    auto ex = extract(set, std::get<Quartering>(q));
    if (auto* partial = std::get_if<NotDiagonalComplete>(&ex)) {
        v.failed_stage = FailedStage{Stage::PartialDiagonal, partial->quadrant, partial->diagonal};
        v.witness = find_friendly_path(set);
        if (!v.witness) throw InconsistencyError("partially occupied diagonal but no friendly path");
        return v;
    }
    v.theta = std::get<Theta>(std::move(ex));
    const CriteriaReport report = evaluate_criteria(*v.theta);
    v.failed_stage = report.first_failure;
    v.inseparable = report.inseparable();
    v.witness = find_friendly_path(set);
    if (v.inseparable && v.witness) throw InconsistencyError("criterion says inseparable but a friendly path exists");
    if (!v.inseparable && !v.witness) throw InconsistencyError("criterion says separable but no friendly path exists");
    return v;
}

MonotonePath single_turn_path(const Rect& box, int quadrant, int u, int v) {
    const Point turn = local_to_plane(quadrant, u, v);
    const Rect b = box.expanded(1);
    const bool uphill = quadrant == 2 || quadrant == 4;
    MonotonePath path{uphill ? Direction::Uphill : Direction::Downhill,
                      staircase_start(box, uphill ? Direction::Uphill : Direction::Downhill),
                      {}};
    auto add = [&path](Step s, int count) { path.steps.insert(path.steps.end(), static_cast<std::size_t>(count), s); };
    switch (quadrant) {
        case 1:  // rays west and south
            add(Step::South, b.y1 - turn.y);
            add(Step::East, turn.x - b.x0);
            add(Step::South, turn.y - b.y0);
            add(Step::East, b.x1 - turn.x);
            break;
        case 2:  // rays south and east
            add(Step::East, turn.x - b.x0);
            add(Step::North, turn.y - b.y0);
            add(Step::East, b.x1 - turn.x);
            add(Step::North, b.y1 - turn.y);
            break;
        case 3:  // rays north and east
            add(Step::East, turn.x - b.x0);
            add(Step::South, b.y1 - turn.y);
            add(Step::East, b.x1 - turn.x);
            add(Step::South, turn.y - b.y0);
            break;
        default:  // rays west and north
            add(Step::North, turn.y - b.y0);
            add(Step::East, turn.x - b.x0);
            add(Step::North, b.y1 - turn.y);
            add(Step::East, b.x1 - turn.x);
            break;
    }
    return path;
}

MonotonePath pair_path(const Theta& theta, int j, int i) {
    const PairResult r = testB_pair(theta, j, i);
    if (r.kind != PairResult::Kind::Evaluated) throw ValidationError("pair has no evaluated path");
    const Rect box = bounding_box(realize(theta));
    return horizontal_neighbors(i, j) ? single_turn_path(box, i, 1, r.turn) : single_turn_path(box, i, r.turn, 1);
}

std::vector<std::array<int, 2>> missing_diagonal_turns(const Theta& theta, int i) {
    const int s = first_missing(theta[i]);
    const bool next_is_horizontal = horizontal_neighbors(i, quadrant_add(i, 1));
    std::vector<std::array<int, 2>> out;
    for (int t = 1; t <= s - 2; ++t) {
        // (u, v): u is the distance to the vertical red line.
        out.push_back(next_is_horizontal ? std::array<int, 2>{t + 1, s - t} : std::array<int, 2>{s - t, t + 1});
    }
    return out;
}

}  // namespace insep
