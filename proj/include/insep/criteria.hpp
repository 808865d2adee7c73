#pragma once

// Inseparability criterion for diagonal representations: a parity test, the
// proper-quartering inequalities, and two families of extremal single-turn
// paths that must all keep the shore holding the avoided quadrant strictly
// larger.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "insep/lattice.hpp"
#include "insep/representation.hpp"

namespace insep {

/// Quadrant arithmetic modulo 4 on 1..4.
constexpr int quadrant_add(int quadrant, int k) noexcept { return ((quadrant - 1 + k) % 4 + 4) % 4 + 1; }

constexpr bool adjacent_quadrants(int a, int b) noexcept {
    return a >= 1 && a <= 4 && b >= 1 && b <= 4 && (quadrant_add(a, 1) == b || quadrant_add(a, -1) == b);
}

/// Shared by the vertical red line: 1-2 and 3-4. Otherwise the horizontal one.
constexpr bool horizontal_neighbors(int a, int b) noexcept { return a + b == 3 || a + b == 7; }

/// Per-quadrant lists and their sums/lengths. The enumerator fills lists in
/// one at a time; every check below only reads the lists it names.
struct Layout {
    std::array<const DiagonalList*, 4> lists{};
    std::array<int, 4> sums{};
    std::array<int, 4> lengths{};
    int n = 0;

    explicit Layout(const Theta& theta);
    Layout() = default;

    const DiagonalList& list(int quadrant) const { return *lists[static_cast<std::size_t>(quadrant - 1)]; }
    int sum(int quadrant) const { return sums[static_cast<std::size_t>(quadrant - 1)]; }
    int length(int quadrant) const { return lengths[static_cast<std::size_t>(quadrant - 1)]; }
};

/// Extremal path for the ordered neighbor pair: it turns inside quadrant i,
/// crosses quadrant j at distance `turn` from the red line and the other
/// neighbor of i at distance 1, and avoids quadrant i + 2.
struct PairResult {
    enum class Kind {
        Evaluated,    // counts below describe the path
        NoCandidate,  // every such path has an odd on-path count
        GapStart,     // L_i does not start at 1; gap_condition decides
    };

    Kind kind = Kind::NoCandidate;
    int turn = 0;
    int far_side = 0;   // shore holding quadrant i + 2
    int near_side = 0;  // the other shore
    int on_path = 0;
    bool gap_condition = false;

    bool exists() const noexcept { return kind != Kind::NoCandidate; }
    bool passes() const noexcept;
};

bool test0(const Layout& layout);
bool test0(const Theta& theta);
bool testA(const Layout& layout);
bool testA(const Theta& theta);

/// Reads lists i and j only. Throws NotAdjacentError.
PairResult testB_pair(const Layout& layout, int j, int i);
PairResult testB_pair(const Theta& theta, int j, int i);

/// The eight ordered neighbor pairs (i, j).
inline constexpr std::array<std::array<int, 2>, 8> kNeighborPairs{{
    {1, 4}, {4, 3}, {3, 2}, {2, 1}, {4, 1}, {1, 2}, {2, 3}, {3, 4},
}};

bool testB(const Theta& theta);

/// Reads lists i - 1, i and i + 1.
bool testC_quadrant(const Layout& layout, int i);
bool testC_quadrant(const Theta& theta, int i);
bool testC(const Theta& theta);

bool is_inseparable_rep(const Theta& theta);

enum class Stage { AxisLine, PartialDiagonal, Test0, TestA, TestB, TestC };

std::string to_string(Stage stage);

/// For TestB, (i, j) is the failing pair; for TestC, i is the quadrant.
struct FailedStage {
    Stage stage = Stage::Test0;
    int i = 0;
    int j = 0;

    friend bool operator==(const FailedStage&, const FailedStage&) = default;
};

struct CriteriaReport {
    bool test0 = false;
    bool testA = false;
    bool testB = false;
    bool testC = false;
    std::optional<FailedStage> first_failure;

    bool inseparable() const noexcept { return !first_failure.has_value(); }
};

CriteriaReport evaluate_criteria(const Theta& theta);

struct Verdict {
    bool inseparable = false;
    std::optional<FailedStage> failed_stage;
    std::optional<MonotonePath> witness;
    std::optional<Theta> theta;  // present once the set has been extracted
};

/// Quarter, extract, run the criterion; separable verdicts carry a
/// balance-zero witness. Throws EmptySetError, and InconsistencyError if the
/// criterion and the path oracle disagree.
Verdict classify_point_set(const PointSet& set);

// Explicit paths behind the criterion, on the canonical embedding and
// normalised to the one-expanded bounding box of realize(theta).

/// Single-turn path at quadrant-local point (u, v). Quadrants 1 and 3 give
/// downhill paths, 2 and 4 uphill ones.
MonotonePath single_turn_path(const Rect& box, int quadrant, int u, int v);

/// Path behind an Evaluated testB_pair() result.
MonotonePath pair_path(const Theta& theta, int j, int i);

/// Quadrant-local turn points probed by testC_quadrant(), in probe order.
std::vector<std::array<int, 2>> missing_diagonal_turns(const Theta& theta, int i);

/// True when the shore holding quadrant i + 2 is the left one.
constexpr bool far_side_is_left(int i) noexcept { return i == 3 || i == 4; }

}  // namespace insep
