#pragma once

// Exhaustive search for inseparable representations and the counting
// sequences built on top of it.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "insep/representation.hpp"

namespace insep {

/// Partitions of m into distinct positive parts, each listed in decreasing
/// order; the partitions themselves come in decreasing lexicographic order.
std::vector<std::vector<int>> distinct_partitions(int m);

/// Ordered quadruples of positive integers summing to n, lexicographic.
/// Empty for n < 4.
std::vector<std::array<int, 4>> compositions4(int n);

struct EnumerationRecord {
    Theta theta;  // canonical form
    int g = 0;    // stabilizer order
    TypeVector type;
    int n = 0;
};

struct EnumerationOptions {
    int jobs = 1;
    /// Keep only representations whose sorted type equals this.
    std::optional<std::array<int, 4>> type_multiset;
};

/// One record per dihedral orbit, sorted by compare_flat() on the canonical
/// forms. The output does not depend on `jobs`.
std::vector<EnumerationRecord> enumerate_inseparable(int n, const EnumerationOptions& options = {});

/// Same output shape, but decided by the path oracle alone: every
/// representation whose realisation is quartered at the canonical cross
/// (Test A) and admits no friendly path. No parity test and no Tests B/C, so
/// this also covers lists that do not start at diagonal 1. Slow; meant for
/// cross-checking small n.
std::vector<EnumerationRecord> enumerate_by_oracle(int n, int jobs = 1);

struct CountRow {
    int n = 0;
    std::int64_t c = 0;     // orbits under the full lattice symmetry
    std::int64_t chat = 0;  // sets up to translation: sum of 8 / g

    friend bool operator==(const CountRow&, const CountRow&) = default;
};

CountRow summarize(int n, std::span<const EnumerationRecord> records);
CountRow count_cn(int n, int jobs = 1);
/// Rows for n = 1..max_n.
std::vector<CountRow> count_table(int max_n, int jobs = 1);

std::vector<EnumerationRecord> search_by_type(int n, std::array<int, 4> type_multiset, int jobs = 1);

/// Odd n <= limit with c(n) = 0.
std::vector<int> missing_odd(std::span<const CountRow> rows, int limit);
std::vector<int> missing_odd(int limit, int jobs = 1);

// Compositions into four parts up to the dihedral action (rotations and
// reversal of the quadruple). All three return t(1..max_n) / t(n).
std::vector<std::int64_t> t_sequence(int max_n);
std::vector<std::int64_t> t_genfun(int max_n);
std::int64_t t_direct(int n);

}  // namespace insep
