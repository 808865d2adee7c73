#pragma once

// Test-only helpers: brute-force generation of every representation of a
// given size, independent of the enumeration module.

#include <functional>
#include <vector>

#include "insep/representation.hpp"

namespace insep::testing {

// Strictly increasing lists of positive integers summing to m.
inline void increasing_lists(int m, int min_part, std::vector<int>& cur, std::vector<DiagonalList>& out) {
    if (m == 0) {
        if (!cur.empty()) out.emplace_back(cur);
        return;
    }
    for (int p = min_part; p <= m; ++p) {
        cur.push_back(p);
        increasing_lists(m - p, p + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<DiagonalList> lists_with_sum(int m) {
    std::vector<DiagonalList> out;
    std::vector<int> cur;
    increasing_lists(m, 1, cur, out);
    return out;
}

/// Calls visit(theta) for every representation with n(theta) = n.
inline void for_each_theta(int n, const std::function<void(const Theta&)>& visit) {
    std::vector<std::vector<DiagonalList>> by_sum(static_cast<std::size_t>(n + 1));
    for (int m = 1; m <= n; ++m) by_sum[static_cast<std::size_t>(m)] = lists_with_sum(m);
    for (int a = 1; a <= n - 3; ++a) {
        for (int b = 1; a + b <= n - 2; ++b) {
            for (int c = 1; a + b + c <= n - 1; ++c) {
                const int d = n - a - b - c;
                for (const auto& l1 : by_sum[static_cast<std::size_t>(a)]) {
                    for (const auto& l2 : by_sum[static_cast<std::size_t>(b)]) {
                        for (const auto& l3 : by_sum[static_cast<std::size_t>(c)]) {
                            for (const auto& l4 : by_sum[static_cast<std::size_t>(d)]) visit(Theta(l1, l2, l3, l4));
                        }
                    }
                }
            }
        }
    }
}

}  // namespace insep::testing
