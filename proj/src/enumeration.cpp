#include "insep/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "insep/criteria.hpp"

namespace insep {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // Distinct parts below p sum to at most p(p-1)/2.
        if (p + p * (p - 1) / 2 < remaining) break;
        cur.push_back(p);
        partitions_rec(remaining - p, p - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> distinct_partitions(int m) {
    std::vector<std::vector<int>> out;
    if (m < 1) return out;
    std::vector<int> cur;
    partitions_rec(m, m, cur, out);
    return out;
}

std::vector<std::array<int, 4>> compositions4(int n) {
    std::vector<std::array<int, 4>> out;
    for (int a = 1; a <= n - 3; ++a) {
        for (int b = 1; a + b <= n - 2; ++b) {
            for (int c = 1; a + b + c <= n - 1; ++c) out.push_back({a, b, c, n - a - b - c});
        }
    }
    return out;
}

namespace {

// Diagonal lists for every quadrant sum y, grouped by length.
class ListTable {
public:
    explicit ListTable(int max_sum) : by_sum_(static_cast<std::size_t>(max_sum + 1)) {
        for (int y = 1; y <= max_sum; ++y) {
            auto& groups = by_sum_[static_cast<std::size_t>(y)];
            for (auto parts : distinct_partitions(y)) {
                std::reverse(parts.begin(), parts.end());
                const std::size_t len = parts.size();
                if (groups.size() <= len) groups.resize(len + 1);
                groups[len].emplace_back(std::move(parts));
            }
        }
    }

    std::span<const DiagonalList> lists(int sum, int length) const {
        const auto& groups = by_sum_[static_cast<std::size_t>(sum)];
        if (static_cast<std::size_t>(length) >= groups.size()) return {};
        return groups[static_cast<std::size_t>(length)];
    }

    int max_length(int sum) const { return static_cast<int>(by_sum_[static_cast<std::size_t>(sum)].size()) - 1; }

private:
    std::vector<std::vector<std::vector<DiagonalList>>> by_sum_;
};

bool pair_ok(const Layout& l, int i, int j) { return testB_pair(l, j, i).passes(); }

// All inseparable representations with quadrant sums `sums`.
void search_composition(const ListTable& table, const std::array<int, 4>& sums, const EnumerationOptions& options,
                        std::vector<Theta>& found) {
    Layout l;
    l.sums = sums;
    l.n = sums[0] + sums[1] + sums[2] + sums[3];

    std::array<int, 4> len{};
    for (len[0] = 1; len[0] <= table.max_length(sums[0]); ++len[0]) {
        for (len[1] = 1; len[1] <= table.max_length(sums[1]); ++len[1]) {
            for (len[2] = 1; len[2] <= table.max_length(sums[2]); ++len[2]) {
                for (len[3] = 1; len[3] <= table.max_length(sums[3]); ++len[3]) {
                    l.lengths = len;
                    if (!test0(l) || !testA(l)) continue;
                    if (options.type_multiset) {
                        auto sorted = len;
                        std::sort(sorted.begin(), sorted.end());
                        if (sorted != *options.type_multiset) continue;
                    }
                    for (const auto& l1 : table.lists(sums[0], len[0])) {
                        l.lists[0] = &l1;
                        for (const auto& l2 : table.lists(sums[1], len[1])) {
                            l.lists[1] = &l2;
                            if (!pair_ok(l, 1, 2) || !pair_ok(l, 2, 1)) continue;
                            for (const auto& l3 : table.lists(sums[2], len[2])) {
                                l.lists[2] = &l3;
                                if (!pair_ok(l, 2, 3) || !pair_ok(l, 3, 2) || !testC_quadrant(l, 2)) continue;
                                for (const auto& l4 : table.lists(sums[3], len[3])) {
                                    l.lists[3] = &l4;
                                    if (!pair_ok(l, 3, 4) || !pair_ok(l, 4, 3) || !pair_ok(l, 4, 1) ||
                                        !pair_ok(l, 1, 4)) {
                                        continue;
                                    }
                                    if (!testC_quadrant(l, 1) || !testC_quadrant(l, 3) || !testC_quadrant(l, 4)) {
                                        continue;
                                    }
                                    found.push_back(canonical(Theta(l1, l2, l3, l4)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

void oracle_composition(const ListTable& table, const std::array<int, 4>& sums, std::vector<Theta>& found) {
    Layout l;
    l.sums = sums;
    l.n = sums[0] + sums[1] + sums[2] + sums[3];
    std::array<int, 4> len{};
    for (len[0] = 1; len[0] <= table.max_length(sums[0]); ++len[0]) {
        for (len[1] = 1; len[1] <= table.max_length(sums[1]); ++len[1]) {
            for (len[2] = 1; len[2] <= table.max_length(sums[2]); ++len[2]) {
                for (len[3] = 1; len[3] <= table.max_length(sums[3]); ++len[3]) {
                    l.lengths = len;
                    if (!testA(l)) continue;
                    for (const auto& l1 : table.lists(sums[0], len[0])) {
                        for (const auto& l2 : table.lists(sums[1], len[1])) {
                            for (const auto& l3 : table.lists(sums[2], len[2])) {
                                for (const auto& l4 : table.lists(sums[3], len[3])) {
                                    Theta t(l1, l2, l3, l4);
                                    if (compare_flat(canonical(t), t) != 0) continue;
                                    if (!find_friendly_path(realize(t))) found.push_back(std::move(t));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

template <class Search>
std::vector<EnumerationRecord> run_search(int n, int jobs, Search search) {
    std::vector<EnumerationRecord> out;
    if (n < 4) return out;

    const ListTable table(n - 3);
    const auto comps = compositions4(n);
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(comps.size())));

    std::vector<std::vector<Theta>> found(static_cast<std::size_t>(jobs));
    std::atomic<std::size_t> next{0};
    auto worker = [&](std::size_t w) {
        for (std::size_t k = next++; k < comps.size(); k = next++) search(table, comps[k], found[w]);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, static_cast<std::size_t>(w));
    }

    std::set<Theta, ThetaLess> orbits;
    for (auto& part : found) orbits.insert(std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    out.reserve(orbits.size());
    for (const Theta& t : orbits) {
        EnumerationRecord r;
        r.theta = t;
        r.g = stabilizer_order(t);
        r.type = metrics(t).type;
        r.n = n;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<EnumerationRecord> enumerate_inseparable(int n, const EnumerationOptions& options) {
    return run_search(n, options.jobs, [&options](const ListTable& table, const std::array<int, 4>& sums,
                                                  std::vector<Theta>& found) {
        search_composition(table, sums, options, found);
    });
}

std::vector<EnumerationRecord> enumerate_by_oracle(int n, int jobs) {
    return run_search(n, jobs, oracle_composition);
}

CountRow summarize(int n, std::span<const EnumerationRecord> records) {
    CountRow row{n, 0, 0};
    for (const auto& r : records) {
        ++row.c;
        row.chat += 8 / r.g;
    }
    return row;
}

CountRow count_cn(int n, int jobs) {
    EnumerationOptions opt;
    opt.jobs = jobs;
    return summarize(n, enumerate_inseparable(n, opt));
}

std::vector<CountRow> count_table(int max_n, int jobs) {
    std::vector<CountRow> rows;
    for (int n = 1; n <= max_n; ++n) rows.push_back(count_cn(n, jobs));
    return rows;
}

std::vector<EnumerationRecord> search_by_type(int n, std::array<int, 4> type_multiset, int jobs) {
    std::sort(type_multiset.begin(), type_multiset.end());
    EnumerationOptions opt;
    opt.jobs = jobs;
    opt.type_multiset = type_multiset;
    return enumerate_inseparable(n, opt);
}

std::vector<int> missing_odd(std::span<const CountRow> rows, int limit) {
    std::vector<int> out;
    for (const auto& r : rows) {
        if (r.n <= limit && r.n % 2 == 1 && r.c == 0) out.push_back(r.n);
    }
    return out;
}

std::vector<int> missing_odd(int limit, int jobs) {
    std::vector<CountRow> rows;
    for (int n = 1; n <= limit; n += 2) rows.push_back(count_cn(n, jobs));
    return missing_odd(rows, limit);
}

std::vector<std::int64_t> t_sequence(int max_n) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(std::max(max_n, 0)), 0);
    for (int n = 1; n <= max_n; ++n) {
        std::int64_t v = 0;
        if (n == 4) {
            v = 1;
        } else if (n >= 5) {
            const std::int64_t k = n - 5;
            // Half of C(n-5, 2) + floor((n-5)/2) is always an integer.
            v = t[static_cast<std::size_t>(n - 5)] + (k * (k - 1) / 2 + k / 2) / 2 + 2 * ((n - 4) / 2) + 1;
        }
        t[static_cast<std::size_t>(n - 1)] = v;
    }
    return t;
}

std::vector<std::int64_t> t_genfun(int max_n) {
    // z^4 (1 - z + z^2) / ((1 - z)^2 (1 - z^2) (1 - z^4)), truncated at z^max_n.
    std::vector<std::int64_t> c(static_cast<std::size_t>(max_n + 1), 0);
    const std::array<std::pair<int, std::int64_t>, 3> numerator{{{4, 1}, {5, -1}, {6, 1}}};
    for (const auto& [power, coeff] : numerator) {
        if (power <= max_n) c[static_cast<std::size_t>(power)] += coeff;
    }
    for (int stride : {1, 1, 2, 4}) {
        // Multiply by 1 / (1 - z^stride).
        for (int k = stride; k <= max_n; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - stride)];
    }
    return {c.begin() + 1, c.end()};
}

std::int64_t t_direct(int n) {
    std::set<std::array<int, 4>> orbits;
    for (const auto& comp : compositions4(n)) {
        std::array<int, 4> best = comp;
        for (int flip = 0; flip < 2; ++flip) {
            std::array<int, 4> cur = comp;
            if (flip) std::reverse(cur.begin(), cur.end());
            for (int r = 0; r < 4; ++r) {
                std::rotate(cur.begin(), cur.begin() + 1, cur.end());
                best = std::min(best, cur);
            }
        }
        orbits.insert(best);
    }
    return static_cast<std::int64_t>(orbits.size());
}

}  // namespace insep
