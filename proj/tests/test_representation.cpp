#include <doctest.h>

#include <random>
#include <set>

#include "insep/criteria.hpp"
#include "insep/errors.hpp"
#include "insep/representation.hpp"
#include "support.hpp"

using namespace insep;

namespace {

const Theta kSquare{{1}, {1}, {1}, {1}};
const Theta kTheta108{{1, 2, 3, 5, 6, 9}, {1, 2, 3, 6, 7, 9}, {1, 2, 3, 4, 6, 9}, {1, 2, 4, 6, 7, 9}};

std::array<int, 4> quadrant_counts(const PointSet& set) {
    std::array<int, 4> c{};
    for (Point p : set) {
        const int q = p.x >= 1 ? (p.y >= 1 ? 1 : 4) : (p.y >= 1 ? 2 : 3);
        ++c[static_cast<std::size_t>(q - 1)];
    }
    return c;
}

Theta random_theta(std::mt19937& rng) {
    auto list = [&rng] {
        std::vector<int> v;
        std::bernoulli_distribution keep(0.45);
        for (int d = 1; d <= 7; ++d) {
            if (keep(rng)) v.push_back(d);
        }
        if (v.empty()) v.push_back(1 + static_cast<int>(rng() % 5));
        return DiagonalList(v);
    };
    return Theta(list(), list(), list(), list());
}

}  // namespace

TEST_CASE("diagonal lists validate their invariants") {
    CHECK_THROWS_AS(DiagonalList({2, 1}), ValidationError);
    CHECK_THROWS_AS(DiagonalList({1, 1}), ValidationError);
    CHECK_THROWS_AS(DiagonalList({0, 3}), ValidationError);
    CHECK_THROWS_AS(DiagonalList(std::vector<int>{}), ValidationError);
    const DiagonalList l{1, 3, 6};
    CHECK(l.sum() == 10);
    CHECK(l.size() == 3);
    CHECK(l.back() == 6);
    CHECK(l.contains(3));
    CHECK_FALSE(l.contains(2));
    CHECK(l.count_at_most(5) == 2);
}

TEST_CASE("realize") {
    CHECK(realize(kSquare) == PointSet{{1, 1}, {0, 1}, {0, 0}, {1, 0}});

    const PointSet eight = realize(Theta{{1, 2}, {1}, {1, 2}, {1}});
    CHECK(eight.size() == 8);
    CHECK(eight == PointSet{{1, 1}, {1, 2}, {2, 1}, {0, 1}, {0, 0}, {0, -1}, {-1, 0}, {1, 0}});

    const PointSet big = realize(kTheta108);
    CHECK(big.size() == 108);
    CHECK(quadrant_counts(big) == std::array<int, 4>{26, 28, 25, 29});
}

TEST_CASE("metrics") {
    const Metrics m = metrics(kTheta108);
    CHECK(m.n == 108);
    CHECK(m.sums == std::array<int, 4>{26, 28, 25, 29});
    CHECK(m.lengths == std::array<int, 4>{6, 6, 6, 6});
    CHECK(m.variation == 0);

    CHECK(metrics(kSquare).n == 4);
    CHECK(metrics(kSquare).variation == 0);

    // The n = 27 set, first member of the family with type [a, a+1, a+1, a+2].
    const Metrics f = metrics(Theta{{1, 2}, {1, 2, 3, 4}, {1, 2, 3}, {1, 2, 5}});
    CHECK(f.n == 2 * 2 * 2 + 5 * 2 + 5 + 4);
    CHECK(f.type.multiset() == std::array<int, 4>{2, 3, 3, 4});
    CHECK(f.variation == 2);
}

TEST_CASE("quarter") {
    const auto sq = quarter(PointSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    REQUIRE(std::holds_alternative<Quartering>(sq));
    CHECK(std::get<Quartering>(sq) == Quartering{0, 0});

    const PointSet single{{5, 7}};
    const auto one = quarter(single);
    REQUIRE(std::holds_alternative<FriendlyAxis>(one));
    CHECK(evaluate_path(std::get<FriendlyAxis>(one).path, single).friendly());

    const PointSet row{{0, 0}, {1, 0}, {2, 0}, {1, 5}, {1, -5}};
    const auto axis = quarter(row);
    REQUIRE(std::holds_alternative<FriendlyAxis>(axis));
    CHECK(evaluate_path(std::get<FriendlyAxis>(axis).path, row).friendly());

    const Theta n24[] = {
        {{1, 3, 5}, {1, 2}, {1, 3, 5}, {1, 2}},
        {{1, 2, 3, 5}, {1, 2}, {1, 6}, {1, 2}},
        {{1, 2, 3, 4}, {1, 2}, {1, 7}, {1, 2}},
        {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}},
    };
    for (const auto& t : n24) {
        const auto q = quarter(realize(t));
        REQUIRE(std::holds_alternative<Quartering>(q));
        CHECK(std::get<Quartering>(q) == Quartering{0, 0});
    }

    CHECK_THROWS_AS(quarter(PointSet{}), EmptySetError);
}

TEST_CASE("extract") {
    const PointSet sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    const auto t = extract(sq, Quartering{0, 0});
    REQUIRE(std::holds_alternative<Theta>(t));
    CHECK(std::get<Theta>(t) == kSquare);

    // Translated copies extract to the same representation.
    const PointSet moved = realize(kTheta108).translated(-40, 17);
    const auto q = quarter(moved);
    REQUIRE(std::holds_alternative<Quartering>(q));
    CHECK(std::get<Quartering>(q) == Quartering{17, -40});
    CHECK(std::get<Theta>(extract(moved, std::get<Quartering>(q))) == kTheta108);

    const PointSet partial{{1, 1}, {0, 1}, {0, 0}, {1, 0}, {2, 1}};
    const auto qp = quarter(partial);
    REQUIRE(std::holds_alternative<Quartering>(qp));
    const auto ex = extract(partial, std::get<Quartering>(qp));
    REQUIRE(std::holds_alternative<NotDiagonalComplete>(ex));
    CHECK(std::get<NotDiagonalComplete>(ex).quadrant == 1);
    CHECK(std::get<NotDiagonalComplete>(ex).diagonal == 2);

    CHECK_THROWS_AS(extract(sq, Quartering{3, 0}), ValidationError);
}

TEST_CASE("test A passing is exactly a quartering through the origin cross") {
    // Exhaustive over every representation passing test 0 with n <= 20; the
    // round trip realize -> quarter -> extract is the identity on them.
    int checked = 0;
    for (int n = 4; n <= 20; ++n) {
        testing::for_each_theta(n, [&](const Theta& t) {
            if (!test0(t)) return;
            const PointSet set = realize(t);
            const auto q = quarter(set);
            const bool centered = std::holds_alternative<Quartering>(q) && std::get<Quartering>(q) == Quartering{0, 0};
            CHECK(testA(t) == centered);
            if (centered) {
                const auto back = extract(set, std::get<Quartering>(q));
                REQUIRE(std::holds_alternative<Theta>(back));
                CHECK(std::get<Theta>(back) == t);
            }
            ++checked;
        });
    }
    MESSAGE("representations checked: " << checked);
}

TEST_CASE("dihedral images match plane isometries") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Theta t = random_theta(rng);
        const PointSet set = realize(t);
        for (int e = 0; e < 8; ++e) {
            const PointSet moved = set.transformed([e](Point p) { return dihedral_point(p, e); });
            CHECK(realize(dihedral_image(t, e)) == moved);
        }
        const Metrics m = metrics(t);
        for (const auto& img : dihedral_images(t)) {
            const Metrics mi = metrics(img);
            CHECK(mi.n == m.n);
            CHECK(mi.type.multiset() == m.type.multiset());
            CHECK(mi.variation == m.variation);
            auto a = m.sums, b = mi.sums;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
    }
}

TEST_CASE("orbit sizes and stabilizer orders") {
    auto orbit_size = [](const Theta& t) {
        std::set<Theta, ThetaLess> distinct;
        for (const auto& img : dihedral_images(t)) distinct.insert(img);
        return distinct.size();
    };
    const Theta t4{{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}};
    const Theta t1{{1, 3, 5}, {1, 2}, {1, 3, 5}, {1, 2}};
    const Theta t2{{1, 2, 3, 5}, {1, 2}, {1, 6}, {1, 2}};
    const Theta t3{{1, 2, 3, 4}, {1, 2}, {1, 7}, {1, 2}};
    for (const auto& img : dihedral_images(t4)) CHECK(img == t4);
    CHECK(orbit_size(t1) == 2);
    CHECK(orbit_size(t2) == 4);
    CHECK(stabilizer_order(t4) == 8);
    CHECK(stabilizer_order(t1) == 4);
    CHECK(stabilizer_order(t2) == 2);
    CHECK(stabilizer_order(t3) == 2);

    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const Theta t = random_theta(rng);
        const int g = stabilizer_order(t);
        CHECK(8 % g == 0);
        CHECK(static_cast<std::size_t>(g) * orbit_size(t) == 8);
    }
}

TEST_CASE("canonical form") {
    CHECK(canonical(kSquare) == kSquare);
    CHECK(canonical(Theta{{1, 5}, {1, 2}, {1, 5}, {1, 2}}) == canonical(Theta{{1, 2}, {1, 5}, {1, 2}, {1, 5}}));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Theta t = random_theta(rng);
        const Theta c = canonical(t);
        CHECK(canonical(c) == c);
        for (const auto& img : dihedral_images(t)) {
            CHECK(canonical(img) == c);
            CHECK(compare_flat(c, img) <= 0);
        }
    }
}

TEST_CASE("odd representations passing test 0 have no symmetry") {
    for (int n = 5; n <= 21; n += 2) {
        testing::for_each_theta(n, [](const Theta& t) {
            if (test0(t)) CHECK(stabilizer_order(t) == 1);
        });
    }
}
