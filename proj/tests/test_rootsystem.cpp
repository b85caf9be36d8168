#include <doctest.h>

#include "horoflex/rootsystem.hpp"

using namespace horoflex;

TEST_CASE("positive roots of the smallest ranks") {
    RootDatum a1 = positive_roots(GroupSpec{{{'A', 1}}, 0});
    CHECK(a1.total_positive_roots() == 1);

    RootDatum a2 = positive_roots(GroupSpec{{{'A', 2}}, 0});
    REQUIRE(a2.total_positive_roots() == 3);
    IntMat expected = {{Int(0), Int(1)}, {Int(1), Int(0)}, {Int(1), Int(1)}};
    CHECK(a2.positive_roots_by_factor[0] == expected);

    CHECK(positive_roots(GroupSpec{{{'B', 2}}, 0}).total_positive_roots() == 4);
}

TEST_CASE("positive root counts match the classical counts up to rank 8") {
    for (int n = 1; n <= 8; ++n)
        CHECK(positive_roots(GroupSpec{{{'A', n}}, 0}).total_positive_roots() ==
              static_cast<std::size_t>(classical_positive_root_count('A', n)));
    for (int n = 2; n <= 8; ++n) {
        CHECK(positive_roots(GroupSpec{{{'B', n}}, 0}).total_positive_roots() ==
              static_cast<std::size_t>(n * n));
        CHECK(positive_roots(GroupSpec{{{'C', n}}, 0}).total_positive_roots() ==
              static_cast<std::size_t>(n * n));
    }
    for (int n = 3; n <= 8; ++n)
        CHECK(positive_roots(GroupSpec{{{'D', n}}, 0}).total_positive_roots() ==
              static_cast<std::size_t>(n * (n - 1)));
    CHECK(positive_roots(GroupSpec{{{'E', 6}}, 0}).total_positive_roots() == 36);
    CHECK(positive_roots(GroupSpec{{{'E', 7}}, 0}).total_positive_roots() == 63);
    CHECK(positive_roots(GroupSpec{{{'E', 8}}, 0}).total_positive_roots() == 120);
    CHECK(positive_roots(GroupSpec{{{'F', 4}}, 0}).total_positive_roots() == 24);
    CHECK(positive_roots(GroupSpec{{{'G', 2}}, 0}).total_positive_roots() == 6);
}

TEST_CASE("every positive root has nonnegative simple-root coordinates") {
    for (const auto& f : {SimpleFactor{'B', 3}, SimpleFactor{'G', 2}, SimpleFactor{'F', 4}}) {
        RootDatum d = positive_roots(GroupSpec{{f}, 0});
        for (const auto& beta : d.positive_roots_by_factor[0])
            for (const auto& c : beta) CHECK(c >= 0);
    }
}

TEST_CASE("invalid group specifications are rejected") {
    CHECK_THROWS_AS((void)positive_roots(GroupSpec{{{'E', 5}}, 0}), Error);
    CHECK_THROWS_AS((void)positive_roots(GroupSpec{{{'B', 1}}, 0}), Error);
    CHECK_THROWS_AS((void)positive_roots(GroupSpec{{{'X', 2}}, 0}), Error);
    CHECK_THROWS_AS(validate(GroupSpec{{}, -1}), Error);
    CHECK_NOTHROW(validate(GroupSpec{{{'D', 3}}, 0}));
}

TEST_CASE("dominant chamber of A1 x torus") {
    Cone c = dominant_chamber(GroupSpec{{{'A', 1}}, 1});
    IntMat expected = {{Int(0), Int(-1)}, {Int(0), Int(1)}, {Int(1), Int(0)}};
    CHECK(c.rays() == expected);
    CHECK(c.lineality_dim() == 1);
}

TEST_CASE("dominant chamber of a torus is the whole space") {
    Cone c = dominant_chamber(GroupSpec{{}, 2});
    CHECK(c.dim() == 2);
    CHECK(c.lineality_dim() == 2);
}

TEST_CASE("dominant chamber of A2 is the orthant in fundamental coordinates") {
    Cone c = dominant_chamber(GroupSpec{{{'A', 2}}, 0});
    IntMat expected = {{Int(0), Int(1)}, {Int(1), Int(0)}};
    CHECK(c.rays() == expected);
    CHECK(c.lineality_dim() == 0);
}

TEST_CASE("chamber lineality equals the torus rank") {
    for (int s = 0; s <= 3; ++s)
        CHECK(dominant_chamber(GroupSpec{{{'A', 2}}, s}).lineality_dim() == s);
}

TEST_CASE("support of a semigroup") {
    GroupSpec g = GroupSpec{{{'A', 1}}, 1};
    IntMat gens = {{Int(2), Int(0)}, {Int(1), Int(1)}, {Int(0), Int(1)}};
    CHECK(support_of_semigroup(g, gens) == std::set<int>{0});

    IntMat torus_only = {{Int(0), Int(3)}, {Int(0), Int(-1)}};
    CHECK(support_of_semigroup(g, torus_only).empty());

    GroupSpec a2 = GroupSpec{{{'A', 2}}, 0};
    CHECK(support_of_semigroup(a2, {{Int(1), Int(0)}}) == std::set<int>{0});

    CHECK_THROWS_AS((void)support_of_semigroup(g, {{Int(-1), Int(0)}}), Error);
}

TEST_CASE("delta counts the positive roots supported inside S") {
    GroupSpec a1{{{'A', 1}}, 0};
    CHECK(delta(a1, {}) == 0);
    CHECK(delta(a1, {0}) == 1);

    GroupSpec a2{{{'A', 2}}, 0};
    CHECK(delta(a2, {0}) == 1);
    CHECK(delta(a2, {0, 1}) == 3);

    GroupSpec g2{{{'G', 2}}, 0};
    CHECK(delta(g2, {0, 1}) == 6);
    CHECK(delta(g2, {1}) == 1);

    // monotone in S, and the full set gives the total count
    GroupSpec b3{{{'B', 3}}, 0};
    long prev = -1;
    for (std::set<int> s : std::vector<std::set<int>>{{}, {0}, {0, 1}, {0, 1, 2}}) {
        long v = delta(b3, s);
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(prev == 9);
}
