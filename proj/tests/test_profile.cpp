#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nekbound/fixtures.hpp"
#include "nekbound/profile.hpp"
#include "support.hpp"

using namespace nekbound;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("profile of the identity") {
    const auto p = profile(square_matrix<double>::identity(4));
    CHECK(p.h == std::vector<double>{0, 0, 0, 0});
    CHECK(p.z == std::vector<double>{1, 1, 1, 1});
    CHECK(p.is_nekrasov);
    CHECK(p.is_sdd);
}

TEST_CASE("profile of A5 matches the hand recursion") {
    // h2 = 1*5/6 + 8 = 53/6, h3 = 7*5/6 + 3*(53/6)/11 = 272/33
    // z2 = 1/6 + 1 = 7/6,    z3 = 7/6 + 3*(7/6)/11 + 1 = 82/33
    const auto p = profile(fixtures::a5());
    CHECK_THAT(p.h[0], WithinRel(5.0, 1e-12));
    CHECK_THAT(p.h[1], WithinRel(53.0 / 6.0, 1e-12));
    CHECK_THAT(p.h[2], WithinRel(272.0 / 33.0, 1e-12));
    CHECK_THAT(p.z[0], WithinRel(1.0, 1e-12));
    CHECK_THAT(p.z[1], WithinRel(7.0 / 6.0, 1e-12));
    CHECK_THAT(p.z[2], WithinRel(82.0 / 33.0, 1e-12));
    CHECK(p.is_nekrasov);
    CHECK_FALSE(p.is_sdd);  // row 3: 10 == 7 + 3, not strict
}

TEST_CASE("profile of the ex41 family") {
    const double eps = 0.05;
    const auto p = profile(fixtures::ex41(eps));
    CHECK_THAT(p.h[0], WithinRel(3.0, 1e-12));
    CHECK_THAT(p.h[1], WithinRel(2.0 - 0.75 * eps, 1e-12));      // 1.9625
    CHECK_THAT(p.h[2], WithinRel(1.75 - 0.375 * eps, 1e-12));    // 1.73125
    CHECK(p.is_nekrasov);
}

TEST_CASE("zero diagonal is rejected") {
    const square_matrix<double> m{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(profile(m), zero_diagonal);
    try {
        profile(m);
    } catch (const zero_diagonal& e) {
        CHECK(e.row() == 0);
    }
}

TEST_CASE("1x1 matrices") {
    const auto p = profile(square_matrix<double>{{3.0}});
    CHECK(p.h == std::vector<double>{0});
    CHECK(p.z == std::vector<double>{1});
    CHECK(p.is_nekrasov);
    CHECK(p.is_sdd);
    CHECK_THROWS_AS(profile(square_matrix<double>{{0.0}}), zero_diagonal);
}

TEST_CASE("h_i depends only on the first i rows") {
    std::mt19937 rng(7101);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = testing::random_dim(rng, 2, 8);
        const auto a = testing::random_nekrasov(rng, n);
        const auto before = profile(a);

        const std::size_t changed = testing::random_dim(rng, 1, n - 1);
        square_matrix<double> b = a;
        for (std::size_t j = 0; j < n; ++j) b(changed, j) += 0.25;
        if (b(changed, changed) == 0.0) b(changed, changed) = 1.0;
        const auto after = profile(b);

        for (std::size_t i = 0; i < changed; ++i) {
            CHECK(before.h[i] == after.h[i]);
            CHECK(before.z[i] == after.z[i]);
        }
    }
}

TEST_CASE("SDD implies Nekrasov") {
    std::mt19937 rng(7102);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = testing::random_sdd(rng, testing::random_dim(rng, 1, 8));
        const auto p = profile(a);
        REQUIRE(p.is_sdd);
        REQUIRE(p.is_nekrasov);
        for (double hi : p.h) REQUIRE(hi >= 0.0);
    }
}

TEST_CASE("z is invariant under right diagonal scaling") {
    std::mt19937 rng(7103);
    std::uniform_real_distribution<double> diag(0.1, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = testing::random_dim(rng, 1, 8);
        const auto a = testing::random_nekrasov(rng, n);
        square_matrix<double> ad = a;
        for (std::size_t j = 0; j < n; ++j) {
            const double d = diag(rng);
            for (std::size_t i = 0; i < n; ++i) ad(i, j) = a(i, j) * d;
        }
        const auto pa = profile(a);
        const auto pad = profile(ad);
        for (std::size_t i = 0; i < n; ++i)
            REQUIRE_THAT(pad.z[i], WithinRel(pa.z[i], 1e-12));
    }
}
