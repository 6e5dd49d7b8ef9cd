#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "nekbound/fixtures.hpp"
#include "nekbound/lcp.hpp"
#include "support.hpp"

using namespace nekbound;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

epsilon_plan<double> ex51_published_plan(double k) {
    return {plan_strategy::trailing, 1, fixtures::ex51_published_eps(k), 0.5};
}

}  // namespace

TEST_CASE("lcp coefficient matches the ex51 closed form") {
    for (double k : {3.0, 10.0, 100.0}) {
        const auto m = fixtures::ex51(k);
        const auto published = lcp_coefficient(m, ex51_published_plan(k));
        CHECK_THAT(published.coefficient, WithinRel(fixtures::ex51_coefficient_closed(k), 1e-9));
        // the generic interval plan at t = 1/2 lands on the same epsilons
        CHECK_THAT(lcp_coefficient(m, 0.5).coefficient,
                   WithinRel(fixtures::ex51_coefficient_closed(k), 1e-9));
    }
    CHECK_THAT(lcp_coefficient(fixtures::ex51(10), ex51_published_plan(10)).coefficient,
               WithinRel(4000.0 / 1781.0, 1e-9));
}

TEST_CASE("lcp coefficient on the identity") {
    const auto r = lcp_coefficient(square_matrix<double>::identity(3), 0.5);
    CHECK_THAT(r.coefficient, WithinAbs(2.0, 1e-14));
}

TEST_CASE("lcp coefficient stays controlled as K grows") {
    double previous = 1e30;
    for (double k : {3.0, 10.0, 100.0, 1000.0}) {
        const double c = lcp_coefficient(fixtures::ex51(k), 0.5).coefficient;
        CHECK(c < 6.5);
        CHECK(c < previous);
        previous = c;
    }
    CHECK(lcp_coefficient(fixtures::ex51(100), 0.5).coefficient < 3.0);
}

TEST_CASE("lcp coefficient preconditions") {
    CHECK_THROWS_AS(lcp_coefficient(fixtures::a1(), 0.5), nonpositive_diagonal);  // a11 = -7
    const square_matrix<double> not_nek{{1, 5}, {5, 1}};
    CHECK_THROWS_AS(lcp_coefficient(not_nek, 0.5), not_nekrasov);
    CHECK_THROWS_AS(lcp_coefficient(fixtures::ex51(10), 1.5), t_out_of_range);
}

TEST_CASE("reference coefficient") {
    CHECK_THAT(lcp_reference_coefficient(square_matrix<double>::identity(4)),
               WithinAbs(1.0, 1e-14));
    CHECK_THAT(lcp_reference_coefficient(fixtures::ex51(10)), WithinRel(2020.0 / 99.0, 1e-9));
    CHECK_THAT(lcp_reference_coefficient(fixtures::ex51(1000)),
               WithinRel(fixtures::ex51_reference_closed(1000), 1e-9));
    CHECK_THROWS_AS(lcp_reference_coefficient(fixtures::a1()), nonpositive_diagonal);
}

TEST_CASE("reference over new ratio grows without bound") {
    double previous = 0.0;
    for (double k : {10.0, 100.0, 1000.0}) {
        const double ratio = lcp_reference_coefficient(fixtures::ex51(k)) /
                             lcp_coefficient(fixtures::ex51(k), 0.5).coefficient;
        CHECK(ratio > previous);
        previous = ratio;
    }
}

TEST_CASE("lcp residual") {
    const auto id2 = square_matrix<double>::identity(2);
    const std::vector<double> q{-1, -1};

    // at the solution every component's min is zero
    const lcp_instance<double> solved{id2, q, std::vector<double>{1, 1}};
    CHECK(lcp_residual(solved) == std::vector<double>{0, 0});

    const lcp_instance<double> off{id2, q, std::vector<double>{2, 0}};
    CHECK(lcp_residual(off) == std::vector<double>{1, -1});

    const lcp_instance<double> no_x{id2, q};
    CHECK_THROWS_AS(lcp_residual(no_x), missing_candidate);

    // smoke: positive-diagonal comparison variant with arbitrary data
    std::mt19937 rng(7501);
    const auto m = comparison_matrix(fixtures::a5());
    const lcp_instance<double> smoke{m, testing::random_vector(rng, 3, -2, 2),
                                     testing::random_vector(rng, 3, -1, 2)};
    const auto r = lcp_residual(smoke);
    for (double v : r) CHECK(std::isfinite(v));
}

TEST_CASE("lcp error radius") {
    const auto id2 = square_matrix<double>::identity(2);
    const std::vector<double> q{-1, -1};

    const lcp_instance<double> solved{id2, q, std::vector<double>{1, 1}};
    CHECK(lcp_error_radius(solved, 0.5) == 0.0);

    const lcp_instance<double> off{id2, q, std::vector<double>{2, 0}};
    const double radius = lcp_error_radius(off, 0.5);
    CHECK_THAT(radius, WithinAbs(2.0, 1e-14));
    const auto star = lcp_solve_enumerate(id2, q);
    CHECK(star == std::vector<double>{1, 1});
    CHECK(radius >= inf_norm(std::vector<double>{2 - star[0], 0 - star[1]}));
}

TEST_CASE("error radius covers a perturbed solution of the ex51 family") {
    std::mt19937 rng(7502);
    const auto m = fixtures::ex51(10);
    for (int trial = 0; trial < 20; ++trial) {
        const auto q = testing::random_vector(rng, 3, -2, 2);
        const auto star = lcp_solve_enumerate(m, q);
        auto x = star;
        for (double& v : x) v += testing::random_vector(rng, 1, -0.3, 0.3)[0];
        const lcp_instance<double> inst{m, q, x};
        double err = 0;
        for (std::size_t i = 0; i < 3; ++i) err = std::max(err, std::abs(x[i] - star[i]));
        REQUIRE(lcp_error_radius(inst, 0.5) >= err * (1 - 1e-12));
    }
}

TEST_CASE("enumeration oracle solves small problems") {
    const auto id2 = square_matrix<double>::identity(2);
    CHECK(lcp_solve_enumerate(id2, {-1.0, -1.0}) == std::vector<double>{1, 1});
    CHECK(lcp_solve_enumerate(id2, {1.0, 2.0}) == std::vector<double>{0, 0});

    std::mt19937 rng(7503);
    const auto m = fixtures::ex51(10);
    for (int trial = 0; trial < 50; ++trial) {
        const auto q = testing::random_vector(rng, 3, -3, 3);
        const auto x = lcp_solve_enumerate(m, q);
        auto w = multiply(m, x);
        double complementarity = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            w[i] += q[i];
            REQUIRE(x[i] >= -1e-9);
            REQUIRE(w[i] >= -1e-9);
            complementarity += std::abs(x[i] * w[i]);
        }
        REQUIRE(complementarity <= 1e-6);
    }
}

TEST_CASE("beta_bar equals the plan margins") {
    std::mt19937 rng(7504);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = testing::random_dim(rng, 1, 6);
        const auto a = testing::random_nekrasov(rng, n, /*positive_diagonal=*/true);
        const double t = trial % 2 ? 0.5 : 0.25;
        const auto report = lcp_coefficient(a, t);
        const auto margins = plan_margins(a, profile(a), report.plan.eps);
        REQUIRE(report.coefficient >= 1.0);
        for (std::size_t i = 0; i < n; ++i)
            REQUIRE_THAT(report.beta_bar[i], WithinRel(margins[i], 1e-10));
    }
}

TEST_CASE("error radius dominates the true error on random instances") {
    std::mt19937 rng(7505);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = testing::random_dim(rng, 1, 4);
        const auto a = testing::random_nekrasov(rng, n, /*positive_diagonal=*/true);
        const auto q = testing::random_vector(rng, n, -2, 2);
        const auto x = testing::random_vector(rng, n, -1, 2);
        const auto star = lcp_solve_enumerate(a, q);

        double err = 0;
        for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(x[i] - star[i]));
        const lcp_instance<double> inst{a, q, x};
        REQUIRE(lcp_error_radius(inst, 0.5) >= err * (1 - 1e-12));
    }
}
