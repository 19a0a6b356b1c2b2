#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stw/constructions.hpp"
#include "stw/k21.hpp"
#include "stw/search.hpp"
#include "stw/solvers.hpp"
#include "stw/topology.hpp"
#include "oracles.hpp"

using namespace stw;
using stw::testing::binom;

TEST_CASE("spanning stacked-ball sampler") {
    auto C = cyclic_polytope(4, 7);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto ball = sample_spanning_stacked_ball(C, seed);
        REQUIRE(ball.has_value());
        CHECK(ball->facets.size() == 4);  // n - 3
        CHECK(validate_stacked_ball(*ball));
        CHECK(ball->vertexSupport() == C.vertexMask());
        for (const auto& f : ball->facets) CHECK(C.hasFacet(f));
    }

    SUBCASE("sampled balls feed valid extensions") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto ball = sample_spanning_stacked_ball(C, seed);
            REQUIRE(ball.has_value());
            auto K8 = single_element_extension(C, *ball, 7);
            CHECK(manifold_check_3d(K8));
            CHECK(is_k_neighborly(K8, 2));
        }
    }
    SUBCASE("an exhausted backtracking budget returns none, not garbage") {
        auto result = sample_spanning_stacked_ball(C, 0, 0);
        CHECK_FALSE(result.has_value());
    }
    SUBCASE("non-3-dimensional input is rejected") {
        CHECK_THROWS_AS(sample_spanning_stacked_ball(simplex_boundary(2), 0),
                        std::invalid_argument);
    }
}

TEST_CASE("beam search over extensions") {
    SearchConfig cfg{cyclic_polytope(4, 7), 10, 60, 2, 5, 600'000, 1};

    auto first = extension_search(cfg);
    REQUIRE(first.stageWinners.size() == 3);
    CHECK_FALSE(first.truncated);

    SUBCASE("winners satisfy the face-count law, topology, and score cap") {
        for (const auto& stage : first.stageWinners) {
            CHECK(stage.sphere.vertexCount() == stage.n);
            CHECK(stage.sphere.facetCount() == binom(stage.n - 1, 2) - 1);
            CHECK(manifold_check_3d(stage.sphere));
            CHECK(is_k_neighborly(stage.sphere, 2));
            CHECK(epsilon(stage.sphere) == stage.epsilonScore);
            // never worse than the cyclic polytope on the same vertex count
            CHECK(stage.epsilonScore <=
                  static_cast<long long>(stage.n) * (stage.n - 2));
        }
    }
    SUBCASE("repeat runs are identical") {
        auto second = extension_search(cfg);
        REQUIRE(second.stageWinners.size() == first.stageWinners.size());
        for (std::size_t i = 0; i < first.stageWinners.size(); ++i) {
            CHECK(second.stageWinners[i].sphere == first.stageWinners[i].sphere);
            CHECK(second.stageWinners[i].epsilonScore ==
                  first.stageWinners[i].epsilonScore);
        }
    }
    SUBCASE("worker count does not change the result") {
        SearchConfig parallel = cfg;
        parallel.threads = 4;
        auto threaded = extension_search(parallel);
        REQUIRE(threaded.stageWinners.size() == first.stageWinners.size());
        for (std::size_t i = 0; i < first.stageWinners.size(); ++i)
            CHECK(threaded.stageWinners[i].sphere == first.stageWinners[i].sphere);
    }
    SUBCASE("bad configurations are rejected") {
        SearchConfig bad = cfg;
        bad.targetN = 7;
        CHECK_THROWS_AS(extension_search(bad), std::invalid_argument);
        bad = cfg;
        bad.samplesPerStep = 0;
        CHECK_THROWS_AS(extension_search(bad), std::invalid_argument);
    }
    SUBCASE("a zero time budget truncates with a flag") {
        SearchConfig starved = cfg;
        starved.budgetMs = 0;
        auto truncated = extension_search(starved);
        CHECK(truncated.truncated);
    }
}

TEST_CASE("screening reports") {
    SUBCASE("2-colorable cyclic polytope with a facet-covering edge witness") {
        auto C = cyclic_polytope(4, 13);
        auto report = screen(C);
        CHECK(report.twoColorable);
        CHECK(is_proper_coloring(C, report.coloring));
        REQUIRE(report.bipartiteCover.size() == static_cast<std::size_t>(C.facetCount()));
        for (int i = 0; i < C.facetCount(); ++i) {
            auto [a, b] = report.bipartiteCover[static_cast<std::size_t>(i)];
            CHECK(C.facets()[static_cast<std::size_t>(i)].contains(a));
            CHECK(C.facets()[static_cast<std::size_t>(i)].contains(b));
            CHECK(report.coloring[static_cast<std::size_t>(a)] !=
                  report.coloring[static_cast<std::size_t>(b)]);
        }
        CHECK(report.epsilonValue == 13 * 11);
    }
    SUBCASE("the 21-vertex sphere screens as a high-ratio non-2-colorable target") {
        auto report = screen(build_k21());
        CHECK_FALSE(report.twoColorable);
        CHECK(report.tau.value == 11);
        CHECK(report.ratio == doctest::Approx(11.0 / 21.0));
    }
}
