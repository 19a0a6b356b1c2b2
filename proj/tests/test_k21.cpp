#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stw/hypergraph.hpp"
#include "stw/io.hpp"
#include "stw/k21.hpp"
#include "stw/solvers.hpp"
#include "stw/topology.hpp"
#include "oracles.hpp"

using namespace stw;
using stw::testing::binom;

TEST_CASE("extension script loads and is shaped as expected") {
    auto script = load_extension_script();
    CHECK(script.start == cyclic_polytope(4, 7));
    REQUIRE(script.steps.size() == 14);
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        CHECK(script.steps[i].first == static_cast<int>(i) + 7);
        CHECK(script.steps[i].second.facets.size() == i + 4);  // sizes 4..17
        CHECK(validate_stacked_ball(script.steps[i].second));
    }
    CHECK(script.removedFacet == Facet(std::vector<int>{2, 3, 4, 5}));
    CHECK(script.sampleTransversal ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 9, 10, 16, 17, 20});
}

TEST_CASE("a tampered script fails its checksum") {
    std::ifstream in(default_data_dir() + "/k21_extension_script.txt");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string tampered = buf.str() + "\n# extra\n";
    std::string path = "tampered_script.txt";
    std::ofstream(path) << tampered;
    CHECK_THROWS_WITH_AS(load_extension_script(path),
                         doctest::Contains("checksum"), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("replay reaches the 21-vertex sphere") {
    auto script = load_extension_script();
    auto replay = build_k21(script);
    CHECK(replay.k21.vertexCount() == 21);
    CHECK(replay.k21.facetCount() == 189);

    SUBCASE("stage facet counts follow the neighborly face-count law") {
        REQUIRE(replay.stageFacetCount.size() == 14);
        for (std::size_t i = 0; i < 14; ++i) {
            long long n = static_cast<long long>(i) + 8;
            CHECK(replay.stageFacetCount[i] == binom(n - 1, 2) - 1);
        }
    }
    SUBCASE("edge-degree score at the 11-vertex stage") {
        CHECK(replay.stageEpsilon[3] == 74);
    }
    SUBCASE("replay is deterministic") {
        CHECK(build_k21(script).k21 == replay.k21);
        std::stringstream a, b;
        writeFacetsText(a, build_k21(script).k21);
        writeFacetsText(b, replay.k21);
        CHECK(a.str() == b.str());
    }
    SUBCASE("every stage is a 2-neighborly closed 3-manifold") {
        FacetHypergraph K = script.start;
        for (const auto& [stage, ball] : script.steps) {
            K = single_element_extension(K, ball, stage);
            CHECK(manifold_check_3d(K));
            CHECK(is_k_neighborly(K, 2));
        }
    }
}

TEST_CASE("a corrupted ball fails with the stage named") {
    auto script = load_extension_script();
    script.steps[5].second.facets.pop_back();
    CHECK_THROWS_WITH_AS(build_k21(script), doctest::Contains("stage 12"),
                         std::runtime_error);
}

TEST_CASE("vertex links of the 21-vertex sphere") {
    auto K21 = build_k21();
    for (int v = 0; v < 21; ++v) {
        auto lk = link(K21, Facet(std::vector<int>{v}));
        CHECK(is_sphere_lowdim(lk.hypergraph, 2));
        auto fv = f_vector(lk.hypergraph);
        CHECK(fv[0] == 20);
        CHECK(fv[1] == 54);  // 3n - 6 at n = 21, minus the center's edges
        CHECK(fv[2] == 36);  // 2n - 4 at n = 21, minus the center's triangles
    }
}

TEST_CASE("facet removal yields the 188-facet hypergraph") {
    auto script = load_extension_script();
    auto K21 = build_k21(script).k21;
    CHECK(K21.hasFacet(script.removedFacet));
    auto N = n21(K21, script.removedFacet);
    CHECK(N.facetCount() == 188);
    CHECK(N.vertexCount() == 21);
    CHECK_THROWS_WITH_AS(n21(N, script.removedFacet), doctest::Contains("absent"),
                         std::runtime_error);
}

TEST_CASE("full verification report passes") {
    auto script = load_extension_script();
    auto report = verify_k21(script);
    for (const auto& check : report.checks) {
        INFO(check.name, " ", check.detail);
        CHECK(check.pass);
    }
    CHECK(report.allPass());
    CHECK(report.tauN21.value == 11);
    CHECK(report.tauN21.status == CertificateStatus::Optimal);
    CHECK(report.tauK21.value == 11);
    // headline ratio strictly above one half
    CHECK(2 * report.tauN21.value > 21);
}
