#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "stw/constructions.hpp"
#include "stw/hypergraph.hpp"
#include "stw/k21.hpp"
#include "stw/solvers.hpp"
#include "oracles.hpp"

using namespace stw;
using stw::testing::brute_force_tau;

namespace {

FacetHypergraph make(std::vector<std::vector<int>> raw) {
    return FacetHypergraph::canonicalize(raw);
}

FacetHypergraph oddCycle(int len) {
    std::vector<std::vector<int>> raw;
    for (int i = 0; i < len; ++i) raw.push_back({i, (i + 1) % len});
    return FacetHypergraph::canonicalize(raw);
}

}  // namespace

TEST_CASE("transversal and independence membership predicates") {
    auto N = n21();
    CHECK(is_transversal(
        N, VertexSet::fromVertices({0, 1, 2, 3, 4, 5, 9, 10, 16, 17, 20})));
    CHECK_FALSE(is_transversal(N, VertexSet{}));
    CHECK(is_transversal(N, N.vertexMask()));

    auto S = simplex_boundary(2);
    VertexSet three = VertexSet::fromVertices({0, 1, 2});
    CHECK_FALSE(is_independent(S, three));
    CHECK(is_independent(S, VertexSet::fromVertices({0, 1})));
}

TEST_CASE("minimum transversal on closed-form families") {
    CHECK(transversal_number(cyclic_polytope(4, 7)).value == 3);
    for (int n = 5; n <= 12; ++n)
        CHECK(transversal_number(cyclic_polytope(3, n)).value == 2);
    for (int k = 1; k <= 3; ++k) {
        int n = 6 * k;
        auto sphere = ball_boundary(stacked_ball_path(4, n));
        CHECK(transversal_number(sphere).value == 2 * n / 6);
    }
}

TEST_CASE("solver certificates are internally consistent") {
    for (const auto& H : {cyclic_polytope(4, 9), cyclic_polytope(5, 10),
                          x_construction(2, 3).hypergraph}) {
        auto cert = transversal_number(H);
        CHECK(cert.status == CertificateStatus::Optimal);
        CHECK(static_cast<int>(cert.witness.size()) == cert.value);
        CHECK(is_transversal(H, VertexSet::fromVertices(cert.witness)));

        auto alpha = independence_number(H);
        CHECK(alpha.value == H.vertexCount() - cert.value);
        CHECK(is_independent(H, VertexSet::fromVertices(alpha.witness)));
    }
}

TEST_CASE("branch and bound agrees with exhaustive search on random instances") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 10);
        int m = 3 + static_cast<int>(rng() % 12);
        std::vector<std::vector<int>> raw;
        for (int i = 0; i < m; ++i) {
            std::vector<int> f;
            int size = 2 + static_cast<int>(rng() % 3);
            while (static_cast<int>(f.size()) < size) {
                int v = static_cast<int>(rng() % n);
                if (std::find(f.begin(), f.end(), v) == f.end()) f.push_back(v);
            }
            raw.push_back(f);
        }
        for (int v = 0; v < n; ++v) raw.push_back({v, (v + 1) % n});
        auto H = FacetHypergraph::canonicalize(raw);
        CHECK(transversal_number(H).value == brute_force_tau(H));
    }
}

TEST_CASE("tiny budget degrades to a flagged upper bound") {
    auto H = cyclic_polytope(4, 12);
    auto cert = transversal_number(H, Budget{1, 600'000});
    CHECK(cert.status == CertificateStatus::UpperBoundOnly);
    CHECK(is_transversal(H, VertexSet::fromVertices(cert.witness)));
    CHECK(cert.value >= transversal_number(H).value);
}

TEST_CASE("independence examples") {
    CHECK(independence_number(n21()).value == 10);
    for (int d = 2; d <= 4; ++d)
        CHECK(independence_number(simplex_boundary(d)).value == d);
    auto one = make({{0, 1, 2, 3, 4}});
    CHECK(independence_number(one).value == 4);
}

TEST_CASE("two-coloring") {
    SUBCASE("cyclic polytopes in dimension at least 3") {
        for (int d = 3; d <= 6; ++d) {
            for (int n = d + 2; n <= 12; ++n) {
                auto C = cyclic_polytope(d, n);
                auto col = two_colorable(C);
                REQUIRE(col.has_value());
                CHECK(is_proper_coloring(C, *col));
                // the alternating coloring is also proper
                std::vector<int> parity(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v) parity[static_cast<std::size_t>(v)] = v % 2;
                CHECK(is_proper_coloring(C, parity));
            }
        }
    }
    SUBCASE("a single facet of size 2 or more") {
        auto col = two_colorable(make({{0, 1, 2}}));
        REQUIRE(col.has_value());
        CHECK(is_proper_coloring(make({{0, 1, 2}}), *col));
    }
    SUBCASE("a singleton facet cannot be properly colored") {
        CHECK_FALSE(two_colorable(make({{0}, {1, 2}})).has_value());
    }
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(icosahedron_boundary()).value == 2);
    CHECK(chromatic_number(oddCycle(5)).value == 3);
    CHECK(chromatic_number(oddCycle(9)).value == 3);
    auto chi = chromatic_number(cyclic_polytope(4, 8));
    CHECK(chi.value == 2);
    CHECK(is_proper_coloring(cyclic_polytope(4, 8), chi.witness));
}

TEST_CASE("iterated maximum independent set coloring") {
    auto cert = greedy_chromatic(simplex_boundary(3));
    CHECK(cert.value == 2);
    CHECK(is_proper_coloring(simplex_boundary(3), cert.witness));

    auto K21 = build_k21();
    auto k21cert = greedy_chromatic(K21);
    CHECK(k21cert.value == 3);
    CHECK(is_proper_coloring(K21, k21cert.witness));
}

TEST_CASE("random independent sets") {
    auto H = cyclic_polytope(4, 12);

    SUBCASE("always independent across seeds") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            AlterationParams params;
            params.seed = seed;
            auto S = random_independent_set(H, params);
            CHECK(is_independent(H, S));
        }
    }
    SUBCASE("p = 0 samples nothing") {
        AlterationParams params;
        params.p = 0.0;
        CHECK(random_independent_set(H, params).size() == 0);
    }
    SUBCASE("non-uniform input is rejected") {
        auto mixed = make({{0, 1, 2, 3}, {3, 4}});
        AlterationParams params;
        CHECK_THROWS_AS(random_independent_set(mixed, params), std::invalid_argument);
    }
}

TEST_CASE("sampling constants") {
    // beta_{d,c} = d / ((1+d)^{(d+1)/d} c^{1/d})
    CHECK(alteration_beta(3, 4.0) ==
          doctest::Approx(3.0 / (std::pow(4.0, 4.0 / 3.0) * std::pow(4.0, 1.0 / 3.0))));
    AlterationParams params;  // d=3, c=4, k=2
    CHECK(alteration_default_p(params, 1000) ==
          doctest::Approx(std::pow(4.0 * 4.0 * 1000.0, -1.0 / 3.0)));
}

TEST_CASE("iteration counts against the closed-form bound") {
    auto r = iteration_bound(1.0, 0.5, 100.0);
    CHECK(r.bound == doctest::Approx(21.0));
    CHECK(r.reached);
    CHECK(r.steps <= 21);

    CHECK(iteration_bound(1.0, 0.5, 0.5).steps == 0);

    // h collapses to zero at or below beta^{1/(1-t)}
    auto collapse = iteration_bound(2.0, 0.5, 3.9);  // threshold 4
    CHECK(collapse.steps <= 1);

    CHECK_THROWS_AS(iteration_bound(1.0, 1.5, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(iteration_bound(-1.0, 0.5, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(iteration_bound(1.0, 0.5,
                                    std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("isomorphism testing") {
    SUBCASE("random relabelings are recovered") {
        std::mt19937_64 rng(3);
        auto H = cyclic_polytope(4, 9);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> perm(static_cast<std::size_t>(H.vertexCount()));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::vector<int>> raw;
            for (const auto& f : H.facets()) {
                std::vector<int> verts;
                for (int v : f.vertices())
                    verts.push_back(perm[static_cast<std::size_t>(v)]);
                raw.push_back(verts);
            }
            auto H2 = FacetHypergraph::canonicalize(raw);
            auto mapping = isomorphic(H, H2);
            REQUIRE(mapping.has_value());
            // the returned bijection maps facets onto facets
            for (const auto& f : H.facets()) {
                VertexSet image;
                for (int v : f.vertices())
                    image.insert((*mapping)[static_cast<std::size_t>(v)]);
                CHECK(H2.hasFacet(Facet(image)));
            }
        }
    }
    SUBCASE("different vertex counts are never isomorphic") {
        CHECK_FALSE(isomorphic(cyclic_polytope(4, 7), cyclic_polytope(4, 8)));
    }
    SUBCASE("same counts, different structure") {
        auto path = make({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        auto star = make({{0, 1}, {0, 2}, {0, 3}, {1, 2}});
        CHECK_FALSE(isomorphic(path, star));
    }
}

TEST_CASE("seed derivation separates streams") {
    CHECK(derive_seed(1, 2, 3, 4) == derive_seed(1, 2, 3, 4));
    CHECK(derive_seed(1, 2, 3, 4) != derive_seed(1, 2, 3, 5));
    CHECK(derive_seed(1, 2, 3, 4) != derive_seed(1, 2, 4, 3));
    CHECK(derive_seed(1, 2, 3, 4) != derive_seed(2, 2, 3, 4));
}
