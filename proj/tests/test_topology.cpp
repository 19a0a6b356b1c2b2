#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "stw/constructions.hpp"
#include "stw/k21.hpp"
#include "stw/topology.hpp"

using namespace stw;

namespace {

FacetHypergraph make(std::vector<std::vector<int>> raw) {
    return FacetHypergraph::canonicalize(raw);
}

}  // namespace

TEST_CASE("pseudomanifold and connectivity checks") {
    for (int n = 6; n <= 10; ++n) {
        auto C = cyclic_polytope(4, n);
        CHECK(is_pure(C, 3));
        CHECK(is_pseudomanifold(C, 3));
        CHECK(is_connected(C));
    }

    SUBCASE("a dangling facet breaks the ridge condition") {
        auto dangling = make({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {1, 2, 4}});
        CHECK_FALSE(is_pseudomanifold(dangling, 2));
    }
    SUBCASE("disjoint spheres are not connected") {
        auto two = make({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                         {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}});
        CHECK(is_pseudomanifold(two, 2));
        CHECK_FALSE(is_connected(two));
    }
}

TEST_CASE("euler characteristics") {
    CHECK(euler_characteristic(icosahedron_boundary()) == 2);
    CHECK(euler_characteristic(cyclic_polytope(4, 9)) == 0);
    CHECK(euler_characteristic(build_k21()) == 0);
    CHECK(euler_characteristic(seven_vertex_torus()) == 0);
}

TEST_CASE("low-dimensional sphere recognition") {
    auto octahedron = cross_polytope_boundary(2).hypergraph;
    CHECK(is_sphere_lowdim(octahedron, 2));
    CHECK(is_sphere_lowdim(simplex_boundary(1), 1));
    CHECK(is_sphere_lowdim(simplex_boundary(0), 0));

    auto twoTriangles = make({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_sphere_lowdim(twoTriangles, 1));
    CHECK_FALSE(is_sphere_lowdim(seven_vertex_torus(), 2));
    CHECK_THROWS_AS(is_sphere_lowdim(cyclic_polytope(4, 7), 3),
                    std::invalid_argument);
}

TEST_CASE("closed 3-manifold certification") {
    CHECK(manifold_check_3d(cyclic_polytope(4, 8)));
    CHECK(manifold_check_3d(x_construction(3, 2).hypergraph));
    CHECK(manifold_check_3d(build_k21()));

    SUBCASE("a pinched vertex fails the link condition") {
        auto pinched = make({{0, 1, 2, 3}, {0, 4, 5, 6}});
        CHECK_FALSE(manifold_check_3d(pinched));
    }
}

TEST_CASE("neighborliness") {
    for (int n = 7; n <= 11; ++n) CHECK(is_k_neighborly(cyclic_polytope(4, n), 2));
    CHECK(is_k_neighborly(build_k21(), 2));
    for (int d = 1; d <= 4; ++d)
        CHECK(is_k_neighborly(simplex_boundary(d), d + 1));
    CHECK_FALSE(is_k_neighborly(ball_boundary(stacked_ball_path(4, 12)), 2));
}

TEST_CASE("face-count identities of neighborly 3-spheres") {
    CHECK(neighborly3_face_check(cyclic_polytope(4, 7)));
    auto K21 = build_k21();
    CHECK(neighborly3_face_check(K21));
    auto fv = f_vector(K21);
    CHECK(fv[2] == 378);
    CHECK(fv[3] == 189);
    CHECK_FALSE(neighborly3_face_check(ball_boundary(stacked_ball_path(4, 8))));
}

TEST_CASE("integer homology") {
    SUBCASE("boundary of the 4-simplex is a 3-sphere") {
        auto profile = homology(simplex_boundary(3));
        CHECK(profile.betti == std::vector<int>{0, 0, 0, 1});
        CHECK(profile.isSpherical(3));
    }
    SUBCASE("a 4-cycle is a circle") {
        auto profile = homology(make({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
        CHECK(profile.betti == std::vector<int>{0, 1});
    }
    SUBCASE("the 7-vertex torus has the torus profile") {
        auto profile = homology(seven_vertex_torus());
        CHECK(profile.betti == std::vector<int>{0, 2, 1});
        for (const auto& t : profile.torsion) CHECK(t.empty());
    }
    SUBCASE("the 21-vertex sphere has the 3-sphere profile") {
        CHECK(homology(build_k21()).isSpherical(3));
    }
    SUBCASE("face cap triggers an error, not a hang") {
        CHECK_THROWS_AS(homology(cyclic_polytope(4, 12), 10), std::runtime_error);
    }
}

TEST_CASE("projective plane homology has 2-torsion") {
    // the minimal 6-vertex triangulation (antipodal icosahedron quotient)
    auto rp2 = make({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                     {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
    auto profile = homology(rp2);
    CHECK(profile.betti == std::vector<int>{0, 0, 0});
    REQUIRE(profile.torsion.size() == 3);
    REQUIRE(profile.torsion[1].size() == 1);
    CHECK(profile.torsion[1][0] == 2);
}

TEST_CASE("invariant factors are stable under row and column permutations") {
    std::vector<std::vector<BigInt>> base{
        {2, 4, 4, 0}, {-6, 6, 12, 8}, {10, 4, 16, 2}, {0, 0, 6, 6}};
    auto reference = smith_invariant_factors(base);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::size_t> rp(base.size()), cp(base[0].size());
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        std::vector<std::vector<BigInt>> perm(base.size(),
                                              std::vector<BigInt>(base[0].size()));
        for (std::size_t r = 0; r < base.size(); ++r)
            for (std::size_t c = 0; c < base[0].size(); ++c)
                perm[r][c] = base[rp[r]][cp[c]];
        CHECK(smith_invariant_factors(perm) == reference);
    }
}

TEST_CASE("divisibility chain of invariant factors") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 2 + rng() % 4, cols = 2 + rng() % 4;
        std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long long>(rng() % 21) - 10;
        auto inv = smith_invariant_factors(m);
        for (std::size_t i = 1; i < inv.size(); ++i) CHECK(inv[i] % inv[i - 1] == 0);
    }
}
