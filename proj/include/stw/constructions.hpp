#ifndef STW_CONSTRUCTIONS_HPP
#define STW_CONSTRUCTIONS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "stw/hypergraph.hpp"

namespace stw {

/// Facet sequence Delta_1..Delta_m certifying stackedness: each facet after
/// the first is glued across a single boundary ridge of the union so far.
struct OrderedStackedBall {
    std::vector<Facet> facets;

    VertexSet vertexSupport() const {
        VertexSet s;
        for (const auto& f : facets) s |= f.set();
        return s;
    }
};

/// Bookkeeping attached to built complexes.
struct ConstructionMetadata {
    std::optional<int> apex;
    std::optional<Facet> baseFacet;
    std::vector<VertexSet> partition;  // V_1..V_k for Y_k
    // Facets of a gadget that originate from the embedded K_21 copy.
    std::vector<Facet> k21CopyFacets;
};

/// Boundary of the (d+1)-simplex: all (d+1)-subsets of a (d+2)-set.
FacetHypergraph simplex_boundary(int d);

struct CrossPolytope {
    FacetHypergraph hypergraph;
    // antipode of vertex v; pairs are (2i, 2i+1), so v ^ 1
    std::function<int(int)> antipodal;
};

/// Boundary of the (d+1)-dimensional cross polytope as the (d+1)-fold join
/// of S^0; vertices paired (2i, 2i+1).
CrossPolytope cross_polytope_boundary(int d);

/// Facets of the cyclic d-polytope on n vertices by Gale's evenness
/// criterion, 0-based labels.
FacetHypergraph cyclic_polytope(int d, int n);

/// Consecutive-interval stacked ball: facets {i..i+dBall+1} of width dBall+1.
OrderedStackedBall stacked_ball_path(int dBall, int n);

/// Check the prefix-gluing condition of the given facet order: each new
/// facet brings exactly one new vertex and meets the union so far in a
/// single ridge lying on the current boundary.
bool validate_stacked_ball(const OrderedStackedBall& ball);

/// Boundary facets of a pure ball given by its top-dimensional simplices:
/// the ridges lying in exactly one facet. Errors when a ridge lies in three
/// or more facets.
FacetHypergraph ball_boundary(const std::vector<Facet>& ballFacets);
FacetHypergraph ball_boundary(const OrderedStackedBall& ball);

/// Connected sum: drop f1 and f2, identify f2 with f1 via psi, append K2's
/// remaining vertices after K1's label range (ascending original order).
/// psi maps each vertex of f1 to a vertex of f2.
FacetHypergraph connected_sum(const FacetHypergraph& K1, const Facet& f1,
                              const FacetHypergraph& K2, const Facet& f2,
                              const std::vector<std::pair<int, int>>& psi);

/// Canonical connected sum: psi maps ascending order to ascending order.
FacetHypergraph connected_sum(const FacetHypergraph& K1, const Facet& f1,
                              const FacetHypergraph& K2, const Facet& f2);

struct ComplexWithMetadata {
    FacetHypergraph hypergraph;
    ConstructionMetadata meta;
};

/// Cross polytope boundary glued to a simplex boundary along canonical
/// facets; carries apex (simplex vertex opposite the glued facet) and base
/// facet (antipodal in C^d to the glued facet). 2d+3 vertices.
ComplexWithMetadata cd_plus(int d);

/// X^d_k: X^d_1 = S^d with apex 0; each step glues cd_plus by its base
/// facet onto the lexicographically smallest facet containing the current
/// apex. k(d+2) vertices.
ComplexWithMetadata x_construction(int d, int k);

/// Single element extension of a neighborly 3-sphere: remove the facets of
/// the spanning stacked ball B, cone its boundary from the fresh vertex w.
FacetHypergraph single_element_extension(const FacetHypergraph& K,
                                         const OrderedStackedBall& B, int w);

/// C_K: C^3 glued to K_21 along ghat; 25 vertices, base facet antipodal in
/// C^3 to the glued facet; records which facets come from the K_21 copy.
ComplexWithMetadata ck_gadget(const FacetHypergraph& K21, const Facet& ghat);

/// Y_k: Y_1 = K_21 with base facet ghat; each step glues a fresh C_K copy
/// by its base facet and picks the new base among the copy's cross-polytope
/// facets. 21k vertices, with the per-step vertex partition recorded.
ComplexWithMetadata y_construction(const FacetHypergraph& K21, const Facet& ghat,
                                   int k);

/// The boundary of the regular icosahedron (12 vertices, 20 triangles).
FacetHypergraph icosahedron_boundary();

/// The 7-vertex triangulation of the torus (14 triangles).
FacetHypergraph seven_vertex_torus();

}  // namespace stw

#endif  // STW_CONSTRUCTIONS_HPP
