#ifndef STW_TOPOLOGY_HPP
#define STW_TOPOLOGY_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stw/hypergraph.hpp"

namespace stw {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced integer homology: per dimension a betti rank and the torsion
/// coefficients (invariant factors > 1, each dividing the next).
struct HomologyProfile {
    std::vector<int> betti;                     // index = dimension
    std::vector<std::vector<BigInt>> torsion;   // index = dimension

    bool isSpherical(int d) const;  // reduced homology of S^d
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

bool is_pure(const FacetHypergraph& K, int d);

/// Every ridge ((d-1)-face of a facet) lies in exactly two facets.
bool is_pseudomanifold(const FacetHypergraph& K, int d);

/// Facet-ridge graph connectivity.
bool is_connected(const FacetHypergraph& K);

long long euler_characteristic(const FacetHypergraph& K);

/// d=0: two points; d=1: a single cycle; d=2: connected, chi=2, every edge
/// in exactly two triangles, every vertex link a single cycle.
bool is_sphere_lowdim(const FacetHypergraph& K, int d);

/// Closed-3-manifold certificate: pure, pseudomanifold, connected, chi=0,
/// every vertex link a 2-sphere. Not full 3-sphere recognition.
bool manifold_check_3d(const FacetHypergraph& K);

/// Every k-subset of the vertex set is a face.
bool is_k_neighborly(const FacetHypergraph& K, int k);

/// Dehn-Sommerville face counts of a neighborly 3-sphere:
/// f_2 = 2 C(f_0 - 1, 2) - 2 and f_3 = C(f_0 - 1, 2) - 1.
bool neighborly3_face_check(const FacetHypergraph& K);

/// Reduced simplicial homology with integer coefficients via Smith normal
/// form of the boundary matrices. Errors when the face count exceeds the
/// cap (reported in the message).
HomologyProfile homology(const FacetHypergraph& K, std::size_t faceCap = 20000);

/// Smith normal form invariant factors (diagonal, each dividing the next)
/// of an integer matrix; exposed for the order-independence tests.
std::vector<BigInt> smith_invariant_factors(std::vector<std::vector<BigInt>> mat);

}  // namespace stw

#endif  // STW_TOPOLOGY_HPP
