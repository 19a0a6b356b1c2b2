#ifndef STW_HYPERGRAPH_HPP
#define STW_HYPERGRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stw/vertex_set.hpp"

namespace stw {

/// A facet (hyperedge): a nonempty vertex set, canonically the strictly
/// ascending sequence of its labels.
class Facet {
public:
    Facet() = default;
    explicit Facet(VertexSet s) : set_(s) {}
    explicit Facet(const std::vector<int>& verts);

    const VertexSet& set() const { return set_; }
    std::vector<int> vertices() const { return set_.toVertices(); }
    int size() const { return set_.size(); }
    bool contains(int v) const { return set_.contains(v); }

    friend bool operator==(const Facet&, const Facet&) = default;
    friend bool operator<(const Facet& a, const Facet& b) {
        return lexLess(a.set_, b.set_);
    }

private:
    VertexSet set_;
};

/// Face counts by dimension; counts[i] is the number of (i-1)-dimensional
/// faces, so counts[0] == 1 for the empty face and counts[1] == n.
struct FVector {
    std::vector<long long> counts;

    int dim() const { return static_cast<int>(counts.size()) - 2; }
    long long operator[](int d) const { return counts[d + 1]; }
    long long eulerCharacteristic() const;
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// Degrees of all 2-element faces, plus epsilon = the sum of the n largest
/// degrees (all of them when the complex has fewer than n edges).
struct EdgeDegreeProfile {
    std::map<std::pair<int, int>, long long> degrees;
    long long epsilon = 0;
};

/// A finite vertex set [0, n) with an antichain of facets covering it,
/// stored sorted lexicographically. Immutable after construction.
class FacetHypergraph {
public:
    enum class SubsetPolicy { Drop, Strict };

    /// Canonicalize a raw facet family: merge duplicates, drop (or reject,
    /// in strict mode) sets contained in another, sort. With denseRelabel
    /// the vertices are renumbered onto [0, n); otherwise every label below
    /// the maximum must be covered.
    static FacetHypergraph canonicalize(const std::vector<std::vector<int>>& rawFacets,
                                        bool denseRelabel = false,
                                        SubsetPolicy policy = SubsetPolicy::Drop);
    static FacetHypergraph canonicalize(std::vector<Facet> facets,
                                        bool denseRelabel = false,
                                        SubsetPolicy policy = SubsetPolicy::Drop);

    int vertexCount() const { return n_; }
    const std::vector<Facet>& facets() const { return facets_; }
    int facetCount() const { return static_cast<int>(facets_.size()); }
    VertexSet vertexMask() const;

    bool hasFacet(const Facet& f) const;
    /// True iff f is a face, i.e. a subset of some facet.
    bool hasFace(const VertexSet& f) const;
    /// Size of the largest facet minus one.
    int dim() const;
    bool isUniform() const;

    friend bool operator==(const FacetHypergraph&, const FacetHypergraph&) = default;

private:
    FacetHypergraph(int n, std::vector<Facet> facets)
        : n_(n), facets_(std::move(facets)) {}

    int n_ = 0;
    std::vector<Facet> facets_;
};

/// Result of an operation that renumbers vertices densely: `labels[i]` is
/// the original label of the new vertex i. Bookkeeping (Y_k partitions)
/// recovers original labels through this map.
struct RelabeledHypergraph {
    FacetHypergraph hypergraph;
    std::vector<int> labels;
    bool empty = false;  // no facet survived (induced subcomplex only)
};

FVector f_vector(const FacetHypergraph& K);

/// Facets of the link of `face`, densely relabeled with the original labels
/// returned alongside. Errors if `face` is not a face of K.
RelabeledHypergraph link(const FacetHypergraph& K, const Facet& face);

/// Join: all unions of facet pairs. Vertex ranges must be disjoint, so the
/// caller offsets H2 by H1.n; `offsetJoin` does exactly that.
FacetHypergraph join(const FacetHypergraph& H1, const FacetHypergraph& H2);
FacetHypergraph offsetJoin(const FacetHypergraph& H1, const FacetHypergraph& H2);

/// Facets fully contained in S, densely relabeled. When no facet survives
/// the result carries empty=true instead of erroring.
RelabeledHypergraph induced(const FacetHypergraph& K, const VertexSet& S);

EdgeDegreeProfile edge_degrees(const FacetHypergraph& K);
long long epsilon(const FacetHypergraph& K);

}  // namespace stw

#endif  // STW_HYPERGRAPH_HPP
