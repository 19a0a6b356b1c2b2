#include "stw/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace stw {

Facet::Facet(const std::vector<int>& verts) {
    for (int v : verts) {
        if (v < 0) throw std::invalid_argument("negative vertex label");
        if (v >= VertexSet::kCapacity)
            throw std::invalid_argument("vertex label exceeds capacity " +
                                        std::to_string(VertexSet::kCapacity));
        set_.insert(v);
    }
    if (set_.empty()) throw std::invalid_argument("empty facet");
}

long long FVector::eulerCharacteristic() const {
    long long chi = 0;
    // skip the empty face; alternate starting from dimension 0
    for (std::size_t i = 1; i < counts.size(); ++i)
        chi += (i % 2 ? counts[i] : -counts[i]);
    return chi;
}

FacetHypergraph FacetHypergraph::canonicalize(
    const std::vector<std::vector<int>>& rawFacets, bool denseRelabel,
    SubsetPolicy policy) {
    std::vector<Facet> facets;
    facets.reserve(rawFacets.size());
    for (const auto& f : rawFacets) facets.emplace_back(f);
    return canonicalize(std::move(facets), denseRelabel, policy);
}

FacetHypergraph FacetHypergraph::canonicalize(std::vector<Facet> facets,
                                              bool denseRelabel,
                                              SubsetPolicy policy) {
    if (facets.empty()) throw std::invalid_argument("no facets");

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // drop sets contained in another (maximality); strict mode errors instead
    std::vector<Facet> maximal;
    for (const auto& f : facets) {
        bool contained = false;
        for (const auto& g : facets) {
            if (&f != &g && f.set().isSubsetOf(g.set())) {
                contained = true;
                break;
            }
        }
        if (!contained) {
            maximal.push_back(f);
        } else if (policy == SubsetPolicy::Strict) {
            throw std::invalid_argument("non-maximal input set in strict mode");
        }
    }

    VertexSet covered;
    for (const auto& f : maximal) covered |= f.set();

    if (denseRelabel) {
        std::vector<int> map(VertexSet::kCapacity, -1);
        int next = 0;
        for (int v = covered.first(); v >= 0; v = covered.next(v)) map[v] = next++;
        std::vector<Facet> relabeled;
        relabeled.reserve(maximal.size());
        for (const auto& f : maximal) {
            VertexSet s;
            for (int v = f.set().first(); v >= 0; v = f.set().next(v))
                s.insert(map[v]);
            relabeled.emplace_back(s);
        }
        std::sort(relabeled.begin(), relabeled.end());
        return FacetHypergraph(next, std::move(relabeled));
    }

    int n = 0;
    for (int v = covered.first(); v >= 0; v = covered.next(v)) n = v + 1;
    for (int v = 0; v < n; ++v)
        if (!covered.contains(v))
            throw std::invalid_argument("uncovered vertex " + std::to_string(v));
    return FacetHypergraph(n, std::move(maximal));
}

VertexSet FacetHypergraph::vertexMask() const {
    VertexSet s;
    for (int v = 0; v < n_; ++v) s.insert(v);
    return s;
}

bool FacetHypergraph::hasFacet(const Facet& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
}

bool FacetHypergraph::hasFace(const VertexSet& f) const {
    for (const auto& g : facets_)
        if (f.isSubsetOf(g.set())) return true;
    return false;
}

int FacetHypergraph::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

bool FacetHypergraph::isUniform() const {
    for (const auto& f : facets_)
        if (f.size() != facets_.front().size()) return false;
    return true;
}

namespace {

void enumerateSubsets(const std::vector<int>& verts, std::size_t idx,
                      VertexSet current,
                      std::vector<std::unordered_set<VertexSet, VertexSetHash>>& byDim) {
    if (idx == verts.size()) {
        int sz = current.size();
        if (sz > 0) byDim[static_cast<std::size_t>(sz - 1)].insert(current);
        return;
    }
    enumerateSubsets(verts, idx + 1, current, byDim);
    current.insert(verts[idx]);
    enumerateSubsets(verts, idx + 1, current, byDim);
}

}  // namespace

FVector f_vector(const FacetHypergraph& K) {
    int d = K.dim();
    std::vector<std::unordered_set<VertexSet, VertexSetHash>> byDim(
        static_cast<std::size_t>(d + 1));
    for (const auto& f : K.facets())
        enumerateSubsets(f.vertices(), 0, VertexSet{}, byDim);

    FVector fv;
    fv.counts.push_back(1);  // the empty face
    for (const auto& s : byDim)
        fv.counts.push_back(static_cast<long long>(s.size()));
    return fv;
}

RelabeledHypergraph link(const FacetHypergraph& K, const Facet& face) {
    if (!K.hasFace(face.set()))
        throw std::invalid_argument("link: not a face of the complex");

    std::vector<Facet> linkFacets;
    for (const auto& g : K.facets())
        if (face.set().isSubsetOf(g.set()))
            linkFacets.emplace_back(g.set() - face.set());

    VertexSet support;
    for (const auto& f : linkFacets) support |= f.set();
    std::vector<int> labels = support.toVertices();
    std::vector<int> map(VertexSet::kCapacity, -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        map[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);

    std::vector<std::vector<int>> raw;
    raw.reserve(linkFacets.size());
    for (const auto& f : linkFacets) {
        std::vector<int> verts;
        for (int v : f.vertices()) verts.push_back(map[static_cast<std::size_t>(v)]);
        raw.push_back(std::move(verts));
    }
    return {FacetHypergraph::canonicalize(raw), std::move(labels), false};
}

FacetHypergraph join(const FacetHypergraph& H1, const FacetHypergraph& H2) {
    VertexSet v1 = H1.vertexMask();
    for (const auto& g : H2.facets())
        if (v1.intersects(g.set()))
            throw std::invalid_argument("join: overlapping vertex labels");

    std::vector<Facet> out;
    out.reserve(H1.facets().size() * H2.facets().size());
    for (const auto& f : H1.facets())
        for (const auto& g : H2.facets())
            out.emplace_back(f.set() | g.set());
    return FacetHypergraph::canonicalize(std::move(out));
}

FacetHypergraph offsetJoin(const FacetHypergraph& H1, const FacetHypergraph& H2) {
    int off = H1.vertexCount();
    std::vector<Facet> out;
    out.reserve(H1.facets().size() * H2.facets().size());
    for (const auto& f : H1.facets()) {
        for (const auto& g : H2.facets()) {
            VertexSet s = f.set();
            for (int v : g.vertices()) s.insert(v + off);
            out.emplace_back(s);
        }
    }
    return FacetHypergraph::canonicalize(std::move(out));
}

RelabeledHypergraph induced(const FacetHypergraph& K, const VertexSet& S) {
    std::vector<Facet> kept;
    for (const auto& f : K.facets())
        if (f.set().isSubsetOf(S)) kept.push_back(f);

    if (kept.empty()) {
        // no facet survives: flag rather than error
        std::vector<int> labels;
        std::vector<Facet> dummy;
        return {FacetHypergraph::canonicalize(
                    std::vector<std::vector<int>>{{0}}, true),
                {}, true};
    }

    VertexSet support;
    for (const auto& f : kept) support |= f.set();
    std::vector<int> labels = support.toVertices();
    std::vector<int> map(VertexSet::kCapacity, -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        map[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);

    std::vector<std::vector<int>> raw;
    raw.reserve(kept.size());
    for (const auto& f : kept) {
        std::vector<int> verts;
        for (int v : f.vertices()) verts.push_back(map[static_cast<std::size_t>(v)]);
        raw.push_back(std::move(verts));
    }
    return {FacetHypergraph::canonicalize(raw), std::move(labels), false};
}

EdgeDegreeProfile edge_degrees(const FacetHypergraph& K) {
    EdgeDegreeProfile profile;
    for (const auto& f : K.facets()) {
        std::vector<int> verts = f.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                ++profile.degrees[{verts[i], verts[j]}];
    }
    std::vector<long long> degs;
    degs.reserve(profile.degrees.size());
    for (const auto& [e, d] : profile.degrees) degs.push_back(d);
    std::sort(degs.begin(), degs.end(), std::greater<>());
    std::size_t take = std::min<std::size_t>(degs.size(),
                                             static_cast<std::size_t>(K.vertexCount()));
    for (std::size_t i = 0; i < take; ++i) profile.epsilon += degs[i];
    return profile;
}

long long epsilon(const FacetHypergraph& K) { return edge_degrees(K).epsilon; }

}  // namespace stw
