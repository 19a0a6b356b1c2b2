#include "stw/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace stw {

FacetHypergraph simplex_boundary(int d) {
    if (d < 0) throw std::invalid_argument("simplex_boundary: d < 0");
    int n = d + 2;
    std::vector<std::vector<int>> raw;
    for (int omit = 0; omit < n; ++omit) {
        std::vector<int> f;
        for (int v = 0; v < n; ++v)
            if (v != omit) f.push_back(v);
        raw.push_back(std::move(f));
    }
    return FacetHypergraph::canonicalize(raw);
}

CrossPolytope cross_polytope_boundary(int d) {
    if (d < 0) throw std::invalid_argument("cross_polytope_boundary: d < 0");
    FacetHypergraph H = simplex_boundary(0);  // S^0 = two singleton facets
    for (int i = 1; i <= d; ++i) H = offsetJoin(H, simplex_boundary(0));
    return {std::move(H), [](int v) { return v ^ 1; }};
}

namespace {

// Gale's evenness criterion: a d-subset of [0, n) is a facet iff every
// maximal run of consecutive chosen elements that touches neither end has
// even length. DFS over positions, pruning as soon as an odd interior run
// closes.
void galeDfs(int n, int d, int pos, int remaining, int runStart,
             std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (remaining > n - pos) return;
    if (pos == n) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    // skip pos: closes any open run
    bool canSkip = true;
    if (runStart >= 0 && runStart > 0) {
        int runLen = pos - runStart;
        if (runLen % 2 != 0) canSkip = false;  // odd interior run
    }
    if (canSkip) galeDfs(n, d, pos + 1, remaining, -1, current, out);
    // take pos
    if (remaining > 0) {
        current.push_back(pos);
        galeDfs(n, d, pos + 1, remaining - 1, runStart >= 0 ? runStart : pos,
                current, out);
        current.pop_back();
    }
}

}  // namespace

FacetHypergraph cyclic_polytope(int d, int n) {
    if (d < 2) throw std::invalid_argument("cyclic_polytope: d < 2");
    if (n < d + 1) throw std::invalid_argument("cyclic_polytope: n < d+1");
    std::vector<std::vector<int>> raw;
    std::vector<int> current;
    galeDfs(n, d, 0, d, -1, current, raw);
    return FacetHypergraph::canonicalize(raw);
}

OrderedStackedBall stacked_ball_path(int dBall, int n) {
    if (dBall < 1) throw std::invalid_argument("stacked_ball_path: dBall < 1");
    if (n < dBall + 1) throw std::invalid_argument("stacked_ball_path: n < dBall+1");
    OrderedStackedBall ball;
    for (int i = 0; i + dBall < n; ++i) {
        std::vector<int> verts;
        for (int v = i; v <= i + dBall; ++v) verts.push_back(v);
        ball.facets.emplace_back(verts);
    }
    return ball;
}

bool validate_stacked_ball(const OrderedStackedBall& ball) {
    if (ball.facets.empty()) return false;
    int size = ball.facets.front().size();
    for (const auto& f : ball.facets)
        if (f.size() != size)
            throw std::invalid_argument("validate_stacked_ball: non-uniform sizes");
    if (size < 2) return false;

    std::unordered_map<VertexSet, int, VertexSetHash> ridgeCount;
    auto addRidges = [&](const Facet& f) {
        for (int v : f.vertices()) {
            VertexSet r = f.set();
            r.erase(v);
            ++ridgeCount[r];
        }
    };

    VertexSet support = ball.facets.front().set();
    addRidges(ball.facets.front());

    for (std::size_t k = 1; k < ball.facets.size(); ++k) {
        const Facet& delta = ball.facets[k];
        VertexSet fresh = delta.set() - support;
        if (fresh.size() != 1) return false;
        VertexSet ridge = delta.set() - fresh;
        // the shared ridge must lie on the boundary of the union so far
        auto it = ridgeCount.find(ridge);
        if (it == ridgeCount.end() || it->second != 1) return false;
        support |= delta.set();
        addRidges(delta);
    }
    return true;
}

FacetHypergraph ball_boundary(const std::vector<Facet>& ballFacets) {
    if (ballFacets.empty()) throw std::invalid_argument("ball_boundary: no facets");
    int size = ballFacets.front().size();
    for (const auto& f : ballFacets)
        if (f.size() != size)
            throw std::invalid_argument("ball_boundary: non-uniform sizes");

    std::unordered_map<VertexSet, int, VertexSetHash> ridgeCount;
    for (const auto& f : ballFacets) {
        for (int v : f.vertices()) {
            VertexSet r = f.set();
            r.erase(v);
            int c = ++ridgeCount[r];
            if (c >= 3)
                throw std::invalid_argument("ball_boundary: not a manifold-like ball");
        }
    }
    std::vector<Facet> boundary;
    for (const auto& [ridge, count] : ridgeCount)
        if (count == 1) boundary.emplace_back(ridge);
    return FacetHypergraph::canonicalize(std::move(boundary));
}

FacetHypergraph ball_boundary(const OrderedStackedBall& ball) {
    return ball_boundary(ball.facets);
}

namespace {

struct ConnectedSumDetail {
    FacetHypergraph result;
    // k2map[v] = label of K2's vertex v in the result
    std::vector<int> k2map;
};

ConnectedSumDetail connectedSumDetail(const FacetHypergraph& K1, const Facet& f1,
                                      const FacetHypergraph& K2, const Facet& f2,
                                      const std::vector<std::pair<int, int>>& psi) {
    if (!K1.hasFacet(f1)) throw std::invalid_argument("connected_sum: f1 not a facet");
    if (!K2.hasFacet(f2)) throw std::invalid_argument("connected_sum: f2 not a facet");
    if (f1.size() != f2.size())
        throw std::invalid_argument("connected_sum: facet sizes differ");

    // psi must be a bijection f1 -> f2
    VertexSet dom, img;
    std::vector<int> inverse(VertexSet::kCapacity, -1);
    for (auto [a, b] : psi) {
        if (!f1.contains(a) || !f2.contains(b) || dom.contains(a) || img.contains(b))
            throw std::invalid_argument("connected_sum: psi not a bijection f1 -> f2");
        dom.insert(a);
        img.insert(b);
        inverse[static_cast<std::size_t>(b)] = a;
    }
    if (dom != f1.set() || img != f2.set())
        throw std::invalid_argument("connected_sum: psi not a bijection f1 -> f2");

    std::vector<int> k2map(static_cast<std::size_t>(K2.vertexCount()), -1);
    int fresh = K1.vertexCount();
    for (int v = 0; v < K2.vertexCount(); ++v) {
        if (f2.contains(v))
            k2map[static_cast<std::size_t>(v)] = inverse[static_cast<std::size_t>(v)];
        else
            k2map[static_cast<std::size_t>(v)] = fresh++;
    }

    std::vector<Facet> out;
    for (const auto& g : K1.facets())
        if (!(g == f1)) out.push_back(g);
    for (const auto& g : K2.facets()) {
        if (g == f2) continue;
        VertexSet s;
        for (int v : g.vertices()) s.insert(k2map[static_cast<std::size_t>(v)]);
        out.emplace_back(s);
    }
    return {FacetHypergraph::canonicalize(std::move(out)), std::move(k2map)};
}

std::vector<std::pair<int, int>> ascendingBijection(const Facet& f1, const Facet& f2) {
    std::vector<int> a = f1.vertices(), b = f2.vertices();
    if (a.size() != b.size())
        throw std::invalid_argument("connected_sum: facet sizes differ");
    std::vector<std::pair<int, int>> psi;
    for (std::size_t i = 0; i < a.size(); ++i) psi.emplace_back(a[i], b[i]);
    return psi;
}

}  // namespace

FacetHypergraph connected_sum(const FacetHypergraph& K1, const Facet& f1,
                              const FacetHypergraph& K2, const Facet& f2,
                              const std::vector<std::pair<int, int>>& psi) {
    return connectedSumDetail(K1, f1, K2, f2, psi).result;
}

FacetHypergraph connected_sum(const FacetHypergraph& K1, const Facet& f1,
                              const FacetHypergraph& K2, const Facet& f2) {
    return connected_sum(K1, f1, K2, f2, ascendingBijection(f1, f2));
}

ComplexWithMetadata cd_plus(int d) {
    if (d < 2) throw std::invalid_argument("cd_plus: d < 2");
    CrossPolytope cross = cross_polytope_boundary(d);
    FacetHypergraph simplex = simplex_boundary(d);

    // canonical choices: glue the lexicographically smallest facets
    std::vector<int> evens, base, g;
    for (int i = 0; i <= d; ++i) {
        evens.push_back(2 * i);
        base.push_back(2 * i + 1);
        g.push_back(i);
    }
    Facet glued(evens), gluedS(g);
    FacetHypergraph sum = connected_sum(cross.hypergraph, glued, simplex, gluedS);

    ConstructionMetadata meta;
    meta.apex = 2 * d + 2;  // the simplex vertex opposite gluedS, freshly labeled
    meta.baseFacet = Facet(base);
    return {std::move(sum), std::move(meta)};
}

ComplexWithMetadata x_construction(int d, int k) {
    if (d < 2) throw std::invalid_argument("x_construction: d < 2");
    if (k < 1) throw std::invalid_argument("x_construction: k < 1");

    FacetHypergraph X = simplex_boundary(d);
    int apex = 0;

    for (int step = 2; step <= k; ++step) {
        ComplexWithMetadata plus = cd_plus(d);
        // lexicographically smallest facet containing the current apex
        const Facet* fPrev = nullptr;
        for (const auto& f : X.facets()) {
            if (f.contains(apex)) {
                fPrev = &f;
                break;
            }
        }
        auto detail = connectedSumDetail(
            X, *fPrev, plus.hypergraph, *plus.meta.baseFacet,
            ascendingBijection(*fPrev, *plus.meta.baseFacet));
        apex = detail.k2map[static_cast<std::size_t>(*plus.meta.apex)];
        X = std::move(detail.result);
    }

    ConstructionMetadata meta;
    meta.apex = apex;
    return {std::move(X), std::move(meta)};
}

FacetHypergraph single_element_extension(const FacetHypergraph& K,
                                         const OrderedStackedBall& B, int w) {
    for (const auto& f : B.facets)
        if (!K.hasFacet(f))
            throw std::invalid_argument(
                "single_element_extension: ball is not a subcomplex");
    if (!validate_stacked_ball(B))
        throw std::invalid_argument("single_element_extension: not a stacked ball");
    if (B.vertexSupport() != K.vertexMask())
        throw std::invalid_argument("single_element_extension: ball not spanning");
    if (w != K.vertexCount())
        throw std::invalid_argument("single_element_extension: w must equal |V(K)|");

    std::unordered_map<VertexSet, bool, VertexSetHash> inBall;
    for (const auto& f : B.facets) inBall[f.set()] = true;

    std::vector<Facet> out;
    for (const auto& f : K.facets())
        if (!inBall.count(f.set())) out.push_back(f);
    FacetHypergraph bd = ball_boundary(B);
    for (const auto& t : bd.facets()) {
        VertexSet s = t.set();
        s.insert(w);
        out.emplace_back(s);
    }
    return FacetHypergraph::canonicalize(std::move(out));
}

ComplexWithMetadata ck_gadget(const FacetHypergraph& K21, const Facet& ghat) {
    if (!K21.hasFacet(ghat)) throw std::invalid_argument("ck_gadget: ghat not a facet");
    CrossPolytope cross = cross_polytope_boundary(3);
    Facet glued(std::vector<int>{0, 2, 4, 6});
    auto detail = connectedSumDetail(cross.hypergraph, glued, K21, ghat,
                                     ascendingBijection(glued, ghat));

    ConstructionMetadata meta;
    meta.baseFacet = Facet(std::vector<int>{1, 3, 5, 7});
    for (const auto& g : K21.facets()) {
        if (g == ghat) continue;
        VertexSet s;
        for (int v : g.vertices()) s.insert(detail.k2map[static_cast<std::size_t>(v)]);
        meta.k21CopyFacets.emplace_back(s);
    }
    return {std::move(detail.result), std::move(meta)};
}

ComplexWithMetadata y_construction(const FacetHypergraph& K21, const Facet& ghat,
                                   int k) {
    if (k < 1) throw std::invalid_argument("y_construction: k < 1");

    FacetHypergraph Y = K21;
    Facet base = ghat;
    ConstructionMetadata meta;
    meta.partition.push_back(K21.vertexMask());
    meta.baseFacet = base;

    ComplexWithMetadata gadget = ck_gadget(K21, ghat);
    const Facet gadgetBase = *gadget.meta.baseFacet;

    // facets of C_K that came from C^3 and are eligible as the next base
    std::vector<Facet> eligible;
    {
        std::unordered_map<VertexSet, bool, VertexSetHash> fromK21;
        for (const auto& f : gadget.meta.k21CopyFacets) fromK21[f.set()] = true;
        for (const auto& f : gadget.hypergraph.facets())
            if (!fromK21.count(f.set()) && !(f == gadgetBase)) eligible.push_back(f);
    }

    for (int step = 2; step <= k; ++step) {
        int oldN = Y.vertexCount();
        auto detail = connectedSumDetail(Y, base, gadget.hypergraph, gadgetBase,
                                         ascendingBijection(base, gadgetBase));
        Y = std::move(detail.result);

        VertexSet block;
        for (int v = oldN; v < Y.vertexCount(); ++v) block.insert(v);
        meta.partition.push_back(block);

        // new base: lexicographically smallest eligible facet of the fresh copy
        std::optional<Facet> newBase;
        for (const auto& f : eligible) {
            VertexSet s;
            for (int v : f.vertices()) s.insert(detail.k2map[static_cast<std::size_t>(v)]);
            Facet mapped(s);
            if (!newBase || mapped < *newBase) newBase = mapped;
        }
        base = *newBase;
        meta.baseFacet = base;
    }

    return {std::move(Y), std::move(meta)};
}

FacetHypergraph icosahedron_boundary() {
    // gyroelongated pentagonal bipyramid labeling: 0 apex, 1-5 upper ring,
    // 6-10 lower ring, 11 apex
    static const std::vector<std::vector<int>> kFacets = {
        {0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
        {1, 2, 6},  {2, 3, 7},  {3, 4, 8},  {4, 5, 9},  {5, 1, 10},
        {2, 6, 7},  {3, 7, 8},  {4, 8, 9},  {5, 9, 10}, {1, 10, 6},
        {6, 7, 11}, {7, 8, 11}, {8, 9, 11}, {9, 10, 11}, {10, 6, 11}};
    return FacetHypergraph::canonicalize(kFacets);
}

FacetHypergraph seven_vertex_torus() {
    std::vector<std::vector<int>> raw;
    for (int i = 0; i < 7; ++i) {
        raw.push_back({i, (i + 1) % 7, (i + 3) % 7});
        raw.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return FacetHypergraph::canonicalize(raw);
}

}  // namespace stw
