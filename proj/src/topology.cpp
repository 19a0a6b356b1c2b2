#include "stw/topology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace stw {

bool HomologyProfile::isSpherical(int d) const {
    for (std::size_t i = 0; i < betti.size(); ++i) {
        int expected = (static_cast<int>(i) == d) ? 1 : 0;
        if (betti[i] != expected) return false;
    }
    if (static_cast<int>(betti.size()) <= d) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

bool is_pure(const FacetHypergraph& K, int d) {
    for (const auto& f : K.facets())
        if (f.size() != d + 1) return false;
    return true;
}

namespace {

std::unordered_map<VertexSet, int, VertexSetHash> ridgeCounts(
    const FacetHypergraph& K) {
    std::unordered_map<VertexSet, int, VertexSetHash> counts;
    for (const auto& f : K.facets()) {
        for (int v : f.vertices()) {
            VertexSet r = f.set();
            r.erase(v);
            ++counts[r];
        }
    }
    return counts;
}

}  // namespace

bool is_pseudomanifold(const FacetHypergraph& K, int d) {
    if (!is_pure(K, d)) return false;
    for (const auto& [ridge, count] : ridgeCounts(K))
        if (count != 2) return false;
    return true;
}

bool is_connected(const FacetHypergraph& K) {
    int m = K.facetCount();
    if (m <= 1) return true;

    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };

    std::unordered_map<VertexSet, int, VertexSetHash> firstFacet;
    for (int i = 0; i < m; ++i) {
        const Facet& f = K.facets()[static_cast<std::size_t>(i)];
        for (int v : f.vertices()) {
            VertexSet r = f.set();
            r.erase(v);
            auto [it, inserted] = firstFacet.try_emplace(r, i);
            if (!inserted) parent[static_cast<std::size_t>(find(i))] = find(it->second);
        }
    }
    int root = find(0);
    for (int i = 1; i < m; ++i)
        if (find(i) != root) return false;
    return true;
}

long long euler_characteristic(const FacetHypergraph& K) {
    return f_vector(K).eulerCharacteristic();
}

bool is_sphere_lowdim(const FacetHypergraph& K, int d) {
    if (d >= 3) throw std::invalid_argument("is_sphere_lowdim: use manifold_check_3d");
    if (d < 0) throw std::invalid_argument("is_sphere_lowdim: d < 0");

    if (d == 0) {
        return K.vertexCount() == 2 && K.facetCount() == 2 && is_pure(K, 0);
    }
    if (d == 1) {
        if (!is_pure(K, 1)) return false;
        std::vector<int> degree(static_cast<std::size_t>(K.vertexCount()), 0);
        for (const auto& f : K.facets())
            for (int v : f.vertices()) ++degree[static_cast<std::size_t>(v)];
        for (int deg : degree)
            if (deg != 2) return false;
        // connected 2-regular graph: a single cycle
        return K.facetCount() == K.vertexCount() && is_connected(K);
    }
    // d == 2
    if (!is_pseudomanifold(K, 2)) return false;
    if (!is_connected(K)) return false;
    if (euler_characteristic(K) != 2) return false;
    for (int v = 0; v < K.vertexCount(); ++v) {
        auto lk = link(K, Facet(std::vector<int>{v}));
        if (!is_sphere_lowdim(lk.hypergraph, 1)) return false;
    }
    return true;
}

bool manifold_check_3d(const FacetHypergraph& K) {
    if (!is_pseudomanifold(K, 3)) return false;
    if (!is_connected(K)) return false;
    if (euler_characteristic(K) != 0) return false;
    for (int v = 0; v < K.vertexCount(); ++v) {
        auto lk = link(K, Facet(std::vector<int>{v}));
        if (!is_sphere_lowdim(lk.hypergraph, 2)) return false;
    }
    return true;
}

namespace {

void collectFaces(const std::vector<int>& verts, std::size_t idx, VertexSet current,
                  std::vector<std::unordered_set<VertexSet, VertexSetHash>>& byDim) {
    if (idx == verts.size()) {
        int sz = current.size();
        if (sz > 0) byDim[static_cast<std::size_t>(sz - 1)].insert(current);
        return;
    }
    collectFaces(verts, idx + 1, current, byDim);
    current.insert(verts[idx]);
    collectFaces(verts, idx + 1, current, byDim);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

bool is_k_neighborly(const FacetHypergraph& K, int k) {
    if (k < 0) throw std::invalid_argument("is_k_neighborly: k < 0");
    if (k == 0) return true;
    std::vector<std::unordered_set<VertexSet, VertexSetHash>> byDim(
        static_cast<std::size_t>(std::max(K.dim() + 1, k)));
    for (const auto& f : K.facets())
        collectFaces(f.vertices(), 0, VertexSet{}, byDim);
    return static_cast<long long>(byDim[static_cast<std::size_t>(k - 1)].size()) ==
           binomial(K.vertexCount(), k);
}

bool neighborly3_face_check(const FacetHypergraph& K) {
    FVector fv = f_vector(K);
    if (fv.dim() != 3) return false;
    long long n = fv[0];
    return fv[2] == 2 * binomial(static_cast<int>(n) - 1, 2) - 2 &&
           fv[3] == binomial(static_cast<int>(n) - 1, 2) - 1;
}

std::vector<BigInt> smith_invariant_factors(std::vector<std::vector<BigInt>> mat) {
    std::size_t rows = mat.size();
    std::size_t cols = rows ? mat[0].size() : 0;
    std::vector<BigInt> invariants;
    std::size_t t = 0;

    auto nonzeroAt = [&](std::size_t r, std::size_t c) { return mat[r][c] != 0; };

    while (t < rows && t < cols) {
        // smallest-magnitude nonzero pivot in the remaining submatrix
        std::size_t pr = t, pc = t;
        bool found = false;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (nonzeroAt(r, c) &&
                    (!found || abs(mat[r][c]) < abs(mat[pr][pc]))) {
                    pr = r;
                    pc = c;
                    found = true;
                }
        if (!found) break;
        std::swap(mat[t], mat[pr]);
        for (std::size_t r = 0; r < rows; ++r) std::swap(mat[r][t], mat[r][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (mat[r][t] == 0) continue;
                BigInt q = mat[r][t] / mat[t][t];
                for (std::size_t c = t; c < cols; ++c) mat[r][c] -= q * mat[t][c];
                if (mat[r][t] != 0) {
                    std::swap(mat[t], mat[r]);  // remainder became the smaller pivot
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (mat[t][c] == 0) continue;
                BigInt q = mat[t][c] / mat[t][t];
                for (std::size_t r = t; r < rows; ++r) mat[r][c] -= q * mat[r][t];
                if (mat[t][c] != 0) {
                    for (std::size_t r = 0; r < rows; ++r) std::swap(mat[r][t], mat[r][c]);
                    clean = false;
                }
            }
        }

        // divisibility: fold in any entry the pivot does not divide
        bool redo = false;
        for (std::size_t r = t + 1; r < rows && !redo; ++r)
            for (std::size_t c = t + 1; c < cols && !redo; ++c)
                if (mat[r][c] % mat[t][t] != 0) {
                    for (std::size_t cc = t; cc < cols; ++cc) mat[t][cc] += mat[r][cc];
                    redo = true;
                }
        if (redo) continue;

        invariants.push_back(abs(mat[t][t]));
        ++t;
    }
    return invariants;
}

HomologyProfile homology(const FacetHypergraph& K, std::size_t faceCap) {
    int d = K.dim();
    std::vector<std::unordered_set<VertexSet, VertexSetHash>> byDim(
        static_cast<std::size_t>(d + 1));
    for (const auto& f : K.facets())
        collectFaces(f.vertices(), 0, VertexSet{}, byDim);

    std::size_t total = 0;
    for (const auto& s : byDim) total += s.size();
    if (total > faceCap)
        throw std::runtime_error("homology: face count " + std::to_string(total) +
                                 " exceeds cap " + std::to_string(faceCap));

    // sorted face lists with index maps
    std::vector<std::vector<VertexSet>> faces(static_cast<std::size_t>(d + 1));
    std::vector<std::unordered_map<VertexSet, std::size_t, VertexSetHash>> index(
        static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        auto& list = faces[static_cast<std::size_t>(i)];
        list.assign(byDim[static_cast<std::size_t>(i)].begin(),
                    byDim[static_cast<std::size_t>(i)].end());
        std::sort(list.begin(), list.end(),
                  [](const VertexSet& a, const VertexSet& b) { return lexLess(a, b); });
        for (std::size_t j = 0; j < list.size(); ++j)
            index[static_cast<std::size_t>(i)][list[j]] = j;
    }

    // boundary matrices of the augmented chain complex; boundary[0] is the
    // augmentation row of ones
    auto boundaryMatrix = [&](int i) -> std::vector<std::vector<BigInt>> {
        std::size_t nc = faces[static_cast<std::size_t>(i)].size();
        if (i == 0) {
            return {std::vector<BigInt>(nc, BigInt(1))};
        }
        std::size_t nr = faces[static_cast<std::size_t>(i - 1)].size();
        std::vector<std::vector<BigInt>> mat(nr, std::vector<BigInt>(nc, BigInt(0)));
        for (std::size_t c = 0; c < nc; ++c) {
            std::vector<int> verts = faces[static_cast<std::size_t>(i)][c].toVertices();
            int sign = 1;
            for (std::size_t j = 0; j < verts.size(); ++j) {
                VertexSet sub = faces[static_cast<std::size_t>(i)][c];
                sub.erase(verts[j]);
                std::size_t r = index[static_cast<std::size_t>(i - 1)].at(sub);
                mat[r][c] = sign;
                sign = -sign;
            }
        }
        return mat;
    };

    std::vector<std::size_t> rank(static_cast<std::size_t>(d + 2), 0);
    std::vector<std::vector<BigInt>> invariants(static_cast<std::size_t>(d + 2));
    for (int i = 0; i <= d; ++i) {
        auto inv = smith_invariant_factors(boundaryMatrix(i));
        rank[static_cast<std::size_t>(i)] = inv.size();
        invariants[static_cast<std::size_t>(i)] = std::move(inv);
    }
    // boundary d+1 is zero

    HomologyProfile profile;
    profile.betti.resize(static_cast<std::size_t>(d + 1));
    profile.torsion.resize(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        std::size_t fi = faces[static_cast<std::size_t>(i)].size();
        std::size_t rankIn = (i < d) ? rank[static_cast<std::size_t>(i + 1)] : 0;
        profile.betti[static_cast<std::size_t>(i)] =
            static_cast<int>(fi - rank[static_cast<std::size_t>(i)] - rankIn);
        if (i < d)
            for (const auto& factor : invariants[static_cast<std::size_t>(i + 1)])
                if (factor > 1)
                    profile.torsion[static_cast<std::size_t>(i)].push_back(factor);
    }
    return profile;
}

}  // namespace stw
