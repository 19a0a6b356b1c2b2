#include "stw/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace stw {

const char* to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::Optimal: return "optimal";
        case CertificateStatus::UpperBoundOnly: return "upper_bound_only";
        case CertificateStatus::Infeasible: return "infeasible";
    }
    return "unknown";
}

bool is_transversal(const FacetHypergraph& H, const VertexSet& T) {
    for (const auto& f : H.facets())
        if (!f.set().intersects(T)) return false;
    return true;
}

bool is_independent(const FacetHypergraph& H, const VertexSet& S) {
    for (const auto& f : H.facets())
        if (f.set().isSubsetOf(S)) return false;
    return true;
}

bool is_proper_coloring(const FacetHypergraph& H, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != H.vertexCount()) return false;
    for (const auto& f : H.facets()) {
        std::vector<int> verts = f.vertices();
        bool mono = true;
        for (std::size_t i = 1; i < verts.size(); ++i)
            if (colors[static_cast<std::size_t>(verts[i])] !=
                colors[static_cast<std::size_t>(verts[0])]) {
                mono = false;
                break;
            }
        if (mono) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct HittingSetSolver {
    const std::vector<VertexSet>& facets;
    int n;
    Budget budget;

    std::uint64_t nodes = 0;
    Clock::time_point start = Clock::now();
    bool exhausted = false;

    VertexSet bestWitness;
    int best = 0;

    double elapsedMs() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    bool overBudget() {
        if (static_cast<std::int64_t>(nodes) > budget.nodeCap) return exhausted = true;
        if ((nodes & 0x3ff) == 0 && elapsedMs() > static_cast<double>(budget.timeMs))
            return exhausted = true;
        return false;
    }

    // greedy incumbent: repeatedly take the vertex covering most uncovered
    // facets, ties by lowest label
    VertexSet greedyHit() const {
        VertexSet chosen;
        std::vector<VertexSet> uncovered = facets;
        while (!uncovered.empty()) {
            int bestV = -1, bestCover = -1;
            for (int v = 0; v < n; ++v) {
                int cover = 0;
                for (const auto& f : uncovered)
                    if (f.contains(v)) ++cover;
                if (cover > bestCover) {
                    bestCover = cover;
                    bestV = v;
                }
            }
            chosen.insert(bestV);
            std::erase_if(uncovered,
                          [&](const VertexSet& f) { return f.contains(bestV); });
        }
        return chosen;
    }

    // lower bound: greedy packing of pairwise-disjoint uncovered facets
    // restricted to their available vertices
    static int disjointPacking(const std::vector<VertexSet>& uncoveredAvail) {
        VertexSet used;
        int packed = 0;
        for (const auto& f : uncoveredAvail) {
            if (!f.intersects(used)) {
                used |= f;
                ++packed;
            }
        }
        return packed;
    }

    void dfs(VertexSet chosen, VertexSet excluded, int depth) {
        if (exhausted || overBudget()) return;
        ++nodes;

        std::vector<VertexSet> uncoveredAvail;
        for (const auto& f : facets) {
            if (f.intersects(chosen)) continue;
            VertexSet avail = f - excluded;
            if (avail.empty()) return;  // infeasible branch
            uncoveredAvail.push_back(avail);
        }
        if (uncoveredAvail.empty()) {
            if (depth < best) {
                best = depth;
                bestWitness = chosen;
            }
            return;
        }
        const VertexSet* branchFacet = &uncoveredAvail.front();
        for (const auto& f : uncoveredAvail)
            if (f.size() < branchFacet->size()) branchFacet = &f;

        if (depth + disjointPacking(uncoveredAvail) >= best) return;

        // branch vertices by decreasing residual degree, ties by lowest label
        std::vector<std::pair<int, int>> order;  // (-degree, label)
        for (int v = branchFacet->first(); v >= 0; v = branchFacet->next(v)) {
            int deg = 0;
            for (const auto& f : uncoveredAvail)
                if (f.contains(v)) ++deg;
            order.emplace_back(-deg, v);
        }
        std::sort(order.begin(), order.end());

        VertexSet localExcluded = excluded;
        for (auto [negDeg, v] : order) {
            VertexSet next = chosen;
            next.insert(v);
            dfs(next, localExcluded, depth + 1);
            if (exhausted) return;
            localExcluded.insert(v);
        }
    }

    SolverCertificate solve() {
        SolverCertificate cert;
        cert.kind = SolverCertificate::Kind::Transversal;
        if (facets.empty()) {
            cert.value = 0;
            cert.status = CertificateStatus::Optimal;
            return cert;
        }
        bestWitness = greedyHit();
        best = bestWitness.size();
        dfs(VertexSet{}, VertexSet{}, 0);

        cert.witness = bestWitness.toVertices();
        cert.value = best;
        cert.status = exhausted ? CertificateStatus::UpperBoundOnly
                                : CertificateStatus::Optimal;
        cert.nodesExplored = nodes;
        cert.elapsedMs = elapsedMs();
        return cert;
    }
};

std::vector<VertexSet> facetMasks(const FacetHypergraph& H) {
    std::vector<VertexSet> out;
    out.reserve(H.facets().size());
    for (const auto& f : H.facets()) out.push_back(f.set());
    return out;
}

SolverCertificate minimumHittingSet(const std::vector<VertexSet>& facets, int n,
                                    Budget budget) {
    HittingSetSolver solver{facets, n, budget};
    return solver.solve();
}

}  // namespace

SolverCertificate transversal_number(const FacetHypergraph& H, Budget budget) {
    return minimumHittingSet(facetMasks(H), H.vertexCount(), budget);
}

SolverCertificate independence_number(const FacetHypergraph& H, Budget budget) {
    SolverCertificate tau = transversal_number(H, budget);
    SolverCertificate cert = tau;
    cert.kind = SolverCertificate::Kind::IndependentSet;
    cert.value = H.vertexCount() - tau.value;
    VertexSet witness = H.vertexMask() - VertexSet::fromVertices(tau.witness);
    cert.witness = witness.toVertices();
    // an upper bound on tau is a lower bound on alpha; keep the honest flag
    return cert;
}

namespace {

// m-coloring backtracking with unit propagation on facets and the standard
// new-color symmetry break.
struct ColoringSolver {
    const std::vector<VertexSet>& facets;
    int n;
    int m;

    std::vector<int> colors;            // -1 = unassigned
    std::vector<std::uint32_t> domain;  // bitmask of allowed colors
    std::uint64_t nodes = 0;

    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& f : facets) {
                int uncolored = -1, count = 0;
                int c0 = -2;
                bool mono = true;
                for (int v = f.first(); v >= 0; v = f.next(v)) {
                    if (colors[static_cast<std::size_t>(v)] < 0) {
                        uncolored = v;
                        ++count;
                        if (count > 1) break;
                    } else if (c0 == -2) {
                        c0 = colors[static_cast<std::size_t>(v)];
                    } else if (colors[static_cast<std::size_t>(v)] != c0) {
                        mono = false;
                        break;
                    }
                }
                if (!mono) continue;
                if (count == 0) return false;  // monochromatic facet
                if (count == 1 && c0 >= 0) {
                    auto& dom = domain[static_cast<std::size_t>(uncolored)];
                    std::uint32_t bit = std::uint32_t{1} << c0;
                    if (dom & bit) {
                        dom &= ~bit;
                        if (dom == 0) return false;
                        if ((dom & (dom - 1)) == 0) {
                            int forced = std::countr_zero(dom);
                            colors[static_cast<std::size_t>(uncolored)] = forced;
                            trail.push_back(uncolored);
                            changed = true;
                        }
                    }
                }
            }
        }
        return true;
    }

    bool dfs(int assigned, int maxUsed) {
        ++nodes;
        if (assigned == n) return true;
        // most-constrained uncolored vertex
        int pick = -1, pickDom = 33;
        for (int v = 0; v < n; ++v) {
            if (colors[static_cast<std::size_t>(v)] >= 0) continue;
            int sz = std::popcount(domain[static_cast<std::size_t>(v)]);
            if (sz < pickDom) {
                pickDom = sz;
                pick = v;
            }
        }
        int colorCap = std::min(m - 1, maxUsed + 1);
        for (int c = 0; c <= colorCap; ++c) {
            if (!(domain[static_cast<std::size_t>(pick)] & (std::uint32_t{1} << c)))
                continue;
            auto savedColors = colors;
            auto savedDomain = domain;
            colors[static_cast<std::size_t>(pick)] = c;
            std::vector<int> trail{pick};
            if (propagate(trail)) {
                int newAssigned = 0;
                for (int v = 0; v < n; ++v)
                    if (colors[static_cast<std::size_t>(v)] >= 0) ++newAssigned;
                int newMax = maxUsed;
                for (int v : trail)
                    newMax = std::max(newMax, colors[static_cast<std::size_t>(v)]);
                if (dfs(newAssigned, newMax)) return true;
            }
            colors = std::move(savedColors);
            domain = std::move(savedDomain);
        }
        return false;
    }

    std::optional<std::vector<int>> solve() {
        for (const auto& f : facets)
            if (f.size() == 1) return std::nullopt;  // singleton facet: never proper
        colors.assign(static_cast<std::size_t>(n), -1);
        domain.assign(static_cast<std::size_t>(n),
                      (m >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1));
        if (dfs(0, -1)) return colors;
        return std::nullopt;
    }
};

}  // namespace

std::optional<std::vector<int>> two_colorable(const FacetHypergraph& H) {
    auto facets = facetMasks(H);
    ColoringSolver solver{facets, H.vertexCount(), 2};
    return solver.solve();
}

SolverCertificate chromatic_number(const FacetHypergraph& H, Budget budget) {
    auto facets = facetMasks(H);
    SolverCertificate cert;
    cert.kind = SolverCertificate::Kind::Coloring;
    auto start = Clock::now();

    for (const auto& f : facets) {
        if (f.size() == 1) {
            cert.status = CertificateStatus::Infeasible;
            cert.note = "singleton facet: no proper weak coloring exists";
            return cert;
        }
    }

    for (int m = 2; m <= H.vertexCount(); ++m) {
        ColoringSolver solver{facets, H.vertexCount(), m};
        auto result = solver.solve();
        cert.nodesExplored += solver.nodes;
        if (result) {
            cert.witness = *result;
            cert.value = m;
            cert.status = CertificateStatus::Optimal;
            break;
        }
        double elapsed =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (elapsed > static_cast<double>(budget.timeMs) ||
            static_cast<std::int64_t>(cert.nodesExplored) > budget.nodeCap) {
            cert.value = m;
            cert.status = CertificateStatus::UpperBoundOnly;
            cert.note = "budget exhausted before a proper coloring was found";
            break;
        }
    }
    double elapsed =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    cert.elapsedMs = elapsed;
    return cert;
}

SolverCertificate greedy_chromatic(const FacetHypergraph& H, Budget budget) {
    auto allFacets = facetMasks(H);
    int n = H.vertexCount();

    SolverCertificate cert;
    cert.kind = SolverCertificate::Kind::Coloring;
    cert.witness.assign(static_cast<std::size_t>(n), -1);
    auto start = Clock::now();

    VertexSet alive = H.vertexMask();
    int color = 0;
    bool fellBack = false;

    while (!alive.empty()) {
        // facets fully inside surviving vertices
        std::vector<VertexSet> residual;
        for (const auto& f : allFacets)
            if (f.isSubsetOf(alive)) residual.push_back(f);

        VertexSet classSet;
        if (residual.empty()) {
            classSet = alive;
        } else {
            double elapsed =
                std::chrono::duration<double, std::milli>(Clock::now() - start)
                    .count();
            Budget remaining = budget;
            remaining.timeMs = budget.timeMs - static_cast<std::int64_t>(elapsed);
            if (remaining.timeMs <= 0 || fellBack) {
                // greedy maximal (not maximum) independent set fallback
                fellBack = true;
                for (int v = alive.first(); v >= 0; v = alive.next(v)) {
                    VertexSet candidate = classSet;
                    candidate.insert(v);
                    bool ok = true;
                    for (const auto& f : residual)
                        if (f.isSubsetOf(candidate)) {
                            ok = false;
                            break;
                        }
                    if (ok) classSet = candidate;
                }
            } else {
                SolverCertificate tau = minimumHittingSet(residual, n, remaining);
                cert.nodesExplored += tau.nodesExplored;
                if (tau.status != CertificateStatus::Optimal) fellBack = true;
                classSet = alive - VertexSet::fromVertices(tau.witness);
            }
        }

        for (int v = classSet.first(); v >= 0; v = classSet.next(v))
            cert.witness[static_cast<std::size_t>(v)] = color;
        alive -= classSet;
        ++color;
    }

    cert.value = color;
    cert.status =
        fellBack ? CertificateStatus::UpperBoundOnly : CertificateStatus::Optimal;
    if (fellBack) cert.note = "budget exhausted: greedy maximal independent sets";
    cert.elapsedMs =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return cert;
}

double alteration_beta(int d, double c) {
    double dd = static_cast<double>(d);
    return dd / (std::pow(1.0 + dd, (dd + 1.0) / dd) * std::pow(c, 1.0 / dd));
}

double alteration_default_p(const AlterationParams& params, int n) {
    double dd = static_cast<double>(params.d);
    return 1.0 / std::pow(params.c * (dd + 1.0) *
                              std::pow(static_cast<double>(n), params.k - 1.0),
                          1.0 / dd);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(mix(master) ^ a) ^ b) ^ c);
}

VertexSet random_independent_set(const FacetHypergraph& H,
                                 const AlterationParams& params) {
    int uniformity = params.d + 1;
    for (const auto& f : H.facets())
        if (f.size() != uniformity)
            throw std::invalid_argument("random_independent_set: not (d+1)-uniform");

    double p = params.p.value_or(alteration_default_p(params, H.vertexCount()));
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_independent_set: p out of [0,1]");

    std::mt19937_64 rng(params.seed);
    auto unit = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    VertexSet sample;
    for (int v = 0; v < H.vertexCount(); ++v)
        if (unit() < p) sample.insert(v);

    // delete the lowest-label vertex of each facet inside the sample
    for (const auto& f : H.facets())
        if (f.set().isSubsetOf(sample)) sample.erase(f.set().first());
    return sample;
}

IterationBound iteration_bound(double beta, double t, double n) {
    if (!std::isfinite(beta) || !std::isfinite(t) || !std::isfinite(n))
        throw std::invalid_argument("iteration_bound: non-finite input");
    if (beta <= 0.0 || t <= 0.0 || t >= 1.0 || n < 0.0)
        throw std::invalid_argument("iteration_bound: require beta > 0, 0 < t < 1, n >= 0");

    IterationBound result;
    result.bound = std::pow(n, 1.0 - t) / (beta * (1.0 - t)) + 1.0;

    constexpr std::int64_t kStepCap = 100'000'000;
    double x = n;
    std::int64_t steps = 0;
    while (x >= 1.0) {
        if (steps >= kStepCap) {
            result.reached = false;
            break;
        }
        x = std::max(x - beta * std::pow(x, t), 0.0);
        ++steps;
    }
    result.steps = steps;
    return result;
}

namespace {

struct VertexSignature {
    int facetDegree = 0;
    std::vector<long long> incidentEdgeDegrees;
    friend bool operator==(const VertexSignature&, const VertexSignature&) = default;
};

std::vector<VertexSignature> vertexSignatures(const FacetHypergraph& H) {
    EdgeDegreeProfile profile = edge_degrees(H);
    std::vector<VertexSignature> sigs(static_cast<std::size_t>(H.vertexCount()));
    for (const auto& f : H.facets())
        for (int v : f.vertices()) ++sigs[static_cast<std::size_t>(v)].facetDegree;
    for (const auto& [e, deg] : profile.degrees) {
        sigs[static_cast<std::size_t>(e.first)].incidentEdgeDegrees.push_back(deg);
        sigs[static_cast<std::size_t>(e.second)].incidentEdgeDegrees.push_back(deg);
    }
    for (auto& s : sigs)
        std::sort(s.incidentEdgeDegrees.begin(), s.incidentEdgeDegrees.end());
    return sigs;
}

struct IsoSearch {
    const FacetHypergraph& H1;
    const FacetHypergraph& H2;
    std::unordered_set<VertexSet, VertexSetHash> target;
    std::vector<std::vector<int>> candidates;  // per H1 vertex
    std::vector<int> mapping;                  // H1 vertex -> H2 vertex
    std::vector<bool> used;
    std::vector<int> order;

    bool partialConsistent(int justAssigned) {
        for (const auto& f : H1.facets()) {
            if (!f.contains(justAssigned)) continue;
            VertexSet image;
            bool complete = true;
            for (int v = f.set().first(); v >= 0; v = f.set().next(v)) {
                if (mapping[static_cast<std::size_t>(v)] < 0) {
                    complete = false;
                    break;
                }
                image.insert(mapping[static_cast<std::size_t>(v)]);
            }
            if (complete && !target.count(image)) return false;
        }
        return true;
    }

    bool dfs(std::size_t idx) {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int w : candidates[static_cast<std::size_t>(v)]) {
            if (used[static_cast<std::size_t>(w)]) continue;
            mapping[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (partialConsistent(v) && dfs(idx + 1)) return true;
            mapping[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> isomorphic(const FacetHypergraph& H1,
                                           const FacetHypergraph& H2) {
    if (H1.vertexCount() != H2.vertexCount()) return std::nullopt;
    if (H1.facetCount() != H2.facetCount()) return std::nullopt;
    {
        std::vector<int> s1, s2;
        for (const auto& f : H1.facets()) s1.push_back(f.size());
        for (const auto& f : H2.facets()) s2.push_back(f.size());
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    auto sigs1 = vertexSignatures(H1);
    auto sigs2 = vertexSignatures(H2);

    IsoSearch search{H1, H2};
    for (const auto& f : H2.facets()) search.target.insert(f.set());
    search.candidates.resize(static_cast<std::size_t>(H1.vertexCount()));
    for (int v = 0; v < H1.vertexCount(); ++v) {
        for (int w = 0; w < H2.vertexCount(); ++w)
            if (sigs1[static_cast<std::size_t>(v)] == sigs2[static_cast<std::size_t>(w)])
                search.candidates[static_cast<std::size_t>(v)].push_back(w);
        if (search.candidates[static_cast<std::size_t>(v)].empty())
            return std::nullopt;
    }
    search.mapping.assign(static_cast<std::size_t>(H1.vertexCount()), -1);
    search.used.assign(static_cast<std::size_t>(H2.vertexCount()), false);
    search.order.resize(static_cast<std::size_t>(H1.vertexCount()));
    for (int v = 0; v < H1.vertexCount(); ++v)
        search.order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return search.candidates[static_cast<std::size_t>(a)].size() <
               search.candidates[static_cast<std::size_t>(b)].size();
    });

    if (search.dfs(0)) return search.mapping;
    return std::nullopt;
}

}  // namespace stw
