#ifndef STW_SOLVERS_HPP
#define STW_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stw/hypergraph.hpp"

namespace stw {

struct Budget {
    std::int64_t nodeCap = 500'000'000;
    std::int64_t timeMs = 600'000;
};

enum class CertificateStatus { Optimal, UpperBoundOnly, Infeasible };

struct SolverCertificate {
    enum class Kind { Transversal, IndependentSet, Coloring };

    Kind kind = Kind::Transversal;
    std::vector<int> witness;   // vertex set, or per-vertex colors for Kind::Coloring
    int value = 0;              // tau / alpha / number of colors
    CertificateStatus status = CertificateStatus::Optimal;
    std::uint64_t nodesExplored = 0;
    double elapsedMs = 0.0;
    std::string note;
};

const char* to_string(CertificateStatus s);

bool is_transversal(const FacetHypergraph& H, const VertexSet& T);
bool is_independent(const FacetHypergraph& H, const VertexSet& S);
bool is_proper_coloring(const FacetHypergraph& H, const std::vector<int>& colors);

/// Exact minimum transversal by branch and bound on bitset facets.
/// Branches on the uncovered facet with fewest remaining vertices, vertices
/// in decreasing residual degree (ties by lowest label); lower bound from a
/// greedy packing of pairwise-disjoint uncovered facets. On budget
/// exhaustion the best incumbent is returned flagged UpperBoundOnly.
SolverCertificate transversal_number(const FacetHypergraph& H, Budget budget = {});

/// alpha = n - tau; witness is the complement of the transversal witness.
SolverCertificate independence_number(const FacetHypergraph& H, Budget budget = {});

/// A proper 2-coloring if one exists (backtracking with unit propagation),
/// else nullopt. Colors are 0/1 per vertex.
std::optional<std::vector<int>> two_colorable(const FacetHypergraph& H);

/// Smallest m admitting a proper m-coloring, by incrementing m.
SolverCertificate chromatic_number(const FacetHypergraph& H, Budget budget = {});

/// The iterated maximum-independent-set coloring: extract a maximum
/// independent set, drop its vertices and every facet touching them,
/// repeat. Color classes come out as S_0..S_{M-1}. On budget exhaustion
/// falls back to greedy maximal independent sets, flagged.
SolverCertificate greedy_chromatic(const FacetHypergraph& H, Budget budget = {});

struct AlterationParams {
    int d = 3;       // uniformity - 1
    double c = 4.0;  // density constant: |H| <= c n^k
    double k = 2.0;  // density exponent
    std::optional<double> p;  // sampling probability; default p0 from d, c, k, n
    std::uint64_t seed = 0;
};

/// Default sampling probability p0 = (c (d+1) n^{k-1})^{-1/d}.
double alteration_default_p(const AlterationParams& params, int n);

/// Expected-size constant beta_{d,c} = d / ((1+d)^{(d+1)/d} c^{1/d}).
double alteration_beta(int d, double c);

/// Sample each vertex with probability p, then delete the lowest-label
/// vertex of every facet fully inside the sample. Always independent.
VertexSet random_independent_set(const FacetHypergraph& H,
                                 const AlterationParams& params);

struct IterationBound {
    std::int64_t steps = 0;  // least iterations of h driving n below 1
    bool reached = true;     // false when the step cap was hit
    double bound = 0.0;      // n^{1-t} / (beta (1-t)) + 1
};

/// Iterate h(x) = max(x - beta x^t, 0) from n until the value drops below
/// 1; check steps <= bound.
IterationBound iteration_bound(double beta, double t, double n);

/// A vertex bijection mapping facets onto facets, by backtracking with
/// degree and edge-degree-profile pruning; nullopt if none exists.
std::optional<std::vector<int>> isomorphic(const FacetHypergraph& H1,
                                           const FacetHypergraph& H2);

/// Seed derivation for per-candidate RNG streams (splitmix64 over the
/// master seed and stream coordinates).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

}  // namespace stw

#endif  // STW_SOLVERS_HPP
