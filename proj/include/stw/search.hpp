#ifndef STW_SEARCH_HPP
#define STW_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stw/constructions.hpp"
#include "stw/hypergraph.hpp"
#include "stw/solvers.hpp"

namespace stw {

struct SearchConfig {
    FacetHypergraph start;
    int targetN = 0;
    int samplesPerStep = 100;
    int beamWidth = 1;
    std::uint64_t seed = 0;
    std::int64_t budgetMs = 600'000;
    int threads = 1;
};

/// Grow a spanning stacked-ball subcomplex of a neighborly 3-sphere: start
/// from a random facet, repeatedly glue a facet of K across exactly one
/// boundary triangle contributing exactly one new vertex, backtracking on
/// dead ends. Returns a valid n-3 facet spanning ball or nullopt when the
/// backtracking budget runs out.
std::optional<OrderedStackedBall> sample_spanning_stacked_ball(
    const FacetHypergraph& K, std::uint64_t seed,
    std::int64_t backtrackBudget = 200'000);

struct StageResult {
    int n = 0;
    FacetHypergraph sphere;
    long long epsilonScore = 0;
    int candidateIndex = 0;
};

struct SearchResult {
    std::vector<StageResult> stageWinners;  // beam head per stage
    bool truncated = false;
};

/// Beam search over single-element extensions scored by epsilon (lower is
/// better). Deterministic for a fixed seed at any worker count: each
/// candidate's RNG stream is derived from (seed, stage, member, sample).
SearchResult extension_search(const SearchConfig& cfg);

struct ScreenReport {
    bool twoColorable = false;
    std::vector<int> coloring;                       // when 2-colorable
    std::vector<std::pair<int, int>> bipartiteCover; // one bichromatic edge per facet
    SolverCertificate tau;
    double ratio = 0.0;
    long long epsilonValue = 0;
};

/// Screening report: 2-colorability (with the bipartite edge cover witness
/// when colorable), budgeted tau, tau/n, and epsilon.
ScreenReport screen(const FacetHypergraph& K, Budget budget = {});

}  // namespace stw

#endif  // STW_SEARCH_HPP
