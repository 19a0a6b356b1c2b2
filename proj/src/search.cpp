#include "stw/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace stw {

namespace {

struct BallState {
    std::vector<Facet> facets;
    std::vector<char> used;  // per facet index of K
    VertexSet support;
    std::unordered_map<VertexSet, int, VertexSetHash> ridgeCount;

    void push(const FacetHypergraph& K, int idx) {
        const Facet& f = K.facets()[static_cast<std::size_t>(idx)];
        facets.push_back(f);
        used[static_cast<std::size_t>(idx)] = 1;
        support |= f.set();
        for (int v : f.vertices()) {
            VertexSet r = f.set();
            r.erase(v);
            ++ridgeCount[r];
        }
    }

    void pop(const FacetHypergraph& K, int idx) {
        const Facet& f = K.facets()[static_cast<std::size_t>(idx)];
        facets.pop_back();
        used[static_cast<std::size_t>(idx)] = 0;
        for (int v : f.vertices()) {
            VertexSet r = f.set();
            r.erase(v);
            if (--ridgeCount[r] == 0) ridgeCount.erase(r);
        }
        support = VertexSet{};
        for (const auto& g : facets) support |= g.set();
    }

    // A facet extends the ball when it brings exactly one new vertex and
    // meets the current support in a single ridge used by exactly one facet.
    bool extends(const FacetHypergraph& K, int idx) const {
        const Facet& f = K.facets()[static_cast<std::size_t>(idx)];
        if (used[static_cast<std::size_t>(idx)]) return false;
        VertexSet overlap = f.set() & support;
        if (overlap.size() != f.size() - 1) return false;
        auto it = ridgeCount.find(overlap);
        return it != ridgeCount.end() && it->second == 1;
    }
};

bool growBall(const FacetHypergraph& K, BallState& state, int target,
              std::mt19937_64& rng, std::int64_t& budget) {
    if (static_cast<int>(state.facets.size()) == target) return true;
    if (--budget < 0) return false;

    std::vector<int> candidates;
    for (int i = 0; i < K.facetCount(); ++i)
        if (state.extends(K, i)) candidates.push_back(i);
    std::shuffle(candidates.begin(), candidates.end(), rng);

    for (int idx : candidates) {
        state.push(K, idx);
        if (growBall(K, state, target, rng, budget)) return true;
        state.pop(K, idx);
        if (budget < 0) return false;
    }
    return false;
}

}  // namespace

std::optional<OrderedStackedBall> sample_spanning_stacked_ball(
    const FacetHypergraph& K, std::uint64_t seed, std::int64_t backtrackBudget) {
    if (K.dim() != 3 || !K.isUniform())
        throw std::invalid_argument(
            "sample_spanning_stacked_ball: expects a pure 3-dimensional complex");
    int target = K.vertexCount() - 3;
    if (target < 1 || target > K.facetCount()) return std::nullopt;

    std::mt19937_64 rng(seed);
    BallState state;
    state.used.assign(static_cast<std::size_t>(K.facetCount()), 0);

    std::uniform_int_distribution<int> pick(0, K.facetCount() - 1);
    state.push(K, pick(rng));

    std::int64_t budget = backtrackBudget;
    if (!growBall(K, state, target, rng, budget)) return std::nullopt;

    // with 4 start vertices and one new vertex per step, n-3 facets span
    OrderedStackedBall ball{std::move(state.facets)};
    return ball;
}

namespace {

struct Candidate {
    bool valid = false;
    long long epsilonScore = 0;
    int member = 0;
    int sample = 0;
    std::vector<Facet> facets;  // of the extended sphere
};

Candidate evaluateCandidate(const FacetHypergraph& sphere, int stage, int member,
                            int sample, std::uint64_t masterSeed) {
    Candidate cand;
    cand.member = member;
    cand.sample = sample;
    std::uint64_t seed =
        derive_seed(masterSeed, static_cast<std::uint64_t>(stage),
                    static_cast<std::uint64_t>(member),
                    static_cast<std::uint64_t>(sample));
    auto ball = sample_spanning_stacked_ball(sphere, seed);
    if (!ball) return cand;
    try {
        FacetHypergraph next =
            single_element_extension(sphere, *ball, sphere.vertexCount());
        cand.epsilonScore = epsilon(next);
        cand.facets = next.facets();
        cand.valid = true;
    } catch (const std::exception&) {
        // a sampled ball that fails extension validation is just skipped
    }
    return cand;
}

}  // namespace

SearchResult extension_search(const SearchConfig& cfg) {
    if (cfg.targetN <= cfg.start.vertexCount())
        throw std::invalid_argument("extension_search: targetN must exceed start n");
    if (cfg.samplesPerStep < 1 || cfg.beamWidth < 1 || cfg.threads < 1)
        throw std::invalid_argument("extension_search: bad configuration");

    auto startTime = std::chrono::steady_clock::now();
    auto elapsedMs = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - startTime)
            .count();
    };

    SearchResult result;
    std::vector<FacetHypergraph> beam{cfg.start};

    for (int stage = cfg.start.vertexCount(); stage < cfg.targetN; ++stage) {
        if (elapsedMs() > cfg.budgetMs) {
            result.truncated = true;
            break;
        }

        int members = static_cast<int>(beam.size());
        int total = members * cfg.samplesPerStep;
        std::vector<Candidate> candidates(static_cast<std::size_t>(total));

        auto worker = [&](int begin, int end) {
            for (int j = begin; j < end; ++j) {
                int member = j / cfg.samplesPerStep;
                int sample = j % cfg.samplesPerStep;
                candidates[static_cast<std::size_t>(j)] = evaluateCandidate(
                    beam[static_cast<std::size_t>(member)], stage, member, sample,
                    cfg.seed);
            }
        };
        if (cfg.threads == 1) {
            worker(0, total);
        } else {
            std::vector<std::thread> pool;
            int chunk = (total + cfg.threads - 1) / cfg.threads;
            for (int t = 0; t < cfg.threads; ++t) {
                int begin = t * chunk;
                int end = std::min(total, begin + chunk);
                if (begin < end) pool.emplace_back(worker, begin, end);
            }
            for (auto& th : pool) th.join();
        }

        // deterministic order: score, then facet list, then stream coordinates
        std::vector<const Candidate*> ranked;
        for (const auto& c : candidates)
            if (c.valid) ranked.push_back(&c);
        std::sort(ranked.begin(), ranked.end(),
                  [](const Candidate* a, const Candidate* b) {
                      if (a->epsilonScore != b->epsilonScore)
                          return a->epsilonScore < b->epsilonScore;
                      if (a->facets != b->facets)
                          return std::lexicographical_compare(
                              a->facets.begin(), a->facets.end(),
                              b->facets.begin(), b->facets.end());
                      if (a->member != b->member) return a->member < b->member;
                      return a->sample < b->sample;
                  });
        if (ranked.empty()) {
            result.truncated = true;
            break;
        }

        std::vector<FacetHypergraph> nextBeam;
        for (const Candidate* c : ranked) {
            FacetHypergraph next = FacetHypergraph::canonicalize(c->facets);
            if (std::find(nextBeam.begin(), nextBeam.end(), next) != nextBeam.end())
                continue;
            nextBeam.push_back(std::move(next));
            if (static_cast<int>(nextBeam.size()) == cfg.beamWidth) break;
        }

        result.stageWinners.push_back(StageResult{
            stage + 1, nextBeam.front(), ranked.front()->epsilonScore,
            ranked.front()->member * cfg.samplesPerStep + ranked.front()->sample});
        beam = std::move(nextBeam);
    }
    return result;
}

ScreenReport screen(const FacetHypergraph& K, Budget budget) {
    ScreenReport report;
    report.epsilonValue = epsilon(K);

    auto coloring = two_colorable(K);
    report.twoColorable = coloring.has_value();
    if (coloring) {
        report.coloring = *coloring;
        for (const auto& f : K.facets()) {
            std::vector<int> verts = f.vertices();
            bool found = false;
            for (std::size_t i = 0; i < verts.size() && !found; ++i)
                for (std::size_t j = i + 1; j < verts.size() && !found; ++j)
                    if ((*coloring)[static_cast<std::size_t>(verts[i])] !=
                        (*coloring)[static_cast<std::size_t>(verts[j])]) {
                        report.bipartiteCover.emplace_back(verts[i], verts[j]);
                        found = true;
                    }
        }
    }

    report.tau = transversal_number(K, budget);
    report.ratio = static_cast<double>(report.tau.value) /
                   static_cast<double>(K.vertexCount());
    return report;
}

}  // namespace stw
