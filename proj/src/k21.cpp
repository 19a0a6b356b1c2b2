#include "stw/k21.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "stw/topology.hpp"

namespace stw {

namespace {

constexpr std::uint64_t kScriptChecksum = 0x6ddc2b45704e47e3ULL;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<int> parseLine(const std::string& line) {
    std::istringstream ls(line);
    std::vector<int> verts;
    int v;
    while (ls >> v) verts.push_back(v);
    return verts;
}

}  // namespace

std::string default_data_dir() {
    if (const char* env = std::getenv("STW_DATA_DIR")) return env;
#ifdef STW_DATA_DIR_DEFAULT
    return STW_DATA_DIR_DEFAULT;
#else
    return "data";
#endif
}

ExtensionScript load_extension_script(const std::string& path) {
    std::string file = path.empty()
                           ? default_data_dir() + "/k21_extension_script.txt"
                           : path;
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open extension script " + file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string bytes = buffer.str();
    if (fnv1a(bytes) != kScriptChecksum)
        throw std::runtime_error("extension script checksum mismatch: " + file);

    std::vector<std::vector<int>> startFacets;
    std::vector<std::pair<int, OrderedStackedBall>> steps;
    std::optional<Facet> removed;
    std::vector<int> transversal;

    enum class Section { None, Start, Ball, Removed, Transversal };
    Section section = Section::None;
    int currentStage = -1;
    OrderedStackedBall currentBall;

    auto flushBall = [&]() {
        if (currentStage >= 0) {
            steps.emplace_back(currentStage, std::move(currentBall));
            currentBall = {};
            currentStage = -1;
        }
    };

    std::istringstream lines(bytes);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        if (line[0] == '[') {
            flushBall();
            if (line.rfind("[start]", 0) == 0) {
                section = Section::Start;
            } else if (line.rfind("[ball ", 0) == 0) {
                section = Section::Ball;
                currentStage = std::stoi(line.substr(6));
            } else if (line.rfind("[removed]", 0) == 0) {
                section = Section::Removed;
            } else if (line.rfind("[transversal]", 0) == 0) {
                section = Section::Transversal;
            } else {
                throw std::runtime_error("unknown section header: " + line);
            }
            continue;
        }

        std::vector<int> verts = parseLine(line);
        switch (section) {
            case Section::Start: startFacets.push_back(verts); break;
            case Section::Ball: currentBall.facets.emplace_back(verts); break;
            case Section::Removed: removed = Facet(verts); break;
            case Section::Transversal: transversal = verts; break;
            case Section::None:
                throw std::runtime_error("data before any section header");
        }
    }
    flushBall();

    if (!removed) throw std::runtime_error("extension script missing [removed]");

    ExtensionScript script{FacetHypergraph::canonicalize(startFacets), std::move(steps),
                           *removed, std::move(transversal)};

    // stage n consumes a ball of exactly n-3 facets referencing vertices < n
    for (const auto& [stage, ball] : script.steps) {
        if (static_cast<int>(ball.facets.size()) != stage - 3)
            throw std::runtime_error("stage " + std::to_string(stage) +
                                     ": expected " + std::to_string(stage - 3) +
                                     " ball facets");
        for (const auto& f : ball.facets)
            for (int v : f.vertices())
                if (v >= stage)
                    throw std::runtime_error("stage " + std::to_string(stage) +
                                             ": ball references vertex " +
                                             std::to_string(v));
    }
    return script;
}

ReplayResult build_k21(const ExtensionScript& script) {
    FacetHypergraph K = script.start;
    ReplayResult result{K, {}, {}};

    for (const auto& [stage, ball] : script.steps) {
        if (K.vertexCount() != stage)
            throw std::runtime_error("stage " + std::to_string(stage) +
                                     ": sphere has " +
                                     std::to_string(K.vertexCount()) + " vertices");
        try {
            K = single_element_extension(K, ball, stage);
        } catch (const std::exception& e) {
            throw std::runtime_error("stage " + std::to_string(stage) + ": " +
                                     e.what());
        }
        result.stageEpsilon.push_back(epsilon(K));
        result.stageFacetCount.push_back(K.facetCount());
    }
    result.k21 = K;
    return result;
}

FacetHypergraph build_k21() { return build_k21(load_extension_script()).k21; }

FacetHypergraph n21(const FacetHypergraph& k21, const Facet& removed) {
    if (!k21.hasFacet(removed))
        throw std::runtime_error("n21: removal facet absent (data corruption)");
    std::vector<Facet> kept;
    for (const auto& f : k21.facets())
        if (!(f == removed)) kept.push_back(f);
    return FacetHypergraph::canonicalize(std::move(kept));
}

FacetHypergraph n21() {
    ExtensionScript script = load_extension_script();
    return n21(build_k21(script).k21, script.removedFacet);
}

K21Report verify_k21(const ExtensionScript& script, Budget budget) {
    K21Report report;
    auto add = [&](const std::string& name, bool pass, std::string detail = "") {
        report.checks.push_back({name, pass, std::move(detail)});
    };

    ReplayResult replay = build_k21(script);
    const FacetHypergraph& K = replay.k21;

    add("replay_vertex_count", K.vertexCount() == 21,
        "n=" + std::to_string(K.vertexCount()));
    add("replay_facet_count", K.facetCount() == 189,
        "facets=" + std::to_string(K.facetCount()));

    // facet-count law at every stage: C(n-1, 2) - 1
    bool stagesOk = true;
    for (std::size_t i = 0; i < replay.stageFacetCount.size(); ++i) {
        long long n = static_cast<long long>(i) + 8;
        long long expected = (n - 1) * (n - 2) / 2 - 1;
        if (replay.stageFacetCount[i] != expected) stagesOk = false;
    }
    add("stage_facet_counts", stagesOk);

    // epsilon at the 11-vertex stage (index: stage n=10 ball output has 11 vertices)
    long long eps11 = replay.stageEpsilon[3];
    add("epsilon_k11", eps11 == 74, "epsilon=" + std::to_string(eps11));

    add("manifold_3d", manifold_check_3d(K));
    add("two_neighborly", is_k_neighborly(K, 2));
    add("face_counts", neighborly3_face_check(K));
    add("euler_characteristic", euler_characteristic(K) == 0);
    try {
        add("homology_s3", homology(K).isSpherical(3));
    } catch (const std::exception& e) {
        add("homology_s3", false, e.what());
    }

    FacetHypergraph N = n21(K, script.removedFacet);
    add("n21_facet_count", N.facetCount() == 188);
    add("n21_covered", N.vertexCount() == 21);

    report.tauN21 = transversal_number(N, budget);
    add("tau_n21",
        report.tauN21.value == 11 &&
            report.tauN21.status == CertificateStatus::Optimal,
        "tau=" + std::to_string(report.tauN21.value) + " status=" +
            to_string(report.tauN21.status));

    report.tauK21 = transversal_number(K, budget);
    add("tau_k21",
        report.tauK21.value == 11 &&
            report.tauK21.status == CertificateStatus::Optimal,
        "tau=" + std::to_string(report.tauK21.value));

    VertexSet sample = VertexSet::fromVertices(script.sampleTransversal);
    add("sample_transversal",
        sample.size() == 11 && is_transversal(K, sample) && is_transversal(N, sample));

    add("not_two_colorable", !two_colorable(K).has_value());

    return report;
}

}  // namespace stw
