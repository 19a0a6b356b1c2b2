#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stw/constructions.hpp"
#include "stw/hypergraph.hpp"
#include "stw/io.hpp"
#include "stw/k21.hpp"
#include "stw/search.hpp"
#include "stw/solvers.hpp"
#include "stw/topology.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kToolVersion = "1.0.0";

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fileChecksum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "missing";
    std::stringstream buf;
    buf << in.rdbuf();
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(buf.str())));
    return hex;
}

struct Manifest {
    std::vector<std::string> argv;
    std::uint64_t seed = 0;
    json inputChecksums = json::object();
    json outputs = json::array();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void recordInput(const std::string& path) { inputChecksums[path] = fileChecksum(path); }
    void recordOutput(const std::string& path) { outputs.push_back(path); }

    json close() const {
        auto wallMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        return json{{"command", argv},
                    {"version", kToolVersion},
                    {"seed", seed},
                    {"input_checksums", inputChecksums},
                    {"outputs", outputs},
                    {"wall_ms", wallMs}};
    }
};

void emitComplex(const stw::FacetHypergraph& K, const std::string& out,
                 const std::string& format, Manifest& manifest) {
    if (out.empty()) {
        if (format == "json")
            stw::writeFacetsJson(std::cout, K);
        else
            stw::writeFacetsText(std::cout, K);
    } else {
        stw::writeFacetsFile(out, K);
        manifest.recordOutput(out);
    }
}

stw::FacetHypergraph loadInput(const std::string& path, Manifest& manifest) {
    manifest.recordInput(path);
    return stw::readFacetsFile(path);
}

json certificateJson(const stw::SolverCertificate& cert) {
    return json{{"value", cert.value},
                {"witness", cert.witness},
                {"status", stw::to_string(cert.status)},
                {"nodes", cert.nodesExplored},
                {"elapsed_ms", cert.elapsedMs},
                {"note", cert.note}};
}

std::vector<std::string> splitList(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

stw::FacetHypergraph parseStart(const std::string& start, Manifest& manifest) {
    if (start.rfind("cyclic:", 0) == 0) {
        std::string rest = start.substr(7);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("expected cyclic:<d>:<n>");
        int d = std::stoi(rest.substr(0, colon));
        int n = std::stoi(rest.substr(colon + 1));
        return stw::cyclic_polytope(d, n);
    }
    return loadInput(start, manifest);
}

int runConstruct(const std::string& family, int d, int n, int k,
                 const std::string& out, const std::string& format,
                 Manifest& manifest) {
    std::optional<stw::FacetHypergraph> K;
    if (family == "simplex") {
        K = stw::simplex_boundary(d);
    } else if (family == "cross") {
        K = stw::cross_polytope_boundary(d).hypergraph;
    } else if (family == "cyclic") {
        K = stw::cyclic_polytope(d, n);
    } else if (family == "stacked-ball") {
        auto ball = stw::stacked_ball_path(d, n);
        std::vector<stw::Facet> fs = ball.facets;
        K = stw::FacetHypergraph::canonicalize(std::move(fs));
    } else if (family == "stacked-sphere") {
        K = stw::ball_boundary(stw::stacked_ball_path(d + 1, n));
    } else if (family == "cdplus") {
        K = stw::cd_plus(d).hypergraph;
    } else if (family == "x") {
        K = stw::x_construction(d, k).hypergraph;
    } else if (family == "icosahedron") {
        K = stw::icosahedron_boundary();
    } else if (family == "torus") {
        K = stw::seven_vertex_torus();
    } else if (family == "k21") {
        K = stw::build_k21();
    } else if (family == "n21") {
        K = stw::n21();
    } else if (family == "y") {
        auto script = stw::load_extension_script();
        K = stw::y_construction(stw::build_k21(script).k21, script.removedFacet, k)
                .hypergraph;
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return 2;
    }
    emitComplex(*K, out, format, manifest);
    std::cerr << manifest.close().dump(2) << "\n";
    return 0;
}

int runCompute(const std::string& what, const std::string& in, stw::Budget budget,
               std::uint64_t seed, const std::string& out, Manifest& manifest) {
    stw::FacetHypergraph K = loadInput(in, manifest);
    json report{{"what", what}, {"n", K.vertexCount()}, {"facets", K.facetCount()}};

    if (what == "tau") {
        report["certificate"] = certificateJson(stw::transversal_number(K, budget));
    } else if (what == "alpha") {
        report["certificate"] = certificateJson(stw::independence_number(K, budget));
    } else if (what == "chi") {
        report["certificate"] = certificateJson(stw::chromatic_number(K, budget));
    } else if (what == "two-col") {
        auto coloring = stw::two_colorable(K);
        report["two_colorable"] = coloring.has_value();
        if (coloring) report["coloring"] = *coloring;
    } else if (what == "eps") {
        report["epsilon"] = stw::epsilon(K);
    } else {
        std::cerr << "unknown computation: " << what << "\n";
        return 2;
    }
    report["manifest"] = manifest.close();
    (void)seed;
    if (out.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream o(out);
        o << report.dump(2) << "\n";
        manifest.recordOutput(out);
        std::cout << report.dump(2) << "\n";
    }
    return 0;
}

int runVerify(const std::string& in, const std::string& checkList, Manifest& manifest) {
    stw::FacetHypergraph K = loadInput(in, manifest);
    json checks = json::array();
    bool allPass = true;

    for (const std::string& name : splitList(checkList)) {
        json entry{{"check", name}};
        bool pass = false;
        try {
            if (name == "manifold3") {
                pass = stw::manifold_check_3d(K);
            } else if (name == "homology") {
                auto profile = stw::homology(K);
                pass = profile.isSpherical(K.dim());
                entry["betti"] = profile.betti;
            } else if (name.rfind("neighborly:", 0) == 0) {
                pass = stw::is_k_neighborly(K, std::stoi(name.substr(11)));
            } else if (name == "dehn-sommerville") {
                pass = stw::neighborly3_face_check(K);
            } else {
                std::cerr << "unknown check: " << name << "\n";
                return 2;
            }
        } catch (const std::exception& e) {
            entry["error"] = e.what();
        }
        entry["pass"] = pass;
        allPass = allPass && pass;
        checks.push_back(entry);
    }

    json report{{"input", in}, {"checks", checks}, {"all_pass", allPass},
                {"manifest", manifest.close()}};
    std::cout << report.dump(2) << "\n";
    return allPass ? 0 : 1;
}

int runVerifyK21(const std::string& emitDir, stw::Budget budget, Manifest& manifest) {
    std::string scriptPath = stw::default_data_dir() + "/k21_extension_script.txt";
    manifest.recordInput(scriptPath);
    auto script = stw::load_extension_script(scriptPath);
    auto report = stw::verify_k21(script, budget);

    if (!emitDir.empty()) {
        fs::create_directories(emitDir);
        auto K = stw::build_k21(script).k21;
        auto N = stw::n21(K, script.removedFacet);
        std::string kPath = emitDir + "/K_21.facets";
        std::string nPath = emitDir + "/N_21.facets";
        stw::writeFacetsFile(kPath, K);
        stw::writeFacetsFile(nPath, N);
        manifest.recordOutput(kPath);
        manifest.recordOutput(nPath);
    }

    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json out{{"checks", checks},
             {"all_pass", report.allPass()},
             {"tau_n21", certificateJson(report.tauN21)},
             {"tau_k21", certificateJson(report.tauK21)},
             {"manifest", manifest.close()}};
    std::cout << out.dump(2) << "\n";
    return report.allPass() ? 0 : 1;
}

int runSearch(const std::string& start, int targetN, int samples, int beam,
              std::uint64_t seed, std::int64_t budgetMs, int threads,
              const std::string& screenList, const std::string& outDir,
              Manifest& manifest) {
    stw::SearchConfig cfg{parseStart(start, manifest), targetN, samples, beam,
                          seed,  budgetMs,             threads};
    auto result = stw::extension_search(cfg);

    if (!outDir.empty()) fs::create_directories(outDir);
    json stages = json::array();
    for (const auto& stage : result.stageWinners) {
        json entry{{"n", stage.n},
                   {"epsilon", stage.epsilonScore},
                   {"candidate", stage.candidateIndex},
                   {"facets", stage.sphere.facetCount()}};
        if (!outDir.empty()) {
            std::string path = outDir + "/stage_" + std::to_string(stage.n) + ".facets";
            stw::writeFacetsFile(path, stage.sphere);
            manifest.recordOutput(path);
            entry["file"] = path;
        }
        stages.push_back(entry);
    }

    json report{{"stages", stages}, {"truncated", result.truncated}};
    if (!result.stageWinners.empty() && !screenList.empty()) {
        const auto& finalSphere = result.stageWinners.back().sphere;
        auto screenReport = stw::screen(finalSphere, stw::Budget{500'000'000, budgetMs});
        json screenJson;
        for (const std::string& item : splitList(screenList)) {
            if (item == "tau") {
                screenJson["tau"] = certificateJson(screenReport.tau);
                screenJson["ratio"] = screenReport.ratio;
            } else if (item == "2col") {
                screenJson["two_colorable"] = screenReport.twoColorable;
            } else if (item == "eps") {
                screenJson["epsilon"] = screenReport.epsilonValue;
            } else {
                std::cerr << "unknown screen item: " << item << "\n";
                return 2;
            }
        }
        report["screen"] = screenJson;
    }
    report["manifest"] = manifest.close();
    std::cout << report.dump(2) << "\n";
    if (!outDir.empty()) {
        std::ofstream log(outDir + "/search_log.json");
        log << report.dump(2) << "\n";
    }
    return 0;
}

int runIso(const std::string& a, const std::string& b, Manifest& manifest) {
    stw::FacetHypergraph H1 = loadInput(a, manifest);
    stw::FacetHypergraph H2 = loadInput(b, manifest);
    auto mapping = stw::isomorphic(H1, H2);
    json report{{"isomorphic", mapping.has_value()}, {"manifest", manifest.close()}};
    if (mapping) report["mapping"] = *mapping;
    std::cout << report.dump(2) << "\n";
    return mapping ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplicial sphere transversal workbench"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::int64_t budgetMs = 600'000;
    int threads = 1;
    app.add_option("--seed", seed, "master RNG seed");
    app.add_option("--budget-ms", budgetMs, "solver wall-clock budget");
    app.add_option("--threads", threads, "worker cap");

    std::string family, format = "text", out;
    int d = 3, n = 0, k = 1;
    auto* construct = app.add_subcommand("construct", "emit a named complex");
    construct->add_option("--family", family)->required();
    construct->add_option("--d", d);
    construct->add_option("--n", n);
    construct->add_option("--k", k);
    construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    construct->add_option("--out", out);

    std::string what, inPath;
    auto* compute = app.add_subcommand("compute", "compute an invariant");
    compute->add_option("--what", what)
        ->required()
        ->check(CLI::IsMember({"tau", "alpha", "chi", "two-col", "eps"}));
    compute->add_option("--in", inPath)->required();
    compute->add_option("--out", out);

    std::string checkList = "manifold3,homology";
    auto* verify = app.add_subcommand("verify", "run topology checks");
    verify->add_option("--in", inPath)->required();
    verify->add_option("--checks", checkList);

    std::string emitDir;
    auto* verifyK21 = app.add_subcommand("verify-k21", "replay and verify the 21-vertex sphere");
    verifyK21->add_option("--emit", emitDir);

    std::string start, screenList;
    int targetN = 0, samples = 100, beam = 1;
    auto* search = app.add_subcommand("search", "epsilon-minimizing extension search");
    search->add_option("--start", start)->required();
    search->add_option("--target-n", targetN)->required();
    search->add_option("--samples", samples);
    search->add_option("--beam", beam);
    search->add_option("--screen", screenList);
    search->add_option("--out", out);

    std::string isoA, isoB;
    auto* iso = app.add_subcommand("iso", "test complex isomorphism");
    iso->add_option("first", isoA)->required();
    iso->add_option("second", isoB)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Manifest manifest;
    for (int i = 0; i < argc; ++i) manifest.argv.emplace_back(argv[i]);
    manifest.seed = seed;
    stw::Budget budget{500'000'000, budgetMs};

    try {
        if (construct->parsed())
            return runConstruct(family, d, n, k, out, format, manifest);
        if (compute->parsed())
            return runCompute(what, inPath, budget, seed, out, manifest);
        if (verify->parsed()) return runVerify(inPath, checkList, manifest);
        if (verifyK21->parsed()) return runVerifyK21(emitDir, budget, manifest);
        if (search->parsed())
            return runSearch(start, targetN, samples, beam, seed, budgetMs, threads,
                             screenList, out, manifest);
        if (iso->parsed()) return runIso(isoA, isoB, manifest);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
