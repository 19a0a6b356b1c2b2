#ifndef STW_K21_HPP
#define STW_K21_HPP

#include <string>
#include <vector>

#include "stw/constructions.hpp"
#include "stw/hypergraph.hpp"
#include "stw/solvers.hpp"

namespace stw {

/// The checked-in extension script: C_4(7), the ordered stacked balls for
/// stages n = 7..20, the removed facet, and a known minimum transversal.
struct ExtensionScript {
    FacetHypergraph start;
    std::vector<std::pair<int, OrderedStackedBall>> steps;  // (stage n, ball)
    Facet removedFacet;
    std::vector<int> sampleTransversal;
};

/// Locate the data directory: the STW_DATA_DIR environment variable when
/// set, else the compile-time default.
std::string default_data_dir();

/// Parse and validate the script file; the FNV-1a checksum of the file
/// bytes must match the pinned value.
ExtensionScript load_extension_script(const std::string& path = "");

struct ReplayResult {
    FacetHypergraph k21;
    std::vector<long long> stageEpsilon;     // epsilon after each stage (n = 8..21)
    std::vector<long long> stageFacetCount;  // facet count after each stage
};

/// Replay the 14 single-element extensions from C_4(7); every stage ball is
/// validated (subcomplex, stackedness, spanning) and errors name the stage.
ReplayResult build_k21(const ExtensionScript& script);
FacetHypergraph build_k21();

/// K_21 with the facet {2,3,4,5} removed: 188 facets, all vertices covered.
FacetHypergraph n21(const FacetHypergraph& k21, const Facet& removed);
FacetHypergraph n21();

struct K21Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct K21Report {
    std::vector<K21Check> checks;
    SolverCertificate tauN21;
    SolverCertificate tauK21;
    bool allPass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Run every published property check: closed-3-manifold, S^3 homology,
/// 2-neighborliness, face-count identities, epsilon(K_11) = 74,
/// tau(N_21) = tau(K_21) = 11, the recorded transversal, and
/// non-2-colorability.
K21Report verify_k21(const ExtensionScript& script, Budget budget = {});

}  // namespace stw

#endif  // STW_K21_HPP
