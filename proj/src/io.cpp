#include "stw/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stw {

FacetHypergraph readFacetsText(std::istream& in) {
    std::vector<std::vector<int>> raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> verts;
        int v;
        while (ls >> v) verts.push_back(v);
        if (!ls.eof()) {
            throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                     ": expected integers");
        }
        if (!verts.empty()) raw.push_back(std::move(verts));
    }
    if (raw.empty()) throw std::runtime_error("no facets");
    return FacetHypergraph::canonicalize(raw);
}

void writeFacetsText(std::ostream& out, const FacetHypergraph& K) {
    out << "# n=" << K.vertexCount() << " d=" << K.dim() << "\n";
    for (const auto& f : K.facets()) {
        bool first = true;
        for (int v : f.vertices()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << "\n";
    }
}

FacetHypergraph readFacetsJson(std::istream& in) {
    nlohmann::json j;
    in >> j;
    std::vector<std::vector<int>> raw = j.at("facets");
    FacetHypergraph K = FacetHypergraph::canonicalize(raw);
    if (j.contains("n") && j["n"].get<int>() != K.vertexCount())
        throw std::runtime_error("declared n does not match facet labels");
    return K;
}

void writeFacetsJson(std::ostream& out, const FacetHypergraph& K) {
    nlohmann::json j;
    j["n"] = K.vertexCount();
    auto& facets = j["facets"] = nlohmann::json::array();
    for (const auto& f : K.facets()) facets.push_back(f.vertices());
    out << j.dump(2) << "\n";
}

namespace {

bool hasJsonExtension(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

}  // namespace

FacetHypergraph readFacetsFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return hasJsonExtension(path) ? readFacetsJson(in) : readFacetsText(in);
}

void writeFacetsFile(const std::string& path, const FacetHypergraph& K) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    if (hasJsonExtension(path))
        writeFacetsJson(out, K);
    else
        writeFacetsText(out, K);
}

}  // namespace stw
