#include "quasitri/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace quasitri {

std::string to_facet_text(const SimplicialComplex& X) {
    if (X.is_empty_simplex_complex())
        throw std::invalid_argument("to_facet_text: {∅} has no facet-line form");
    std::vector<std::string> lines;
    for (const auto& f : X.facets()) {
        std::string line;
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) line += ' ';
            line += f[i].label();
        }
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) { out += l; out += '\n'; }
    return out;
}

SimplicialComplex from_facet_text(const std::string& text) {
    std::vector<Simplex> facets;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<VertexId> vs;
        std::string tok;
        while (ls >> tok) vs.emplace_back(tok);
        if (!vs.empty()) facets.push_back(make_simplex(std::move(vs)));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex load_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_facet_text(buf.str());
}

void save_facet_file(const SimplicialComplex& X, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_facet_text(X);
}

std::string to_json(const SimplicialComplex& X, int indent) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : X.vertices()) j["vertices"].push_back(v.label());
    j["facets"] = nlohmann::ordered_json::array();
    for (const auto& f : X.facets()) {
        nlohmann::ordered_json jf = nlohmann::ordered_json::array();
        for (const auto& v : f) jf.push_back(v.label());
        j["facets"].push_back(std::move(jf));
    }
    return j.dump(indent);
}

SimplicialComplex from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    std::vector<Simplex> facets;
    for (const auto& jf : j.at("facets")) {
        std::vector<VertexId> vs;
        for (const auto& jv : jf) vs.emplace_back(jv.get<std::string>());
        facets.push_back(make_simplex(std::move(vs)));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

std::string data_dir() {
    if (const char* env = std::getenv("QUASITRI_DATA"); env && *env)
        return env;
#ifdef QUASITRI_DATA_DIR
    return QUASITRI_DATA_DIR;
#else
    return "data";
#endif
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

} // namespace quasitri
