// Command-line front door: catalog dumps, assembly, verification,
// enumeration, census regression, exports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quasitri/assembly.hpp"
#include "quasitri/catalog.hpp"
#include "quasitri/charfun.hpp"
#include "quasitri/io.hpp"
#include "quasitri/recognition.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using namespace quasitri;

uint64_t env_seed(uint64_t cli_seed, bool seed_given) {
    if (seed_given) return cli_seed;
    if (const char* s = std::getenv("QUASITRI_SEED"); s && *s)
        return (uint64_t)std::strtoull(s, nullptr, 10);
    return 0;
}

void print_header(const std::string& invocation, uint64_t seed, const std::string& input) {
    std::cerr << "# quasitri " << kVersion << " seed=" << seed
              << " input=fnv64:" << fnv1a_hex(input)
              << " cmd=" << invocation << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
}

bool glob_match(const std::string& pattern, const std::string& s) {
    // tiny *-only glob, enough for --filter '5.*'
    size_t p = 0, i = 0, star = std::string::npos, mark = 0;
    while (i < s.size()) {
        if (p < pattern.size() && (pattern[p] == s[i])) { ++p; ++i; }
        else if (p < pattern.size() && pattern[p] == '*') { star = p++; mark = i; }
        else if (star != std::string::npos) { p = star + 1; i = ++mark; }
        else return false;
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasitri: equilibrium triangulations of quasitoric 4-manifolds"};
    app.require_subcommand(1);

    std::string invocation;
    for (int i = 0; i < argc; ++i) invocation += std::string(i ? " " : "") + argv[i];

    uint64_t seed = 0;
    bool seed_given = false;

    // catalog dump <id>
    auto* cat = app.add_subcommand("catalog", "emit catalog complexes");
    std::string cat_id = "T1";
    std::string cat_out, cat_format = "facets";
    auto* cat_dump = cat->add_subcommand("dump", "dump one catalog entry");
    cat_dump->add_option("id", cat_id, "torus id, e.g. T (the torus), T1, T4,0")->required();
    cat_dump->add_option("--out", cat_out, "output path (default stdout)");
    cat_dump->add_option("--format", cat_format, "facets|json")->check(CLI::IsMember({"facets", "json"}));

    // assemble
    auto* asmb = app.add_subcommand("assemble", "build an equilibrium triangulation");
    std::string asmb_census, asmb_out;
    std::vector<std::string> asmb_tori;
    asmb->add_option("--census", asmb_census, "census key, e.g. 6.8");
    asmb->add_option("--tori", asmb_tori, "explicit torus ids in polygon order");
    asmb->add_option("--out", asmb_out, "output path (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "verify a closed-manifold triangulation");
    std::string ver_in, ver_report = "text";
    int ver_dim = 4;
    long long ver_budget = 100000;
    bool ver_strict = false;
    ver->add_option("--in", ver_in, "facet file")->required();
    ver->add_option("--dim", ver_dim, "dimension (3 or 4)");
    ver->add_option("--report", ver_report, "text|json")->check(CLI::IsMember({"text", "json"}));
    ver->add_option("--budget", ver_budget, "bistellar budget per link");
    ver->add_flag("--strict", ver_strict, "fail on uncertified 3-sphere links");
    ver->add_option("--seed", seed, "reduction seed")->each([&](const std::string&) { seed_given = true; });

    // homology
    auto* hom = app.add_subcommand("homology", "integral homology of a facet file");
    std::string hom_in;
    bool hom_json = false;
    hom->add_option("--in", hom_in, "facet file")->required();
    hom->add_flag("--json", hom_json, "machine-readable output");

    // recognize
    auto* rec = app.add_subcommand("recognize", "bistellar 3-sphere certification");
    std::string rec_in;
    long long rec_budget = 100000;
    rec->add_option("--in", rec_in, "facet file")->required();
    int rec_dim = 3;
    rec->add_option("--dim", rec_dim, "dimension (3 only)");
    rec->add_option("--budget", rec_budget, "move budget");
    rec->add_option("--seed", seed, "seed")->each([&](const std::string&) { seed_given = true; });

    // charfun enumerate
    auto* cf = app.add_subcommand("charfun", "characteristic function utilities");
    auto* cfe = cf->add_subcommand("enumerate", "enumerate characteristic data");
    std::string cf_polygon = "hexagon", cf_bounds = "-3..3";
    bool cf_complete_only = false, cf_json = false;
    cfe->add_option("--polygon", cf_polygon, "rectangle|pentagon|hexagon")
        ->check(CLI::IsMember({"rectangle", "pentagon", "hexagon"}));
    cfe->add_option("--bounds", cf_bounds, "parameter range, e.g. -3..3");
    cfe->add_flag("--complete-only", cf_complete_only, "keep complete pairs only");
    cfe->add_flag("--json", cf_json, "machine-readable output");

    // census
    auto* cen = app.add_subcommand("census", "verify the worked-example census");
    std::string cen_filter = "*";
    bool cen_links = false;
    long long cen_budget = 100000;
    cen->add_option("--filter", cen_filter, "key glob, e.g. '5.*'");
    cen->add_flag("--links", cen_links, "also certify every vertex link (slow)");
    cen->add_option("--budget", cen_budget, "bistellar budget per link");
    cen->add_option("--seed", seed, "seed")->each([&](const std::string&) { seed_given = true; });

    CLI11_PARSE(app, argc, argv);
    uint64_t run_seed = env_seed(seed, seed_given);

    try {
        if (cat_dump->parsed()) {
            print_header(invocation, run_seed, cat_id);
            SimplicialComplex X = (cat_id == "T")
                ? catalog::seven_vertex_torus()
                : catalog::solid_torus(catalog::TorusId::parse(cat_id)).complex;
            emit(cat_format == "json" ? to_json(X, 2) + "\n" : to_facet_text(X), cat_out);
            return 0;
        }
        if (asmb->parsed()) {
            assembly::AssemblySpec spec;
            if (!asmb_census.empty()) {
                spec.tori = assembly::census_entry(asmb_census).tori;
            } else if (!asmb_tori.empty()) {
                for (const auto& t : asmb_tori) spec.tori.push_back(catalog::TorusId::parse(t));
            } else {
                std::cerr << "assemble: need --census or --tori\n";
                return 2;
            }
            std::string in_desc = asmb_census;
            for (const auto& id : spec.tori) in_desc += " " + id.to_string();
            print_header(invocation, run_seed, in_desc);
            emit(to_facet_text(assembly::build_equilibrium(spec)), asmb_out);
            return 0;
        }
        if (ver->parsed()) {
            std::string bytes = slurp(ver_in);
            print_header(invocation, run_seed, bytes);
            SimplicialComplex X = from_facet_text(bytes);
            if (ver_dim == 3) {
                auto repc = recog::is_closed_manifold(X, 3);
                if (!repc.closed) {
                    std::cout << "not a closed 3-manifold: " << repc.detail << "\n";
                    return 1;
                }
                std::cout << "closed 3-manifold; homology " << homology(X).to_string() << "\n";
                return 0;
            }
            auto rep = assembly::verify_closed_4manifold(X, ver_budget, run_seed);
            if (ver_report == "json") {
                std::cout << rep.to_json() << "\n";
            } else {
                std::cout << "f-vector " << rep.f_vector.to_string()
                          << " chi=" << rep.euler << "\n"
                          << "homology " << rep.homology.to_string() << "\n";
                for (const auto& l : rep.links)
                    std::cout << "link " << l.vertex.label() << ": " << l.status << "\n";
            }
            if (rep.any_link_failed) return 1;
            if (ver_strict && !rep.all_links_certified) return 1;
            return 0;
        }
        if (hom->parsed()) {
            std::string bytes = slurp(hom_in);
            print_header(invocation, run_seed, bytes);
            auto H = homology(from_facet_text(bytes));
            std::cout << (hom_json ? H.to_json() : H.to_string()) << "\n";
            return 0;
        }
        if (rec->parsed()) {
            if (rec_dim != 3) {
                std::cerr << "recognize: only --dim 3 is supported\n";
                return 2;
            }
            std::string bytes = slurp(rec_in);
            print_header(invocation, run_seed, bytes);
            auto cert = recog::bistellar_reduce(from_facet_text(bytes), rec_budget, run_seed);
            std::cout << cert.to_json() << "\n";
            return cert.certified() ? 0 : 1;
        }
        if (cfe->parsed()) {
            print_header(invocation, run_seed, cf_polygon + " " + cf_bounds);
            long long lo = -3, hi = 3;
            if (auto dots = cf_bounds.find(".."); dots != std::string::npos) {
                lo = std::stoll(cf_bounds.substr(0, dots));
                hi = std::stoll(cf_bounds.substr(dots + 2));
            }
            long long bound = std::max(std::llabs(lo), std::llabs(hi));
            nlohmann::ordered_json out = nlohmann::ordered_json::array();
            auto row = [&](std::initializer_list<std::pair<const char*, long long>> kv, bool complete) {
                nlohmann::ordered_json j;
                for (auto& [k, v] : kv) j[k] = v;
                j["complete"] = complete;
                out.push_back(std::move(j));
            };
            if (cf_polygon == "rectangle") {
                for (const auto& s : charfun::enumerate_rectangle(bound))
                    if (!cf_complete_only || s.complete)
                        row({{"k", s.k}, {"l", s.l}}, s.complete);
            } else if (cf_polygon == "pentagon") {
                for (const auto& s : charfun::enumerate_pentagon(bound, bound + 1))
                    if (!cf_complete_only || s.complete)
                        row({{"k", s.k}, {"l", s.l}, {"a", s.a}, {"b", s.b}}, s.complete);
            } else {
                for (const auto& s : charfun::enumerate_hexagon(bound, 1, bound))
                    if (!cf_complete_only || s.complete)
                        row({{"k", s.k}, {"l", s.l}, {"a", s.a}, {"b", s.b},
                             {"c", s.c}, {"d", s.d}}, s.complete);
                auto disc = charfun::hexagon_case_discrepancies();
                if (!disc.empty() && !cf_json) {
                    std::cerr << "# note: reference case-table rows differing from the "
                                 "constraint system: " << disc.size() << " case(s)\n";
                }
            }
            if (cf_json) {
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& j : out) std::cout << j.dump() << "\n";
            }
            return 0;
        }
        if (cen->parsed()) {
            print_header(invocation, run_seed, cen_filter);
            bool matched = false, all_ok = true;
            for (const auto& e : assembly::census()) {
                if (!glob_match(cen_filter, e.key)) continue;
                matched = true;
                auto v = assembly::verify_census_entry(e, cen_links, cen_budget, run_seed);
                std::cout << e.key << "  m=" << e.polygon << "  f0=" << v.f0_built
                          << " (expected " << e.f0 << ")  " << v.homology
                          << (e.notes.empty() ? "" : "  [" + e.notes + "]")
                          << (v.ok ? "  ok" : "  FAIL") << "\n";
                for (const auto& f : v.failures) std::cout << "    " << f << "\n";
                if (cen_links)
                    std::cout << "    links: " << v.links_certified << " certified, "
                              << v.links_uncertified << " uncertified, "
                              << v.links_failed << " failed\n";
                all_ok = all_ok && v.ok;
            }
            if (!matched) {
                std::cerr << "census: no key matches '" << cen_filter << "'; available:";
                for (const auto& k : assembly::census_keys()) std::cerr << " " << k;
                std::cerr << "\n";
                return 2;
            }
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
