#pragma once

#include <cstdint>
#include <string>

#include "quasitri/catalog.hpp"
#include "quasitri/complex.hpp"
#include "quasitri/group.hpp"
#include "quasitri/homology.hpp"
#include "quasitri/recognition.hpp"

namespace quasitri::assembly {

// A closed 3-manifold produced by gluing two catalog tori along their common
// boundary torus.  `identified` only claims what H1 and orientability
// support: |H1| pins p, the q of a lens space is never asserted.
struct ClosedThreeManifoldReport {
    SimplicialComplex complex;
    HomologyProfile homology;
    bool orientable = false;
    Int h1_order = 0;            // 0 = infinite
    std::string identified;      // "S3", "S2xS1", "RP3", "L(p,.)", "unidentified"
};

ClosedThreeManifoldReport glue_tori(const catalog::TorusId& a, const catalog::TorusId& b);

// Recipe for one equilibrium triangulation: m >= 3 tori (one per polygon
// edge midpoint cone) and m fresh apex labels V1..Vm.
struct AssemblySpec {
    std::vector<catalog::TorusId> tori;
    std::vector<VertexId> apexes;   // defaults to V1..Vm when empty

    size_t edge_count() const { return tori.size(); }
};

// X = ∪_i V_i * (T_{i-1} ∪ T_i), indices mod m.
SimplicialComplex build_equilibrium(const AssemblySpec& spec);

struct LinkStatus {
    VertexId vertex;
    std::string status;    // "certified" | "uncertified" | "failed"
    long long moves = 0;
};

struct FourManifoldReport {
    bool closed_weak_pseudomanifold = false;
    FVector f_vector;
    long long euler = 0;
    HomologyProfile homology;
    std::vector<LinkStatus> links;
    bool all_links_certified = false;
    bool any_link_failed = false;

    std::string to_json() const;
};

// Vertex-link certification of a pure 4-dimensional weak pseudomanifold:
// every link must be an exact closed 3-manifold with the homology of S^3;
// 3-sphere certificates come from bistellar reduction (budget-limited, so
// "uncertified" is a warning, not a failure).
FourManifoldReport verify_closed_4manifold(const SimplicialComplex& X,
                                           long long budget = 100000,
                                           uint64_t seed = 0);

// One row of the shipped example census (one file per polygon family).
struct CensusEntry {
    std::string key;            // "5.1", "6.8", "7.15", ...
    int polygon = 0;            // m
    std::vector<catalog::TorusId> tori;
    std::vector<std::pair<Int, Int>> xi;   // characteristic vectors, edge order
    long long f0 = 0;           // expected vertex count
    std::string f0_sum;         // e.g. "7+3+4"
    std::string manifold;
    std::string notes;
};

// Census rows from data/census/section{5,6,7}.json.
const std::vector<CensusEntry>& census();
const CensusEntry& census_entry(const std::string& key);
std::vector<std::string> census_keys();

struct CensusVerification {
    std::string key;
    bool ok = true;
    std::vector<std::string> failures;
    long long f0_built = 0;
    std::string homology;
    long long links_certified = 0, links_uncertified = 0, links_failed = 0;
};

// Full verification of one census row: f0, homology/chi shape, vertex-link
// certification (optional), sector H1 orders against both killed-class and
// characteristic-vector determinants.
CensusVerification verify_census_entry(const CensusEntry& e, bool certify_links,
                                       long long budget = 100000, uint64_t seed = 0);

} // namespace quasitri::assembly
