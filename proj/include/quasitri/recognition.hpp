#pragma once

#include <cstdint>
#include <string>

#include "quasitri/complex.hpp"

namespace quasitri::recog {

// Exact 2-sphere / 2-ball tests: connectivity, edge degrees, vertex links,
// Euler characteristic.
bool is_sphere_2d(const SimplicialComplex& X);
bool is_ball_2d(const SimplicialComplex& X);

// A 1-complex that is a single closed cycle (resp. a single path).
bool is_single_cycle(const SimplicialComplex& X);
bool is_single_path(const SimplicialComplex& X);

struct LinkCertificate {
    VertexId vertex;
    std::string status;    // "certified" | "uncertified" | "failed"
    long long moves = 0;
};

struct ManifoldReport {
    bool closed = false;
    std::string detail;
    std::vector<LinkCertificate> links;   // d = 4 only
};

// Closed-manifold test.  Exact for d <= 3 (vertex links are spheres);
// for d = 4 every vertex link is filtered by exact 3-manifold + S^3-homology
// checks and then certified by bistellar reduction, one status per vertex.
// `closed` is false only on a hard failure; links left "uncertified" by the
// budget are reported but do not refute the input.
ManifoldReport is_closed_manifold(const SimplicialComplex& X, int d,
                                  long long budget = 100000, uint64_t seed = 0);

// Certify the vertex links of a pure 4-dimensional complex, in parallel
// (each run is pure and seed-deterministic, so the result is stable).
std::vector<LinkCertificate> certify_links_4d(const SimplicialComplex& X,
                                              long long budget = 100000,
                                              uint64_t seed = 0);

// One bistellar-reduction run on a closed triangulated 3-manifold.
struct ReductionCertificate {
    enum class Verdict { CertifiedSphere, BudgetExhausted };
    std::vector<std::pair<Simplex, Simplex>> moves;
    SimplicialComplex terminal;
    Verdict verdict = Verdict::BudgetExhausted;
    long long moves_tried = 0;

    bool certified() const { return verdict == Verdict::CertifiedSphere; }
    std::string to_json() const;
};

// Greedy descent on (f_3, f_0) preferring 3- then 2-moves, with heated
// 1-moves after 50 stagnant steps; deterministic for a fixed seed.
ReductionCertificate bistellar_reduce(const SimplicialComplex& X,
                                      long long budget = 100000,
                                      uint64_t seed = 0);

// Replays a certificate from `start`; throws if a move is illegal.
SimplicialComplex replay(const SimplicialComplex& start,
                         const std::vector<std::pair<Simplex, Simplex>>& moves);

bool is_boundary_of_simplex(const SimplicialComplex& X);

// Exhaustive search for pure 3-complexes on the 7 core vertices whose
// boundary is exactly the 7-vertex torus and which pass the solid-torus
// battery (manifold links, homology of S^1 x D^2).
std::vector<SimplicialComplex> enumerate_solid_tori_7();

// Groups complexes into isomorphism classes (indices into the input).
std::vector<std::vector<size_t>>
isomorphism_classes(const std::vector<SimplicialComplex>& xs);

} // namespace quasitri::recog
