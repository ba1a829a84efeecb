#pragma once

#include <optional>
#include <string>
#include <utility>

#include "quasitri/complex.hpp"
#include "quasitri/integer_matrix.hpp"

namespace quasitri::catalog {

// Handle for one solid torus of the catalog: families 1..9, where families
// 1..3 also exist undecorated ("base": the 7-vertex tori themselves).
struct TorusId {
    int family = 1;
    std::optional<int> index;   // nullopt = base (families 1..3 only)

    bool operator==(const TorusId&) const = default;
    bool operator<(const TorusId& o) const {
        if (family != o.family) return family < o.family;
        return index.value_or(-1) < o.index.value_or(-1);
    }
    std::string to_string() const;          // "T2" or "T4,0"
    static TorusId parse(const std::string& s);
};

struct CatalogEntry {
    TorusId id;
    SimplicialComplex complex;
    std::pair<Int, Int> killed;   // primitive, sign-normalized
    long long f0 = 0;
};

// The unique 7-vertex triangulation of S^1 x S^1 (14 triangles on Z_7).
const SimplicialComplex& seven_vertex_torus();

// The three 7-vertex solid tori with that boundary.
const SimplicialComplex& base_torus(int j);   // j = 1, 2, 3

// Resolves any catalog id; results are cached.  Throws on invalid ids
// (family outside 1..9, base form for families 4..9, negative index).
const CatalogEntry& solid_torus(const TorusId& id);

// The expected killed class per catalog family.
std::pair<Int, Int> expected_killed(int family);
// Expected vertex count per family rule.
long long expected_f0(const TorusId& id);

// Vertex maps f and g on the catalog universe.  Total on core vertices and
// on the u/v/w, q/r/s, a/b/c families; throw elsewhere.
VertexId map_f(const VertexId& v);
VertexId map_g(const VertexId& v);
SimplicialComplex apply_f(const SimplicialComplex& X);
SimplicialComplex apply_g(const SimplicialComplex& X);

// The triangulated 3-balls behind the quotient families (family 4 or 7).
SimplicialComplex ball(int family, int n);
// Their declared boundary pieces: {C1, C2, C3} resp. {E1, E2, E3}.
std::array<SimplicialComplex, 3> ball_boundary_pieces(int family, int n);

// n-indexed labels used across the catalog.
VertexId core_vertex(int i);                       // "0".."6"
VertexId aux_vertex(char letter, int j, int n);    // u/v/w_{j,n}
VertexId seq_vertex(char letter, int n, int i);    // q/r/s_{n,i}, a/b/c_{n,i}

} // namespace quasitri::catalog
