#pragma once

#include <optional>
#include <string>

#include "quasitri/complex.hpp"
#include "quasitri/integer_matrix.hpp"

namespace quasitri {

// Unreduced integral homology, one slot per degree 0..dim:
// H_k = Z^betti ⊕ Z_{t1} ⊕ ... with t1 | t2 | ... (invariant-factor form).
struct HomologyProfile {
    struct Group {
        long long betti = 0;
        std::vector<Int> torsion;
        bool operator==(const Group&) const = default;
        bool is_trivial() const { return betti == 0 && torsion.empty(); }
        bool is_Z(long long rank = 1) const { return betti == rank && torsion.empty(); }
        // order of a finite group; 0 encodes an infinite one
        Int order() const;
        std::string to_string() const;
    };
    std::vector<Group> groups;

    bool operator==(const HomologyProfile&) const = default;
    std::string to_string() const;         // e.g. "H0=Z H1=Z_3 H2=0 H3=Z"
    std::string to_json() const;

    static HomologyProfile sphere(int d);   // (Z, 0, ..., 0, Z); point for d=0
    static HomologyProfile solid_torus();   // (Z; Z; 0; 0)
};

// Oriented boundary matrix ∂_k over the sorted k- and (k-1)-faces.
SparseIntMatrix boundary_matrix(const SimplicialComplex& X, int k);

HomologyProfile homology(const SimplicialComplex& X);

// Coherent orientation of a closed connected weak pseudomanifold: a ±1 per
// facet (in facet order) with cancelling induced ridge orientations, built by
// breadth-first propagation from the least facet.  nullopt = non-orientable.
std::optional<std::vector<int>> orientable(const SimplicialComplex& X);

} // namespace quasitri
