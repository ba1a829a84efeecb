#pragma once

#include <array>
#include <string>
#include <utility>

#include "quasitri/complex.hpp"
#include "quasitri/homology.hpp"

namespace quasitri {

// Finitely presented group: generators g1..gn, relators as words of signed
// 1-based generator indices (+i = gi, -i = gi^-1).
struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;
};

// Edge-path presentation of pi_1(X, base): generators are the edges outside
// a breadth-first spanning tree (visited in vertex order), one relator per
// triangle.  Deterministic given the vertex order.
GroupPresentation edge_path_presentation(const SimplicialComplex& X, const VertexId& base);

HomologyProfile::Group abelianization(const GroupPresentation& P);

// H1(X;Z) coordinates for 1-cycles, exact over the boundary lattice im ∂2.
class H1Coordinates {
public:
    explicit H1Coordinates(const SimplicialComplex& X);

    long long free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }

    // Free-part coordinates of the class of a closed edge path.
    std::vector<Int> free_class_of_loop(const std::vector<VertexId>& loop) const;

private:
    std::vector<Int> chain_of_loop(const std::vector<VertexId>& loop) const;

    std::vector<Simplex> edges_;
    IntegerMatrix v1inv_;            // from SNF(∂1)
    long long rank1_ = 0;            // rank ∂1
    IntegerMatrix u2_;               // from SNF(M), M = kernel-coords of ∂2
    std::vector<Int> d2_;            // diagonal of SNF(M)
    std::vector<int> free_idx_;      // kernel coordinates with d = 0
    long long free_rank_ = 0;
    std::vector<Int> torsion_;
};

// Class of `loop` in the basis (b1, b2) of a free rank-2 H1(X).  Throws if
// the loop is not a closed edge path or the basis does not generate freely.
std::pair<Int, Int> loop_class(const SimplicialComplex& X,
                               const std::vector<VertexId>& loop,
                               const std::vector<VertexId>& basis1,
                               const std::vector<VertexId>& basis2);

// Primitive, sign-normalized generator of ker(H1(∂T) -> H1(T)) for a solid
// torus T with boundary exactly the 7-vertex torus, in coordinates over the
// standard basis loops 0-1-6-0 and 0-2-5-0.
std::pair<Int, Int> killed_class(const SimplicialComplex& T);

// Sign normalization shared with the catalog: first nonzero coordinate > 0,
// divided by the gcd.
std::pair<Int, Int> normalize_class(Int a, Int b);

} // namespace quasitri
