#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "quasitri/vertex.hpp"

namespace quasitri {

// f-vector (f_0, ..., f_d) of a complex.
struct FVector {
    std::vector<long long> counts;

    long long euler() const;
    bool operator==(const FVector&) const = default;
    std::string to_string() const;
};

// A finite simplicial complex, identified with its set of inclusion-maximal
// faces (facets).  Values are immutable after construction; every operation
// returns a new complex.
//
// Two degenerate complexes are distinct: the void complex (no faces at all)
// and {∅} (the empty simplex alone).  Both report dimension -1.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Builds a complex from arbitrary vertex sets: duplicates inside a set
    // are merged, subsumed sets are dropped.  from_facets({}) is the void
    // complex, from_facets({{}}) is {∅}.
    static SimplicialComplex from_facets(std::vector<Simplex> facets);

    const std::vector<Simplex>& facets() const { return facets_; }
    int dim() const { return dim_; }
    bool is_void() const { return facets_.empty(); }
    bool is_empty_simplex_complex() const
    { return facets_.size() == 1 && facets_[0].empty(); }

    std::vector<VertexId> vertices() const;
    long long vertex_count() const;

    bool has_face(const Simplex& s) const;
    std::set<Simplex> faces(int k) const;
    std::set<Simplex> all_faces() const;        // every face except ∅
    FVector f_vector() const;
    long long euler_characteristic() const;

    bool is_pure() const;
    bool is_weak_pseudomanifold() const;
    // Ridge incidence of a pure complex: (d-1)-face -> number of facets.
    std::map<Simplex, int> ridge_degrees() const;

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }
    bool operator!=(const SimplicialComplex& o) const { return facets_ != o.facets_; }

private:
    std::vector<Simplex> facets_;  // sorted, subsumption-free
    int dim_ = -1;
};

// --- combinatorial operations ----------------------------------------------

SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma);
SimplicialComplex star(const SimplicialComplex& X, const Simplex& sigma);

// Join X * Y; vertex sets must be disjoint.
SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y);
SimplicialComplex cone(const VertexId& apex, const SimplicialComplex& X);

// Full simplex on `alpha` and its boundary sphere.
SimplicialComplex full_simplex(const Simplex& alpha);
SimplicialComplex boundary_of_simplex(const Simplex& alpha);

// Boundary of a pure weak pseudomanifold: ridges lying in exactly one facet.
SimplicialComplex boundary_complex(const SimplicialComplex& X);

SimplicialComplex induced_subcomplex(const SimplicialComplex& X,
                                     const std::vector<VertexId>& W);
bool is_induced(const SimplicialComplex& X, const SimplicialComplex& Z);

// Stellar subdivision: star the new vertex u in the face alpha.
SimplicialComplex stellar_subdivide(const SimplicialComplex& X,
                                    const Simplex& alpha, const VertexId& u);

// Bistellar move alpha -> beta.  For 0-moves beta is a single new vertex;
// otherwise the induced subcomplex on alpha ⊔ beta must be ᾱ * ∂β and
// dim(alpha) + dim(beta) = dim X.  Throws naming the violated condition.
SimplicialComplex bistellar_move(const SimplicialComplex& X,
                                 const Simplex& alpha, const Simplex& beta);

// Union and intersection of complexes over a common label space.  The
// intersection is the complex of common faces (its facets are generally
// proper faces of both inputs).
SimplicialComplex complex_union(const SimplicialComplex& X, const SimplicialComplex& Y);
SimplicialComplex complex_intersection(const SimplicialComplex& X, const SimplicialComplex& Y);

// Vertex-map image of a complex.  Facets whose image has smaller cardinality
// are collapses; they are applied, normalized and reported, never silent.
struct QuotientResult {
    SimplicialComplex complex;
    std::vector<Simplex> collapsed;   // input facets that lost vertices
};
QuotientResult map_vertices(const SimplicialComplex& X,
                            const std::function<VertexId(const VertexId&)>& f);

// Quotient by a partition of V(X); each class is named after its least member.
QuotientResult quotient(const SimplicialComplex& X,
                        const std::vector<std::vector<VertexId>>& classes);

// Injective relabeling (throws if phi is not injective on V(X) or collapses).
SimplicialComplex relabel(const SimplicialComplex& X,
                          const std::map<VertexId, VertexId>& phi);

// Elementary connected sum along facets sigma1 of X and sigma2 of Y via the
// bijection psi: sigma1 -> sigma2 (Y-side vertices are renamed into X's).
SimplicialComplex connected_sum(const SimplicialComplex& X, const SimplicialComplex& Y,
                                const Simplex& sigma1, const Simplex& sigma2,
                                const std::map<VertexId, VertexId>& psi);

// Isomorphism witness via degree/link-f-vector pruned backtracking.
std::optional<std::map<VertexId, VertexId>>
is_isomorphic(const SimplicialComplex& X, const SimplicialComplex& Y);

// Connected components of the vertex set under the edge graph.
std::vector<std::vector<VertexId>> connected_components(const SimplicialComplex& X);
bool is_connected(const SimplicialComplex& X);

// All legal bistellar moves of X other than 0-moves, as (alpha, beta) pairs.
std::vector<std::pair<Simplex, Simplex>> legal_bistellar_moves(const SimplicialComplex& X);

} // namespace quasitri
