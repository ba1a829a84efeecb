#pragma once

#include <array>
#include <optional>
#include <string>

#include "quasitri/catalog.hpp"
#include "quasitri/integer_matrix.hpp"

namespace quasitri::charfun {

using Vec2 = std::pair<Int, Int>;

// Characteristic data of an m-gon: one primitive vector per edge, adjacent
// pairs (cyclically) forming a Z^2 basis.
struct CharacteristicPair {
    std::vector<Vec2> vectors;

    size_t edge_count() const { return vectors.size(); }
};

bool validate(const CharacteristicPair& pair);

// Completeness of the induced fan: all adjacent cones nonsingular, turning
// consistently, winding exactly once around the origin.  Exact integer test.
bool is_complete(const CharacteristicPair& pair);

struct LensParams {
    Int p;
    Int q;        // reduced mod |p| when p != 0
};

// Gluing parameters of the sector spanned by edges i and j:
// p = det(xi_j over xi_i), q = det((r,s), xi_j) for any (r,s) with
// det((r,s), xi_i) = 1.  Throws when xi_i is not primitive.  The choice
// independence of q (mod p) is asserted with a second solution.
LensParams lens_parameters(const Vec2& xi_i, const Vec2& xi_j);

// --- Diophantine enumerations of the polygon families -----------------------

struct RectangleSolution {
    long long k = 0, l = 0;
    bool complete = false;
};
// Solutions of k*l - 1 = ±1 with |k|, |l| <= bound.
std::vector<RectangleSolution> enumerate_rectangle(long long bound = 4);

struct PentagonSolution {
    long long k = 0, l = 0, a = 0, b = 0;
    bool complete = false;
};
// Solutions of a - b*l = 1, b - a*k = 1 with |k|, |l| <= kl_bound and
// |a| <= a_bound.
std::vector<PentagonSolution> enumerate_pentagon(long long kl_bound = 3,
                                                 long long a_bound = 4);
bool pentagon_solvable(long long k, long long l);

struct HexagonSolution {
    long long k = 0, l = 0, a = 0, b = 0, c = 0, d = 0;
    bool complete = false;
};
// Solutions of b - a*k = 1, a*d - b*c = 1, c - d*l = 1 with k in
// [-k_bound, k_bound], l in [-l_bound, l_bound], |a|, |c| <= ac_bound.
std::vector<HexagonSolution> enumerate_hexagon(long long k_bound = 3,
                                               long long l_bound = 1,
                                               long long ac_bound = 3);

// Reference hexagon case table the enumeration is diffed against, keyed by
// (k, l); empty when the case is not tabulated.
std::vector<std::array<long long, 4>> hexagon_reference_rows(long long k, long long l);

struct CaseDiscrepancy {
    long long k = 0, l = 0;
    std::vector<std::array<long long, 4>> missing;  // tabulated but not derivable
    std::vector<std::array<long long, 4>> extra;    // derivable but not tabulated
};
// Compares the enumeration (the constraint system is authoritative) against
// the reference table within its bounds.
std::vector<CaseDiscrepancy> hexagon_case_discrepancies();

// Inverts the killed-class table: which catalog family kills ±v.  Throws
// "no catalog torus kills this class" for anything else, e.g. (4,1).
int torus_for_vector(const Vec2& v);

// Assigns concrete instances for one assembly: families 1..3 hand out the
// base torus first and then indices 7, 8, ...; families 4..9 hand out
// 0, 1, ... (keeps the vertex sets of repeated families disjoint).
class TorusAllocator {
public:
    catalog::TorusId allocate(const Vec2& v);

private:
    std::map<int, int> used_;
};

// A in GL(2,Z) with A*xi_i = ±killed_i for all i, when one exists.
std::optional<std::array<Int, 4>>
find_class_transform(const std::vector<Vec2>& xi,
                     const std::vector<Vec2>& killed);

} // namespace quasitri::charfun
