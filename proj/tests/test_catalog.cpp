#include <doctest.h>

#include "quasitri/catalog.hpp"
#include "quasitri/group.hpp"
#include "quasitri/homology.hpp"
#include "quasitri/recognition.hpp"
#include "test_helpers.hpp"

using namespace quasitri;
using namespace quasitri::testing;
namespace cat = quasitri::catalog;

TEST_CASE("the 7-vertex torus and its Z7 symmetry") {
    const auto& T = cat::seven_vertex_torus();
    CHECK(T.f_vector() == FVector{{7, 21, 14}});
    std::map<VertexId, VertexId> shift;
    for (int i = 0; i < 7; ++i) shift[VertexId(i)] = VertexId((i + 1) % 7);
    CHECK(relabel(T, shift) == T);
    auto H = homology(T);
    CHECK(H.groups[1].is_Z(2));
}

TEST_CASE("base tori carry their catalog facet lists") {
    CHECK(cat::base_torus(1) == cx({{0, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6},
                                    {0, 4, 5, 6}, {0, 1, 5, 6}, {0, 1, 2, 6}}));
    for (int j = 1; j <= 3; ++j) {
        CHECK(boundary_complex(cat::base_torus(j)) == cat::seven_vertex_torus());
        CHECK(cat::base_torus(j).facets().size() == 7);
    }
}

TEST_CASE("T_{1,0} from the six-step subdivision") {
    auto e = cat::solid_torus({1, 0});
    CHECK(e.f0 == 9);
    CHECK(e.complex.vertex_count() == 9);
    CHECK(boundary_complex(e.complex) == cat::seven_vertex_torus());

    // cross-check: kappa applied to the union of the two cones over the
    // boundaries of B1 = {0123,1234,2345} and B2 = {3456,0456,0156,0126}
    VertexId u = cat::aux_vertex('u', 1, 0), v = cat::aux_vertex('v', 1, 0);
    auto B1 = cx({{0, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 5}});
    auto B2 = cx({{3, 4, 5, 6}, {0, 4, 5, 6}, {0, 1, 5, 6}, {0, 1, 2, 6}});
    auto cones = complex_union(cone(u, boundary_complex(B1)), cone(v, boundary_complex(B2)));
    auto alt = bistellar_move(cones, sx({3, 4, 5}), make_simplex({u, v}));
    CHECK(alt == e.complex);
}

TEST_CASE("vertex maps f and g") {
    CHECK(cat::map_g(cat::aux_vertex('u', 1, 3)) == cat::aux_vertex('u', 2, 6));
    CHECK(cat::map_g(cat::seq_vertex('q', 5, 2)) == cat::seq_vertex('r', 10, 2));
    CHECK(cat::map_g(cat::seq_vertex('s', 1, 4)) == cat::seq_vertex('q', 2, 4));
    CHECK(cat::map_f(cat::seq_vertex('a', 0, 1)) == cat::seq_vertex('a', 1, 1));
    CHECK(cat::map_g(cat::aux_vertex('w', 9, 1)) == cat::aux_vertex('w', 7, 2));
    CHECK(cat::map_f(VertexId(6)) == VertexId(0));
    CHECK(cat::map_g(VertexId(4)) == VertexId(1));
    CHECK_THROWS_AS((void)cat::map_f(VertexId("V1")), std::invalid_argument);

    // g ∘ f = f^2 ∘ g pointwise on a finite window
    std::vector<VertexId> window;
    for (int i = 0; i < 7; ++i) window.push_back(cat::core_vertex(i));
    for (char L : {'u', 'v', 'w'})
        for (int j = 1; j <= 9; ++j)
            for (int n = 0; n <= 12; ++n) window.push_back(cat::aux_vertex(L, j, n));
    for (char L : {'q', 'r', 's'})
        for (int n = 0; n <= 12; ++n)
            for (int i = 0; i < 7; ++i) window.push_back(cat::seq_vertex(L, n, i));
    for (char L : {'a', 'b', 'c'})
        for (int n = 0; n <= 12; ++n)
            for (int i = 1; i <= 3; ++i) window.push_back(cat::seq_vertex(L, n, i));
    for (const auto& x : window)
        CHECK(cat::map_g(cat::map_f(x)) == cat::map_f(cat::map_f(cat::map_g(x))));
}

TEST_CASE("B_{4,n} is a triangulated 3-ball with the declared boundary") {
    auto B = cat::ball(4, 0);
    CHECK(B.vertex_count() == 25);
    CHECK(B.facets().size() == 70);
    CHECK(B.is_weak_pseudomanifold());
    // homology of a point
    auto H = homology(B);
    CHECK(H.groups[0].is_Z());
    CHECK(H.groups[1].is_trivial());
    CHECK(H.groups[2].is_trivial());
    CHECK(H.groups[3].is_trivial());
    auto bd = boundary_complex(B);
    CHECK(recog::is_sphere_2d(bd));
    auto pieces = cat::ball_boundary_pieces(4, 0);
    CHECK(complex_union(complex_union(pieces[0], pieces[1]), pieces[2]) == bd);
}

TEST_CASE("B_{7,n} is a triangulated 3-ball with the declared boundary") {
    auto B = cat::ball(7, 0);
    CHECK(B.vertex_count() == 19);   // 7 + 5 + 3 + 4
    CHECK(B.facets().size() == 43);
    auto H = homology(B);
    CHECK(H.groups[0].is_Z());
    CHECK(H.groups[1].is_trivial());
    CHECK(H.groups[2].is_trivial());
    auto bd = boundary_complex(B);
    CHECK(recog::is_sphere_2d(bd));
    auto pieces = cat::ball_boundary_pieces(7, 0);
    CHECK(complex_union(complex_union(pieces[0], pieces[1]), pieces[2]) == bd);
}

TEST_CASE("the family-7 quotient matches its explicit facet list") {
    auto e = cat::solid_torus({7, 0});
    VertexId u = cat::aux_vertex('u', 7, 0), v = cat::aux_vertex('v', 7, 0),
             w = cat::aux_vertex('w', 7, 0);
    VertexId a = cat::seq_vertex('a', 0, 1), b = cat::seq_vertex('a', 0, 2),
             c = cat::seq_vertex('a', 0, 3);
    auto V = [&](int i) { return cat::core_vertex(i); };
    std::vector<Simplex> fs;
    for (int i = 0; i < 4; ++i) fs.push_back(make_simplex({u, w, V(i), V(i + 1)}));
    fs.push_back(make_simplex({u, w, V(0), V(4)}));
    fs.push_back(make_simplex({w, b, V(0), V(1)}));
    fs.push_back(make_simplex({w, c, V(1), V(2)}));
    fs.push_back(make_simplex({w, V(2), V(3), V(5)}));
    fs.push_back(make_simplex({w, V(3), V(4), V(6)}));
    fs.push_back(make_simplex({w, V(0), V(4), V(6)}));
    fs.push_back(make_simplex({w, a, b, V(0)}));
    fs.push_back(make_simplex({w, b, c, V(1)}));
    fs.push_back(make_simplex({w, c, V(2), V(5)}));
    fs.push_back(make_simplex({w, V(3), V(5), V(6)}));
    fs.push_back(make_simplex({w, a, V(0), V(6)}));
    fs.push_back(make_simplex({v, w, a, b}));
    fs.push_back(make_simplex({v, w, b, c}));
    fs.push_back(make_simplex({v, w, c, V(5)}));
    fs.push_back(make_simplex({v, w, V(5), V(6)}));
    fs.push_back(make_simplex({v, w, a, V(6)}));
    fs.push_back(make_simplex({v, a, V(2), V(3)}));
    fs.push_back(make_simplex({v, b, V(3), V(4)}));
    fs.push_back(make_simplex({v, V(0), V(4), V(5)}));
    fs.push_back(make_simplex({v, V(0), V(1), V(5)}));
    fs.push_back(make_simplex({v, V(1), V(2), V(6)}));
    fs.push_back(make_simplex({v, a, b, V(3)}));
    fs.push_back(make_simplex({v, b, c, V(4)}));
    fs.push_back(make_simplex({v, c, V(4), V(5)}));
    fs.push_back(make_simplex({v, V(1), V(5), V(6)}));
    fs.push_back(make_simplex({v, a, V(2), V(6)}));
    for (int i = 0; i < 4; ++i) fs.push_back(make_simplex({u, v, V(i), V(i + 1)}));
    fs.push_back(make_simplex({u, v, V(0), V(4)}));
    fs.push_back(make_simplex({a, b, V(0), V(3)}));
    fs.push_back(make_simplex({b, c, V(1), V(4)}));
    fs.push_back(make_simplex({a, V(0), V(2), V(3)}));
    fs.push_back(make_simplex({a, V(0), V(2), V(6)}));
    fs.push_back(make_simplex({b, V(0), V(1), V(3)}));
    fs.push_back(make_simplex({b, V(1), V(3), V(4)}));
    fs.push_back(make_simplex({c, V(1), V(2), V(4)}));
    fs.push_back(make_simplex({c, V(2), V(4), V(5)}));
    CHECK(e.complex == SimplicialComplex::from_facets(std::move(fs)));
    CHECK(e.f0 == 13);
}

TEST_CASE("catalog entries: counts and killed classes") {
    CHECK(cat::solid_torus({1, std::nullopt}).complex == cat::base_torus(1));
    CHECK(cat::solid_torus({1, 7}).f0 == 10);
    CHECK(cat::solid_torus({1, 3}).f0 == 9);
    CHECK(cat::solid_torus({4, 0}).f0 == 17);
    CHECK(cat::solid_torus({4, 2}).f0 == 17);
    CHECK(cat::solid_torus({7, 0}).killed == std::pair<Int, Int>{2, 1});
    CHECK(cat::solid_torus({4, 0}).killed == std::pair<Int, Int>{3, 1});
    CHECK(cat::solid_torus({8, 0}).killed == std::pair<Int, Int>{1, -1});
    CHECK(cat::solid_torus({5, 1}).killed == std::pair<Int, Int>{1, -2});
    CHECK(cat::solid_torus({6, 1}).killed == std::pair<Int, Int>{2, 3});
    CHECK(cat::solid_torus({9, 1}).killed == std::pair<Int, Int>{1, 2});
    CHECK_THROWS_AS((void)cat::solid_torus({10, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)cat::solid_torus({4, std::nullopt}), std::invalid_argument);
}

TEST_CASE("isomorphisms within the quotient families") {
    auto w45 = is_isomorphic(cat::solid_torus({4, 0}).complex,
                             cat::solid_torus({5, 0}).complex);
    CHECK(w45.has_value());
    auto w79 = is_isomorphic(cat::solid_torus({7, 0}).complex,
                             cat::solid_torus({9, 1}).complex);
    CHECK(w79.has_value());
}

TEST_CASE("intersections stay inside the boundary torus") {
    // base vs indexed, same family needs n >= 7 or distinct indices
    auto check_T = [](const cat::TorusId& a, const cat::TorusId& b) {
        CHECK(complex_intersection(cat::solid_torus(a).complex,
                                   cat::solid_torus(b).complex)
              == cat::seven_vertex_torus());
    };
    check_T({1, std::nullopt}, {2, 0});
    check_T({1, std::nullopt}, {4, 0});
    check_T({1, 0}, {2, 1});
    check_T({1, 0}, {1, 1});
    check_T({1, std::nullopt}, {1, 7});
    check_T({4, 0}, {4, 1});
    check_T({4, 0}, {7, 0});
    check_T({7, 0}, {7, 2});
    // but T_1 and T_{1,0} share the interior face {0,1,2}
    auto common = complex_intersection(cat::base_torus(1), cat::solid_torus({1, 0}).complex);
    CHECK(common != cat::seven_vertex_torus());
    CHECK(common.has_face(sx({0, 1, 2})));
}

TEST_CASE("every requested entry passes the solid-torus battery") {
    for (int j = 1; j <= 9; ++j) {
        std::vector<cat::TorusId> ids;
        if (j <= 3) ids.push_back({j, std::nullopt});
        ids.push_back({j, 0});
        ids.push_back({j, 7});
        for (const auto& id : ids) {
            const auto& e = cat::solid_torus(id);
            CAPTURE(id.to_string());
            CHECK(e.complex.is_weak_pseudomanifold());
            CHECK(homology(e.complex) == HomologyProfile::solid_torus());
            CHECK(boundary_complex(e.complex) == cat::seven_vertex_torus());
            CHECK(e.killed == cat::expected_killed(j));
            CHECK(e.f0 == cat::expected_f0(id));
            // manifold links: interior vertices get spheres, boundary discs
            for (const auto& v : e.complex.vertices()) {
                SimplicialComplex lk = link(e.complex, {v});
                bool on_boundary = cat::seven_vertex_torus().has_face({v});
                if (on_boundary)
                    CHECK(recog::is_ball_2d(lk));
                else
                    CHECK(recog::is_sphere_2d(lk));
            }
        }
    }
}

TEST_CASE("killed classes are index-independent within a family") {
    for (int j = 1; j <= 9; ++j)
        for (int n : {0, 1, 2, 5, 7, 8})
            CHECK(cat::solid_torus({j, n}).killed == cat::expected_killed(j));
}

TEST_CASE("computed killed classes match the family table verbatim") {
    const std::pair<int, int> table[9] = {{1, 0}, {0, 1}, {1, 1}, {3, 1}, {1, -2},
                                          {2, 3}, {2, 1}, {1, -1}, {1, 2}};
    for (int j = 1; j <= 9; ++j) {
        auto got = killed_class(cat::solid_torus({j, 0}).complex);
        CHECK(got.first == table[j - 1].first);
        CHECK(got.second == table[j - 1].second);
    }
}

TEST_CASE("the vertex maps act functorially on whole complexes") {
    CHECK(cat::apply_g(cat::solid_torus({4, 0}).complex) == cat::solid_torus({5, 0}).complex);
    CHECK(cat::apply_g(cat::solid_torus({8, 0}).complex) == cat::solid_torus({9, 0}).complex);
    CHECK(cat::apply_f(cat::solid_torus({5, 1}).complex) == cat::solid_torus({5, 2}).complex);
    CHECK(cat::apply_f(cat::solid_torus({1, 2}).complex) == cat::solid_torus({1, 3}).complex);
    CHECK(cat::apply_g(cat::base_torus(1)) == cat::base_torus(2));
    CHECK(cat::apply_g(cat::apply_g(cat::apply_g(cat::base_torus(1)))) == cat::base_torus(1));
    // f and g fix the boundary torus
    CHECK(cat::apply_f(cat::seven_vertex_torus()) == cat::seven_vertex_torus());
    CHECK(cat::apply_g(cat::seven_vertex_torus()) == cat::seven_vertex_torus());
    // families 4 and 7 are built per index; the f-image of an entry is an
    // isomorphic solid torus over the same boundary, not the next entry
    auto shifted = cat::apply_f(cat::solid_torus({4, 0}).complex);
    CHECK(shifted != cat::solid_torus({4, 1}).complex);
    CHECK(boundary_complex(shifted) == cat::seven_vertex_torus());
    CHECK(is_isomorphic(shifted, cat::solid_torus({4, 1}).complex).has_value());
}
