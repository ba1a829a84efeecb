#include <doctest.h>

#include "quasitri/assembly.hpp"
#include "quasitri/charfun.hpp"
#include "test_helpers.hpp"

using namespace quasitri;
namespace cf = quasitri::charfun;
namespace asmb = quasitri::assembly;

TEST_CASE("validity and completeness") {
    cf::CharacteristicPair cp2{{{1, 0}, {0, 1}, {-1, -1}}};
    CHECK(cf::validate(cp2));
    CHECK(cf::is_complete(cp2));   // the CP^2 triangle

    // Hirzebruch rectangle, any k
    for (long long k = -4; k <= 4; ++k) {
        cf::CharacteristicPair h{{{-1, 0}, {0, 1}, {1, Int(k)}, {0, -1}}};
        CHECK(cf::validate(h));
        CHECK(cf::is_complete(h));
    }

    // hexagon data of example 7.3ff is complete (checked against the census)
    for (const auto& e : asmb::census()) {
        cf::CharacteristicPair cp{e.xi};
        CAPTURE(e.key);
        CHECK(cf::validate(cp));
        CHECK(cf::is_complete(cp));
    }

    // a fan that misses directions: all vectors in the upper half plane
    cf::CharacteristicPair open3{{{1, 0}, {1, 1}, {0, 1}}};
    CHECK(cf::validate(open3));
    CHECK(!cf::is_complete(open3));
    // zero vector is invalid
    CHECK(!cf::validate({{{0, 0}, {1, 0}, {0, 1}}}));
}

TEST_CASE("lens parameters of the rectangle") {
    for (long long k = 1; k <= 4; ++k) {
        auto lp = cf::lens_parameters({-1, 0}, {1, Int(k)});   // sector C1-O-C3
        CHECK(abs(lp.p) == k);
        if (k > 1) {
            // q ≡ ±1 mod k matches L(-k, 1) up to the lens equivalences
            Int q = lp.q % k;
            CHECK((q == 1 % k || q == (k - 1) % k));
        }
    }
    auto lp = cf::lens_parameters({0, 1}, {0, -1});   // opposite sectors C2-O-C4
    CHECK(lp.p == 0);
    CHECK(abs(lp.q) == 1);
    CHECK_THROWS_AS((void)cf::lens_parameters({2, 4}, {1, 0}), std::invalid_argument);
}

TEST_CASE("lens parameters of the pentagon sector C3-O-C5") {
    for (long long k = -3; k <= 3; ++k)
        for (long long l = -3; l <= 3; ++l) {
            auto lp = cf::lens_parameters({1, Int(k)}, {Int(l), 1});
            CHECK(lp.p == l * k - 1);
            if (lp.p != 0) {
                // q ≡ ±l (mod p) up to orientation
                Int p = abs(lp.p);
                Int lm = ((Int(l) % p) + p) % p;
                CHECK((lp.q == lm || lp.q == (p - lm) % p));
            }
        }
}

TEST_CASE("q is independent of the section choice mod p") {
    // exercised by construction inside lens_parameters; a couple of direct hits
    for (auto [xi, xj] : {std::pair<cf::Vec2, cf::Vec2>{{1, 3}, {0, 1}},
                          {{2, 1}, {1, 1}}, {{-1, 2}, {1, 0}}})
        CHECK_NOTHROW((void)cf::lens_parameters(xi, xj));
}

TEST_CASE("rectangle enumeration") {
    auto sols = cf::enumerate_rectangle(4);
    // k*l = 0 or 2 inside the window
    for (const auto& s : sols) CHECK((s.k * s.l == 0 || s.k * s.l == 2));
    bool has12 = false, has21 = false;
    for (const auto& s : sols) {
        if (s.k == 1 && s.l == 2) has12 = true;
        if (s.k == 2 && s.l == 1) has21 = true;
        // the Hirzebruch family (k*l = 0) is complete; the k*l = 2 data is
        // the connected-sum model and its four cones never tile the plane
        CHECK(s.complete == (s.k * s.l == 0));
    }
    CHECK(has12);
    CHECK(has21);
}

TEST_CASE("pentagon solvability set") {
    for (long long k = -6; k <= 6; ++k)
        for (long long l = -6; l <= 6; ++l) {
            bool solvable = (k == -1 || k == 0 || l == -1 || l == 0)
                || (k == 3 && l == 1) || (k == 2 && l == 1) || (k == 2 && l == 2)
                || (k == 1 && l == 2) || (k == 1 && l == 3);
            CHECK(cf::pentagon_solvable(k, l) == solvable);
        }
    // reflection symmetry (k,l) <-> (l,k)
    for (long long k = -6; k <= 6; ++k)
        for (long long l = -6; l <= 6; ++l)
            CHECK(cf::pentagon_solvable(k, l) == cf::pentagon_solvable(l, k));
}

TEST_CASE("pentagon enumeration hits the reference (a,b) pairs") {
    auto sols = cf::enumerate_pentagon(3, 4);
    auto find = [&](long long k, long long l, long long a, long long b) {
        for (const auto& s : sols)
            if (s.k == k && s.l == l && s.a == a && s.b == b) return true;
        return false;
    };
    CHECK(find(-1, 0, 1, 0));     // example 6.2 data
    CHECK(find(1, -1, 0, 1));
    CHECK(find(0, 0, 1, 1));
    CHECK(find(1, 0, 1, 2));
    CHECK(find(-2, 0, 1, -1));
    CHECK(find(3, 0, 1, 4));
    // (k,l) = (-1,-1) admits a + b = 1: all four reference pairs
    for (auto [a, b] : {std::pair<long long, long long>{0, 1}, {-1, 2}, {-2, 3}, {-3, 4}})
        CHECK(find(-1, -1, a, b));
}

TEST_CASE("hexagon enumeration: reference rows and discrepancies") {
    auto sols = cf::enumerate_hexagon(3, 1, 3);
    auto solutions_for = [&](long long k, long long l) {
        std::vector<std::array<long long, 4>> got;
        for (const auto& s : sols)
            if (s.k == k && s.l == l) got.push_back({s.a, s.b, s.c, s.d});
        return got;
    };
    // (k,l) = (-3,1): the tabulated solution is found
    auto m31 = solutions_for(-3, 1);
    CHECK(std::find(m31.begin(), m31.end(), std::array<long long, 4>{0, 1, -1, -2})
          != m31.end());
    // (k,l) = (0,0): completeness filter leaves exactly the two reference rows
    std::vector<std::array<long long, 4>> complete00;
    for (const auto& s : sols)
        if (s.k == 0 && s.l == 0 && s.complete) complete00.push_back({s.a, s.b, s.c, s.d});
    std::sort(complete00.begin(), complete00.end());
    CHECK(complete00 == std::vector<std::array<long long, 4>>{{1, 1, 1, 2}, {2, 1, 1, 1}});

    // every in-bound reference row is derived; discrepancies are only of
    // the "derivable but not tabulated" kind, and stable across runs
    auto disc = cf::hexagon_case_discrepancies();
    for (const auto& d : disc) {
        CAPTURE(d.k);
        CAPTURE(d.l);
        CHECK(d.missing.empty());
    }
    auto disc2 = cf::hexagon_case_discrepancies();
    CHECK(disc.size() == disc2.size());

    // constraint check on everything derived
    for (const auto& s : sols) {
        CHECK(s.b - s.a * s.k == 1);
        CHECK(s.a * s.d - s.b * s.c == 1);
        CHECK(s.c - s.d * s.l == 1);
    }
}

TEST_CASE("torus_for_vector and the allocator") {
    CHECK(cf::torus_for_vector({1, 0}) == 1);
    CHECK(cf::torus_for_vector({-1, 0}) == 1);
    CHECK(cf::torus_for_vector({3, 1}) == 4);
    CHECK(cf::torus_for_vector({-3, -1}) == 4);
    CHECK(cf::torus_for_vector({1, -2}) == 5);
    CHECK_THROWS_WITH_AS((void)cf::torus_for_vector({4, 1}),
                         doctest::Contains("no catalog torus"), std::invalid_argument);

    cf::TorusAllocator alloc;
    CHECK(alloc.allocate({1, 0}) == catalog::TorusId{1, std::nullopt});
    CHECK(alloc.allocate({-1, 0}) == catalog::TorusId{1, 7});
    CHECK(alloc.allocate({1, 0}) == catalog::TorusId{1, 8});
    CHECK(alloc.allocate({3, 1}) == catalog::TorusId{4, 0});
    CHECK(alloc.allocate({3, 1}) == catalog::TorusId{4, 1});
}

TEST_CASE("census characteristic data matches the killed classes") {
    for (const auto& e : asmb::census()) {
        std::vector<cf::Vec2> killed;
        for (const auto& id : e.tori) killed.push_back(catalog::solid_torus(id).killed);
        CAPTURE(e.key);
        auto A = cf::find_class_transform(e.xi, killed);
        REQUIRE(A.has_value());
        // feeding the transformed edge vectors through the killed-class table
        // reproduces the assigned torus family at every edge
        for (size_t i = 0; i < e.xi.size(); ++i) {
            cf::Vec2 img{(*A)[0] * e.xi[i].first + (*A)[1] * e.xi[i].second,
                         (*A)[2] * e.xi[i].first + (*A)[3] * e.xi[i].second};
            CHECK(cf::torus_for_vector(img) == e.tori[i].family);
        }
        // and the determinant pairing agrees sector by sector
        for (size_t i = 0; i < e.xi.size(); ++i)
            for (size_t j = i + 1; j < e.xi.size(); ++j) {
                Int a = abs(det2(e.xi[i].first, e.xi[i].second,
                                 e.xi[j].first, e.xi[j].second));
                Int b = abs(det2(killed[i].first, killed[i].second,
                                 killed[j].first, killed[j].second));
                CHECK(a == b);
            }
    }
}
