#include "quasitri/catalog.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

#include "quasitri/group.hpp"
#include "quasitri/homology.hpp"

namespace quasitri::catalog {

namespace {

int mod7(int i) { return ((i % 7) + 7) % 7; }

Simplex core_facet(std::initializer_list<int> is) {
    std::vector<VertexId> vs;
    for (int i : is) vs.push_back(core_vertex(i));
    return make_simplex(std::move(vs));
}

SimplicialComplex build_seven_vertex_torus() {
    std::vector<Simplex> fs;
    for (int j = 0; j < 7; ++j) {
        fs.push_back(core_facet({j, mod7(j + 1), mod7(j + 3)}));
        fs.push_back(core_facet({j, mod7(j + 2), mod7(j + 3)}));
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex build_base_torus(int j) {
    static const int lists[3][7][4] = {
        {{0,1,2,3},{1,2,3,4},{2,3,4,5},{3,4,5,6},{0,4,5,6},{0,1,5,6},{0,1,2,6}},
        {{0,2,4,6},{1,2,4,6},{1,3,4,6},{1,3,5,6},{0,1,3,5},{0,2,3,5},{0,2,4,5}},
        {{0,1,4,5},{1,2,4,5},{1,2,5,6},{2,3,5,6},{0,2,3,6},{0,3,4,6},{0,1,3,4}},
    };
    std::vector<Simplex> fs;
    for (const auto& f : lists[j - 1])
        fs.push_back(core_facet({f[0], f[1], f[2], f[3]}));
    return SimplicialComplex::from_facets(std::move(fs));
}

struct ParsedLabel {
    char letter;   // '#' = core, else family letter
    int a = 0, b = 0;
};

ParsedLabel parse_family_label(const VertexId& v) {
    const std::string& s = v.label();
    if (s.size() == 1 && s[0] >= '0' && s[0] <= '6')
        return {'#', s[0] - '0', 0};
    auto dot = s.find('.');
    if (s.size() >= 4 && dot != std::string::npos && s.back() != '\'') {
        char L = s[0];
        if (std::string("uvwqrsabc").find(L) != std::string::npos) {
            try {
                int x = std::stoi(s.substr(1, dot - 1));
                int y = std::stoi(s.substr(dot + 1));
                return {L, x, y};
            } catch (...) {}
        }
    }
    throw std::invalid_argument("vertex map undefined on label " + s);
}

} // namespace

VertexId core_vertex(int i) { return VertexId(mod7(i)); }

VertexId aux_vertex(char letter, int j, int n) {
    return VertexId(std::string(1, letter) + std::to_string(j) + "." + std::to_string(n));
}

VertexId seq_vertex(char letter, int n, int i) {
    return VertexId(std::string(1, letter) + std::to_string(n) + "." + std::to_string(i));
}

std::string TorusId::to_string() const {
    std::string s = "T" + std::to_string(family);
    if (index) s += "," + std::to_string(*index);
    return s;
}

TorusId TorusId::parse(const std::string& s) {
    if (s.size() < 2 || s[0] != 'T')
        throw std::invalid_argument("bad torus id: " + s);
    auto sep = s.find_first_of(",.");
    TorusId id;
    try {
        if (sep == std::string::npos) {
            id.family = std::stoi(s.substr(1));
        } else {
            id.family = std::stoi(s.substr(1, sep - 1));
            id.index = std::stoi(s.substr(sep + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad torus id: " + s);
    }
    return id;
}

const SimplicialComplex& seven_vertex_torus() {
    static const SimplicialComplex T = build_seven_vertex_torus();
    return T;
}

const SimplicialComplex& base_torus(int j) {
    static const std::array<SimplicialComplex, 3> Ts = {
        build_base_torus(1), build_base_torus(2), build_base_torus(3)};
    if (j < 1 || j > 3) throw std::invalid_argument("base torus family must be 1..3");
    return Ts[(size_t)j - 1];
}

VertexId map_f(const VertexId& v) {
    ParsedLabel p = parse_family_label(v);
    switch (p.letter) {
        case '#': return core_vertex(p.a + 1);
        case 'u': case 'v': case 'w': return aux_vertex(p.letter, p.a, p.b + 1);
        default: return seq_vertex(p.letter, p.a + 1, p.b);
    }
}

VertexId map_g(const VertexId& v) {
    ParsedLabel p = parse_family_label(v);
    auto cycle3 = [](char L, const char* trip) {
        int k = (int)(std::string(trip).find(L));
        return trip[(k + 1) % 3];
    };
    switch (p.letter) {
        case '#': return core_vertex(2 * p.a);
        case 'u': case 'v': case 'w': {
            int j = p.a;
            int nj = (j % 3 == 0) ? j - 2 : j + 1;   // 1->2->3->1, 4->5->6->4, 7->8->9->7
            return aux_vertex(p.letter, nj, 2 * p.b);
        }
        case 'q': case 'r': case 's':
            return seq_vertex(cycle3(p.letter, "qrs"), 2 * p.a, p.b);
        case 'a': case 'b': case 'c':
            return seq_vertex(cycle3(p.letter, "abc"), 2 * p.a, p.b);
        default:
            throw std::invalid_argument("vertex map undefined on label " + v.label());
    }
}

namespace {

SimplicialComplex apply_map(const SimplicialComplex& X, VertexId (*m)(const VertexId&)) {
    auto res = map_vertices(X, [m](const VertexId& v) { return m(v); });
    if (!res.collapsed.empty())
        throw std::logic_error("catalog vertex map collapsed a facet");
    return res.complex;
}

} // namespace

SimplicialComplex apply_f(const SimplicialComplex& X) { return apply_map(X, map_f); }
SimplicialComplex apply_g(const SimplicialComplex& X) { return apply_map(X, map_g); }

namespace {

// T_{1,0} via the six-step subdivision of T_1 (two new vertices u, v).
SimplicialComplex build_T10() {
    VertexId u = aux_vertex('u', 1, 0), v = aux_vertex('v', 1, 0);
    SimplicialComplex X = base_torus(1);
    X = stellar_subdivide(X, core_facet({1, 2, 3}), u);
    X = bistellar_move(X, core_facet({2, 3, 4}), make_simplex({core_vertex(5), u}));
    X = stellar_subdivide(X, core_facet({0, 5, 6}), v);
    X = bistellar_move(X, core_facet({4, 5, 6}), make_simplex({core_vertex(3), v}));
    X = bistellar_move(X, core_facet({0, 1, 6}), make_simplex({core_vertex(2), v}));
    X = bistellar_move(X, core_facet({3, 4, 5}), make_simplex({u, v}));
    return X;
}

SimplicialComplex build_T10_prime() {
    return stellar_subdivide(build_T10(), core_facet({0, 1, 2}), aux_vertex('w', 1, 0));
}

VertexId ball_p(int i, bool primed) {
    return VertexId("p" + std::to_string(mod7(i)) + (primed ? "'" : ""));
}
VertexId ball_e(int i, bool primed) {
    return VertexId("e" + std::to_string(i) + (primed ? "'" : ""));
}
VertexId ball_u_prime(int family, int n) {
    return VertexId("u" + std::to_string(family) + "." + std::to_string(n) + "'");
}

SimplicialComplex build_ball4(int n) {
    VertexId u = aux_vertex('u', 4, n), v = aux_vertex('v', 4, n), w = aux_vertex('w', 4, n);
    VertexId up = ball_u_prime(4, n);
    auto p = [](int i) { return ball_p(i, false); };
    auto pp = [](int i) { return ball_p(i, true); };
    auto q = [n](int i) { return seq_vertex('q', n, mod7(i)); };
    std::vector<Simplex> fs;
    for (int i = 0; i < 7; ++i) {
        fs.push_back(make_simplex({w, up, pp(i), pp(i + 1)}));
        fs.push_back(make_simplex({w, pp(i), pp(i + 1), q(i + 2)}));
        fs.push_back(make_simplex({w, pp(i - 1), q(i), q(i + 1)}));
        fs.push_back(make_simplex({v, w, q(i), q(i + 1)}));
        fs.push_back(make_simplex({v, q(i), p(i + 1), p(i + 2)}));
        fs.push_back(make_simplex({v, q(i), q(i + 1), p(i + 2)}));
        fs.push_back(make_simplex({u, v, p(i), p(i + 1)}));
        fs.push_back(make_simplex({pp(i - 1), q(i), q(i + 1), p(i + 2)}));
        fs.push_back(make_simplex({pp(i - 2), pp(i - 1), q(i), p(i + 1)}));
        fs.push_back(make_simplex({pp(i - 1), q(i), p(i + 1), p(i + 2)}));
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex build_ball7(int n) {
    VertexId u = aux_vertex('u', 7, n), v = aux_vertex('v', 7, n), w = aux_vertex('w', 7, n);
    VertexId up = ball_u_prime(7, n);
    VertexId a = seq_vertex('a', n, 1), b = seq_vertex('a', n, 2), c = seq_vertex('a', n, 3);
    auto e = [](int i) { return ball_e(i, false); };
    auto ep = [](int i) { return ball_e(i, true); };
    std::vector<Simplex> fs;
    for (int i = 0; i < 4; ++i) fs.push_back(make_simplex({w, up, ep(i), ep(i + 1)}));
    fs.push_back(make_simplex({w, up, ep(0), ep(4)}));
    fs.push_back(make_simplex({w, ep(0), ep(1), b}));
    fs.push_back(make_simplex({w, ep(1), ep(2), c}));
    fs.push_back(make_simplex({w, ep(2), ep(3), e(5)}));
    fs.push_back(make_simplex({w, ep(3), ep(4), e(6)}));
    fs.push_back(make_simplex({w, ep(0), ep(4), e(6)}));
    fs.push_back(make_simplex({w, ep(0), a, b}));
    fs.push_back(make_simplex({w, ep(1), b, c}));
    fs.push_back(make_simplex({w, ep(2), c, e(5)}));
    fs.push_back(make_simplex({w, ep(3), e(5), e(6)}));
    fs.push_back(make_simplex({w, ep(0), e(6), a}));
    fs.push_back(make_simplex({v, w, a, b}));
    fs.push_back(make_simplex({v, w, b, c}));
    fs.push_back(make_simplex({v, w, c, e(5)}));
    fs.push_back(make_simplex({v, w, e(5), e(6)}));
    fs.push_back(make_simplex({v, w, e(6), a}));
    fs.push_back(make_simplex({v, a, e(2), e(3)}));
    fs.push_back(make_simplex({v, b, e(3), e(4)}));
    fs.push_back(make_simplex({v, e(0), e(4), e(5)}));
    fs.push_back(make_simplex({v, e(0), e(1), e(5)}));
    fs.push_back(make_simplex({v, e(1), e(2), e(6)}));
    fs.push_back(make_simplex({v, a, b, e(3)}));
    fs.push_back(make_simplex({v, b, c, e(4)}));
    fs.push_back(make_simplex({v, c, e(4), e(5)}));
    fs.push_back(make_simplex({v, e(1), e(5), e(6)}));
    fs.push_back(make_simplex({v, a, e(2), e(6)}));
    for (int i = 0; i < 4; ++i) fs.push_back(make_simplex({u, v, e(i), e(i + 1)}));
    fs.push_back(make_simplex({u, v, e(0), e(4)}));
    fs.push_back(make_simplex({ep(0), a, b, e(3)}));
    fs.push_back(make_simplex({ep(1), b, c, e(4)}));
    fs.push_back(make_simplex({ep(0), a, e(2), e(3)}));
    fs.push_back(make_simplex({ep(0), a, e(2), e(6)}));
    fs.push_back(make_simplex({ep(0), ep(1), b, e(3)}));
    fs.push_back(make_simplex({ep(1), b, e(3), e(4)}));
    fs.push_back(make_simplex({ep(1), ep(2), c, e(4)}));
    fs.push_back(make_simplex({ep(2), c, e(4), e(5)}));
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex quotient_ball(const SimplicialComplex& B, int family, int n) {
    VertexId up = ball_u_prime(family, n);
    VertexId u = aux_vertex('u', family, n);
    auto res = map_vertices(B, [&](const VertexId& v) -> VertexId {
        const std::string& s = v.label();
        if (v == up) return u;
        if (s[0] == 'p' || s[0] == 'e') {
            int i = s[1] - '0';
            return core_vertex(i);
        }
        return v;
    });
    if (!res.collapsed.empty())
        throw std::logic_error("catalog quotient collapsed a facet of B_" +
                               std::to_string(family) + "," + std::to_string(n));
    return res.complex;
}

std::mutex cache_mutex;
std::map<TorusId, CatalogEntry> cache;

CatalogEntry build_entry(const TorusId& id) {
    const int j = id.family;
    if (j < 1 || j > 9) throw std::invalid_argument("torus family must be 1..9: " + id.to_string());
    if (!id.index && j > 3)
        throw std::invalid_argument("families 4..9 have no base form: " + id.to_string());
    if (id.index && *id.index < 0)
        throw std::invalid_argument("torus index must be >= 0: " + id.to_string());

    SimplicialComplex X;
    if (!id.index) {
        X = base_torus(j);
    } else {
        const int n = *id.index;
        if (j <= 3) {
            SimplicialComplex T0 = (n <= 6) ? build_T10() : build_T10_prime();
            for (int k = 1; k < j; ++k) T0 = apply_g(T0);
            for (int k = 0; k < n; ++k) T0 = apply_f(T0);
            X = T0;
        } else if (j == 4 || j == 7) {
            X = quotient_ball(ball(j, n), j, n);
        } else {
            int base_family = (j <= 6) ? 4 : 7;
            SimplicialComplex T0 = quotient_ball(ball(base_family, 0), base_family, 0);
            for (int k = 0; k < j - base_family; ++k) T0 = apply_g(T0);
            for (int k = 0; k < n; ++k) T0 = apply_f(T0);
            X = T0;
        }
    }

    CatalogEntry e;
    e.id = id;
    e.complex = std::move(X);
    e.f0 = e.complex.vertex_count();
    if (!(boundary_complex(e.complex) == seven_vertex_torus()))
        throw std::logic_error("catalog entry " + id.to_string() +
                               " does not have the 7-vertex torus as boundary");
    if (e.f0 != expected_f0(id))
        throw std::logic_error("catalog entry " + id.to_string() + " has wrong vertex count");
    e.killed = killed_class(e.complex);
    if (e.killed != expected_killed(j))
        throw std::logic_error("catalog entry " + id.to_string() + " kills the wrong class");
    return e;
}

} // namespace

SimplicialComplex ball(int family, int n) {
    if (n < 0) throw std::invalid_argument("ball index must be >= 0");
    if (family == 4) return build_ball4(n);
    if (family == 7) return build_ball7(n);
    throw std::invalid_argument("ball family must be 4 or 7");
}

std::array<SimplicialComplex, 3> ball_boundary_pieces(int family, int n) {
    std::vector<Simplex> c1, c2, c3;
    if (family == 4) {
        VertexId u = aux_vertex('u', 4, n), up = ball_u_prime(4, n);
        for (int i = 0; i < 7; ++i) {
            c1.push_back(make_simplex({u, ball_p(i, false), ball_p(i + 1, false)}));
            c2.push_back(make_simplex({up, ball_p(i, true), ball_p(i + 1, true)}));
            c3.push_back(make_simplex({ball_p(i - 2, true), ball_p(i - 1, true), ball_p(i + 1, false)}));
            c3.push_back(make_simplex({ball_p(i - 1, true), ball_p(i + 1, false), ball_p(i + 2, false)}));
        }
    } else if (family == 7) {
        VertexId u = aux_vertex('u', 7, n), up = ball_u_prime(7, n);
        auto e = [](int i) { return ball_e(i, false); };
        auto ep = [](int i) { return ball_e(i, true); };
        for (int i = 0; i < 4; ++i) {
            c1.push_back(make_simplex({u, e(i), e(i + 1)}));
            c2.push_back(make_simplex({up, ep(i), ep(i + 1)}));
            c3.push_back(make_simplex({ep(i), ep(i + 1), e(i + 3)}));
            c3.push_back(make_simplex({ep(i), e(i + 2), e(i + 3)}));
        }
        c1.push_back(make_simplex({u, e(0), e(4)}));
        c2.push_back(make_simplex({up, ep(0), ep(4)}));
        c3.push_back(make_simplex({ep(0), ep(4), e(6)}));
        c3.push_back(make_simplex({ep(0), e(2), e(6)}));
        c3.push_back(make_simplex({e(0), e(1), e(5)}));
        c3.push_back(make_simplex({e(0), e(4), e(5)}));
        c3.push_back(make_simplex({e(1), e(2), e(6)}));
        c3.push_back(make_simplex({e(1), e(5), e(6)}));
    } else {
        throw std::invalid_argument("ball family must be 4 or 7");
    }
    return {SimplicialComplex::from_facets(std::move(c1)),
            SimplicialComplex::from_facets(std::move(c2)),
            SimplicialComplex::from_facets(std::move(c3))};
}

std::pair<Int, Int> expected_killed(int family) {
    static const std::array<std::pair<int, int>, 9> table = {{
        {1, 0}, {0, 1}, {1, 1}, {3, 1}, {1, -2}, {2, 3}, {2, 1}, {1, -1}, {1, 2}}};
    if (family < 1 || family > 9) throw std::invalid_argument("family must be 1..9");
    return {Int(table[(size_t)family - 1].first), Int(table[(size_t)family - 1].second)};
}

long long expected_f0(const TorusId& id) {
    if (!id.index) return 7;
    if (id.family <= 3) return *id.index <= 6 ? 9 : 10;
    if (id.family <= 6) return 17;
    return 13;
}

const CatalogEntry& solid_torus(const TorusId& id) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(id);
        if (it != cache.end()) return it->second;
    }
    CatalogEntry e = build_entry(id);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(id, std::move(e)).first->second;
}

} // namespace quasitri::catalog
