#include "quasitri/recognition.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "quasitri/catalog.hpp"
#include "quasitri/homology.hpp"

namespace quasitri::recog {

bool is_single_cycle(const SimplicialComplex& X) {
    if (X.dim() != 1 || !X.is_pure() || !is_connected(X)) return false;
    std::map<VertexId, int> deg;
    for (const auto& e : X.facets()) {
        deg[e[0]]++;
        deg[e[1]]++;
    }
    for (const auto& [v, d] : deg)
        if (d != 2) return false;
    return X.facets().size() == deg.size();
}

bool is_single_path(const SimplicialComplex& X) {
    if (X.dim() != 1 || !X.is_pure() || !is_connected(X)) return false;
    std::map<VertexId, int> deg;
    for (const auto& e : X.facets()) {
        deg[e[0]]++;
        deg[e[1]]++;
    }
    int ones = 0;
    for (const auto& [v, d] : deg) {
        if (d == 1) ++ones;
        else if (d != 2) return false;
    }
    return ones == 2;
}

bool is_sphere_2d(const SimplicialComplex& X) {
    if (X.dim() != 2 || !X.is_pure() || !is_connected(X)) return false;
    for (const auto& [r, d] : X.ridge_degrees())
        if (d != 2) return false;
    for (const auto& v : X.vertices())
        if (!is_single_cycle(link(X, {v}))) return false;
    return X.euler_characteristic() == 2;
}

bool is_ball_2d(const SimplicialComplex& X) {
    if (X.dim() != 2 || !X.is_pure() || !is_connected(X)) return false;
    for (const auto& [r, d] : X.ridge_degrees())
        if (d > 2) return false;
    for (const auto& v : X.vertices()) {
        SimplicialComplex lk = link(X, {v});
        if (!is_single_cycle(lk) && !is_single_path(lk)) return false;
    }
    return X.euler_characteristic() == 1;
}

ManifoldReport is_closed_manifold(const SimplicialComplex& X, int d,
                                  long long budget, uint64_t seed) {
    if (d < 1 || d > 4)
        throw std::invalid_argument("is_closed_manifold: dimension must be 1..4");
    if (X.dim() != d || !X.is_pure())
        throw std::invalid_argument("is_closed_manifold: input is not pure of dimension "
                                    + std::to_string(d));
    ManifoldReport rep;
    for (const auto& [r, deg] : X.ridge_degrees())
        if (deg != 2) {
            rep.detail = "ridge " + simplex_to_string(r) + " lies in "
                       + std::to_string(deg) + " facets";
            return rep;
        }
    if (d == 2 || d == 3) {
        for (const auto& v : X.vertices()) {
            SimplicialComplex lk = link(X, {v});
            bool ok = (d == 2) ? is_single_cycle(lk) : is_sphere_2d(lk);
            if (!ok) {
                rep.detail = "link of " + v.label() + " is not a "
                           + std::to_string(d - 1) + "-sphere";
                return rep;
            }
        }
    } else if (d == 4) {
        rep.links = certify_links_4d(X, budget, seed);
        for (const auto& l : rep.links)
            if (l.status == "failed") {
                rep.detail = "link of " + l.vertex.label()
                           + " fails the exact 3-sphere filters";
                return rep;
            }
    }
    rep.closed = true;
    return rep;
}

bool is_boundary_of_simplex(const SimplicialComplex& X) {
    auto vs = X.vertices();
    if ((int)vs.size() != X.dim() + 2) return false;
    return X == boundary_of_simplex(vs);
}

namespace {

struct MoveBuckets {
    // alpha sizes 1 / 2 / 3 for a 3-manifold; index = 4 - |alpha|
    std::vector<std::pair<Simplex, Simplex>> m3, m2, m1;
};

MoveBuckets find_moves_3d(const SimplicialComplex& X) {
    MoveBuckets B;
    const auto& facets = X.facets();
    std::map<VertexId, std::vector<int>> vstar;
    std::map<Simplex, std::vector<int>> estar, tstar;
    for (int fi = 0; fi < (int)facets.size(); ++fi) {
        const auto& f = facets[(size_t)fi];
        for (size_t i = 0; i < 4; ++i) {
            vstar[f[i]].push_back(fi);
            for (size_t j = i + 1; j < 4; ++j) {
                estar[make_simplex({f[i], f[j]})].push_back(fi);
                for (size_t k = j + 1; k < 4; ++k)
                    tstar[make_simplex({f[i], f[j], f[k]})].push_back(fi);
            }
        }
    }
    for (const auto& [v, st] : vstar) {
        if (st.size() != 4) continue;
        std::set<VertexId> bs;
        for (int fi : st)
            for (const auto& w : facets[(size_t)fi])
                if (!(w == v)) bs.insert(w);
        if (bs.size() != 4) continue;
        Simplex beta(bs.begin(), bs.end());
        if (!X.has_face(beta)) B.m3.push_back({Simplex{v}, beta});
    }
    for (const auto& [e, st] : estar) {
        if (st.size() != 3) continue;
        std::set<VertexId> bs;
        for (int fi : st)
            for (const auto& w : facets[(size_t)fi])
                if (!std::binary_search(e.begin(), e.end(), w)) bs.insert(w);
        if (bs.size() != 3) continue;
        Simplex beta(bs.begin(), bs.end());
        if (!X.has_face(beta)) B.m2.push_back({e, beta});
    }
    for (const auto& [t, st] : tstar) {
        if (st.size() != 2) continue;
        Simplex beta;
        for (int fi : st)
            for (const auto& w : facets[(size_t)fi])
                if (!std::binary_search(t.begin(), t.end(), w)) beta.push_back(w);
        beta = make_simplex(std::move(beta));
        if (beta.size() != 2) continue;
        if (!X.has_face(beta)) B.m1.push_back({t, beta});
    }
    return B;
}

} // namespace

std::string ReductionCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["verdict"] = certified() ? "certified-sphere" : "budget-exhausted";
    j["moves_tried"] = moves_tried;
    j["moves"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : moves) {
        nlohmann::ordered_json ja = nlohmann::ordered_json::array();
        nlohmann::ordered_json jb = nlohmann::ordered_json::array();
        for (const auto& v : a) ja.push_back(v.label());
        for (const auto& v : b) jb.push_back(v.label());
        j["moves"].push_back({std::move(ja), std::move(jb)});
    }
    nlohmann::ordered_json jt = nlohmann::ordered_json::array();
    for (const auto& f : terminal.facets()) {
        nlohmann::ordered_json jf = nlohmann::ordered_json::array();
        for (const auto& v : f) jf.push_back(v.label());
        jt.push_back(std::move(jf));
    }
    j["terminal"] = std::move(jt);
    return j.dump();
}

ReductionCertificate bistellar_reduce(const SimplicialComplex& X,
                                      long long budget, uint64_t seed) {
    auto pre = is_closed_manifold(X, 3);
    if (!pre.closed)
        throw std::invalid_argument("bistellar_reduce: not a closed 3-manifold: " + pre.detail);

    ReductionCertificate cert;
    SimplicialComplex cur = X;
    std::mt19937_64 rng(seed);
    long long best_f3 = (long long)cur.facets().size();
    int stagnation = 0;
    long long fresh = 0;

    while (cert.moves_tried < budget) {
        if (is_boundary_of_simplex(cur)) {
            cert.verdict = ReductionCertificate::Verdict::CertifiedSphere;
            break;
        }
        MoveBuckets B = find_moves_3d(cur);
        const std::vector<std::pair<Simplex, Simplex>>* pick = nullptr;
        bool heated = stagnation >= 50;
        if (!heated && !B.m3.empty()) pick = &B.m3;
        else if (!heated && !B.m2.empty()) pick = &B.m2;
        else if (!B.m1.empty()) pick = &B.m1;
        else if (!B.m3.empty()) pick = &B.m3;
        else if (!B.m2.empty()) pick = &B.m2;
        std::pair<Simplex, Simplex> mv;
        if (pick) {
            mv = (*pick)[std::uniform_int_distribution<size_t>(0, pick->size() - 1)(rng)];
        } else {
            // fully stuck: star a random facet (0-move) to open up new flips
            const auto& fs = cur.facets();
            VertexId u;
            do { u = VertexId("z" + std::to_string(fresh++)); } while (cur.has_face({u}));
            mv = {fs[std::uniform_int_distribution<size_t>(0, fs.size() - 1)(rng)], Simplex{u}};
        }
        cur = bistellar_move(cur, mv.first, mv.second);
        cert.moves.push_back(mv);
        ++cert.moves_tried;
        long long f3 = (long long)cur.facets().size();
        if (f3 < best_f3) {
            best_f3 = f3;
            stagnation = 0;
        } else {
            ++stagnation;
            if (heated) stagnation = 0;   // cool down after a shake
        }
    }
    if (is_boundary_of_simplex(cur))
        cert.verdict = ReductionCertificate::Verdict::CertifiedSphere;
    cert.terminal = std::move(cur);
    return cert;
}

SimplicialComplex replay(const SimplicialComplex& start,
                         const std::vector<std::pair<Simplex, Simplex>>& moves) {
    SimplicialComplex cur = start;
    for (const auto& [a, b] : moves) cur = bistellar_move(cur, a, b);
    return cur;
}

std::vector<LinkCertificate> certify_links_4d(const SimplicialComplex& X,
                                              long long budget, uint64_t seed) {
    auto vs = X.vertices();
    std::vector<LinkCertificate> out(vs.size());
    auto one = [&](size_t i) {
        LinkCertificate st{vs[i], "failed", 0};
        SimplicialComplex lk = link(X, {vs[i]});
        auto closed = is_closed_manifold(lk, 3);
        if (closed.closed && homology(lk) == HomologyProfile::sphere(3)) {
            auto cert = bistellar_reduce(lk, budget, seed);
            st.moves = cert.moves_tried;
            st.status = cert.certified() ? "certified" : "uncertified";
        }
        out[i] = std::move(st);
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (vs.size() < 2 || hw < 2) {
        for (size_t i = 0; i < vs.size(); ++i) one(i);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < vs.size(); i = next.fetch_add(1)) one(i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::min<unsigned>(hw, 8); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

std::vector<std::vector<size_t>>
isomorphism_classes(const std::vector<SimplicialComplex>& xs) {
    std::vector<std::vector<size_t>> classes;
    for (size_t i = 0; i < xs.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes)
            if (is_isomorphic(xs[cls[0]], xs[i]).has_value()) {
                cls.push_back(i);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

namespace {

struct TorusSearch {
    std::vector<Simplex> tris, tets;           // all C(7,3), C(7,4)
    std::vector<bool> in_torus;                // per triangle
    std::vector<std::array<int, 4>> tet_tris;  // triangle indices per tet
    std::vector<std::vector<int>> tri_tets;    // tets containing a triangle
    std::vector<int> count;                    // current per-triangle facet count
    std::vector<char> chosen;
    std::vector<SimplicialComplex> results;

    TorusSearch() {
        std::map<Simplex, int> tri_idx;
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b)
                for (int c = b + 1; c < 7; ++c) {
                    Simplex t = make_simplex({catalog::core_vertex(a),
                                              catalog::core_vertex(b),
                                              catalog::core_vertex(c)});
                    tri_idx[t] = (int)tris.size();
                    tris.push_back(t);
                }
        const auto& T = catalog::seven_vertex_torus();
        in_torus.assign(tris.size(), false);
        for (size_t i = 0; i < tris.size(); ++i) in_torus[i] = T.has_face(tris[i]);
        tri_tets.resize(tris.size());
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b)
                for (int c = b + 1; c < 7; ++c)
                    for (int d = c + 1; d < 7; ++d) {
                        Simplex f = make_simplex({catalog::core_vertex(a), catalog::core_vertex(b),
                                                  catalog::core_vertex(c), catalog::core_vertex(d)});
                        std::array<int, 4> ts{};
                        int k = 0;
                        for (size_t i = 0; i < 4; ++i) {
                            Simplex t = f;
                            t.erase(t.begin() + (long)i);
                            ts[(size_t)k++] = tri_idx.at(t);
                        }
                        for (int ti : ts) tri_tets[(size_t)ti].push_back((int)tets.size());
                        tet_tris.push_back(ts);
                        tets.push_back(f);
                    }
        count.assign(tris.size(), 0);
        chosen.assign(tets.size(), 0);
    }

    // decide tets one by one; a triangle's count is final once every tet
    // containing it is decided
    void dfs(int k) {
        if (k == (int)tets.size()) {
            std::vector<Simplex> fs;
            for (size_t i = 0; i < tets.size(); ++i)
                if (chosen[i]) fs.push_back(tets[i]);
            if (fs.empty()) return;
            SimplicialComplex X = SimplicialComplex::from_facets(std::move(fs));
            if (passes_battery(X)) results.push_back(std::move(X));
            return;
        }
        for (int take = 1; take >= 0; --take) {
            bool ok = true;
            if (take) {
                for (int ti : tet_tris[(size_t)k]) {
                    int c = count[(size_t)ti] + 1;
                    if (in_torus[(size_t)ti] ? c > 1 : c > 2) { ok = false; break; }
                }
            }
            if (ok) {
                if (take)
                    for (int ti : tet_tris[(size_t)k]) ++count[(size_t)ti];
                chosen[(size_t)k] = (char)take;
                // finality check for triangles whose last tet is k
                bool feasible = true;
                for (int ti = 0; ti < (int)tris.size() && feasible; ++ti) {
                    if (tri_tets[(size_t)ti].back() != k) continue;
                    int c = count[(size_t)ti];
                    if (in_torus[(size_t)ti] ? c != 1 : (c != 0 && c != 2)) feasible = false;
                }
                if (feasible) dfs(k + 1);
                if (take)
                    for (int ti : tet_tris[(size_t)k]) --count[(size_t)ti];
            }
        }
    }

    static bool passes_battery(const SimplicialComplex& X) {
        if (!X.is_weak_pseudomanifold() || !is_connected(X)) return false;
        if (!(boundary_complex(X) == catalog::seven_vertex_torus())) return false;
        for (const auto& v : X.vertices())
            if (!is_ball_2d(link(X, {v}))) return false;   // all 7 sit on the boundary
        return homology(X) == HomologyProfile::solid_torus();
    }
};

} // namespace

std::vector<SimplicialComplex> enumerate_solid_tori_7() {
    TorusSearch s;
    s.dfs(0);
    std::sort(s.results.begin(), s.results.end(),
              [](const SimplicialComplex& a, const SimplicialComplex& b) {
                  return a.facets() < b.facets();
              });
    return s.results;
}

} // namespace quasitri::recog
