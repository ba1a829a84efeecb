#include "quasitri/complex.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quasitri {

bool VertexId::natural_less(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit((unsigned char)a[i]) && std::isdigit((unsigned char)b[j])) {
            size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit((unsigned char)a[i2])) ++i2;
            while (j2 < b.size() && std::isdigit((unsigned char)b[j2])) ++j2;
            // compare the digit runs as integers: by length-after-stripping
            // leading zeros, then lexicographically
            size_t ia = i, jb = j;
            while (ia < i2 - 1 && a[ia] == '0') ++ia;
            while (jb < j2 - 1 && b[jb] == '0') ++jb;
            size_t la = i2 - ia, lb = j2 - jb;
            if (la != lb) return la < lb;
            int cmp = a.compare(ia, la, b, jb, lb);
            if (cmp != 0) return cmp < 0;
            i = i2; j = j2;
        } else {
            if (a[i] != b[j]) return (unsigned char)a[i] < (unsigned char)b[j];
            ++i; ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

Simplex make_simplex(std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex simplex_intersection(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex simplex_difference(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool simplex_contains(const Simplex& big, const Simplex& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool simplex_disjoint(const Simplex& a, const Simplex& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i; else ++j;
    }
    return true;
}

std::string simplex_to_string(const Simplex& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += s[i].label();
    }
    return out.empty() ? std::string("<empty>") : out;
}

long long FVector::euler() const {
    long long chi = 0;
    for (size_t k = 0; k < counts.size(); ++k)
        chi += (k % 2 == 0) ? counts[k] : -counts[k];
    return chi;
}

std::string FVector::to_string() const {
    std::string out = "(";
    for (size_t k = 0; k < counts.size(); ++k) {
        if (k) out += ", ";
        out += std::to_string(counts[k]);
    }
    return out + ")";
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> raw) {
    for (auto& f : raw) f = make_simplex(std::move(f));
    std::sort(raw.begin(), raw.end(),
              [](const Simplex& a, const Simplex& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a < b;
              });
    SimplicialComplex X;
    for (auto& f : raw) {
        bool subsumed = false;
        for (const auto& g : X.facets_)
            if (simplex_contains(g, f)) { subsumed = true; break; }
        if (!subsumed) X.facets_.push_back(std::move(f));
    }
    std::sort(X.facets_.begin(), X.facets_.end());
    for (const auto& f : X.facets_)
        X.dim_ = std::max<int>(X.dim_, (int)f.size() - 1);
    return X;
}

std::vector<VertexId> SimplicialComplex::vertices() const {
    std::set<VertexId> vs;
    for (const auto& f : facets_) vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

long long SimplicialComplex::vertex_count() const { return (long long)vertices().size(); }

bool SimplicialComplex::has_face(const Simplex& s) const {
    if (facets_.empty()) return false;
    for (const auto& f : facets_)
        if (simplex_contains(f, s)) return true;
    return false;
}

namespace {

void enumerate_subsets(const Simplex& f, size_t k, size_t start, Simplex& cur,
                       std::set<Simplex>& out) {
    if (cur.size() == k) { out.insert(cur); return; }
    for (size_t i = start; i + (k - cur.size()) <= f.size(); ++i) {
        cur.push_back(f[i]);
        enumerate_subsets(f, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::set<Simplex> SimplicialComplex::faces(int k) const {
    std::set<Simplex> out;
    if (is_void() || k < -1 || k > dim_) return out;
    if (k == -1) { out.insert(Simplex{}); return out; }
    Simplex cur;
    for (const auto& f : facets_)
        if ((int)f.size() >= k + 1)
            enumerate_subsets(f, (size_t)k + 1, 0, cur, out);
    return out;
}

std::set<Simplex> SimplicialComplex::all_faces() const {
    std::set<Simplex> out;
    for (int k = 0; k <= dim_; ++k) {
        auto fk = faces(k);
        out.insert(fk.begin(), fk.end());
    }
    return out;
}

FVector SimplicialComplex::f_vector() const {
    FVector fv;
    for (int k = 0; k <= dim_; ++k)
        fv.counts.push_back((long long)faces(k).size());
    return fv;
}

long long SimplicialComplex::euler_characteristic() const { return f_vector().euler(); }

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if ((int)f.size() - 1 != dim_) return false;
    return true;
}

std::map<Simplex, int> SimplicialComplex::ridge_degrees() const {
    std::map<Simplex, int> deg;
    for (const auto& f : facets_) {
        for (size_t i = 0; i < f.size(); ++i) {
            Simplex r = f;
            r.erase(r.begin() + (long)i);
            deg[r] += 1;
        }
    }
    return deg;
}

bool SimplicialComplex::is_weak_pseudomanifold() const {
    if (!is_pure() || dim_ < 0) return false;
    for (const auto& [r, d] : ridge_degrees())
        if (d > 2) return false;
    return true;
}

SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma) {
    if (!X.has_face(sigma))
        throw std::invalid_argument("link: " + simplex_to_string(sigma) + " is not a face");
    std::vector<Simplex> fs;
    for (const auto& f : X.facets())
        if (simplex_contains(f, sigma))
            fs.push_back(simplex_difference(f, sigma));
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex star(const SimplicialComplex& X, const Simplex& sigma) {
    if (!X.has_face(sigma))
        throw std::invalid_argument("star: " + simplex_to_string(sigma) + " is not a face");
    std::vector<Simplex> fs;
    for (const auto& f : X.facets())
        if (simplex_contains(f, sigma)) fs.push_back(f);
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y) {
    auto vx = X.vertices();
    auto vy = Y.vertices();
    Simplex common;
    std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(),
                          std::back_inserter(common));
    if (!common.empty())
        throw std::invalid_argument("join: vertex sets overlap at " + simplex_to_string(common));
    std::vector<Simplex> fs;
    for (const auto& f : X.facets())
        for (const auto& g : Y.facets())
            fs.push_back(simplex_union(f, g));
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex cone(const VertexId& apex, const SimplicialComplex& X) {
    return join(X, SimplicialComplex::from_facets({{apex}}));
}

SimplicialComplex full_simplex(const Simplex& alpha) {
    return SimplicialComplex::from_facets({alpha});
}

SimplicialComplex boundary_of_simplex(const Simplex& alpha) {
    std::vector<Simplex> fs;
    if (alpha.empty()) return SimplicialComplex();    // ∂∅ is void
    for (size_t i = 0; i < alpha.size(); ++i) {
        Simplex r = alpha;
        r.erase(r.begin() + (long)i);
        fs.push_back(std::move(r));
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex boundary_complex(const SimplicialComplex& X) {
    if (!X.is_weak_pseudomanifold())
        throw std::invalid_argument("boundary_complex: not a pure weak pseudomanifold");
    std::vector<Simplex> fs;
    for (const auto& [r, d] : X.ridge_degrees())
        if (d == 1) fs.push_back(r);
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& X,
                                     const std::vector<VertexId>& W) {
    Simplex w = make_simplex(W);
    std::vector<Simplex> fs;
    for (const auto& f : X.facets())
        fs.push_back(simplex_intersection(f, w));
    if (X.is_void()) return SimplicialComplex();
    return SimplicialComplex::from_facets(std::move(fs));
}

bool is_induced(const SimplicialComplex& X, const SimplicialComplex& Z) {
    return induced_subcomplex(X, Z.vertices()) == Z;
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& X,
                                    const Simplex& alpha, const VertexId& u) {
    if (alpha.empty())
        throw std::invalid_argument("stellar_subdivide: alpha must be nonempty");
    if (!X.has_face(alpha))
        throw std::invalid_argument("stellar_subdivide: alpha is not a face");
    auto vs = X.vertices();
    if (std::binary_search(vs.begin(), vs.end(), u))
        throw std::invalid_argument("stellar_subdivide: vertex " + u.label() + " already present");

    std::vector<Simplex> fs;
    for (const auto& f : X.facets())
        if (!simplex_contains(f, alpha)) fs.push_back(f);
    // ū * ∂α * lk(α)
    SimplicialComplex lk = link(X, alpha);
    for (size_t i = 0; i < alpha.size(); ++i) {
        Simplex da = alpha;
        da.erase(da.begin() + (long)i);
        da = simplex_union(da, {u});
        if (lk.is_void() || lk.is_empty_simplex_complex()) {
            fs.push_back(da);
        } else {
            for (const auto& L : lk.facets())
                fs.push_back(simplex_union(da, L));
        }
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex bistellar_move(const SimplicialComplex& X,
                                 const Simplex& alpha, const Simplex& beta) {
    if (alpha.empty() || beta.empty())
        throw std::invalid_argument("bistellar_move: alpha and beta must be nonempty");
    if (!simplex_disjoint(alpha, beta))
        throw std::invalid_argument("bistellar_move: alpha and beta overlap");
    const int d = X.dim();
    if ((int)alpha.size() - 1 + (int)beta.size() - 1 != d)
        throw std::invalid_argument("bistellar_move: dim(alpha)+dim(beta) != dim X");

    auto vs = X.vertices();
    std::vector<Simplex> removed;
    if (beta.size() == 1) {
        // 0-move: beta is a brand-new vertex, alpha must be a facet
        if (std::binary_search(vs.begin(), vs.end(), beta[0]))
            throw std::invalid_argument("bistellar_move: 0-move vertex already in X");
        const auto& fac = X.facets();
        if (std::find(fac.begin(), fac.end(), alpha) == fac.end())
            throw std::invalid_argument("bistellar_move: alpha is not a facet");
        removed.push_back(alpha);
    } else {
        for (const auto& b : beta)
            if (!std::binary_search(vs.begin(), vs.end(), b))
                throw std::invalid_argument("bistellar_move: beta not contained in V(X)");
        // induced subcomplex on alpha ⊔ beta must equal ᾱ * ∂β
        SimplicialComplex expect = join(full_simplex(alpha), boundary_of_simplex(beta));
        SimplicialComplex got = induced_subcomplex(X, simplex_union(alpha, beta));
        if (!(expect == got))
            throw std::invalid_argument(
                "bistellar_move: induced subcomplex on alpha ∪ beta is not ᾱ * ∂β");
        // the star of alpha may not exceed ᾱ * ∂β, or the reverse move
        // would not restore X
        for (const auto& f : X.facets())
            if (simplex_contains(f, alpha) && !expect.has_face(f))
                throw std::invalid_argument(
                    "bistellar_move: star of alpha is larger than ᾱ * ∂β");
        removed = expect.facets();
    }

    std::vector<Simplex> fs;
    for (const auto& f : X.facets())
        if (std::find(removed.begin(), removed.end(), f) == removed.end())
            fs.push_back(f);
    // ∂α * β̄
    if (alpha.size() == 1) {
        fs.push_back(beta);
    } else {
        for (size_t i = 0; i < alpha.size(); ++i) {
            Simplex da = alpha;
            da.erase(da.begin() + (long)i);
            fs.push_back(simplex_union(da, beta));
        }
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex complex_union(const SimplicialComplex& X, const SimplicialComplex& Y) {
    std::vector<Simplex> fs = X.facets();
    const auto& g = Y.facets();
    fs.insert(fs.end(), g.begin(), g.end());
    return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex complex_intersection(const SimplicialComplex& X, const SimplicialComplex& Y) {
    std::vector<Simplex> fs;
    for (const auto& f : X.facets())
        for (const auto& g : Y.facets())
            fs.push_back(simplex_intersection(f, g));
    if (X.is_void() || Y.is_void()) return SimplicialComplex();
    return SimplicialComplex::from_facets(std::move(fs));
}

QuotientResult map_vertices(const SimplicialComplex& X,
                            const std::function<VertexId(const VertexId&)>& f) {
    QuotientResult res;
    std::vector<Simplex> fs;
    for (const auto& fac : X.facets()) {
        std::vector<VertexId> img;
        img.reserve(fac.size());
        for (const auto& v : fac) img.push_back(f(v));
        Simplex s = make_simplex(std::move(img));
        if (s.size() < fac.size()) res.collapsed.push_back(fac);
        fs.push_back(std::move(s));
    }
    res.complex = X.is_void() ? SimplicialComplex()
                              : SimplicialComplex::from_facets(std::move(fs));
    return res;
}

QuotientResult quotient(const SimplicialComplex& X,
                        const std::vector<std::vector<VertexId>>& classes) {
    std::map<VertexId, VertexId> rep;
    for (const auto& cls : classes) {
        if (cls.empty()) throw std::invalid_argument("quotient: empty class");
        VertexId name = *std::min_element(cls.begin(), cls.end());
        for (const auto& v : cls) {
            if (rep.count(v)) throw std::invalid_argument("quotient: classes overlap at " + v.label());
            rep.emplace(v, name);
        }
    }
    for (const auto& v : X.vertices())
        if (!rep.count(v))
            throw std::invalid_argument("quotient: partition misses vertex " + v.label());
    return map_vertices(X, [&rep](const VertexId& v) { return rep.at(v); });
}

SimplicialComplex relabel(const SimplicialComplex& X,
                          const std::map<VertexId, VertexId>& phi) {
    std::set<VertexId> image;
    for (const auto& v : X.vertices()) {
        auto it = phi.find(v);
        const VertexId& w = (it == phi.end()) ? v : it->second;
        if (!image.insert(w).second)
            throw std::invalid_argument("relabel: map not injective at " + w.label());
    }
    auto res = map_vertices(X, [&phi](const VertexId& v) {
        auto it = phi.find(v);
        return it == phi.end() ? v : it->second;
    });
    return res.complex;
}

SimplicialComplex connected_sum(const SimplicialComplex& X, const SimplicialComplex& Y,
                                const Simplex& sigma1, const Simplex& sigma2,
                                const std::map<VertexId, VertexId>& psi) {
    auto vx = X.vertices();
    auto vy = Y.vertices();
    Simplex common;
    std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(),
                          std::back_inserter(common));
    if (!common.empty())
        throw std::invalid_argument("connected_sum: vertex sets overlap");
    if (X.dim() != Y.dim())
        throw std::invalid_argument("connected_sum: dimension mismatch");
    if (!X.is_weak_pseudomanifold() || !Y.is_weak_pseudomanifold()
        || !boundary_complex(X).is_void() || !boundary_complex(Y).is_void())
        throw std::invalid_argument("connected_sum: inputs must be closed weak pseudomanifolds");
    const auto& fx = X.facets();
    const auto& fy = Y.facets();
    if (std::find(fx.begin(), fx.end(), sigma1) == fx.end())
        throw std::invalid_argument("connected_sum: sigma1 is not a facet of X");
    if (std::find(fy.begin(), fy.end(), sigma2) == fy.end())
        throw std::invalid_argument("connected_sum: sigma2 is not a facet of Y");
    if (psi.size() != sigma1.size())
        throw std::invalid_argument("connected_sum: psi must be a bijection sigma1 -> sigma2");
    std::map<VertexId, VertexId> back;   // sigma2 vertex -> sigma1 vertex
    for (const auto& v : sigma1) {
        auto it = psi.find(v);
        if (it == psi.end())
            throw std::invalid_argument("connected_sum: psi undefined on " + v.label());
        if (!std::binary_search(sigma2.begin(), sigma2.end(), it->second))
            throw std::invalid_argument("connected_sum: psi image outside sigma2");
        if (!back.emplace(it->second, v).second)
            throw std::invalid_argument("connected_sum: psi not injective");
    }

    std::vector<Simplex> fs;
    for (const auto& f : fx)
        if (f != sigma1) fs.push_back(f);
    for (const auto& f : fy) {
        if (f == sigma2) continue;
        std::vector<VertexId> img;
        for (const auto& v : f) {
            auto it = back.find(v);
            img.push_back(it == back.end() ? v : it->second);
        }
        fs.push_back(make_simplex(std::move(img)));
    }
    return SimplicialComplex::from_facets(std::move(fs));
}

namespace {

// per-vertex invariant used to prune the isomorphism search
std::string vertex_signature(const SimplicialComplex& X, const VertexId& v) {
    SimplicialComplex lk = link(X, {v});
    std::ostringstream os;
    os << lk.f_vector().to_string();
    return os.str();
}

bool extend_isomorphism(const SimplicialComplex& X, const SimplicialComplex& Y,
                        const std::vector<VertexId>& vx,
                        const std::map<VertexId, std::vector<VertexId>>& candidates,
                        size_t pos, std::map<VertexId, VertexId>& phi,
                        std::set<VertexId>& used) {
    if (pos == vx.size()) {
        return relabel(X, phi) == Y;
    }
    const VertexId& v = vx[pos];
    for (const auto& w : candidates.at(v)) {
        if (used.count(w)) continue;
        phi[v] = w;
        used.insert(w);
        // partial consistency: every fully-mapped face of X must be a face of Y
        bool ok = true;
        for (const auto& f : X.facets()) {
            if (!std::binary_search(f.begin(), f.end(), v)) continue;
            std::vector<VertexId> img;
            bool complete = true;
            for (const auto& u : f) {
                auto it = phi.find(u);
                if (it == phi.end()) { complete = false; break; }
                img.push_back(it->second);
            }
            if (complete && !Y.has_face(make_simplex(img))) { ok = false; break; }
        }
        if (ok && extend_isomorphism(X, Y, vx, candidates, pos + 1, phi, used))
            return true;
        used.erase(w);
        phi.erase(v);
    }
    return false;
}

} // namespace

std::optional<std::map<VertexId, VertexId>>
is_isomorphic(const SimplicialComplex& X, const SimplicialComplex& Y) {
    if (X.dim() != Y.dim()) return std::nullopt;
    if (!(X.f_vector() == Y.f_vector())) return std::nullopt;
    auto vx = X.vertices();
    auto vy = Y.vertices();
    if (vx.size() != vy.size()) return std::nullopt;
    if (X.is_void()) return std::map<VertexId, VertexId>{};

    std::map<VertexId, std::string> sigy;
    for (const auto& w : vy) sigy[w] = vertex_signature(Y, w);
    std::map<VertexId, std::vector<VertexId>> candidates;
    for (const auto& v : vx) {
        std::string s = vertex_signature(X, v);
        for (const auto& w : vy)
            if (sigy[w] == s) candidates[v].push_back(w);
        if (candidates[v].empty()) return std::nullopt;
    }
    // most-constrained vertices first
    std::sort(vx.begin(), vx.end(), [&](const VertexId& a, const VertexId& b) {
        return candidates[a].size() < candidates[b].size();
    });
    std::map<VertexId, VertexId> phi;
    std::set<VertexId> used;
    if (extend_isomorphism(X, Y, vx, candidates, 0, phi, used)) return phi;
    return std::nullopt;
}

std::vector<std::vector<VertexId>> connected_components(const SimplicialComplex& X) {
    auto vs = X.vertices();
    std::map<VertexId, VertexId> parent;
    for (const auto& v : vs) parent[v] = v;
    std::function<VertexId(VertexId)> find = [&](VertexId v) {
        while (!(parent[v] == v)) { parent[v] = parent[parent[v]]; v = parent[v]; }
        return v;
    };
    for (const auto& f : X.facets())
        for (size_t i = 1; i < f.size(); ++i)
            parent[find(f[0])] = find(f[i]);
    std::map<VertexId, std::vector<VertexId>> comps;
    for (const auto& v : vs) comps[find(v)].push_back(v);
    std::vector<std::vector<VertexId>> out;
    for (auto& [r, c] : comps) out.push_back(std::move(c));
    return out;
}

bool is_connected(const SimplicialComplex& X) {
    return connected_components(X).size() == 1;
}

std::vector<std::pair<Simplex, Simplex>>
legal_bistellar_moves(const SimplicialComplex& X) {
    std::vector<std::pair<Simplex, Simplex>> moves;
    const int d = X.dim();
    if (d < 0 || !X.is_pure()) return moves;
    for (const auto& alpha : X.all_faces()) {
        size_t bsize = (size_t)(d + 2) - alpha.size();
        if (bsize < 2) continue;   // d-moves (|β|=1) handled below
        SimplicialComplex lk = link(X, alpha);
        auto bv = lk.vertices();
        if (bv.size() != bsize) continue;
        if (!(lk == boundary_of_simplex(bv))) continue;
        if (X.has_face(bv)) continue;    // β present => not induced
        moves.emplace_back(alpha, bv);
    }
    return moves;
}

} // namespace quasitri
