#include "quasitri/homology.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace quasitri {

Int HomologyProfile::Group::order() const {
    if (betti > 0) return 0;
    Int n = 1;
    for (const Int& t : torsion) n *= t;
    return n;
}

std::string HomologyProfile::Group::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    for (long long i = 0; i < betti; ++i) s += (s.empty() ? "Z" : "+Z");
    for (const Int& t : torsion) {
        if (!s.empty()) s += "+";
        s += "Z_" + t.str();
    }
    return s;
}

std::string HomologyProfile::to_string() const {
    std::string s;
    for (size_t k = 0; k < groups.size(); ++k) {
        if (k) s += ' ';
        s += "H" + std::to_string(k) + "=" + groups[k].to_string();
    }
    return s;
}

std::string HomologyProfile::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& g : groups) {
        nlohmann::ordered_json jg;
        jg["betti"] = g.betti;
        jg["torsion"] = nlohmann::ordered_json::array();
        for (const Int& t : g.torsion) jg["torsion"].push_back(t.str());
        j.push_back(std::move(jg));
    }
    return j.dump();
}

HomologyProfile HomologyProfile::sphere(int d) {
    HomologyProfile p;
    p.groups.resize((size_t)d + 1);
    p.groups[0].betti = 1;
    p.groups[(size_t)d].betti += 1;
    return p;
}

HomologyProfile HomologyProfile::solid_torus() {
    HomologyProfile p;
    p.groups.resize(4);
    p.groups[0].betti = 1;
    p.groups[1].betti = 1;
    return p;
}

namespace {

SparseIntMatrix oriented_boundary(const std::set<Simplex>& fk1,
                                  const std::set<Simplex>& fk) {
    std::map<Simplex, int> idx;
    int n = 0;
    for (const auto& r : fk1) idx[r] = n++;
    SparseIntMatrix M((int)fk1.size(), (int)fk.size());
    int col = 0;
    for (const auto& f : fk) {
        int sign = 1;
        for (size_t i = 0; i < f.size(); ++i) {
            Simplex r = f;
            r.erase(r.begin() + (long)i);
            M.add(idx.at(r), col, sign);
            sign = -sign;
        }
        ++col;
    }
    return M;
}

} // namespace

SparseIntMatrix boundary_matrix(const SimplicialComplex& X, int k) {
    auto fk = X.faces(k);
    if (k == 0) return SparseIntMatrix(0, (int)fk.size());
    return oriented_boundary(X.faces(k - 1), fk);
}

HomologyProfile homology(const SimplicialComplex& X) {
    if (X.is_void())
        throw std::invalid_argument("homology: void complex");
    HomologyProfile p;
    const int d = X.dim();
    p.groups.resize((size_t)std::max(d, 0) + 1);
    if (d < 0) { p.groups[0].betti = 0; return p; }   // {∅}: all trivial

    std::vector<std::set<Simplex>> skel((size_t)d + 1);
    for (int k = 0; k <= d; ++k) skel[(size_t)k] = X.faces(k);
    std::vector<long long> fcount((size_t)d + 1);
    std::vector<long long> rank((size_t)d + 2, 0);
    std::vector<std::vector<Int>> tors((size_t)d + 2);
    for (int k = 0; k <= d; ++k) {
        fcount[(size_t)k] = (long long)skel[(size_t)k].size();
        if (k >= 1) {
            auto inv = invariant_factors(
                oriented_boundary(skel[(size_t)k - 1], skel[(size_t)k]));
            rank[(size_t)k] = (long long)inv.size();
            for (const Int& t : inv)
                if (t > 1) tors[(size_t)k].push_back(t);
        }
    }
    for (int k = 0; k <= d; ++k) {
        auto& g = p.groups[(size_t)k];
        g.betti = fcount[(size_t)k] - rank[(size_t)k] - rank[(size_t)k + 1];
        g.torsion = tors[(size_t)k + 1];
    }
    return p;
}

std::optional<std::vector<int>> orientable(const SimplicialComplex& X) {
    if (!X.is_weak_pseudomanifold())
        throw std::invalid_argument("orientable: not a weak pseudomanifold");
    if (!boundary_complex(X).is_void())
        throw std::invalid_argument("orientable: complex has boundary");
    if (!is_connected(X))
        throw std::invalid_argument("orientable: complex is disconnected");

    const auto& facets = X.facets();
    // ridge -> (facet index, position of the removed vertex)
    std::map<Simplex, std::vector<std::pair<int, int>>> ridge;
    for (int fi = 0; fi < (int)facets.size(); ++fi) {
        const auto& f = facets[(size_t)fi];
        for (size_t i = 0; i < f.size(); ++i) {
            Simplex r = f;
            r.erase(r.begin() + (long)i);
            ridge[r].emplace_back(fi, (int)i);
        }
    }
    std::vector<int> sign(facets.size(), 0);
    std::deque<int> queue;
    sign[0] = 1;                    // facets are sorted; 0 is the least
    queue.push_back(0);
    while (!queue.empty()) {
        int fi = queue.front();
        queue.pop_front();
        const auto& f = facets[(size_t)fi];
        for (size_t i = 0; i < f.size(); ++i) {
            Simplex r = f;
            r.erase(r.begin() + (long)i);
            const auto& inc = ridge.at(r);
            for (const auto& [gj, pos] : inc) {
                if (gj == fi) continue;
                // induced orientations must cancel:
                // sign_f * (-1)^i + sign_g * (-1)^pos = 0
                int need = -sign[(size_t)fi] * ((int)i % 2 == 0 ? 1 : -1)
                         * (pos % 2 == 0 ? 1 : -1);
                if (sign[(size_t)gj] == 0) {
                    sign[(size_t)gj] = need;
                    queue.push_back(gj);
                } else if (sign[(size_t)gj] != need) {
                    return std::nullopt;
                }
            }
        }
    }
    return sign;
}

} // namespace quasitri
