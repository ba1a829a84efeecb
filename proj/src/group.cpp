#include "quasitri/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace quasitri {

GroupPresentation edge_path_presentation(const SimplicialComplex& X, const VertexId& base) {
    if (!is_connected(X))
        throw std::invalid_argument("edge_path_presentation: complex is disconnected");
    auto vs = X.vertices();
    if (!std::binary_search(vs.begin(), vs.end(), base))
        throw std::invalid_argument("edge_path_presentation: base vertex not in complex");

    auto edge_faces = X.faces(1);
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& e : edge_faces) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

    std::set<Simplex> tree;
    std::set<VertexId> seen{base};
    std::deque<VertexId> queue{base};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const auto& w : adj[v]) {
            if (seen.insert(w).second) {
                tree.insert(make_simplex({v, w}));
                queue.push_back(w);
            }
        }
    }

    GroupPresentation P;
    std::map<Simplex, int> gen_idx;   // 1-based
    for (const auto& e : edge_faces) {
        if (tree.count(e)) continue;
        gen_idx[e] = (int)P.generators.size() + 1;
        P.generators.push_back(e[0].label() + "|" + e[1].label());
    }
    auto word_step = [&](const VertexId& u, const VertexId& v) -> int {
        Simplex e = make_simplex({u, v});
        auto it = gen_idx.find(e);
        if (it == gen_idx.end()) return 0;          // tree edge
        return (u < v) ? it->second : -it->second;
    };
    for (const auto& t : X.faces(2)) {
        std::vector<int> word;
        const VertexId &a = t[0], &b = t[1], &c = t[2];
        for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, a}})
            if (int s = word_step(u, v)) word.push_back(s);
        if (!word.empty()) P.relators.push_back(std::move(word));
    }
    return P;
}

HomologyProfile::Group abelianization(const GroupPresentation& P) {
    for (const auto& w : P.relators)
        for (int s : w) {
            int i = s > 0 ? s : -s;
            if (i < 1 || i > (int)P.generators.size())
                throw std::invalid_argument("abelianization: relator uses undeclared generator");
        }
    SparseIntMatrix M((int)P.generators.size(), (int)P.relators.size());
    for (int j = 0; j < (int)P.relators.size(); ++j)
        for (int s : P.relators[(size_t)j])
            M.add(s > 0 ? s - 1 : -s - 1, j, s > 0 ? 1 : -1);
    auto inv = invariant_factors(M);
    HomologyProfile::Group g;
    g.betti = (long long)P.generators.size() - (long long)inv.size();
    for (const Int& t : inv)
        if (t > 1) g.torsion.push_back(t);
    return g;
}

H1Coordinates::H1Coordinates(const SimplicialComplex& X) {
    auto efaces = X.faces(1);
    edges_.assign(efaces.begin(), efaces.end());
    const int f1 = (int)edges_.size();

    auto vs = X.vertices();
    std::map<VertexId, int> vidx;
    for (int i = 0; i < (int)vs.size(); ++i) vidx[vs[(size_t)i]] = i;
    IntegerMatrix d1((int)vs.size(), f1);
    for (int j = 0; j < f1; ++j) {
        d1.at(vidx.at(edges_[(size_t)j][0]), j) = -1;
        d1.at(vidx.at(edges_[(size_t)j][1]), j) = 1;
    }
    SNFDecomposition s1 = smith_normal_form(d1);
    v1inv_ = s1.Vinv;
    rank1_ = s1.rank();
    const int k = f1 - (int)rank1_;    // dim of the cycle space

    auto tfaces = X.faces(2);
    std::map<Simplex, int> eidx;
    for (int j = 0; j < f1; ++j) eidx[edges_[(size_t)j]] = j;
    IntegerMatrix d2(f1, (int)tfaces.size());
    int col = 0;
    for (const auto& t : tfaces) {
        int sign = 1;
        for (size_t i = 0; i < 3; ++i) {
            Simplex e = t;
            e.erase(e.begin() + (long)i);
            d2.at(eidx.at(e), col) = sign;
            sign = -sign;
        }
        ++col;
    }
    // kernel coordinates of im ∂2: rows rank1.. of V1inv * ∂2
    IntegerMatrix full = v1inv_ * d2;
    IntegerMatrix M(k, d2.cols());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < d2.cols(); ++j)
            M.at(i, j) = full.at((int)rank1_ + i, j);
    SNFDecomposition s2 = smith_normal_form(M);
    u2_ = s2.U;
    d2_.assign((size_t)k, 0);
    for (int i = 0; i < std::min(M.rows(), M.cols()); ++i) d2_[(size_t)i] = s2.D.at(i, i);
    for (int i = 0; i < k; ++i) {
        if (d2_[(size_t)i] == 0) free_idx_.push_back(i);
        else if (d2_[(size_t)i] > 1) torsion_.push_back(d2_[(size_t)i]);
    }
    free_rank_ = (long long)free_idx_.size();
}

std::vector<Int> H1Coordinates::chain_of_loop(const std::vector<VertexId>& loop) const {
    if (loop.size() < 2 || !(loop.front() == loop.back()))
        throw std::invalid_argument("loop_class: path is not a closed loop");
    std::map<Simplex, int> eidx;
    for (int j = 0; j < (int)edges_.size(); ++j) eidx[edges_[(size_t)j]] = j;
    std::vector<Int> z(edges_.size(), 0);
    for (size_t i = 0; i + 1 < loop.size(); ++i) {
        const VertexId &u = loop[i], &v = loop[i + 1];
        auto it = eidx.find(make_simplex({u, v}));
        if (it == eidx.end())
            throw std::invalid_argument("loop_class: " + u.label() + "-" + v.label()
                                        + " is not an edge");
        z[(size_t)it->second] += (u < v) ? 1 : -1;
    }
    return z;
}

std::vector<Int> H1Coordinates::free_class_of_loop(const std::vector<VertexId>& loop) const {
    std::vector<Int> z = chain_of_loop(loop);
    const int f1 = (int)edges_.size();
    // y = V1inv z; top rank1 coordinates must vanish for a cycle
    std::vector<Int> y((size_t)f1, 0);
    for (int i = 0; i < f1; ++i)
        for (int j = 0; j < f1; ++j)
            if (v1inv_.at(i, j) != 0) y[(size_t)i] += v1inv_.at(i, j) * z[(size_t)j];
    for (int i = 0; i < (int)rank1_; ++i)
        if (y[(size_t)i] != 0)
            throw std::logic_error("loop_class: chain of a loop is not a cycle");
    const int k = f1 - (int)rank1_;
    std::vector<Int> c((size_t)k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (u2_.at(i, j) != 0) c[(size_t)i] += u2_.at(i, j) * y[(size_t)(int)rank1_ + j];
    std::vector<Int> out;
    for (int i : free_idx_) out.push_back(c[(size_t)i]);
    return out;
}

std::pair<Int, Int> loop_class(const SimplicialComplex& X,
                               const std::vector<VertexId>& loop,
                               const std::vector<VertexId>& basis1,
                               const std::vector<VertexId>& basis2) {
    H1Coordinates h1(X);
    if (h1.free_rank() != 2 || !h1.torsion().empty())
        throw std::invalid_argument("loop_class: H1 is not free of rank 2");
    auto b1 = h1.free_class_of_loop(basis1);
    auto b2 = h1.free_class_of_loop(basis2);
    Int det = det2(b1[0], b2[0], b1[1], b2[1]);
    if (det != 1 && det != -1)
        throw std::invalid_argument("loop_class: basis loops do not generate H1 freely");
    auto z = h1.free_class_of_loop(loop);
    // solve [b1 b2] (x y)^t = z by Cramer
    Int x = det2(z[0], b2[0], z[1], b2[1]) / det;
    Int y = det2(b1[0], z[0], b1[1], z[1]) / det;
    return {x, y};
}

std::pair<Int, Int> normalize_class(Int a, Int b) {
    Int g = gcd(abs(a), abs(b));
    if (g > 1) { a /= g; b /= g; }
    if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; }
    return {a, b};
}

std::pair<Int, Int> killed_class(const SimplicialComplex& T) {
    static const std::vector<VertexId> alpha1{VertexId(0), VertexId(1), VertexId(6), VertexId(0)};
    static const std::vector<VertexId> alpha2{VertexId(0), VertexId(2), VertexId(5), VertexId(0)};
    H1Coordinates h1(T);
    if (h1.free_rank() != 1 || !h1.torsion().empty())
        throw std::invalid_argument("killed_class: H1 of the input is not Z");
    Int m1 = h1.free_class_of_loop(alpha1)[0];
    Int m2 = h1.free_class_of_loop(alpha2)[0];
    if (m1 == 0 && m2 == 0)
        throw std::invalid_argument("killed_class: kernel not of rank 1 "
                                    "(not a solid torus over the 7-vertex torus)");
    return normalize_class(m2, -m1);
}

} // namespace quasitri
