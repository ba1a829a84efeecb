#include "quasitri/assembly.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "quasitri/charfun.hpp"
#include "quasitri/io.hpp"

namespace quasitri::assembly {

namespace {

std::string h1_name(const Int& order, bool orientable_flag, long long b2) {
    if (!orientable_flag) return "unidentified";
    if (order == 0) return (b2 == 1) ? "S2xS1" : "unidentified";
    if (order == 1) return "S3";
    if (order == 2) return "RP3";
    return "L(" + order.str() + ",.)";
}

} // namespace

ClosedThreeManifoldReport glue_tori(const catalog::TorusId& a, const catalog::TorusId& b) {
    const auto& ea = catalog::solid_torus(a);
    const auto& eb = catalog::solid_torus(b);
    if (!(complex_intersection(ea.complex, eb.complex) == catalog::seven_vertex_torus()))
        throw std::invalid_argument("glue_tori: tori " + a.to_string() + " and "
                                    + b.to_string() + " overlap beyond the boundary torus");
    ClosedThreeManifoldReport rep;
    rep.complex = complex_union(ea.complex, eb.complex);
    auto closed = recog::is_closed_manifold(rep.complex, 3);
    if (!closed.closed)
        throw std::logic_error("glue_tori: union is not a closed 3-manifold: " + closed.detail);
    rep.homology = homology(rep.complex);
    rep.orientable = orientable(rep.complex).has_value();
    rep.h1_order = rep.homology.groups[1].order();

    Int predicted = abs(det2(ea.killed.first, ea.killed.second,
                             eb.killed.first, eb.killed.second));
    Int actual = (rep.h1_order == 0) ? Int(0) : rep.h1_order;
    if (predicted != actual)
        throw std::logic_error("glue_tori: |H1| != |det(killed_a, killed_b)| for "
                               + a.to_string() + " ∪ " + b.to_string());
    rep.identified = h1_name(rep.h1_order, rep.orientable,
                             rep.homology.groups.size() > 2 ? rep.homology.groups[2].betti : 0);
    return rep;
}

SimplicialComplex build_equilibrium(const AssemblySpec& spec) {
    const size_t m = spec.tori.size();
    if (m < 3)
        throw std::invalid_argument("build_equilibrium: need at least 3 tori");
    std::vector<VertexId> apexes = spec.apexes;
    if (apexes.empty())
        for (size_t i = 1; i <= m; ++i) apexes.emplace_back("V" + std::to_string(i));
    if (apexes.size() != m)
        throw std::invalid_argument("build_equilibrium: apex count != edge count");

    std::vector<const catalog::CatalogEntry*> T;
    for (const auto& id : spec.tori) T.push_back(&catalog::solid_torus(id));

    // adjacent killed classes must span Z^2, else the apex link is no sphere
    for (size_t i = 0; i < m; ++i) {
        const auto& ka = T[i]->killed;
        const auto& kb = T[(i + 1) % m]->killed;
        Int d = det2(ka.first, ka.second, kb.first, kb.second);
        if (d != 1 && d != -1)
            throw std::invalid_argument("build_equilibrium: apex link not a sphere (tori "
                                        + spec.tori[i].to_string() + ", "
                                        + spec.tori[(i + 1) % m].to_string() + ")");
    }
    // tori must pairwise share exactly the boundary torus
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (!(complex_intersection(T[i]->complex, T[j]->complex)
                  == catalog::seven_vertex_torus()))
                throw std::invalid_argument("build_equilibrium: tori "
                                            + spec.tori[i].to_string() + " and "
                                            + spec.tori[j].to_string()
                                            + " overlap beyond the boundary torus");

    SimplicialComplex X;
    for (size_t i = 0; i < m; ++i) {
        const auto& prev = T[(i + m - 1) % m]->complex;
        const auto& curr = T[i]->complex;
        SimplicialComplex block = cone(apexes[i], complex_union(prev, curr));
        X = X.is_void() ? block : complex_union(X, block);
    }
    // vertex count sanity: |∪ V(T_i)| + m
    std::set<VertexId> vs;
    for (const auto* t : T) {
        auto tv = t->complex.vertices();
        vs.insert(tv.begin(), tv.end());
    }
    if (X.vertex_count() != (long long)(vs.size() + m))
        throw std::logic_error("build_equilibrium: vertex count mismatch");
    return X;
}

std::string FourManifoldReport::to_json() const {
    nlohmann::ordered_json j;
    j["f_vector"] = f_vector.counts;
    j["euler"] = euler;
    j["homology"] = nlohmann::json::parse(homology.to_json());
    j["links"] = nlohmann::ordered_json::array();
    for (const auto& l : links)
        j["links"].push_back({{"vertex", l.vertex.label()},
                              {"status", l.status},
                              {"moves", l.moves}});
    return j.dump();
}

FourManifoldReport verify_closed_4manifold(const SimplicialComplex& X,
                                           long long budget, uint64_t seed) {
    if (X.dim() != 4 || !X.is_pure())
        throw std::invalid_argument("verify_closed_4manifold: input is not pure 4-dimensional");
    FourManifoldReport rep;
    rep.f_vector = X.f_vector();
    rep.euler = rep.f_vector.euler();
    rep.closed_weak_pseudomanifold = true;
    for (const auto& [r, d] : X.ridge_degrees())
        if (d != 2) rep.closed_weak_pseudomanifold = false;
    rep.homology = homology(X);

    rep.all_links_certified = true;
    for (auto& l : recog::certify_links_4d(X, budget, seed)) {
        if (l.status == "failed") rep.any_link_failed = true;
        if (l.status != "certified") rep.all_links_certified = false;
        rep.links.push_back({l.vertex, l.status, l.moves});
    }
    return rep;
}

namespace {

std::vector<CensusEntry> load_census() {
    std::vector<CensusEntry> all;
    for (const char* name : {"section5.json", "section6.json", "section7.json"}) {
        std::string path = data_dir() + "/census/" + name;
        std::ifstream in(path);
        if (!in) throw std::runtime_error("missing census file " + path);
        nlohmann::json j;
        in >> j;
        for (const auto& je : j.at("entries")) {
            CensusEntry e;
            e.key = je.at("key").get<std::string>();
            e.polygon = je.at("polygon").get<int>();
            for (const auto& t : je.at("tori"))
                e.tori.push_back(catalog::TorusId::parse(t.get<std::string>()));
            for (const auto& x : je.at("xi"))
                e.xi.emplace_back(Int(x.at(0).get<long long>()), Int(x.at(1).get<long long>()));
            e.f0 = je.at("f0").get<long long>();
            e.f0_sum = je.value("f0_sum", "");
            e.manifold = je.value("manifold", "");
            e.notes = je.value("notes", "");
            if ((int)e.tori.size() != e.polygon || (int)e.xi.size() != e.polygon)
                throw std::runtime_error("census entry " + e.key + " is malformed");
            all.push_back(std::move(e));
        }
    }
    return all;
}

} // namespace

const std::vector<CensusEntry>& census() {
    static const std::vector<CensusEntry> c = load_census();
    return c;
}

std::vector<std::string> census_keys() {
    std::vector<std::string> ks;
    for (const auto& e : census()) ks.push_back(e.key);
    return ks;
}

const CensusEntry& census_entry(const std::string& key) {
    for (const auto& e : census())
        if (e.key == key) return e;
    std::string msg = "unknown census key " + key + "; available:";
    for (const auto& k : census_keys()) msg += " " + k;
    throw std::invalid_argument(msg);
}

CensusVerification verify_census_entry(const CensusEntry& e, bool certify_links,
                                       long long budget, uint64_t seed) {
    CensusVerification out;
    out.key = e.key;
    auto fail = [&](const std::string& why) {
        out.ok = false;
        out.failures.push_back(why);
    };

    AssemblySpec spec{e.tori, {}};
    SimplicialComplex X = build_equilibrium(spec);
    out.f0_built = X.vertex_count();
    if (out.f0_built != e.f0)
        fail("f0 = " + std::to_string(out.f0_built) + ", census expects " + std::to_string(e.f0));

    const long long m = e.polygon;
    HomologyProfile H = homology(X);
    out.homology = H.to_string();
    if (X.euler_characteristic() != m) fail("chi != m");
    if (!(H.groups[0].is_Z())) fail("H0 != Z");
    if (!H.groups[1].is_trivial()) fail("H1 != 0");
    if (!(H.groups[2].betti == m - 2 && H.groups[2].torsion.empty())) fail("H2 != Z^(m-2)");
    if (!H.groups[3].is_trivial()) fail("H3 != 0");
    if (!(H.groups[4].is_Z())) fail("H4 != Z");
    try {
        if (!orientable(X).has_value()) fail("not orientable");
    } catch (const std::exception& ex) {
        fail(std::string("orientability: ") + ex.what());
    }

    // characteristic data: validity, completeness, torus families
    charfun::CharacteristicPair cp{e.xi};
    if (!charfun::validate(cp)) fail("characteristic pair invalid");
    if (!charfun::is_complete(cp)) fail("characteristic pair not complete");
    std::vector<charfun::Vec2> killed;
    for (const auto& id : e.tori) killed.push_back(catalog::solid_torus(id).killed);
    if (!charfun::find_class_transform(e.xi, killed))
        fail("characteristic vectors do not match the killed classes");

    // sector checks: |H1| of every nonadjacent union against both determinants
    for (long long i = 0; i < m; ++i) {
        for (long long j = i + 1; j < m; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            Int pdet = abs(det2(killed[(size_t)i].first, killed[(size_t)i].second,
                                killed[(size_t)j].first, killed[(size_t)j].second));
            auto lp = charfun::lens_parameters(e.xi[(size_t)i], e.xi[(size_t)j]);
            if (abs(lp.p) != pdet)
                fail("sector (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                     + "): |p| from xi != |det killed|");
            if (adjacent) continue;
            auto rep = glue_tori(e.tori[(size_t)i], e.tori[(size_t)j]);
            Int order = rep.h1_order;
            if (order != pdet)
                fail("sector (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                     + "): |H1| = " + order.str() + " != " + pdet.str());
        }
    }

    if (certify_links) {
        auto rep = verify_closed_4manifold(X, budget, seed);
        if (!rep.closed_weak_pseudomanifold) fail("not a closed weak pseudomanifold");
        for (const auto& l : rep.links) {
            if (l.status == "certified") ++out.links_certified;
            else if (l.status == "uncertified") ++out.links_uncertified;
            else ++out.links_failed;
        }
        if (out.links_failed > 0) fail("some vertex link failed the 3-sphere homology test");
    }
    return out;
}

} // namespace quasitri::assembly
