#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace quasitri {

// A vertex label. Labels are opaque tokens ("0".."6" for the core torus
// vertices, "u1.0" / "q0.3" / "V2" and the like for the auxiliary families);
// equality is label equality and the total order is a natural order: maximal
// digit runs compare as integers, everything else compares bytewise. This
// keeps "u1.2" < "u1.10" and sorts the core labels ahead of every family.
class VertexId {
public:
    VertexId() = default;
    explicit VertexId(std::string label) : label_(std::move(label)) {}
    explicit VertexId(int core) : label_(std::to_string(core)) {}

    const std::string& label() const { return label_; }

    bool operator==(const VertexId& o) const { return label_ == o.label_; }
    bool operator!=(const VertexId& o) const { return label_ != o.label_; }
    bool operator<(const VertexId& o) const { return natural_less(label_, o.label_); }
    bool operator>(const VertexId& o) const { return o < *this; }
    bool operator<=(const VertexId& o) const { return !(o < *this); }
    bool operator>=(const VertexId& o) const { return !(*this < o); }

    static bool natural_less(const std::string& a, const std::string& b);

private:
    std::string label_;
};

// A simplex is a sorted duplicate-free vector of vertices.  The empty vector
// is the (-1)-dimensional simplex.
using Simplex = std::vector<VertexId>;

Simplex make_simplex(std::vector<VertexId> vs);
Simplex simplex_union(const Simplex& a, const Simplex& b);
Simplex simplex_intersection(const Simplex& a, const Simplex& b);
Simplex simplex_difference(const Simplex& a, const Simplex& b);
bool simplex_contains(const Simplex& big, const Simplex& small);
bool simplex_disjoint(const Simplex& a, const Simplex& b);
std::string simplex_to_string(const Simplex& s);

} // namespace quasitri
