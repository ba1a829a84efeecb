#pragma once

#include <string>

#include "quasitri/complex.hpp"

namespace quasitri {

// Facet-list text format: one facet per line, labels separated by single
// spaces, lines sorted bytewise; '#' starts a comment.  Round trips are
// bit-exact: serialize(parse(s)) == serialize(complex(s)).
std::string to_facet_text(const SimplicialComplex& X);
SimplicialComplex from_facet_text(const std::string& text);

SimplicialComplex load_facet_file(const std::string& path);
void save_facet_file(const SimplicialComplex& X, const std::string& path);

// JSON form: {"vertices": [...], "facets": [[...]]}
std::string to_json(const SimplicialComplex& X, int indent = -1);
SimplicialComplex from_json(const std::string& json_text);

// Directory holding the shipped catalog / census data.  Compile-time default
// is overridden by the QUASITRI_DATA env var.
std::string data_dir();

// FNV-1a hash of a byte string, as printed in reproducibility headers.
std::string fnv1a_hex(const std::string& bytes);

} // namespace quasitri
