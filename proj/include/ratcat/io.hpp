#pragma once

#include <string>

#include "ratcat/assoc.hpp"
#include "ratcat/scomplex.hpp"

namespace ratcat {

/// {"vertices":[...],"facets":[[...],...]} with sorted members; vertices are
/// the ground-set indices.
std::string complex_to_json(const SimplicialComplex& k);

/// Parses the same schema; vertex labels may be any distinct integers and
/// are mapped onto 0..n-1 in sorted order.
SimplicialComplex complex_from_json(const std::string& text);

/// Same schema with diagonals as the vertices.
std::string complex_to_json(const AssComplex& k);

}  // namespace ratcat
