#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ugb/constructors.hpp"
#include "ugb/driver.hpp"

namespace ugb {

/// Contents of a basis file before any validation.
struct BasisFile {
  std::size_t n = 0;
  int d = 0;
  Field field;
  MonomialOrder order;
  std::vector<Polynomial> polys;
};

/// Header "n d field order", then one polynomial per line. Blank lines and
/// lines starting with '#' are skipped.
BasisFile parse_basis_file(std::string_view text);
std::string render_basis_file(const ReducedGroebnerBasis& g);
/// Builds and validates the reduced basis described by a basis file.
ReducedGroebnerBasis basis_from_file(const BasisFile& file);

/// "(1,-2)", "1 -2", "1,-2" and "[1,-2]" all parse to the same vector.
IntVector parse_int_vector(std::string_view text);
RationalVector parse_rational_vector(std::string_view text);

/// One point per line, comma-separated scalars; d is read off the first point.
PointConfiguration parse_points_file(std::string_view text, Field field);
/// d lines of d integers, one basis column per line.
LatticeBasis parse_lattice_file(std::string_view text);

/// One move per line.
std::string render_test_set(const TestSet& t);
TestSet parse_test_set(std::string_view text);

nlohmann::ordered_json ugb_to_json(const UgbResult& result);
/// Inverse of ugb_to_json; reduced bases are revalidated.
UgbResult ugb_from_json(const nlohmann::json& j);

}  // namespace ugb
