#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ugb/exactnum.hpp"

namespace ugb {

/// One representative per antipodal pair of the primitive differences of
/// V_n^d; each representative has a positive first nonzero entry.
struct DirectionSet {
  int n = 0;
  int d = 0;
  std::vector<IntVector> generators;
};

/// A full-dimensional cone of the central arrangement {w . g = 0}.
struct Chamber {
  RationalVector witness;    // interior point, scaled to a primitive integer vector
  IntVector vertex;          // zonotope vertex minimized by the witness
  std::vector<int> signs;    // sign(witness . g) per generator, never 0
};

DirectionSet primitive_differences(int n, int d);

/// sign(w . g) per generator; 0 marks a hyperplane containing w.
std::vector<int> sign_vector(const RationalVector& w, const DirectionSet& directions);

/// True iff w . g != 0 for every generator.
bool is_generic(const RationalVector& w, const DirectionSet& directions);

/// Sum over all g in +-generators with w . g < 0. Throws NonGenericWeight
/// when w lies on a hyperplane.
IntVector zonotope_vertex(const RationalVector& w, const DirectionSet& directions);

/// Interior points of every chamber of the arrangement {w . h = 0 : h in
/// hyperplanes} that meets the open positive orthant, in primitive integer
/// scaling. Throws TooLarge past max_cells.
std::vector<RationalVector> positive_cell_witnesses(const std::vector<IntVector>& hyperplanes, int d,
                                                    std::size_t max_cells = 1'000'000);

std::vector<Chamber> positive_chambers(const DirectionSet& directions, std::size_t max_chambers = 1'000'000);
std::vector<Chamber> positive_chambers(int n, int d, std::size_t max_chambers = 1'000'000);

std::vector<Chamber> all_chambers(const DirectionSet& directions, std::size_t max_chambers = 1'000'000);
std::vector<Chamber> all_chambers(int n, int d, std::size_t max_chambers = 1'000'000);

/// "(3,-1)" for integer or integral rational vectors; "p/q" entries otherwise.
std::string vector_to_string(const IntVector& v);
std::string vector_to_string(const RationalVector& v);

}  // namespace ugb
