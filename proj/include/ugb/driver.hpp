#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ugb/groebner.hpp"
#include "ugb/zonotope.hpp"

namespace ugb {

struct UgbResult {
  int n = 0;
  int d = 0;
  Field field;
  std::vector<Staircase> initial_staircases;             // sorted by staircase sum
  std::vector<IntVector> state_vertices;                 // staircase sums, same order
  std::map<Staircase, ReducedGroebnerBasis> reduced_bases;
  std::vector<Polynomial> universal_basis;               // deduplicated, canonical order
  std::vector<MonomialOrder> universal_orders;           // an order under which each element is in a reduced basis
  std::vector<std::pair<RationalVector, Staircase>> witness_assignment;
};

struct DriverOptions {
  std::size_t max_chambers = 1'000'000;
  /// Precomputed W_n^d; enumerated from the zonotope when absent.
  std::optional<std::vector<RationalVector>> witnesses;
};

UgbResult compute_ugb(const ReducedGroebnerBasis& g, const DriverOptions& options = {});

struct StatePolyhedron {
  std::vector<IntVector> vertices;  // lexicographically sorted
  int recession_dim = 0;            // recession cone is the orthant R_+^d
};

StatePolyhedron state_polyhedron(const UgbResult& result);

/// Positive chamber witnesses of the (n, d) zonotope, as integer vectors.
std::vector<IntVector> universal_order_set(int n, int d, std::size_t max_chambers = 1'000'000);

/// Cache file "(n,d)" followed by one integer vector per line.
std::string render_order_set(int n, int d, const std::vector<IntVector>& orders);
std::vector<IntVector> parse_order_set(const std::string& text, int n, int d);

/// Reads the cached W_n^d under `cache_dir`, computing and writing it when
/// missing or when `refresh` is set.
std::vector<IntVector> cached_order_set(const std::filesystem::path& cache_dir, int n, int d, bool refresh,
                                        std::size_t max_chambers = 1'000'000);

}  // namespace ugb
