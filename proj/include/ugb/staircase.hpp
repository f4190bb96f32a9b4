#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ugb/exactnum.hpp"

namespace ugb {

/// Exponent of a monomial x^v: d nonnegative integers.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t d) : coords_(d, 0) {}
  explicit ExponentVector(std::vector<int> coords);
  ExponentVector(std::initializer_list<int> coords) : ExponentVector(std::vector<int>(coords)) {}

  static ExponentVector unit(std::size_t d, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }
  int degree() const;

  /// Coordinatewise u <= v.
  bool divides(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;
  /// Throws InvalidArgument if the result would have a negative entry.
  ExponentVector operator-(const ExponentVector& other) const;
  /// this - e_i, or throws if the i-th entry is zero.
  ExponentVector minus_unit(std::size_t i) const;
  ExponentVector plus_unit(std::size_t i) const;

  IntVector to_int() const { return IntVector(coords_.begin(), coords_.end()); }

  /// "(3,0)".
  std::string to_string() const;

  /// Plain lexicographic comparison on coordinates (used for map keys).
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> coords_;
};

/// Canonical presentation order: total degree, then colexicographic
/// (last coordinate most significant), so (1,0) precedes (0,1).
bool graded_less(const ExponentVector& a, const ExponentVector& b);
/// Colexicographic order, the column order of the normal-form table.
bool colex_less(const ExponentVector& a, const ExponentVector& b);

void sort_graded(std::vector<ExponentVector>& vs);

/// True iff s (any order, duplicates ignored) is downward closed in N^d.
bool is_staircase(const std::vector<ExponentVector>& s);

/// A finite downward closed subset of N^d, stored sorted in graded order.
class Staircase {
 public:
  Staircase() = default;
  /// Throws NotAStaircase unless `elements` is downward closed and
  /// duplicate free; all vectors must share one dimension.
  explicit Staircase(std::vector<ExponentVector> elements);

  std::size_t size() const { return elements_.size(); }
  std::size_t dim() const { return elements_.empty() ? 0 : elements_.front().dim(); }
  const std::vector<ExponentVector>& elements() const { return elements_; }
  bool contains(const ExponentVector& v) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// "{(0,0),(1,0)}".
  std::string to_string() const;

  friend bool operator==(const Staircase&, const Staircase&) = default;
  /// Orders by element list in graded order; used as a container key.
  friend bool operator<(const Staircase& a, const Staircase& b);

 private:
  std::vector<ExponentVector> elements_;
};

/// {v in N^d : prod (v_i + 1) <= n}, graded order.
std::vector<ExponentVector> v_set(int n, int d);

/// V_n^d together with all unit shifts, deduplicated, colex order.
std::vector<ExponentVector> u_set(int n, int d);

/// Coordinatewise minimal vectors outside the staircase, graded order.
std::vector<ExponentVector> min_gaps(const Staircase& lambda);

/// Coordinatewise sum of all elements.
IntVector staircase_sum(const Staircase& lambda);

/// Every n-element staircase in N^d exactly once. Throws TooLarge past
/// `max_count`.
std::vector<Staircase> enumerate_staircases(int n, int d, std::size_t max_count = 1'000'000);

/// Parses "(3,0)", or the compact digit form "30" when the dimension is at
/// most 9.
ExponentVector parse_exponent(std::string_view text);

/// Inverse of Staircase::to_string.
Staircase parse_staircase(std::string_view text);

}  // namespace ugb
