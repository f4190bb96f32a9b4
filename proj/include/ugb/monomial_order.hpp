#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ugb/exactnum.hpp"
#include "ugb/staircase.hpp"

namespace ugb {

/// A weight-row tower compared lexicographically, finished by a
/// lexicographic comparison along a variable priority list. The fallback
/// makes the comparison total on N^d.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// `priority` lists 0-based variable indices, most significant first.
  MonomialOrder(std::vector<RationalVector> weight_rows, std::vector<int> priority);

  /// Lex with the given priority; identity priority when empty.
  static MonomialOrder lex(int d, std::vector<int> priority = {});
  /// Total degree, then lex.
  static MonomialOrder grlex(int d, std::vector<int> priority = {});
  /// Total degree, then the smaller exponent in the least significant
  /// variable wins.
  static MonomialOrder degrevlex(int d, std::vector<int> priority = {});
  /// The single weight row w, then lex along `priority`.
  static MonomialOrder weight(RationalVector w, std::vector<int> priority = {});

  int dim() const { return static_cast<int>(priority_.size()); }
  const std::vector<RationalVector>& weight_rows() const { return rows_; }
  const std::vector<int>& priority() const { return priority_; }

  std::strong_ordering compare(const ExponentVector& u, const ExponentVector& v) const;
  bool less(const ExponentVector& u, const ExponentVector& v) const { return compare(u, v) < 0; }

  /// "lex:x2>x1", "weights:[(3,2)];tiebreak:x1>x2" and friends.
  std::string to_string() const;
  static MonomialOrder parse(std::string_view spec, int d);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  enum class Kind { Custom, Lex, GrLex, DegRevLex };

  Kind kind_ = Kind::Custom;
  std::vector<RationalVector> rows_;
  std::vector<int> priority_;
};

/// Comparator adaptor for std algorithms.
struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return order->less(a, b); }
};

}  // namespace ugb
