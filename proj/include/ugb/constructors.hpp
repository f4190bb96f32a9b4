#pragma once

#include <vector>

#include "ugb/groebner.hpp"

namespace ugb {

/// n distinct points of F^d.
struct PointConfiguration {
  Field field;
  int d = 0;
  std::vector<std::vector<Scalar>> points;
};

/// Full-rank integer lattice L of Z^d given by the columns of B.
class LatticeBasis {
 public:
  /// Throws SingularBasis when the columns are dependent.
  explicit LatticeBasis(std::vector<IntVector> columns);

  int dim() const { return static_cast<int>(columns_.size()); }
  const std::vector<IntVector>& columns() const { return columns_; }
  /// |det B|, the index of L in Z^d.
  std::int64_t det_abs() const { return det_abs_; }

  /// True iff v = B z for some integer z.
  bool contains(const IntVector& v) const;

 private:
  std::vector<IntVector> columns_;
  std::vector<RationalVector> inverse_;  // rows of B^{-1}
  std::int64_t det_abs_ = 0;
};

struct TestSet {
  std::vector<IntVector> moves;  // sorted, deduplicated
};

/// I_lambda = <x^u : u in min_gaps(lambda)>, tagged with the graded-lex order.
ReducedGroebnerBasis monomial_ideal(const Staircase& lambda, Field field = Field::rationals());

/// Reduced basis of the vanishing ideal of the points under `order`.
ReducedGroebnerBasis from_points(const PointConfiguration& config, const MonomialOrder& order);

/// Reduced (binomial) basis of the lattice ideal I_L under `order`.
ReducedGroebnerBasis from_lattice(const LatticeBasis& lattice, const MonomialOrder& order,
                                  Field field = Field::rationals());

/// {u - v : x^u - x^v in ugb}. Throws NotBinomial on any other shape.
TestSet lattice_test_set(const std::vector<Polynomial>& ugb);

/// Augments x by first-improving moves of +-T, descending in the term
/// order "w, then lex", until none applies. The result minimizes w . x over
/// the fiber when T is a universal test set.
IntVector lattice_minimize(const TestSet& tests, const IntVector& x, const RationalVector& w);

}  // namespace ugb
