#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ugb/matrix.hpp"
#include "ugb/monomial_order.hpp"
#include "ugb/polynomial.hpp"
#include "ugb/staircase.hpp"

namespace ugb {

/// G_lambda = {x^u - tail_u : u in min_gaps(lambda)} with every tail
/// supported on lambda.
struct ReducedGroebnerBasis {
  Field field;
  Staircase staircase;
  std::map<ExponentVector, Polynomial> tails;  // keyed by head exponent
  MonomialOrder order;

  int dim() const { return static_cast<int>(staircase.dim()); }
  std::size_t length() const { return staircase.size(); }

  /// x^u - tail_u for each head u, heads in graded order.
  std::vector<Polynomial> elements() const;

  /// Inverse of elements(): reads heads under `order`, requires monic
  /// elements and a pure power of every variable among the heads. Throws
  /// InvalidBasis otherwise. Does not check reducedness; see
  /// validate_reduced_gb.
  static ReducedGroebnerBasis from_elements(const std::vector<Polynomial>& elements, const MonomialOrder& order);

  friend bool operator==(const ReducedGroebnerBasis&, const ReducedGroebnerBasis&) = default;
};

/// Monomials not divisible by any of `heads`; throws NotZeroDimensional if
/// some variable has no pure power among them.
Staircase standard_monomials(const std::vector<ExponentVector>& heads, int d);

struct Violation {
  enum class Kind { NotAStaircase, WrongLength, HeadSetMismatch, TailOutsideStaircase, HeadNotInitial, FieldMismatch };
  Kind kind;
  std::string detail;
};

std::string_view violation_name(Violation::Kind kind);

/// First violation of the reduced-basis shape for an n-long ideal, if any.
std::optional<Violation> validate_reduced_gb(const ReducedGroebnerBasis& g, std::size_t n);

/// n x |U| matrix: column u holds the coordinates of [x^u]_lambda over the
/// rows lambda. Rows follow graded order, columns follow u_set.
class CoeffTable {
 public:
  CoeffTable() = default;
  CoeffTable(Field field, std::vector<ExponentVector> rows, std::vector<ExponentVector> columns);

  Field field() const { return matrix_.field(); }
  int dim() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().dim()); }
  std::size_t n() const { return rows_.size(); }
  std::size_t width() const { return columns_.size(); }
  const std::vector<ExponentVector>& rows() const { return rows_; }
  const std::vector<ExponentVector>& columns() const { return columns_; }
  const Matrix& matrix() const { return matrix_; }

  Scalar& at(std::size_t row, std::size_t col) { return matrix_(row, col); }
  const Scalar& at(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  std::optional<std::size_t> column_index(const ExponentVector& u) const;
  /// Column u as a polynomial over the row monomials.
  Polynomial representative(std::size_t col) const;

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

 private:
  std::vector<ExponentVector> rows_;
  std::vector<ExponentVector> columns_;
  std::map<ExponentVector, std::size_t> index_;
  Matrix matrix_;
};

CoeffTable normal_form_table(const ReducedGroebnerBasis& g);

struct Conversion {
  Staircase staircase;
  ReducedGroebnerBasis basis;
  CoeffTable table;
  std::uint64_t scalar_ops = 0;  // multiply-adds in the elimination
};

/// Greedy basis change to the initial staircase of a strictly positive
/// weight w, generic on V_n^d. Column ties outside V are broken by `priority`
/// lex (identity when empty).
Conversion convert_basis(const CoeffTable& table, const RationalVector& w, std::vector<int> priority = {});

}  // namespace ugb
