#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "ugb/exactnum.hpp"
#include "ugb/monomial_order.hpp"
#include "ugb/staircase.hpp"

namespace ugb {

/// Sparse polynomial in x1..xd over a Field; no stored zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Scalar>;

  Polynomial() = default;
  Polynomial(Field field, int d) : field_(field), dim_(d) {}

  static Polynomial monomial(Field field, const ExponentVector& e, const Scalar& coefficient);
  static Polynomial monomial(Field field, const ExponentVector& e) {
    return monomial(field, e, Scalar::one(field));
  }

  Field field() const { return field_; }
  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const ExponentVector& e) const;
  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const ExponentVector& e, const Scalar& c);

  /// Largest monomial under `order`; throws InvalidArgument on zero.
  const ExponentVector& head(const MonomialOrder& order) const;
  Scalar head_coefficient(const MonomialOrder& order) const { return terms_.at(head(order)); }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const;

  Polynomial scaled(const Scalar& c) const;
  /// c * x^e * this.
  Polynomial shifted(const ExponentVector& e, const Scalar& c) const;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Terms from largest to smallest under `order`, e.g. "x1^3 - 3*x1^2 + 1".
  std::string to_string(const MonomialOrder& order) const;
  /// Same, under graded order.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Field field_;
  int dim_ = 0;
  TermMap terms_;
};

/// Accepts sums of terms like "c*x1^a*x2^b", "-7/6*x2", "x1", "5"; spaces
/// are ignored. Variables are x1..xd.
Polynomial parse_polynomial(std::string_view text, Field field, int d);

/// sum of c * prod point_i^e_i with 0^0 = 1.
Scalar poly_eval(const Polynomial& f, std::span<const Scalar> point);

}  // namespace ugb
