#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ugb/errors.hpp"

namespace ugb {

using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// Coefficient field: the rationals, or GF(p) for a prime p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr std::uint32_t modulus() const { return modulus_; }

  /// "Q" or "GF(p)".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "QQ" and a bare prime.
  static Field parse(std::string_view text);

  friend constexpr bool operator==(Field, Field) = default;

 private:
  explicit constexpr Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const Rational& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only meaningful over the rationals.
  const Rational& rational() const { return rational_; }
  /// Only meaningful over a prime field.
  std::uint32_t residue() const { return residue_; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "p" or "p/q" with an optional leading '-'.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  Rational rational_;
  std::uint32_t residue_ = 0;
};

/// Parses "p", "+p", "-p", "p/q" (decimal, no whitespace) into `field`.
Scalar scalar_parse(std::string_view text, Field field);

/// gcd of the absolute values of the entries; 0 for the zero vector.
std::int64_t gcd_vector(std::span<const std::int64_t> v);

/// Scales a nonzero rational vector to the primitive integer vector pointing
/// the same way (denominators cleared, common factor removed).
IntVector primitive_integer_vector(std::span<const Rational> v);

Rational dot(std::span<const Rational> w, std::span<const std::int64_t> v);
Rational dot(std::span<const Rational> w, std::span<const int> v);

}  // namespace ugb
