#include "ugb/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ugb {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotAStaircase: return "NotAStaircase";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NonGenericWeight: return "NonGenericWeight";
    case Errc::MissingPredecessor: return "MissingPredecessor";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::InvalidBasis: return "InvalidBasis";
    case Errc::DuplicatePoints: return "DuplicatePoints";
    case Errc::RankCollapse: return "RankCollapse";
    case Errc::SingularBasis: return "SingularBasis";
    case Errc::ClassDeficit: return "ClassDeficit";
    case Errc::NotBinomial: return "NotBinomial";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::Timeout: return "Timeout";
    case Errc::BadSubset: return "BadSubset";
    case Errc::DimensionUnsupported: return "DimensionUnsupported";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::uint32_t reduce_mod(const BigInt& value, std::uint32_t p) {
  BigInt r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(Errc::InvalidArgument, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

std::string Field::to_string() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits = text;
  if (digits.starts_with("GF(") && digits.ends_with(")")) digits = digits.substr(3, digits.size() - 4);
  if (digits.empty() || digits.size() > 10) throw Error(Errc::ParseError, "bad field '" + std::string(text) + "'");
  std::uint64_t p = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::ParseError, "bad field '" + std::string(text) + "'");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (p >= (1ull << 31)) throw Error(Errc::InvalidArgument, "field modulus too large");
  return prime(static_cast<std::uint32_t>(p));
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field_.is_rational())
    rational_ = value;
  else
    residue_ = reduce_mod(BigInt(value), field_.modulus());
}

Scalar::Scalar(Field field, const Rational& value) : field_(field) {
  if (field_.is_rational()) {
    rational_ = value;
    rational_.canonicalize();
    return;
  }
  std::uint32_t p = field_.modulus();
  std::uint32_t den = reduce_mod(value.get_den(), p);
  if (den == 0) throw Error(Errc::NonInvertibleDenominator, "denominator vanishes mod " + std::to_string(p));
  std::uint64_t num = reduce_mod(value.get_num(), p);
  residue_ = static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw Error(Errc::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  if (field_.is_rational())
    out.rational_ = 1 / rational_;
  else
    out.residue_ = pow_mod(residue_, field_.modulus() - 2, field_.modulus());
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational())
    rational_ += other.rational_;
  else
    residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + other.residue_) % field_.modulus());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational())
    rational_ -= other.rational_;
  else
    residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + field_.modulus() - other.residue_) %
                                          field_.modulus());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational())
    rational_ *= other.rational_;
  else
    residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * other.residue_ % field_.modulus());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational())
    out.rational_ = -rational_;
  else if (residue_ != 0)
    out.residue_ = field_.modulus() - residue_;
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rational_.get_str();
  return std::to_string(residue_);
}

Scalar scalar_parse(std::string_view text, Field field) {
  auto fail = [&] { return Error(Errc::ParseError, "malformed scalar '" + std::string(text) + "'"); };
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  auto slash = rest.find('/');
  std::string_view num = rest.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : rest.substr(slash + 1);
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!all_digits(num) || !all_digits(den)) throw fail();
  BigInt numerator(std::string(num), 10);
  BigInt denominator(std::string(den), 10);
  if (denominator == 0) throw Error(Errc::ZeroDenominator, "in '" + std::string(text) + "'");
  if (negative) numerator = -numerator;
  return Scalar(field, Rational(numerator, denominator));
}

std::int64_t gcd_vector(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IntVector primitive_integer_vector(std::span<const Rational> v) {
  BigInt lcm_den = 1;
  for (const Rational& x : v) lcm_den = lcm(lcm_den, BigInt(x.get_den()));
  std::vector<BigInt> scaled;
  BigInt g = 0;
  for (const Rational& x : v) {
    scaled.push_back(BigInt(x.get_num() * (lcm_den / x.get_den())));
    g = gcd(g, scaled.back());
  }
  if (g == 0) throw Error(Errc::InvalidArgument, "zero vector has no primitive direction");
  IntVector out;
  for (const BigInt& x : scaled) {
    BigInt q = x / g;
    if (!q.fits_slong_p()) throw Error(Errc::TooLarge, "primitive vector entry exceeds 64 bits");
    out.push_back(q.get_si());
  }
  return out;
}

Rational dot(std::span<const Rational> w, std::span<const std::int64_t> v) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (v[i] != 0) s += w[i] * static_cast<long>(v[i]);
  return s;
}

Rational dot(std::span<const Rational> w, std::span<const int> v) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (v[i] != 0) s += w[i] * v[i];
  return s;
}

}  // namespace ugb
