#include <gtest/gtest.h>

#include <random>

#include "ugb/exactnum.hpp"
#include "ugb/matrix.hpp"

using namespace ugb;

namespace {

// Modular inverse by exhaustive search, independent of the library.
long brute_inverse(long a, long p) {
  for (long x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  return -1;
}

Scalar random_scalar(std::mt19937_64& rng, Field f) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  if (f.is_rational()) return Scalar(f, Rational(num(rng), den(rng)));
  return Scalar(f, num(rng));
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST(ScalarParse, CanonicalRational) {
  Scalar s = scalar_parse("3/6", Field::rationals());
  EXPECT_EQ(s.rational(), Rational(1, 2));
  EXPECT_EQ(s.to_string(), "1/2");
}

TEST(ScalarParse, NegativeFraction) {
  Scalar s = scalar_parse("-7/6", Field::rationals());
  EXPECT_EQ(s.rational(), Rational(-7, 6));
  EXPECT_EQ(s.to_string(), "-7/6");
}

TEST(ScalarParse, PrimeFieldMatchesBruteForceInverse) {
  Field f5 = Field::prime(5);
  Scalar s = scalar_parse("2/3", f5);
  EXPECT_EQ(s.residue(), static_cast<std::uint32_t>((2 * brute_inverse(3, 5)) % 5));
  EXPECT_EQ(s.residue(), 4u);
}

TEST(ScalarParse, Errors) {
  EXPECT_EQ(code_of([] { scalar_parse("1/0", Field::rationals()); }), Errc::ZeroDenominator);
  EXPECT_EQ(code_of([] { scalar_parse("1/5", Field::prime(5)); }), Errc::NonInvertibleDenominator);
  EXPECT_EQ(code_of([] { scalar_parse("x", Field::rationals()); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { scalar_parse("1 /2", Field::rationals()); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { scalar_parse("", Field::rationals()); }), Errc::ParseError);
  EXPECT_EQ(scalar_parse("+4", Field::rationals()).rational(), 4);
}

TEST(ScalarParse, NegativeResidue) {
  EXPECT_EQ(scalar_parse("-1", Field::prime(7)).residue(), 6u);
  EXPECT_EQ(scalar_parse("-3/2", Field::prime(7)).residue(), static_cast<std::uint32_t>((4 * brute_inverse(2, 7)) % 7));
}

TEST(FieldTag, PrimeChecks) {
  EXPECT_EQ(code_of([] { Field::prime(4); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { Field::prime(1); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { Field::prime(2147483659u); }), Errc::InvalidArgument);  // prime above 2^31
  EXPECT_EQ(Field::prime(2147483647u).modulus(), 2147483647u);
  EXPECT_EQ(Field::parse("GF(32003)"), Field::prime(32003));
  EXPECT_EQ(Field::parse("Q"), Field::rationals());
  EXPECT_EQ(Field::prime(32003).to_string(), "GF(32003)");
}

TEST(ScalarArithmetic, MixedFieldsRejected) {
  Scalar a(Field::rationals(), 1L), b(Field::prime(5), 1L);
  EXPECT_EQ(code_of([&] { (void)(a + b); }), Errc::FieldMismatch);
  EXPECT_EQ(code_of([&] { Scalar::zero(Field::rationals()).inverse(); }), Errc::DivisionByZero);
}

TEST(ScalarArithmetic, LargeModulusProducts) {
  Field f = Field::prime(2147483647u);
  Scalar a(f, 2147483646L);
  EXPECT_TRUE((a * a).is_one());  // (-1)^2
}

class FieldAxioms : public ::testing::TestWithParam<Field> {};

TEST_P(FieldAxioms, RandomTriples) {
  const Field f = GetParam();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_TRUE((a - a).is_zero());
    if (!b.is_zero()) {
      EXPECT_EQ((a * b) / b, a);
      EXPECT_TRUE((b * b.inverse()).is_one());
    }
  }
}

TEST_P(FieldAxioms, RenderParseRoundTrip) {
  const Field f = GetParam();
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    Scalar a = random_scalar(rng, f);
    EXPECT_EQ(scalar_parse(a.to_string(), f), a);
  }
}

TEST_P(FieldAxioms, CanonicalRepresentation) {
  const Field f = GetParam();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = random_scalar(rng, f);
    if (f.is_rational()) {
      EXPECT_GT(a.rational().get_den(), 0);
      EXPECT_EQ(gcd(a.rational().get_num(), a.rational().get_den()), 1);
    } else {
      EXPECT_LT(a.residue(), f.modulus());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothFields, FieldAxioms, ::testing::Values(Field::rationals(), Field::prime(101), Field::prime(32003)));

TEST(GcdVector, Examples) {
  EXPECT_EQ(gcd_vector(IntVector{2, -2}), 2);
  EXPECT_EQ(gcd_vector(IntVector{2, -1}), 1);
  EXPECT_EQ(gcd_vector(IntVector{0, 0}), 0);
  EXPECT_EQ(gcd_vector(IntVector{0, -6, 9}), 3);
}

TEST(PrimitiveIntegerVector, ClearsDenominators) {
  RationalVector v{Rational(1, 2), Rational(3, 4)};
  EXPECT_EQ(primitive_integer_vector(v), (IntVector{2, 3}));
  RationalVector u{Rational(-6), Rational(4)};
  EXPECT_EQ(primitive_integer_vector(u), (IntVector{-3, 2}));
}

namespace {

// Cofactor expansion, independent of the elimination code.
Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Rational term = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

}  // namespace

TEST(MatrixOps, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-3, 3);
  const Field q = Field::rationals();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix m(q, n, n);
    std::vector<std::vector<Rational>> raw(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        raw[i][j] = entry(rng);
        m(i, j) = Scalar(q, raw[i][j]);
      }
    Rational expected = cofactor_det(raw);
    EXPECT_EQ(determinant(m).rational(), expected);
    EXPECT_EQ(rank(m) == n, expected != 0);
    Matrix b(q, n, 1);
    for (std::size_t i = 0; i < n; ++i) b(i, 0) = Scalar(q, static_cast<long>(i + 1));
    auto x = solve(m, b);
    EXPECT_EQ(x.has_value(), expected != 0);
    if (x) {
      for (std::size_t i = 0; i < n; ++i) {
        Scalar acc = Scalar::zero(q);
        for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * (*x)(j, 0);
        EXPECT_EQ(acc, b(i, 0));
      }
    }
  }
}
