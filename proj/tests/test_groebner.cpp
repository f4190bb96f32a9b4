#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "ugb/zonotope.hpp"

using namespace ugb;
using namespace ugb::fixtures;

namespace {

// Reference comparisons written out from the textbook definitions.
int ref_lex(const ExponentVector& u, const ExponentVector& v, const std::vector<int>& priority) {
  for (int i : priority)
    if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
  return 0;
}

int ref_degrevlex(const ExponentVector& u, const ExponentVector& v) {
  if (u.degree() != v.degree()) return u.degree() > v.degree() ? 1 : -1;
  for (std::size_t i = u.dim(); i-- > 0;)
    if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
  return 0;
}

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

ExponentVector random_exponent(std::mt19937_64& rng, int d, int max) {
  std::uniform_int_distribution<int> e(0, max);
  std::vector<int> c(d);
  for (int& x : c) x = e(rng);
  return ExponentVector(c);
}

std::vector<ReducedGroebnerBasis> corpus_bases() {
  std::vector<ReducedGroebnerBasis> out;
  for (const auto& c : corpus::point_corpus(30)) out.push_back(from_points(c, MonomialOrder::grlex(2)));
  for (const auto& l : corpus::lattice_corpus(10)) out.push_back(from_lattice(l, MonomialOrder::lex(2)));
  return out;
}

}  // namespace

TEST(MonomialOrder, Examples) {
  EXPECT_TRUE(lex21().compare({0, 1}, {2, 0}) > 0);
  MonomialOrder w32 = MonomialOrder::weight({3, 2});
  EXPECT_TRUE(w32.compare({1, 0}, {0, 1}) > 0);
  EXPECT_TRUE(w32.compare({2, 1}, {2, 1}) == 0);
  EXPECT_TRUE(lex21().compare({4, 4}, {4, 4}) == 0);
}

TEST(MonomialOrder, MatchesReferenceDefinitions) {
  std::mt19937_64 rng(11);
  for (int d = 1; d <= 4; ++d) {
    std::vector<int> reversed(d);
    for (int i = 0; i < d; ++i) reversed[i] = d - 1 - i;
    MonomialOrder lex = MonomialOrder::lex(d, reversed);
    MonomialOrder grlex = MonomialOrder::grlex(d);
    MonomialOrder drl = MonomialOrder::degrevlex(d);
    std::vector<int> identity(d);
    for (int i = 0; i < d; ++i) identity[i] = i;
    for (int trial = 0; trial < 2000; ++trial) {
      ExponentVector u = random_exponent(rng, d, 4), v = random_exponent(rng, d, 4);
      EXPECT_EQ(sign_of(lex.compare(u, v)), ref_lex(u, v, reversed));
      int g = u.degree() != v.degree() ? (u.degree() > v.degree() ? 1 : -1) : ref_lex(u, v, identity);
      EXPECT_EQ(sign_of(grlex.compare(u, v)), g);
      EXPECT_EQ(sign_of(drl.compare(u, v)), ref_degrevlex(u, v));
    }
  }
}

TEST(MonomialOrder, TermOrderAxioms) {
  std::mt19937_64 rng(5);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(3), MonomialOrder::grlex(3, {2, 0, 1}), MonomialOrder::degrevlex(3),
                                    MonomialOrder::weight({Rational(1, 2), 7, 3}, {1, 2, 0})};
  for (const MonomialOrder& o : orders) {
    for (int trial = 0; trial < 500; ++trial) {
      ExponentVector u = random_exponent(rng, 3, 5), v = random_exponent(rng, 3, 5), s = random_exponent(rng, 3, 3);
      EXPECT_EQ(sign_of(o.compare(u, v)), -sign_of(o.compare(v, u)));
      EXPECT_EQ(o.compare(u, v) == 0, u == v);
      EXPECT_EQ(sign_of(o.compare(u + s, v + s)), sign_of(o.compare(u, v)));
      if (u != ExponentVector(3)) {
        EXPECT_TRUE(o.compare(u, ExponentVector(3)) > 0);
      }
    }
  }
}

TEST(MonomialOrder, TextRoundTrip) {
  for (const char* spec : {"lex:x2>x1", "lex:x1>x2>x3", "grlex:x1>x2>x3", "degrevlex:x1>x2>x3",
                           "weights:[(3,2,1)];tiebreak:x3>x1>x2", "weights:[(1,1,1),(1/2,0,3)];tiebreak:x1>x2>x3"}) {
    int d = std::string(spec) == "lex:x2>x1" ? 2 : 3;
    MonomialOrder o = MonomialOrder::parse(spec, d);
    EXPECT_EQ(MonomialOrder::parse(o.to_string(), d), o) << spec;
  }
  EXPECT_EQ(MonomialOrder::parse("lex:x2>x1", 2), lex21());
  EXPECT_EQ(MonomialOrder::weight({5, 1}).to_string(), "weights:[(5,1)];tiebreak:x1>x2");
  EXPECT_THROW(MonomialOrder::parse("lex:x1>x1", 2), Error);
  EXPECT_THROW(MonomialOrder::parse("lex:x3>x1", 2), Error);
  EXPECT_THROW(MonomialOrder::parse("nonsense", 2), Error);
  EXPECT_THROW(MonomialOrder::parse("weights:[(1,2,3)];tiebreak:x1>x2", 2), Error);
}

TEST(Polynomial, ParsePrintArithmetic) {
  Polynomial f = P("x1 + 1/6*x2^2 - 7/6*x2");
  EXPECT_EQ(f.coefficient({0, 2}).rational(), Rational(1, 6));
  EXPECT_EQ(f.coefficient({0, 1}).rational(), Rational(-7, 6));
  EXPECT_EQ(P(f.to_string()), f);
  EXPECT_EQ(P(f.to_string(lex21())), f);
  EXPECT_EQ(P("x1^3 - 3*x1^2 + 3*x1 - 1").to_string(), "x1^3 - 3*x1^2 + 3*x1 - 1");
  EXPECT_EQ(P("x2 - x1 + 1").to_string(lex21()), "x2 - x1 + 1");
  EXPECT_EQ(P("x1 - 1") * P("x1 - 1") * P("x1 - 1"), P("x1^3 - 3*x1^2 + 3*x1 - 1"));
  EXPECT_TRUE((P("x1*x2 + 2") - P("2 + x2*x1")).is_zero());
  EXPECT_EQ(P("x2").head(lex21()), ExponentVector({0, 1}));
  EXPECT_EQ(P("x2 - x1^2").head(MonomialOrder::grlex(2)), ExponentVector({2, 0}));
  EXPECT_THROW(P("x3"), Error);
  EXPECT_THROW(P("x1 +"), Error);
  EXPECT_THROW(P("2*"), Error);
}

TEST(Polynomial, Eval) {
  Scalar two(kQ, 2L), four(kQ, 4L), one(kQ, 1L), zero(kQ, 0L);
  EXPECT_TRUE(poly_eval(P("x1^2 - x2"), std::vector<Scalar>{two, four}).is_zero());
  EXPECT_EQ(poly_eval(P("5"), std::vector<Scalar>{two, four}), Scalar(kQ, 5L));
  EXPECT_TRUE(poly_eval(P("x1^3 - 3*x1^2 + 2*x1"), std::vector<Scalar>{one, zero}).is_zero());
  EXPECT_EQ(poly_eval(P("x1^0*x2^0 + x1"), std::vector<Scalar>{zero, zero}), one);
  Field f7 = Field::prime(7);
  Polynomial g = parse_polynomial("x1^3 + 1", f7, 1);
  EXPECT_TRUE(poly_eval(g, std::vector<Scalar>{Scalar(f7, 3L)}).is_zero());  // 27 + 1 = 28
}

TEST(ReducedBasis, ValidateExample) {
  ReducedGroebnerBasis g = cubic_line_basis();
  EXPECT_EQ(g.staircase, parse_staircase("{(0,0),(1,0),(2,0)}"));
  EXPECT_FALSE(validate_reduced_gb(g, 3).has_value());
  auto wrong_length = validate_reduced_gb(g, 4);
  ASSERT_TRUE(wrong_length.has_value());
  EXPECT_EQ(wrong_length->kind, Violation::Kind::WrongLength);
}

TEST(ReducedBasis, ValidateViolations) {
  // Tail monomial x1 above the head x2 under lex x1 > x2.
  ReducedGroebnerBasis g = cubic_line_basis();
  g.order = MonomialOrder::lex(2);
  auto v = validate_reduced_gb(g, 3);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, Violation::Kind::HeadNotInitial);

  // Staircase {00,10,01} with a tail on 20.
  ReducedGroebnerBasis h = monomial_ideal(parse_staircase("{(0,0),(1,0),(0,1)}"));
  h.tails.at({2, 0}) = Polynomial::monomial(kQ, {0, 2});
  v = validate_reduced_gb(h, 3);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, Violation::Kind::TailOutsideStaircase);

  ReducedGroebnerBasis heads = monomial_ideal(parse_staircase("{(0,0),(1,0),(0,1)}"));
  heads.tails.erase(ExponentVector{1, 1});
  v = validate_reduced_gb(heads, 3);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, Violation::Kind::HeadSetMismatch);

  ReducedGroebnerBasis mixed = cubic_line_basis();
  mixed.tails.at({0, 1}) = parse_polynomial("x1 - 1", Field::prime(5), 2);
  v = validate_reduced_gb(mixed, 3);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, Violation::Kind::FieldMismatch);
}

TEST(ReducedBasis, FromElementsErrors) {
  EXPECT_THROW(ReducedGroebnerBasis::from_elements({P("2*x1 - 1"), P("x2")}, MonomialOrder::lex(2)), Error);
  EXPECT_THROW(ReducedGroebnerBasis::from_elements({P("x1 - 1")}, MonomialOrder::lex(2)), Error);
  EXPECT_THROW(ReducedGroebnerBasis::from_elements({}, MonomialOrder::lex(2)), Error);
  try {
    ReducedGroebnerBasis::from_elements({P("x1 - 1"), P("x1 - x2")}, MonomialOrder::lex(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidBasis);
  }
}

TEST(NormalFormTable, ExampleMatrix) {
  CoeffTable a = normal_form_table(cubic_line_basis());
  const std::vector<std::string> columns{"00", "10", "20", "30", "01", "11", "21", "02", "12", "03"};
  ASSERT_EQ(a.width(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) EXPECT_EQ(a.columns()[j], parse_exponent(columns[j]));
  const long expected[3][10] = {{1, 0, 0, 1, -1, 0, 1, 1, 1, 0},
                                {0, 1, 0, -3, 1, -1, -3, -2, -2, 0},
                                {0, 0, 1, 3, 0, 1, 2, 1, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 10; ++j) EXPECT_EQ(a.at(i, j), Scalar(kQ, expected[i][j])) << i << "," << columns[j];
}

// Each column u read back as a polynomial: x^u minus it lies in the ideal.
TEST(NormalFormTable, RecurrenceAgreesWithDivision) {
  for (const ReducedGroebnerBasis& g : corpus_bases()) {
    CoeffTable a = normal_form_table(g);
    EXPECT_EQ(rank(a.matrix()), g.length());
    const std::vector<Polynomial> elements = g.elements();
    for (std::size_t j = 0; j < a.width(); ++j) {
      const ExponentVector& u = a.columns()[j];
      Division div = divide(Polynomial::monomial(g.field, u), elements, g.order);
      EXPECT_EQ(div.remainder, a.representative(j)) << u.to_string();
      if (g.staircase.contains(u)) {
        for (std::size_t i = 0; i < a.n(); ++i) EXPECT_EQ(a.at(i, j).is_one(), a.rows()[i] == u);
      }
    }
  }
}

TEST(Convert, ExampleWeight32) {
  CoeffTable a = normal_form_table(cubic_line_basis());
  Conversion c = convert_basis(a, {3, 2});
  EXPECT_EQ(c.staircase, parse_staircase("{(0,0),(0,1),(0,2)}"));
  EXPECT_EQ(texts(c.basis.elements()), texts({P("x1 - x2 - 1"), P("x2^3")}));
  EXPECT_FALSE(validate_reduced_gb(c.basis, 3).has_value());
  // Updated table over {00,01,02}: x1 = x2 + 1 and x2^3 = 0.
  EXPECT_EQ(c.table.representative(*c.table.column_index({3, 0})), P("3*x2^2 + 3*x2 + 1"));
  EXPECT_EQ(c.table.representative(*c.table.column_index({2, 1})), P("2*x2^2 + x2"));
  EXPECT_TRUE(c.table.representative(*c.table.column_index({0, 3})).is_zero());
}

TEST(Convert, ExampleWeight13KeepsBasis) {
  ReducedGroebnerBasis g = cubic_line_basis();
  Conversion c = convert_basis(normal_form_table(g), {1, 3});
  EXPECT_EQ(c.staircase, g.staircase);
  EXPECT_EQ(c.basis.tails, g.tails);
  EXPECT_EQ(c.basis.order, MonomialOrder::weight({1, 3}));
}

TEST(Convert, MonomialIdealIsFixed) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n) {
    for (const Staircase& lambda : enumerate_staircases(n, 2)) {
      ReducedGroebnerBasis g = monomial_ideal(lambda);
      CoeffTable a = normal_form_table(g);
      DirectionSet dirs = primitive_differences(n, 2);
      for (int trial = 0; trial < 5; ++trial) {
        RationalVector w = corpus::random_positive_weight(rng, 2);
        if (!is_generic(w, dirs)) continue;
        Conversion c = convert_basis(a, w);
        EXPECT_EQ(c.staircase, lambda);
        for (const auto& [u, tail] : c.basis.tails) EXPECT_TRUE(tail.is_zero());
      }
    }
  }
}

TEST(Convert, IdempotentAndStaircase) {
  std::mt19937_64 rng(8);
  for (const ReducedGroebnerBasis& g : corpus_bases()) {
    CoeffTable a = normal_form_table(g);
    DirectionSet dirs = primitive_differences(static_cast<int>(g.length()), 2);
    for (int trial = 0; trial < 5; ++trial) {
      RationalVector w = corpus::random_positive_weight(rng, 2);
      if (!is_generic(w, dirs)) continue;
      Conversion c = convert_basis(a, w);
      EXPECT_TRUE(is_staircase(c.staircase.elements()));
      EXPECT_FALSE(validate_reduced_gb(c.basis, g.length()).has_value());
      Conversion again = convert_basis(c.table, w);
      EXPECT_EQ(again.staircase, c.staircase);
      EXPECT_EQ(again.basis, c.basis);
      EXPECT_EQ(again.table, c.table);
    }
  }
}

TEST(Convert, SameChamberSameResult) {
  std::mt19937_64 rng(21);
  for (const ReducedGroebnerBasis& g : corpus_bases()) {
    const int n = static_cast<int>(g.length());
    CoeffTable a = normal_form_table(g);
    DirectionSet dirs = primitive_differences(n, 2);
    for (const Chamber& ch : positive_chambers(dirs)) {
      Conversion base = convert_basis(a, ch.witness);
      // Another point of the same chamber: a random positive combination of
      // the witness with a nearby random weight, accepted when signs agree.
      for (int trial = 0; trial < 3; ++trial) {
        RationalVector w = ch.witness;
        RationalVector r = corpus::random_positive_weight(rng, 2, 50);
        for (int i = 0; i < 2; ++i) w[i] = w[i] * 1000 + r[i];
        if (!is_generic(w, dirs) || sign_vector(w, dirs) != ch.signs) continue;
        Conversion other = convert_basis(a, w);
        EXPECT_EQ(other.staircase, base.staircase);
        EXPECT_EQ(other.basis.tails, base.basis.tails);
      }
    }
  }
}

// The chosen staircase uniquely minimizes w . sum over all basic subsets.
TEST(Convert, WeightOptimality) {
  std::mt19937_64 rng(4);
  for (const ReducedGroebnerBasis& g : corpus_bases()) {
    CoeffTable a = normal_form_table(g);
    auto basic = basic_subsets(a);
    DirectionSet dirs = primitive_differences(static_cast<int>(g.length()), 2);
    for (int trial = 0; trial < 5; ++trial) {
      RationalVector w = corpus::random_positive_weight(rng, 2);
      if (!is_generic(w, dirs)) continue;
      Conversion c = convert_basis(a, w);
      const Rational best = dot(w, staircase_sum(c.staircase));
      for (std::vector<ExponentVector> nu : basic) {
        sort_graded(nu);
        if (nu == c.staircase.elements()) continue;
        EXPECT_LT(best, dot(w, subset_sum(nu, 2)));
      }
    }
  }
}

TEST(Convert, Errors) {
  CoeffTable a = normal_form_table(cubic_line_basis());
  auto code = [&](const RationalVector& w) {
    try {
      convert_basis(a, w);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };
  EXPECT_EQ(code({1, 1}), Errc::NonGenericWeight);
  EXPECT_EQ(code({2, 1}), Errc::NonGenericWeight);  // ties 10 with 02
  EXPECT_EQ(code({0, 1}), Errc::InvalidArgument);
  EXPECT_EQ(code({1, 2, 3}), Errc::InvalidArgument);

  CoeffTable broken(kQ, a.rows(), a.columns());  // all-zero table
  try {
    convert_basis(broken, {3, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RankDeficient);
  }
}

TEST(Convert, PrimeField) {
  Field f = Field::prime(32003);
  PointConfiguration c{f, 2, {}};
  for (long i = 0; i < 5; ++i) c.points.push_back({Scalar(f, i * i + 3), Scalar(f, 7 * i + 1)});
  ReducedGroebnerBasis g = from_points(c, MonomialOrder::grlex(2));
  Conversion conv = convert_basis(normal_form_table(g), {7, 11});
  EXPECT_FALSE(validate_reduced_gb(conv.basis, 5).has_value());
  for (const Polynomial& p : conv.basis.elements())
    for (const auto& pt : c.points) EXPECT_TRUE(poly_eval(p, pt).is_zero());
}
