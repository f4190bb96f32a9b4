#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "ugb/driver.hpp"

using namespace ugb;
using namespace ugb::fixtures;

namespace {

bool same_chamber(const RationalVector& a, const IntVector& b, const DirectionSet& dirs) {
  RationalVector rb(b.begin(), b.end());
  return sign_vector(a, dirs) == sign_vector(rb, dirs);
}

// Staircases cut off by a line: the n smallest points of N^2 under some
// positive weight (a, b), found by scanning a grid of integer weights.
std::set<Staircase> corner_cuts(int n) {
  std::set<Staircase> out;
  for (long a = 1; a <= 60; ++a)
    for (long b = 1; b <= 60; ++b) {
      std::vector<std::pair<long, ExponentVector>> pts;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) pts.push_back({a * i + b * j, ExponentVector{i, j}});
      std::sort(pts.begin(), pts.end());
      if (pts[n - 1].first == pts[n].first) continue;
      std::vector<ExponentVector> first;
      for (int k = 0; k < n; ++k) first.push_back(pts[k].second);
      out.insert(Staircase(first));
    }
  return out;
}

}  // namespace

TEST(ComputeUgb, CubicLineExample) {
  UgbResult r = compute_ugb(cubic_line_basis());
  ASSERT_EQ(r.initial_staircases.size(), 2u);
  EXPECT_EQ(r.initial_staircases[0], parse_staircase("{(0,0),(0,1),(0,2)}"));
  EXPECT_EQ(r.initial_staircases[1], parse_staircase("{(0,0),(1,0),(2,0)}"));
  EXPECT_EQ(r.state_vertices, (std::vector<IntVector>{{0, 3}, {3, 0}}));
  EXPECT_EQ(texts(r.universal_basis),
            texts({P("x1^3 - 3*x1^2 + 3*x1 - 1"), P("x2 - x1 + 1"), P("x1 - x2 - 1"), P("x2^3")}));
  EXPECT_EQ(r.universal_orders.size(), r.universal_basis.size());
  for (std::size_t i = 0; i < r.universal_basis.size(); ++i) {
    const Polynomial& f = r.universal_basis[i];
    EXPECT_TRUE(f.head_coefficient(r.universal_orders[i]).is_one());
  }
}

TEST(ComputeUgb, MonomialIdeal) {
  Staircase lambda = parse_staircase("{(0,0),(1,0),(2,0)}");
  UgbResult r = compute_ugb(monomial_ideal(lambda));
  ASSERT_EQ(r.initial_staircases.size(), 1u);
  EXPECT_EQ(r.initial_staircases[0], lambda);
  EXPECT_EQ(texts(r.universal_basis), texts({P("x1^3"), P("x2")}));
  StatePolyhedron s = state_polyhedron(r);
  EXPECT_EQ(s.vertices, (std::vector<IntVector>{{3, 0}}));
}

TEST(ComputeUgb, ThreePoints) {
  UgbResult r = compute_ugb(from_points(three_points(), lex21()));
  EXPECT_EQ(r.universal_basis.size(), 7u);
  EXPECT_EQ(texts(r.universal_basis),
            texts({P("x1^2 - x2"), P("x2^2 - 7*x2 + 6*x1"), P("x1*x2 - 3*x2 + 2*x1"), P("x1^3 - 3*x1^2 + 2*x1"),
                   P("x2^3 - 5*x2^2 + 4*x2"), P("x1 + 1/6*x2^2 - 7/6*x2"), P("x2 - x1^2")}));
  EXPECT_EQ(state_polyhedron(r).vertices, (std::vector<IntVector>{{0, 3}, {1, 1}, {3, 0}}));
  EXPECT_EQ(state_polyhedron(r).recession_dim, 2);
}

TEST(ComputeUgb, StatePolyhedronOfExample) {
  StatePolyhedron s = state_polyhedron(compute_ugb(cubic_line_basis()));
  EXPECT_EQ(s.vertices, (std::vector<IntVector>{{0, 3}, {3, 0}}));
  EXPECT_EQ(s.recession_dim, 2);
}

TEST(ComputeUgb, InvariantsOnCorpus) {
  std::vector<ReducedGroebnerBasis> inputs;
  for (const auto& c : corpus::point_corpus(24)) inputs.push_back(from_points(c, MonomialOrder::degrevlex(2)));
  for (const auto& l : corpus::lattice_corpus(8)) inputs.push_back(from_lattice(l, MonomialOrder::grlex(2)));
  for (const ReducedGroebnerBasis& g : inputs) {
    UgbResult r = compute_ugb(g);
    const std::size_t n = g.length();
    // Every reduced basis is valid and generates the same ideal.
    for (const auto& [lambda, basis] : r.reduced_bases) {
      EXPECT_FALSE(validate_reduced_gb(basis, n).has_value());
      EXPECT_TRUE(all_in_ideal(r.universal_basis, basis));
    }
    // Each staircase is selected by some witness, and each witness's
    // staircase uniquely minimizes w . sum.
    std::set<Staircase> selected;
    for (const auto& [w, mu] : r.witness_assignment) {
      selected.insert(mu);
      for (const Staircase& lambda : r.initial_staircases)
        if (lambda != mu) {
          EXPECT_LT(dot(w, staircase_sum(mu)), dot(w, staircase_sum(lambda)));
        }
    }
    EXPECT_EQ(selected, std::set<Staircase>(r.initial_staircases.begin(), r.initial_staircases.end()));
    // Size sanity.
    std::size_t gap_total = 0;
    for (const Staircase& lambda : r.initial_staircases) gap_total += min_gaps(lambda).size();
    EXPECT_LE(r.initial_staircases.size(), enumerate_staircases(static_cast<int>(n), 2).size());
    EXPECT_LE(r.universal_basis.size(), gap_total);
    std::vector<Polynomial> all;
    for (const auto& [lambda, basis] : r.reduced_bases)
      for (const Polynomial& f : basis.elements()) all.push_back(f);
    std::set<std::string> distinct;
    for (const Polynomial& f : all) distinct.insert(f.to_string());
    EXPECT_EQ(r.universal_basis.size() == gap_total, distinct.size() == all.size());
    // The input basis belongs to the result.
    ASSERT_TRUE(r.reduced_bases.contains(g.staircase));
    EXPECT_EQ(r.reduced_bases.at(g.staircase).tails, g.tails);
  }
}

// Points in general position have every corner cut as an initial staircase.
// The 2x2 square is a staircase but not a corner cut, so from n = 4 on this
// is a proper subset of all n-staircases.
TEST(ComputeUgb, GenericPointsGiveAllStaircases) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (int n = 1; n <= 5; ++n) {
    PointConfiguration c{kQ, 2, {}};
    std::set<std::pair<long, long>> seen;
    while (static_cast<int>(c.points.size()) < n) {
      long a = coord(rng), b = coord(rng);
      if (seen.insert({a, b}).second) c.points.push_back({Scalar(kQ, a), Scalar(kQ, b)});
    }
    UgbResult r = compute_ugb(from_points(c, MonomialOrder::grlex(2)));
    EXPECT_EQ(std::set<Staircase>(r.initial_staircases.begin(), r.initial_staircases.end()), corner_cuts(n)) << n;
    if (n == 4) {
      EXPECT_EQ(r.initial_staircases.size() + 1, enumerate_staircases(4, 2).size());
    }
  }
}

TEST(ComputeUgb, ExplicitWitnessesAndOrderIndependence) {
  ReducedGroebnerBasis g = from_points(three_points(), lex21());
  UgbResult base = compute_ugb(g);
  std::vector<RationalVector> witnesses;
  for (const auto& [w, mu] : base.witness_assignment) witnesses.push_back(w);
  std::reverse(witnesses.begin(), witnesses.end());
  DriverOptions options;
  options.witnesses = witnesses;
  UgbResult again = compute_ugb(g, options);
  EXPECT_EQ(again.initial_staircases, base.initial_staircases);
  EXPECT_EQ(again.universal_basis, base.universal_basis);
  EXPECT_EQ(again.reduced_bases, base.reduced_bases);
}

// Two presentations of one ideal give the same result.
TEST(ComputeUgb, DeterminedByTheIdeal) {
  for (const auto& c : corpus::point_corpus(9)) {
    UgbResult a = compute_ugb(from_points(c, MonomialOrder::lex(2)));
    UgbResult b = compute_ugb(from_points(c, MonomialOrder::grlex(2, {1, 0})));
    EXPECT_EQ(a.initial_staircases, b.initial_staircases);
    EXPECT_EQ(a.state_vertices, b.state_vertices);
    EXPECT_EQ(a.universal_basis, b.universal_basis);
  }
}

TEST(ComputeUgb, RejectsInvalidInput) {
  ReducedGroebnerBasis g = cubic_line_basis();
  g.order = MonomialOrder::lex(2);
  try {
    compute_ugb(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidBasis);
  }
  DriverOptions options;
  options.witnesses = std::vector<RationalVector>{{1, 1}};
  try {
    compute_ugb(cubic_line_basis(), options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Internal);
  }
  options.witnesses.reset();
  options.max_chambers = 2;
  EXPECT_THROW(compute_ugb(cubic_line_basis(), options), Error);
}

TEST(UniversalOrderSet, Examples) {
  DirectionSet dirs = primitive_differences(3, 2);
  std::vector<IntVector> w = universal_order_set(3, 2);
  ASSERT_EQ(w.size(), 4u);
  const std::vector<IntVector> reference{{3, 1}, {3, 2}, {2, 3}, {1, 3}};
  for (const IntVector& ref : reference) {
    int hits = 0;
    for (const IntVector& x : w) hits += same_chamber(RationalVector(x.begin(), x.end()), ref, dirs);
    EXPECT_EQ(hits, 1);
  }
  EXPECT_EQ(universal_order_set(1, 3).size(), 1u);
  std::vector<IntVector> two = universal_order_set(2, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NE(two[0][0] > two[0][1], two[1][0] > two[1][1]);
  for (const IntVector& x : w)
    for (auto c : x) EXPECT_GT(c, 0);
}

TEST(UniversalOrderSet, CacheRoundTrip) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "ugb_driver_cache_test";
  std::filesystem::remove_all(dir);
  std::vector<IntVector> first = cached_order_set(dir, 4, 2, false);
  EXPECT_TRUE(std::filesystem::exists(dir / "W_4_2.txt"));
  std::ifstream in(dir / "W_4_2.txt");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "(4,2)");
  EXPECT_EQ(cached_order_set(dir, 4, 2, false), first);
  EXPECT_EQ(first, universal_order_set(4, 2));
  EXPECT_EQ(parse_order_set(render_order_set(4, 2, first), 4, 2), first);
  EXPECT_THROW(parse_order_set(render_order_set(4, 2, first), 5, 2), Error);
  EXPECT_THROW(parse_order_set("(4,2)\n(1,x)\n", 4, 2), Error);
  EXPECT_THROW(parse_order_set("(4,2)\n(1,2,3)\n", 4, 2), Error);
  std::filesystem::remove_all(dir);
}
