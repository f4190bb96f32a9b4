#pragma once

// Small ideals with hand-checkable bases, shared across test binaries.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ugb/constructors.hpp"
#include "ugb/groebner.hpp"
#include "ugb/oracle.hpp"

namespace ugb::fixtures {

inline const Field kQ = Field::rationals();

inline Polynomial P(const std::string& text, int d = 2, Field field = kQ) {
  return parse_polynomial(text, field, d);
}

/// lex with x2 > x1.
inline MonomialOrder lex21() { return MonomialOrder::lex(2, {1, 0}); }

/// x1^3 - 3x1^2 + 3x1 - 1, x2 - x1 + 1 under lex x2 > x1; staircase {00,10,20}.
inline ReducedGroebnerBasis cubic_line_basis() {
  return ReducedGroebnerBasis::from_elements({P("x1^3 - 3*x1^2 + 3*x1 - 1"), P("x2 - x1 + 1")}, lex21());
}

/// Vanishing ideal of {(0,0),(1,1),(2,4)}.
inline PointConfiguration three_points() {
  return {kQ, 2, {{Scalar(kQ, 0L), Scalar(kQ, 0L)}, {Scalar(kQ, 1L), Scalar(kQ, 1L)}, {Scalar(kQ, 2L), Scalar(kQ, 4L)}}};
}

inline std::vector<std::string> texts(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const Polynomial& p : polys) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff every element of `f` reduces to zero modulo `basis`.
inline bool all_in_ideal(const std::vector<Polynomial>& f, const ReducedGroebnerBasis& basis) {
  const std::vector<Polynomial> g = basis.elements();
  return std::all_of(f.begin(), f.end(), [&](const Polynomial& p) { return divide(p, g, basis.order).remainder.is_zero(); });
}

/// Every n-subset of V_n^d whose columns of the table are independent, by
/// direct rank computation.
inline std::vector<std::vector<ExponentVector>> basic_subsets(const CoeffTable& a) {
  const std::size_t n = a.n();
  const auto v = v_set(static_cast<int>(n), a.dim());
  std::vector<std::vector<ExponentVector>> out;
  std::vector<bool> pick(v.size(), false);
  std::fill(pick.end() - static_cast<long>(n), pick.end(), true);
  do {
    std::vector<std::size_t> cols;
    std::vector<ExponentVector> subset;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!pick[i]) continue;
      cols.push_back(*a.column_index(v[i]));
      subset.push_back(v[i]);
    }
    if (rank(a.matrix().select_columns(cols)) == n) out.push_back(subset);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

inline IntVector subset_sum(const std::vector<ExponentVector>& s, int d) {
  IntVector sum(d, 0);
  for (const ExponentVector& v : s)
    for (int i = 0; i < d; ++i) sum[i] += v[i];
  return sum;
}

// Generators of the same ideal that are usually not a Groebner basis: each
// element but the last gains a multiple of its successor, and one product is
// appended.
inline std::vector<Polynomial> scrambled_generators(const ReducedGroebnerBasis& g, std::mt19937_64& rng) {
  std::vector<Polynomial> e = g.elements();
  std::uniform_int_distribution<long> c(-3, 3);
  std::vector<Polynomial> out;
  const int d = g.dim();
  Polynomial shift(g.field, d);
  shift.add_term(ExponentVector::unit(d, 0), Scalar(g.field, c(rng)));
  shift.add_term(ExponentVector::unit(d, d - 1), Scalar(g.field, c(rng)));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i + 1 < e.size())
      out.push_back(e[i] + shift * e[i + 1]);
    else
      out.push_back(e[i]);
  }
  out.push_back(e.front() * P("x1 + x2 + 1", d, g.field));
  return out;
}

}  // namespace ugb::fixtures
