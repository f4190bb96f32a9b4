#include "ugb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <unordered_set>

#include "ugb/exact_lp.hpp"
#include "ugb/zonotope.hpp"

namespace ugb {

namespace {

Polynomial monic(const Polynomial& f, const MonomialOrder& order) {
  return f.scaled(f.head_coefficient(order).inverse());
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  std::vector<int> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = std::max(a[i], b[i]);
  return ExponentVector(std::move(c));
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> column_indices(const CoeffTable& a, const std::vector<ExponentVector>& mu) {
  std::vector<std::size_t> cols;
  for (const ExponentVector& u : mu) {
    auto idx = a.column_index(u);
    if (!idx) throw Error(Errc::BadSubset, u.to_string() + " is not a column of the table");
    cols.push_back(*idx);
  }
  std::vector<std::size_t> sorted = cols;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error(Errc::BadSubset, "repeated column");
  if (cols.size() != a.n()) throw Error(Errc::BadSubset, "subset size differs from n");
  return cols;
}

bool full_rank(const CoeffTable& a, const std::vector<std::size_t>& cols) {
  return rank(a.matrix().select_columns(cols)) == a.n();
}

}  // namespace

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  std::vector<ExponentVector> heads;
  std::vector<Scalar> lead;
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero polynomial");
    heads.push_back(g.head(order));
    lead.push_back(g.head_coefficient(order));
  }
  Division out;
  out.remainder = Polynomial(f.field(), f.dim());
  for (std::size_t i = 0; i < divisors.size(); ++i) out.quotients.emplace_back(f.field(), f.dim());
  Polynomial p = f;
  while (!p.is_zero()) {
    const ExponentVector h = p.head(order);
    const Scalar c = p.coefficient(h);
    auto it = std::find_if(heads.begin(), heads.end(), [&](const ExponentVector& g) { return g.divides(h); });
    if (it == heads.end()) {
      out.remainder.add_term(h, c);
      p.add_term(h, -c);
      continue;
    }
    const std::size_t i = static_cast<std::size_t>(it - heads.begin());
    const ExponentVector shift = h - heads[i];
    const Scalar factor = c / lead[i];
    out.quotients[i].add_term(shift, factor);
    p -= divisors[i].shifted(shift, factor);
  }
  return out;
}

ReducedGroebnerBasis buchberger(const GeneratorSet& f, std::size_t max_spairs) {
  const MonomialOrder& order = f.order;
  std::vector<Polynomial> g;
  for (const Polynomial& p : f.gens)
    if (!p.is_zero()) g.push_back(monic(p, order));
  if (g.empty()) throw Error(Errc::InvalidArgument, "empty generator set");
  const Field field = g.front().field();
  const int d = g.front().dim();
  for (const Polynomial& p : g)
    if (p.field() != field || p.dim() != d) throw Error(Errc::FieldMismatch, "generators disagree on field or dimension");

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::size_t reduced = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const ExponentVector hi = g[i].head(order);
    const ExponentVector hj = g[j].head(order);
    if (coprime(hi, hj)) continue;
    if (++reduced > max_spairs) throw Error(Errc::Timeout, "S-pair budget of " + std::to_string(max_spairs) + " exhausted");
    const ExponentVector l = lcm(hi, hj);
    const Scalar one = Scalar::one(field);
    Polynomial s = g[i].shifted(l - hi, one) - g[j].shifted(l - hj, one);
    Polynomial r = divide(s, g, order).remainder;
    if (r.is_zero()) continue;
    g.push_back(monic(r, order));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimal basis: drop elements whose head another head divides.
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) { return order.less(a.head(order), b.head(order)); });
  std::vector<Polynomial> minimal;
  for (const Polynomial& p : g) {
    const ExponentVector& h = p.head(order);
    if (std::none_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) { return m.head(order).divides(h); }))
      minimal.push_back(p);
  }
  if (minimal.front().head(order).degree() == 0) throw Error(Errc::NotZeroDimensional, "generators span the unit ideal");
  for (int k = 0; k < d; ++k) {
    bool pure = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
      const ExponentVector& h = m.head(order);
      return h.degree() == h[static_cast<std::size_t>(k)];
    });
    if (!pure) throw Error(Errc::NotZeroDimensional, "no pure power of x" + std::to_string(k + 1) + " among the heads");
  }

  std::vector<Polynomial> reduced_basis;
  for (const Polynomial& p : minimal) {
    const ExponentVector h = p.head(order);
    Polynomial tail = p;
    tail.add_term(h, -Scalar::one(field));
    Polynomial element = Polynomial::monomial(field, h) + divide(tail, minimal, order).remainder;
    reduced_basis.push_back(std::move(element));
  }
  return ReducedGroebnerBasis::from_elements(reduced_basis, order);
}

bool is_basic(const CoeffTable& a, const std::vector<ExponentVector>& mu) {
  return full_rank(a, column_indices(a, mu));
}

std::vector<Staircase> basic_staircases(const CoeffTable& a) {
  std::vector<Staircase> out;
  for (Staircase& lambda : enumerate_staircases(static_cast<int>(a.n()), a.dim()))
    if (is_basic(a, lambda.elements())) out.push_back(std::move(lambda));
  return out;
}

std::set<Staircase> brute_initial_staircases(const CoeffTable& a, std::size_t samples, std::uint64_t seed) {
  const int d = a.dim();
  const DirectionSet directions = primitive_differences(static_cast<int>(a.n()), d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coordinate(1, 1'000'000);
  std::set<Staircase> seen;
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector w(d);
    do {
      for (Rational& x : w) x = coordinate(rng);
    } while (!is_generic(w, directions));
    seen.insert(convert_basis(a, w).staircase);
  }
  return seen;
}

std::vector<IntVector> positive_hull_vertices(const std::vector<IntVector>& points) {
  std::set<IntVector> unique(points.begin(), points.end());
  if (unique.empty()) return {};
  const std::size_t d = unique.begin()->size();
  if (d > 3) throw Error(Errc::DimensionUnsupported, "positive hull limited to d <= 3");
  for (const IntVector& p : unique)
    if (p.size() != d) throw Error(Errc::InvalidArgument, "points of mixed dimension");

  std::vector<IntVector> out;
  for (const IntVector& p : unique) {
    std::vector<const IntVector*> others;
    for (const IntVector& q : unique)
      if (&q != &p) others.push_back(&q);
    if (others.empty()) {
      out.push_back(p);
      continue;
    }
    // Is p = sum l_q q + s with l a probability vector and s >= 0?
    const std::size_t k = others.size();
    std::vector<RationalVector> rows(d + 1, RationalVector(k + d));
    RationalVector rhs(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < k; ++j) rows[i][j] = (*others[j])[i];
      rows[i][k + i] = 1;
      rhs[i] = p[i];
    }
    for (std::size_t j = 0; j < k; ++j) rows[d][j] = 1;
    rhs[d] = 1;
    if (maximize(rows, rhs, RationalVector(k + d)).status == LpResult::Status::Infeasible) out.push_back(p);
  }
  return out;
}

bool matroid_edge_check(const CoeffTable& a, std::size_t max_ground) {
  const std::vector<ExponentVector> ground = v_set(static_cast<int>(a.n()), a.dim());
  if (ground.size() > max_ground)
    throw Error(Errc::TooLarge, "|V| = " + std::to_string(ground.size()) + " exceeds " + std::to_string(max_ground));
  std::vector<std::size_t> ground_cols;
  for (const ExponentVector& v : ground) {
    auto idx = a.column_index(v);
    if (!idx) throw Error(Errc::BadSubset, v.to_string() + " is not a column of the table");
    ground_cols.push_back(*idx);
  }

  std::vector<std::uint32_t> bases;
  for_each_subset(ground.size(), a.n(), [&](const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> cols;
    std::uint32_t mask = 0;
    for (std::size_t i : idx) {
      cols.push_back(ground_cols[i]);
      mask |= 1u << i;
    }
    if (full_rank(a, cols)) bases.push_back(mask);
  });
  const std::unordered_set<std::uint32_t> lookup(bases.begin(), bases.end());

  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      const std::uint32_t x = bases[i], y = bases[j];
      if (std::popcount(x ^ y) == 2) continue;
      // Non-edge certificate: another pair with the same midpoint.
      const std::uint32_t both = x & y, either = x | y;
      bool certified = false;
      for (std::uint32_t c : bases) {
        if (c == x || c == y || (c & both) != both || (c & ~either) != 0) continue;
        if (lookup.count(both | ((x ^ y) & ~c))) {
          certified = true;
          break;
        }
      }
      if (certified) continue;
      // Otherwise ask whether the midpoint has a convex representation
      // with weight off {x, y}.
      const std::size_t m = bases.size();
      std::vector<RationalVector> rows(ground.size() + 1, RationalVector(m));
      RationalVector rhs(ground.size() + 1);
      RationalVector objective(m);
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t e = 0; e < ground.size(); ++e) rows[e][k] = (bases[k] >> e) & 1u;
        rows[ground.size()][k] = 1;
        if (k != i && k != j) objective[k] = 1;
      }
      for (std::size_t e = 0; e < ground.size(); ++e) rhs[e] = Rational(((x >> e) & 1u) + ((y >> e) & 1u), 2);
      rhs[ground.size()] = 1;
      LpResult lp = maximize(rows, rhs, objective);
      if (lp.status != LpResult::Status::Optimal || lp.value == 0) return false;
    }
  }
  return true;
}

std::map<std::vector<ExponentVector>, Scalar> plucker_dual(const CoeffTable& a, std::uint64_t max_subsets) {
  BigInt count;
  mpz_bin_uiui(count.get_mpz_t(), a.width(), a.n());
  if (count > max_subsets) throw Error(Errc::TooLarge, "C(|U|, n) = " + count.get_str() + " minors requested");
  std::map<std::vector<ExponentVector>, Scalar> out;
  for_each_subset(a.width(), a.n(), [&](const std::vector<std::size_t>& idx) {
    Scalar minor = determinant(a.matrix().select_columns(idx));
    if (minor.is_zero()) return;
    std::vector<ExponentVector> key;
    for (std::size_t i : idx) key.push_back(a.columns()[i]);
    out.emplace(std::move(key), minor);
  });
  return out;
}

Matrix relation_matrix(const CoeffTable& a) {
  std::vector<std::size_t> free_cols;
  for (std::size_t u = 0; u < a.width(); ++u)
    if (std::find(a.rows().begin(), a.rows().end(), a.columns()[u]) == a.rows().end()) free_cols.push_back(u);
  Matrix m(a.field(), free_cols.size(), a.width());
  for (std::size_t r = 0; r < free_cols.size(); ++r) {
    const std::size_t u = free_cols[r];
    m(r, u) = Scalar::one(a.field());
    for (std::size_t k = 0; k < a.n(); ++k) {
      const std::size_t col = *a.column_index(a.rows()[k]);
      m(r, col) -= a.at(k, u);
    }
  }
  return m;
}

}  // namespace ugb
