#include "ugb/constructors.hpp"

#include <algorithm>
#include <set>

namespace ugb {

namespace {

std::vector<ExponentVector> sorted_v_set(int n, int d, const MonomialOrder& order) {
  std::vector<ExponentVector> vs = v_set(n, d);
  std::sort(vs.begin(), vs.end(), OrderLess{&order});
  return vs;
}

Scalar evaluate_monomial(const std::vector<Scalar>& point, const ExponentVector& e, Field field) {
  Scalar value = Scalar::one(field);
  for (std::size_t k = 0; k < point.size(); ++k)
    for (int j = 0; j < e[k]; ++j) value *= point[k];
  return value;
}

// Column space of already chosen vectors, in echelon form with a pivot
// index per vector; each stored vector vanishes at all earlier pivots.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(Field field) : field_(field) {}

  bool try_add(std::vector<Scalar> v) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      const Scalar c = v[pivots_[j]];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * basis_[j][k];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == v.end()) return false;
    Scalar inv = it->inverse();
    for (Scalar& s : v) s *= inv;
    pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
    basis_.push_back(std::move(v));
    return true;
  }

 private:
  Field field_;
  std::vector<std::vector<Scalar>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

ReducedGroebnerBasis monomial_ideal(const Staircase& lambda, Field field) {
  if (lambda.size() == 0) throw Error(Errc::NotAStaircase, "empty staircase");
  ReducedGroebnerBasis g;
  g.field = field;
  g.staircase = lambda;
  g.order = MonomialOrder::grlex(static_cast<int>(lambda.dim()));
  for (const ExponentVector& u : min_gaps(lambda)) g.tails.emplace(u, Polynomial(field, static_cast<int>(lambda.dim())));
  return g;
}

ReducedGroebnerBasis from_points(const PointConfiguration& config, const MonomialOrder& order) {
  const int n = static_cast<int>(config.points.size());
  const int d = config.d;
  const Field field = config.field;
  if (n < 1 || d < 1) throw Error(Errc::InvalidArgument, "need at least one point in positive dimension");
  for (const auto& p : config.points) {
    if (static_cast<int>(p.size()) != d) throw Error(Errc::InvalidArgument, "point has wrong dimension");
    for (const Scalar& s : p)
      if (s.field() != field) throw Error(Errc::FieldMismatch, "point coordinate over another field");
  }
  if (!field.is_rational()) {
    BigInt capacity;
    mpz_ui_pow_ui(capacity.get_mpz_t(), field.modulus(), static_cast<unsigned long>(d));
    if (capacity < n) throw Error(Errc::DuplicatePoints, "more points than elements of the affine space");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (config.points[i] == config.points[j]) throw Error(Errc::DuplicatePoints, "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  auto evaluation_column = [&](const ExponentVector& e) {
    std::vector<Scalar> col;
    col.reserve(n);
    for (const auto& p : config.points) col.push_back(evaluate_monomial(p, e, field));
    return col;
  };

  IncrementalSpan span(field);
  std::vector<ExponentVector> chosen;
  for (const ExponentVector& v : sorted_v_set(n, d, order)) {
    if (span.try_add(evaluation_column(v))) chosen.push_back(v);
    if (static_cast<int>(chosen.size()) == n) break;
  }
  if (static_cast<int>(chosen.size()) != n) throw Error(Errc::RankCollapse, "evaluation columns of V have rank below n");
  if (!is_staircase(chosen)) throw Error(Errc::Internal, "greedy point basis is not a staircase");

  ReducedGroebnerBasis g;
  g.field = field;
  g.order = order;
  g.staircase = Staircase(chosen);
  const auto& lambda = g.staircase.elements();
  std::vector<ExponentVector> heads = min_gaps(g.staircase);

  Matrix system(field, n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> col = evaluation_column(lambda[j]);
    for (int i = 0; i < n; ++i) system(i, j) = col[i];
  }
  Matrix rhs(field, n, heads.size());
  for (std::size_t k = 0; k < heads.size(); ++k) {
    std::vector<Scalar> col = evaluation_column(heads[k]);
    for (int i = 0; i < n; ++i) rhs(i, k) = col[i];
  }
  std::optional<Matrix> solution = solve(system, rhs);
  if (!solution) throw Error(Errc::RankCollapse, "evaluation matrix of the staircase is singular");
  for (std::size_t k = 0; k < heads.size(); ++k) {
    Polynomial tail(field, d);
    for (int j = 0; j < n; ++j) tail.add_term(lambda[j], (*solution)(j, k));
    g.tails.emplace(heads[k], std::move(tail));
  }
  return g;
}

LatticeBasis::LatticeBasis(std::vector<IntVector> columns) : columns_(std::move(columns)) {
  const int d = dim();
  if (d < 1) throw Error(Errc::SingularBasis, "empty lattice basis");
  Field q = Field::rationals();
  Matrix b(q, d, d);
  for (int j = 0; j < d; ++j) {
    if (static_cast<int>(columns_[j].size()) != d) throw Error(Errc::InvalidArgument, "lattice basis is not square");
    for (int i = 0; i < d; ++i) b(i, j) = Scalar(q, static_cast<long>(columns_[j][i]));
  }
  Scalar det = determinant(b);
  if (det.is_zero()) throw Error(Errc::SingularBasis, "lattice basis is singular");
  Rational abs_det = abs(det.rational());
  if (!abs_det.get_num().fits_slong_p()) throw Error(Errc::TooLarge, "lattice determinant exceeds 64 bits");
  det_abs_ = abs_det.get_num().get_si();

  Matrix identity(q, d, d);
  for (int i = 0; i < d; ++i) identity(i, i) = Scalar::one(q);
  Matrix inv = *solve(b, identity);
  inverse_.assign(d, RationalVector(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inverse_[i][j] = inv(i, j).rational();
}

bool LatticeBasis::contains(const IntVector& v) const {
  for (const RationalVector& row : inverse_)
    if (dot(row, v).get_den() != 1) return false;
  return true;
}

ReducedGroebnerBasis from_lattice(const LatticeBasis& lattice, const MonomialOrder& order, Field field) {
  const int d = lattice.dim();
  const std::int64_t n = lattice.det_abs();
  if (n > 1'000'000) throw Error(Errc::TooLarge, "lattice index too large");

  auto difference = [d](const ExponentVector& a, const ExponentVector& b) {
    IntVector diff(d);
    for (int i = 0; i < d; ++i) diff[i] = a[i] - b[i];
    return diff;
  };

  std::vector<ExponentVector> chosen;
  for (const ExponentVector& v : sorted_v_set(static_cast<int>(n), d, order)) {
    bool new_class = std::none_of(chosen.begin(), chosen.end(),
                                  [&](const ExponentVector& c) { return lattice.contains(difference(v, c)); });
    if (new_class) chosen.push_back(v);
    if (static_cast<std::int64_t>(chosen.size()) == n) break;
  }
  if (static_cast<std::int64_t>(chosen.size()) != n)
    throw Error(Errc::ClassDeficit, "only " + std::to_string(chosen.size()) + " of " + std::to_string(n) + " classes met in V");
  if (!is_staircase(chosen)) throw Error(Errc::Internal, "class representatives are not a staircase");

  ReducedGroebnerBasis g;
  g.field = field;
  g.order = order;
  g.staircase = Staircase(chosen);
  for (const ExponentVector& u : min_gaps(g.staircase)) {
    auto rep = std::find_if(chosen.begin(), chosen.end(),
                            [&](const ExponentVector& c) { return lattice.contains(difference(u, c)); });
    if (rep == chosen.end()) throw Error(Errc::Internal, "no class representative for " + u.to_string());
    g.tails.emplace(u, Polynomial::monomial(field, *rep));
  }
  return g;
}

TestSet lattice_test_set(const std::vector<Polynomial>& ugb) {
  std::set<IntVector> moves;
  for (const Polynomial& f : ugb) {
    if (f.size() != 2) throw Error(Errc::NotBinomial, f.to_string() + " does not have two terms");
    auto first = f.terms().begin();
    auto second = std::next(first);
    const Scalar minus_one = -Scalar::one(f.field());
    const ExponentVector* plus = nullptr;
    const ExponentVector* minus = nullptr;
    if (first->second.is_one() && second->second == minus_one) {
      plus = &first->first;
      minus = &second->first;
    } else if (second->second.is_one() && first->second == minus_one) {
      plus = &second->first;
      minus = &first->first;
    } else {
      throw Error(Errc::NotBinomial, f.to_string() + " does not have unit coefficients of opposite sign");
    }
    IntVector t(f.dim());
    for (int i = 0; i < f.dim(); ++i) t[i] = (*plus)[i] - (*minus)[i];
    moves.insert(std::move(t));
  }
  return TestSet{{moves.begin(), moves.end()}};
}

IntVector lattice_minimize(const TestSet& tests, const IntVector& x, const RationalVector& w) {
  for (const Rational& c : w)
    if (sgn(c) <= 0) throw Error(Errc::InvalidArgument, "cost vector must be strictly positive");
  for (std::int64_t c : x)
    if (c < 0) throw Error(Errc::InvalidArgument, "start point must be nonnegative");
  std::vector<IntVector> moves;
  for (const IntVector& t : tests.moves) {
    if (t.size() != x.size() || t.size() != w.size()) throw Error(Errc::InvalidArgument, "dimension mismatch");
    moves.push_back(t);
    IntVector neg = t;
    for (auto& c : neg) c = -c;
    moves.push_back(std::move(neg));
  }
  // A move improves when x - t is smaller in the term order "w, then lex".
  // Plain w-decrease can stall on ties; the refinement cannot, and its
  // optimum is w-optimal.
  auto improves = [&](const IntVector& t) {
    int s = sgn(dot(w, t));
    if (s != 0) return s > 0;
    auto lead = std::find_if(t.begin(), t.end(), [](std::int64_t c) { return c != 0; });
    return lead != t.end() && *lead > 0;
  };
  IntVector current = x;
  bool improved = true;
  while (improved) {
    improved = false;
    for (const IntVector& t : moves) {
      if (!improves(t)) continue;
      bool feasible = true;
      for (std::size_t i = 0; i < t.size() && feasible; ++i) feasible = current[i] - t[i] >= 0;
      if (!feasible) continue;
      for (std::size_t i = 0; i < t.size(); ++i) current[i] -= t[i];
      improved = true;
      break;
    }
  }
  return current;
}

}  // namespace ugb
