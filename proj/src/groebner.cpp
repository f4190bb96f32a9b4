#include "ugb/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ugb {

std::vector<Polynomial> ReducedGroebnerBasis::elements() const {
  std::vector<Polynomial> out;
  std::vector<ExponentVector> heads;
  for (const auto& [u, tail] : tails) heads.push_back(u);
  sort_graded(heads);
  for (const ExponentVector& u : heads) out.push_back(Polynomial::monomial(field, u) - tails.at(u));
  return out;
}

Staircase standard_monomials(const std::vector<ExponentVector>& heads, int d) {
  std::vector<int> bound(d, -1);
  for (const ExponentVector& h : heads) {
    int support = 0, var = -1;
    for (int i = 0; i < d; ++i)
      if (h[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 0) throw Error(Errc::NotZeroDimensional, "the ideal is the whole ring");
    if (support == 1 && (bound[var] < 0 || h[var] < bound[var])) bound[var] = h[var];
  }
  for (int i = 0; i < d; ++i)
    if (bound[i] < 0) throw Error(Errc::NotZeroDimensional, "no pure power of x" + std::to_string(i + 1) + " among the heads");

  std::vector<ExponentVector> below;
  std::vector<int> coords(d, 0);
  while (true) {
    ExponentVector v(coords);
    if (std::none_of(heads.begin(), heads.end(), [&](const ExponentVector& h) { return h.divides(v); }))
      below.push_back(v);
    int i = 0;
    while (i < d && ++coords[i] == bound[i]) coords[i++] = 0;
    if (i == d) break;
  }
  return Staircase(std::move(below));
}

ReducedGroebnerBasis ReducedGroebnerBasis::from_elements(const std::vector<Polynomial>& elements,
                                                         const MonomialOrder& order) {
  if (elements.empty()) throw Error(Errc::InvalidBasis, "empty basis");
  ReducedGroebnerBasis g;
  g.field = elements.front().field();
  g.order = order;
  std::vector<ExponentVector> heads;
  for (const Polynomial& f : elements) {
    if (f.is_zero()) throw Error(Errc::InvalidBasis, "zero element");
    if (f.field() != g.field) throw Error(Errc::InvalidBasis, "elements over different fields");
    const ExponentVector& u = f.head(order);
    if (!f.coefficient(u).is_one()) throw Error(Errc::InvalidBasis, "element " + f.to_string(order) + " is not monic");
    if (g.tails.contains(u)) throw Error(Errc::InvalidBasis, "two elements share the head " + u.to_string());
    g.tails.emplace(u, Polynomial::monomial(g.field, u) - f);
    heads.push_back(u);
  }
  try {
    g.staircase = standard_monomials(heads, elements.front().dim());
  } catch (const Error& e) {
    if (e.code() == Errc::NotZeroDimensional) throw Error(Errc::InvalidBasis, e.what());
    throw;
  }
  return g;
}

std::string_view violation_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::NotAStaircase: return "NotAStaircase";
    case Violation::Kind::WrongLength: return "WrongLength";
    case Violation::Kind::HeadSetMismatch: return "HeadSetMismatch";
    case Violation::Kind::TailOutsideStaircase: return "TailOutsideStaircase";
    case Violation::Kind::HeadNotInitial: return "HeadNotInitial";
    case Violation::Kind::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

std::optional<Violation> validate_reduced_gb(const ReducedGroebnerBasis& g, std::size_t n) {
  using K = Violation::Kind;
  const Staircase& lambda = g.staircase;
  if (lambda.size() == 0 || !is_staircase(lambda.elements()))
    return Violation{K::NotAStaircase, lambda.to_string() + " is not a nonempty staircase"};
  if (lambda.size() != n)
    return Violation{K::WrongLength, "staircase has " + std::to_string(lambda.size()) + " elements, expected " + std::to_string(n)};
  std::vector<ExponentVector> heads;
  for (const auto& [u, tail] : g.tails) heads.push_back(u);
  sort_graded(heads);
  if (heads != min_gaps(lambda)) return Violation{K::HeadSetMismatch, "heads differ from the minimal gaps of " + lambda.to_string()};
  for (const auto& [u, tail] : g.tails) {
    if (tail.field() != g.field) return Violation{K::FieldMismatch, "tail of " + u.to_string() + " over another field"};
    for (const auto& [v, c] : tail.terms()) {
      if (!lambda.contains(v))
        return Violation{K::TailOutsideStaircase, "tail of " + u.to_string() + " uses " + v.to_string()};
      if (!g.order.less(v, u))
        return Violation{K::HeadNotInitial, "tail monomial " + v.to_string() + " is not below head " + u.to_string()};
    }
  }
  return std::nullopt;
}

CoeffTable::CoeffTable(Field field, std::vector<ExponentVector> rows, std::vector<ExponentVector> columns)
    : rows_(std::move(rows)), columns_(std::move(columns)), matrix_(field, rows_.size(), columns_.size()) {
  for (std::size_t j = 0; j < columns_.size(); ++j) index_.emplace(columns_[j], j);
}

std::optional<std::size_t> CoeffTable::column_index(const ExponentVector& u) const {
  auto it = index_.find(u);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Polynomial CoeffTable::representative(std::size_t col) const {
  Polynomial p(field(), dim());
  for (std::size_t i = 0; i < rows_.size(); ++i) p.add_term(rows_[i], matrix_(i, col));
  return p;
}

CoeffTable normal_form_table(const ReducedGroebnerBasis& g) {
  const Staircase& lambda = g.staircase;
  const int n = static_cast<int>(lambda.size());
  const int d = g.dim();
  CoeffTable table(g.field, lambda.elements(), u_set(n, d));

  std::map<ExponentVector, std::size_t> row_of;
  for (std::size_t i = 0; i < lambda.size(); ++i) row_of.emplace(lambda.elements()[i], i);

  std::vector<std::size_t> order(table.width());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return g.order.less(table.columns()[a], table.columns()[b]); });

  std::vector<bool> done(table.width(), false);
  for (std::size_t col : order) {
    const ExponentVector& u = table.columns()[col];
    if (auto r = row_of.find(u); r != row_of.end()) {
      table.at(r->second, col) = Scalar::one(g.field);
    } else if (auto t = g.tails.find(u); t != g.tails.end()) {
      for (const auto& [v, c] : t->second.terms()) {
        auto row = row_of.find(v);
        if (row == row_of.end()) throw Error(Errc::MissingPredecessor, "tail of " + u.to_string() + " leaves the staircase");
        table.at(row->second, col) = c;
      }
    } else {
      // u = s + e_i with s outside lambda: [x^u] = sum_t a_{t,s} [x^{t+e_i}].
      std::optional<std::size_t> var, s_col;
      for (std::size_t i = 0; i < u.dim() && !var; ++i) {
        if (u[i] == 0) continue;
        ExponentVector s = u.minus_unit(i);
        if (row_of.contains(s)) continue;
        if (auto c = table.column_index(s)) {
          var = i;
          s_col = c;
        }
      }
      if (!var) throw Error(Errc::MissingPredecessor, "no predecessor of " + u.to_string() + " in U outside the staircase");
      if (!done[*s_col]) throw Error(Errc::MissingPredecessor, "predecessor of " + u.to_string() + " not yet reduced");
      for (std::size_t t = 0; t < lambda.size(); ++t) {
        const Scalar& a = table.at(t, *s_col);
        if (a.is_zero()) continue;
        auto shifted = table.column_index(lambda.elements()[t].plus_unit(*var));
        if (!shifted || !done[*shifted])
          throw Error(Errc::MissingPredecessor, "shift of " + lambda.elements()[t].to_string() + " needed before " + u.to_string());
        for (std::size_t v = 0; v < lambda.size(); ++v) {
          const Scalar& b = table.at(v, *shifted);
          if (!b.is_zero()) table.at(v, col) += a * b;
        }
      }
    }
    done[col] = true;
  }
  return table;
}

namespace {

void check_weight(const CoeffTable& table, const RationalVector& w) {
  if (static_cast<int>(w.size()) != table.dim()) throw Error(Errc::InvalidArgument, "weight has wrong dimension");
  for (const Rational& x : w)
    if (sgn(x) <= 0) throw Error(Errc::InvalidArgument, "weight must be strictly positive");
  // Generic on D_n^d exactly when w separates every pair of V_n^d.
  std::vector<Rational> values;
  for (const ExponentVector& v : v_set(static_cast<int>(table.n()), table.dim())) values.push_back(dot(w, v.coords()));
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw Error(Errc::NonGenericWeight, "weight ties two elements of V");
}

}  // namespace

Conversion convert_basis(const CoeffTable& table, const RationalVector& w, std::vector<int> priority) {
  check_weight(table, w);
  const std::size_t n = table.n();
  const std::size_t width = table.width();
  const Field field = table.field();
  MonomialOrder order = MonomialOrder::weight(w, std::move(priority));

  std::vector<std::size_t> sequence(width);
  std::iota(sequence.begin(), sequence.end(), 0);
  std::sort(sequence.begin(), sequence.end(),
            [&](std::size_t a, std::size_t b) { return order.less(table.columns()[a], table.columns()[b]); });

  std::set<ExponentVector> v_members;
  for (const ExponentVector& v : v_set(static_cast<int>(n), table.dim())) v_members.insert(v);

  Matrix m = table.matrix();
  std::vector<bool> picked(width, false);
  std::vector<std::size_t> mu;  // mu[i] = column pivoted into row i
  std::uint64_t ops = 0;

  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> pivot_col, pivot_row;
    for (std::size_t col : sequence) {
      if (picked[col] || !v_members.contains(table.columns()[col])) continue;
      for (std::size_t k = n; k-- > i;)
        if (!m(k, col).is_zero()) {
          pivot_row = k;
          break;
        }
      if (pivot_row) {
        pivot_col = col;
        break;
      }
    }
    if (!pivot_col) throw Error(Errc::RankDeficient, "table has rank " + std::to_string(i) + " < " + std::to_string(n));
    if (*pivot_row != i)
      for (std::size_t c = 0; c < width; ++c) std::swap(m(i, c), m(*pivot_row, c));
    Scalar inv = m(i, *pivot_col).inverse();
    for (std::size_t c = 0; c < width; ++c) {
      if (m(i, c).is_zero()) continue;
      m(i, c) *= inv;
      ++ops;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i || m(r, *pivot_col).is_zero()) continue;
      Scalar factor = m(r, *pivot_col);
      for (std::size_t c = 0; c < width; ++c) {
        if (m(i, c).is_zero()) continue;
        m(r, c) -= factor * m(i, c);
        ++ops;
      }
    }
    picked[*pivot_col] = true;
    mu.push_back(*pivot_col);
  }

  std::vector<ExponentVector> mu_elements;
  for (std::size_t col : mu) mu_elements.push_back(table.columns()[col]);
  if (!is_staircase(mu_elements)) throw Error(Errc::Internal, "greedy selection is not a staircase");

  Conversion out;
  out.staircase = Staircase(mu_elements);
  out.scalar_ops = ops;
  out.table = CoeffTable(field, out.staircase.elements(), table.columns());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t target =
        std::lower_bound(out.staircase.begin(), out.staircase.end(), mu_elements[i], graded_less) - out.staircase.begin();
    for (std::size_t c = 0; c < width; ++c) out.table.at(target, c) = m(i, c);
  }

  out.basis.field = field;
  out.basis.staircase = out.staircase;
  out.basis.order = order;
  for (const ExponentVector& u : min_gaps(out.staircase)) {
    std::size_t col = *out.table.column_index(u);
    out.basis.tails.emplace(u, out.table.representative(col));
  }
  return out;
}

}  // namespace ugb
