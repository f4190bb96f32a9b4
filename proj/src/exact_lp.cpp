#include "ugb/exact_lp.hpp"

#include "ugb/errors.hpp"

namespace ugb {

namespace {

struct Tableau {
  std::vector<RationalVector> rows;  // constraint rows, last entry is the rhs
  RationalVector objective;          // reduced costs, last entry is the value
  std::vector<std::size_t> basis;

  std::size_t width() const { return objective.size() - 1; }

  void pivot(std::size_t r, std::size_t col) {
    RationalVector& pr = rows[r];
    const Rational inv = 1 / pr[col];
    for (Rational& x : pr) x *= inv;
    auto eliminate = [&](RationalVector& row) {
      const Rational f = row[col];
      if (f == 0) return;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (pr[j] != 0) row[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(objective);
    basis[r] = col;
  }

  // Returns false when unbounded. Columns at or past `limit` never enter.
  bool optimize(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (objective[j] < 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i].back() / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult maximize(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.size();
  const std::size_t nvar = c.size();
  if (b.size() != m) throw Error(Errc::InvalidArgument, "lp: rhs length mismatch");
  for (const auto& row : a)
    if (row.size() != nvar) throw Error(Errc::InvalidArgument, "lp: row length mismatch");

  // Phase one: artificial columns nvar..nvar+m-1.
  Tableau t;
  t.rows.assign(m, RationalVector(nvar + m + 1));
  t.objective.assign(nvar + m + 1, Rational(0));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < nvar; ++j) t.rows[i][j] = sign * a[i][j];
    t.rows[i][nvar + i] = 1;
    t.rows[i].back() = sign * b[i];
    t.basis[i] = nvar + i;
    for (std::size_t j = 0; j < nvar; ++j) t.objective[j] -= t.rows[i][j];
    t.objective.back() -= t.rows[i].back();
  }
  t.optimize(nvar + m);
  LpResult result;
  if (t.objective.back() != 0) return result;

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < nvar) {
      ++i;
      continue;
    }
    std::size_t col = nvar;
    for (std::size_t j = 0; j < nvar; ++j)
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    if (col == nvar) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, col);
    ++i;
  }

  // Phase two on the original columns.
  for (auto& row : t.rows) {
    Rational rhs = row.back();
    row.resize(nvar);
    row.push_back(rhs);
  }
  t.objective.assign(nvar + 1, Rational(0));
  for (std::size_t j = 0; j < nvar; ++j) t.objective[j] = -c[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational cb = c[t.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= nvar; ++j) t.objective[j] += cb * t.rows[i][j];
  }
  if (!t.optimize(nvar)) {
    result.status = LpResult::Status::Unbounded;
    return result;
  }
  result.status = LpResult::Status::Optimal;
  result.value = t.objective.back();
  result.x.assign(nvar, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) result.x[t.basis[i]] = t.rows[i].back();
  return result;
}

}  // namespace ugb
