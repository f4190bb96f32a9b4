#include "ugb/zonotope.hpp"

#include <algorithm>
#include <set>

#include <climits>
#include "ugb/staircase.hpp"

namespace ugb {

namespace {

IntVector sign_normalized(IntVector v) {
  for (std::int64_t x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

std::int64_t l1_norm(const IntVector& v) {
  std::int64_t s = 0;
  for (std::int64_t x : v) s += x < 0 ? -x : x;
  return s;
}

bool has_mixed_signs(const IntVector& v) {
  bool pos = false, neg = false;
  for (std::int64_t x : v) {
    pos |= x > 0;
    neg |= x < 0;
  }
  return pos && neg;
}

std::int64_t narrow(__int128 x) {
  if (x > INT64_MAX || x < -INT64_MAX) throw Error(Errc::TooLarge, "chamber ray coordinates exceed 64 bits");
  return static_cast<std::int64_t>(x);
}

__int128 dot128(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

int sign128(__int128 x) { return (x > 0) - (x < 0); }

// Rank of a small integer matrix by fraction-free elimination.
int integer_rank(std::vector<IntVector> rows, int d) {
  int r = 0;
  for (int col = 0; col < d && r < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const __int128 f = rows[i][col], p = rows[r][col];
      IntVector next(d);
      for (int j = 0; j < d; ++j) next[j] = narrow(p * rows[i][j] - f * rows[r][j]);
      std::int64_t g = gcd_vector(next);
      if (g > 1)
        for (auto& x : next) x /= g;
      rows[i] = std::move(next);
    }
    ++r;
  }
  return r;
}

// A pointed cone of the arrangement inside the closed positive orthant, kept
// as its constraint normals (a . w >= 0) and primitive extreme rays.
struct Cell {
  std::vector<IntVector> constraints;
  std::vector<IntVector> rays;
};

std::vector<std::size_t> tight_set(const Cell& cell, const IntVector& ray) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cell.constraints.size(); ++k)
    if (dot128(ray, cell.constraints[k]) == 0) out.push_back(k);
  return out;
}

// Extreme rays a and b span a 2-face iff their common tight constraints have
// rank d - 2.
bool adjacent(const Cell& cell, const std::vector<std::size_t>& ta, const std::vector<std::size_t>& tb, int d) {
  std::vector<std::size_t> common;
  std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(common));
  if (static_cast<int>(common.size()) < d - 2) return false;
  if (d == 2) return true;
  std::vector<IntVector> rows;
  for (std::size_t k : common) rows.push_back(cell.constraints[k]);
  return integer_rank(std::move(rows), d) == d - 2;
}

// The ray where the segment from a (h . a > 0) to b (h . b < 0) meets h.
IntVector crossing(const IntVector& a, const IntVector& b, const IntVector& h) {
  const __int128 sa = dot128(a, h), sb = dot128(b, h);
  IntVector p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p[i] = narrow(sa * b[i] - sb * a[i]);
  std::int64_t g = gcd_vector(p);
  for (auto& x : p) x /= g;
  return p;
}

}  // namespace

DirectionSet primitive_differences(int n, int d) {
  if (n < 1 || d < 1) throw Error(Errc::InvalidArgument, "primitive_differences needs n >= 1 and d >= 1");
  DirectionSet out{n, d, {}};
  if (n == 1) {
    for (int i = 0; i < d; ++i) {
      IntVector e(d, 0);
      e[i] = 1;
      out.generators.push_back(e);
    }
    return out;
  }
  std::vector<ExponentVector> vs = v_set(n, d);
  std::set<IntVector> differences;
  for (const auto& u : vs)
    for (const auto& v : vs) {
      IntVector diff(d);
      for (int i = 0; i < d; ++i) diff[i] = u[i] - v[i];
      differences.insert(diff);
    }
  for (const IntVector& v : differences) {
    if (gcd_vector(v) == 0 || sign_normalized(v) != v) continue;
    std::int64_t g = gcd_vector(v);
    bool primitive = true;
    for (std::int64_t k = 2; k <= g && primitive; ++k) {
      if (g % k != 0) continue;
      IntVector reduced = v;
      for (auto& x : reduced) x /= k;
      if (differences.contains(reduced)) primitive = false;
    }
    if (primitive) out.generators.push_back(v);
  }
  std::sort(out.generators.begin(), out.generators.end(), [](const IntVector& a, const IntVector& b) {
    std::int64_t na = l1_norm(a), nb = l1_norm(b);
    if (na != nb) return na < nb;
    return a > b;
  });
  return out;
}

std::vector<int> sign_vector(const RationalVector& w, const DirectionSet& directions) {
  std::vector<int> out;
  out.reserve(directions.generators.size());
  for (const IntVector& g : directions.generators) out.push_back(sgn(dot(w, g)));
  return out;
}

bool is_generic(const RationalVector& w, const DirectionSet& directions) {
  for (const IntVector& g : directions.generators)
    if (sgn(dot(w, g)) == 0) return false;
  return true;
}

IntVector zonotope_vertex(const RationalVector& w, const DirectionSet& directions) {
  if (static_cast<int>(w.size()) != directions.d) throw Error(Errc::InvalidArgument, "weight has wrong dimension");
  IntVector h(directions.d, 0);
  for (const IntVector& g : directions.generators) {
    int s = sgn(dot(w, g));
    if (s == 0) throw Error(Errc::NonGenericWeight, vector_to_string(w) + " is orthogonal to " + vector_to_string(g));
    for (int i = 0; i < directions.d; ++i) h[i] += s < 0 ? g[i] : -g[i];
  }
  return h;
}

std::vector<RationalVector> positive_cell_witnesses(const std::vector<IntVector>& hyperplanes, int d,
                                                    std::size_t max_cells) {
  Cell orthant;
  for (int i = 0; i < d; ++i) {
    IntVector e(d, 0);
    e[i] = 1;
    orthant.constraints.push_back(e);
    orthant.rays.push_back(e);
  }
  std::vector<Cell> cells{orthant};

  // Only hyperplanes with mixed-sign normals meet the open orthant; parallel
  // normals give the same hyperplane.
  std::set<IntVector> cutting;
  for (const IntVector& h : hyperplanes) {
    if (!has_mixed_signs(h)) continue;
    IntVector p = sign_normalized(h);
    std::int64_t g = gcd_vector(p);
    for (auto& x : p) x /= g;
    cutting.insert(p);
  }

  std::vector<int> side;
  for (const IntVector& h : cutting) {
    std::vector<Cell> next;
    next.reserve(cells.size() + 16);
    for (Cell& cell : cells) {
      side.clear();
      bool pos = false, neg = false;
      for (const IntVector& r : cell.rays) {
        side.push_back(sign128(dot128(r, h)));
        pos |= side.back() > 0;
        neg |= side.back() < 0;
      }
      if (!(pos && neg)) {
        next.push_back(std::move(cell));
        continue;
      }
      Cell upper, lower;
      upper.constraints = cell.constraints;
      upper.constraints.push_back(h);
      lower.constraints = cell.constraints;
      IntVector minus_h = h;
      for (auto& x : minus_h) x = -x;
      lower.constraints.push_back(minus_h);
      std::vector<std::vector<std::size_t>> tight;
      for (const IntVector& r : cell.rays) tight.push_back(tight_set(cell, r));
      for (std::size_t a = 0; a < cell.rays.size(); ++a) {
        if (side[a] >= 0) upper.rays.push_back(cell.rays[a]);
        if (side[a] <= 0) lower.rays.push_back(cell.rays[a]);
      }
      for (std::size_t a = 0; a < cell.rays.size(); ++a) {
        if (side[a] <= 0) continue;
        for (std::size_t b = 0; b < cell.rays.size(); ++b) {
          if (side[b] >= 0 || !adjacent(cell, tight[a], tight[b], d)) continue;
          IntVector p = crossing(cell.rays[a], cell.rays[b], h);
          upper.rays.push_back(p);
          lower.rays.push_back(std::move(p));
        }
      }
      next.push_back(std::move(upper));
      next.push_back(std::move(lower));
    }
    cells = std::move(next);
    if (cells.size() > max_cells) throw Error(Errc::TooLarge, "chamber count exceeds guard");
  }

  // A strictly positive combination of all extreme rays is interior.
  std::vector<RationalVector> witnesses;
  witnesses.reserve(cells.size());
  for (const Cell& cell : cells) {
    RationalVector sum(d, 0);
    for (const IntVector& r : cell.rays)
      for (int i = 0; i < d; ++i) sum[i] += r[i];
    IntVector scaled = primitive_integer_vector(sum);
    witnesses.emplace_back(scaled.begin(), scaled.end());
  }
  std::sort(witnesses.begin(), witnesses.end());
  return witnesses;
}

namespace {

Chamber make_chamber(RationalVector witness, const DirectionSet& directions) {
  Chamber c;
  c.vertex = zonotope_vertex(witness, directions);
  c.signs = sign_vector(witness, directions);
  c.witness = std::move(witness);
  return c;
}

}  // namespace

std::vector<Chamber> positive_chambers(const DirectionSet& directions, std::size_t max_chambers) {
  std::vector<Chamber> out;
  for (RationalVector& w : positive_cell_witnesses(directions.generators, directions.d, max_chambers))
    out.push_back(make_chamber(std::move(w), directions));
  return out;
}

std::vector<Chamber> positive_chambers(int n, int d, std::size_t max_chambers) {
  return positive_chambers(primitive_differences(n, d), max_chambers);
}

std::vector<Chamber> all_chambers(const DirectionSet& directions, std::size_t max_chambers) {
  // The unit vectors are among the generators, so every chamber sits inside
  // one open orthant. Enumerate orthants with a positive first sign by
  // reflecting them onto the positive one; the rest are antipodes.
  const int d = directions.d;
  std::vector<Chamber> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d - 1)); ++mask) {
    std::vector<int> flip(d, 1);
    for (int i = 1; i < d; ++i)
      if (mask & (std::uint64_t{1} << (i - 1))) flip[i] = -1;
    std::vector<IntVector> reflected;
    for (IntVector g : directions.generators) {
      for (int i = 0; i < d; ++i) g[i] *= flip[i];
      reflected.push_back(std::move(g));
    }
    for (RationalVector w : positive_cell_witnesses(reflected, d, max_chambers)) {
      for (int i = 0; i < d; ++i) w[i] *= flip[i];
      RationalVector antipode = w;
      for (auto& x : antipode) x = -x;
      out.push_back(make_chamber(std::move(w), directions));
      out.push_back(make_chamber(std::move(antipode), directions));
      if (out.size() > max_chambers) throw Error(Errc::TooLarge, "chamber count exceeds guard");
    }
  }
  std::sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) { return a.witness < b.witness; });
  return out;
}

std::vector<Chamber> all_chambers(int n, int d, std::size_t max_chambers) {
  return all_chambers(primitive_differences(n, d), max_chambers);
}

std::string vector_to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string vector_to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace ugb
