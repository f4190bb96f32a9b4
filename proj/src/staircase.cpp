#include "ugb/staircase.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace ugb {

ExponentVector::ExponentVector(std::vector<int> coords) : coords_(std::move(coords)) {
  for (int c : coords_)
    if (c < 0) throw Error(Errc::InvalidArgument, "negative exponent");
}

ExponentVector ExponentVector::unit(std::size_t d, std::size_t i) {
  ExponentVector e(d);
  e.coords_[i] = 1;
  return e;
}

int ExponentVector::degree() const {
  int s = 0;
  for (int c : coords_) s += c;
  return s;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  ExponentVector out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += other.coords_[i];
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  ExponentVector out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out.coords_[i] -= other.coords_[i];
    if (out.coords_[i] < 0) throw Error(Errc::InvalidArgument, "exponent difference is negative");
  }
  return out;
}

ExponentVector ExponentVector::minus_unit(std::size_t i) const {
  if (coords_[i] == 0) throw Error(Errc::InvalidArgument, "exponent difference is negative");
  ExponentVector out = *this;
  --out.coords_[i];
  return out;
}

ExponentVector ExponentVector::plus_unit(std::size_t i) const {
  ExponentVector out = *this;
  ++out.coords_[i];
  return out;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

bool colex_less(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = a.dim(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool graded_less(const ExponentVector& a, const ExponentVector& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return colex_less(a, b);
}

void sort_graded(std::vector<ExponentVector>& vs) { std::sort(vs.begin(), vs.end(), graded_less); }

bool is_staircase(const std::vector<ExponentVector>& s) {
  std::set<ExponentVector> members(s.begin(), s.end());
  for (const ExponentVector& v : members)
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (v[i] > 0 && !members.contains(v.minus_unit(i))) return false;
  return true;
}

Staircase::Staircase(std::vector<ExponentVector> elements) : elements_(std::move(elements)) {
  sort_graded(elements_);
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw Error(Errc::NotAStaircase, "duplicate element");
  for (const ExponentVector& v : elements_)
    if (v.dim() != dim()) throw Error(Errc::NotAStaircase, "mixed dimensions");
  if (!is_staircase(elements_)) throw Error(Errc::NotAStaircase, to_string() + " is not downward closed");
}

bool Staircase::contains(const ExponentVector& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v, graded_less);
}

std::string Staircase::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += elements_[i].to_string();
  }
  return s + "}";
}

bool operator<(const Staircase& a, const Staircase& b) {
  return std::lexicographical_compare(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
                                      b.elements_.end(), graded_less);
}

std::vector<ExponentVector> v_set(int n, int d) {
  if (n < 1 || d < 1) throw Error(Errc::InvalidArgument, "v_set needs n >= 1 and d >= 1");
  std::vector<ExponentVector> out;
  std::vector<int> coords(d, 0);
  // Depth-first over coordinates, carrying the running product of (v_i + 1).
  std::function<void(int, int)> rec = [&](int i, int product) {
    if (i == d) {
      out.emplace_back(coords);
      return;
    }
    for (int c = 0; product * (c + 1) <= n; ++c) {
      coords[i] = c;
      rec(i + 1, product * (c + 1));
    }
    coords[i] = 0;
  };
  rec(0, 1);
  sort_graded(out);
  return out;
}

std::vector<ExponentVector> u_set(int n, int d) {
  std::set<ExponentVector> all;
  for (const ExponentVector& v : v_set(n, d)) {
    all.insert(v);
    for (int i = 0; i < d; ++i) all.insert(v.plus_unit(i));
  }
  std::vector<ExponentVector> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), colex_less);
  return out;
}

std::vector<ExponentVector> min_gaps(const Staircase& lambda) {
  if (lambda.size() == 0) throw Error(Errc::NotAStaircase, "empty staircase has no gap set in U");
  std::vector<ExponentVector> out;
  for (const ExponentVector& u : u_set(static_cast<int>(lambda.size()), static_cast<int>(lambda.dim()))) {
    if (lambda.contains(u)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < u.dim() && minimal; ++i)
      if (u[i] != 0 && !lambda.contains(u.minus_unit(i))) minimal = false;
    if (minimal) out.push_back(u);
  }
  sort_graded(out);
  return out;
}

IntVector staircase_sum(const Staircase& lambda) {
  IntVector sum(lambda.dim(), 0);
  for (const ExponentVector& v : lambda)
    for (std::size_t i = 0; i < v.dim(); ++i) sum[i] += v[i];
  return sum;
}

namespace {

using Layer = std::vector<ExponentVector>;

class StaircaseEnumerator {
 public:
  explicit StaircaseEnumerator(std::size_t max_count) : max_count_(max_count) {}

  // All k-element staircases of N^d, each as a graded-sorted element list.
  const std::vector<Layer>& all(int k, int d) {
    auto key = std::make_pair(k, d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Layer> out;
    if (d == 1) {
      Layer layer;
      for (int i = 0; i < k; ++i) layer.push_back(ExponentVector{i});
      out.push_back(std::move(layer));
    } else {
      Layer current;
      stack_slabs(k, d, nullptr, 0, current, out);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Fills slabs x_d = level, level+1, ... with nested (d-1)-staircases.
  void stack_slabs(int remaining, int d, const Layer* parent, int level, Layer& current, std::vector<Layer>& out) {
    if (remaining == 0) {
      Layer done = current;
      sort_graded(done);
      out.push_back(std::move(done));
      if (out.size() > max_count_) throw Error(Errc::TooLarge, "staircase count exceeds guard");
      return;
    }
    int cap = parent ? std::min<int>(remaining, static_cast<int>(parent->size())) : remaining;
    for (int s = 1; s <= cap; ++s) {
      for (const Layer& slab : all(s, d - 1)) {
        if (parent && !std::includes(parent->begin(), parent->end(), slab.begin(), slab.end(), graded_less))
          continue;
        std::size_t mark = current.size();
        for (const ExponentVector& v : slab) {
          std::vector<int> coords = v.coords();
          coords.push_back(level);
          current.emplace_back(std::move(coords));
        }
        stack_slabs(remaining - s, d, &slab, level + 1, current, out);
        current.resize(mark);
      }
    }
  }

  std::size_t max_count_;
  std::map<std::pair<int, int>, std::vector<Layer>> memo_;
};

}  // namespace

std::vector<Staircase> enumerate_staircases(int n, int d, std::size_t max_count) {
  if (n < 1 || d < 1) throw Error(Errc::InvalidArgument, "enumerate_staircases needs n >= 1 and d >= 1");
  StaircaseEnumerator enumerator(max_count);
  std::vector<Staircase> out;
  for (const Layer& layer : enumerator.all(n, d)) out.emplace_back(layer);
  std::sort(out.begin(), out.end());
  return out;
}

ExponentVector parse_exponent(std::string_view text) {
  auto fail = [&] { return Error(Errc::ParseError, "malformed exponent vector '" + std::string(text) + "'"); };
  std::vector<int> coords;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw fail();
    std::string_view body = text.substr(1, text.size() - 2);
    while (true) {
      auto comma = body.find(',');
      std::string_view item = body.substr(0, comma);
      if (item.empty() || item.size() > 9) throw fail();
      int value = 0;
      for (char c : item) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
        value = value * 10 + (c - '0');
      }
      coords.push_back(value);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  } else {
    if (text.empty() || text.size() > 9) throw fail();
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
      coords.push_back(c - '0');
    }
  }
  return ExponentVector(std::move(coords));
}

Staircase parse_staircase(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw Error(Errc::ParseError, "malformed staircase '" + std::string(text) + "'");
  std::vector<ExponentVector> elements;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    auto close = body.find(')');
    if (close == std::string_view::npos) throw Error(Errc::ParseError, "malformed staircase '" + std::string(text) + "'");
    elements.push_back(parse_exponent(body.substr(0, close + 1)));
    body.remove_prefix(close + 1);
    if (!body.empty()) {
      if (body.front() != ',') throw Error(Errc::ParseError, "malformed staircase '" + std::string(text) + "'");
      body.remove_prefix(1);
    }
  }
  return Staircase(std::move(elements));
}

}  // namespace ugb
