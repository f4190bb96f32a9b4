#include "ugb/monomial_order.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ugb {

namespace {

std::vector<int> identity_priority(int d) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> checked_priority(int d, std::vector<int> priority) {
  if (priority.empty()) return identity_priority(d);
  std::vector<int> sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_priority(d)) throw Error(Errc::InvalidArgument, "priority is not a permutation of the variables");
  return priority;
}

std::string priority_to_string(const std::vector<int>& priority) {
  std::string s;
  for (std::size_t i = 0; i < priority.size(); ++i) {
    if (i) s += '>';
    s += "x" + std::to_string(priority[i] + 1);
  }
  return s;
}

std::vector<int> parse_priority(std::string_view text, int d) {
  std::vector<int> out;
  while (!text.empty()) {
    auto gt = text.find('>');
    std::string_view name = text.substr(0, gt);
    if (name.size() < 2 || name[0] != 'x') throw Error(Errc::ParseError, "bad variable '" + std::string(name) + "'");
    int index = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(Errc::ParseError, "bad variable '" + std::string(name) + "'");
      index = index * 10 + (c - '0');
    }
    if (index < 1 || index > d) throw Error(Errc::ParseError, "variable '" + std::string(name) + "' out of range");
    out.push_back(index - 1);
    if (gt == std::string_view::npos) break;
    text.remove_prefix(gt + 1);
  }
  return checked_priority(d, std::move(out));
}

RationalVector parse_weight_row(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw Error(Errc::ParseError, "bad weight row '" + std::string(text) + "'");
  RationalVector row;
  std::string_view body = text.substr(1, text.size() - 2);
  while (true) {
    auto comma = body.find(',');
    row.push_back(scalar_parse(body.substr(0, comma), Field::rationals()).rational());
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return row;
}

}  // namespace

MonomialOrder::MonomialOrder(std::vector<RationalVector> weight_rows, std::vector<int> priority)
    : rows_(std::move(weight_rows)) {
  int d = static_cast<int>(priority.size());
  if (d == 0 && !rows_.empty()) d = static_cast<int>(rows_.front().size());
  priority_ = checked_priority(d, std::move(priority));
  for (const auto& row : rows_)
    if (static_cast<int>(row.size()) != d) throw Error(Errc::InvalidArgument, "weight row has wrong dimension");
}

MonomialOrder MonomialOrder::lex(int d, std::vector<int> priority) {
  MonomialOrder o({}, checked_priority(d, std::move(priority)));
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::grlex(int d, std::vector<int> priority) {
  MonomialOrder o({RationalVector(d, 1)}, checked_priority(d, std::move(priority)));
  o.kind_ = Kind::GrLex;
  return o;
}

MonomialOrder MonomialOrder::degrevlex(int d, std::vector<int> priority) {
  priority = checked_priority(d, std::move(priority));
  std::vector<RationalVector> rows{RationalVector(d, 1)};
  for (int k = d - 1; k >= 1; --k) {
    RationalVector row(d, 0);
    row[priority[k]] = -1;
    rows.push_back(std::move(row));
  }
  MonomialOrder o(std::move(rows), std::move(priority));
  o.kind_ = Kind::DegRevLex;
  return o;
}

MonomialOrder MonomialOrder::weight(RationalVector w, std::vector<int> priority) {
  int d = static_cast<int>(w.size());
  return MonomialOrder({std::move(w)}, checked_priority(d, std::move(priority)));
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& u, const ExponentVector& v) const {
  for (const RationalVector& row : rows_) {
    Rational a = dot(row, u.coords()), b = dot(row, v.coords());
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  for (int i : priority_)
    if (u[i] != v[i]) return u[i] < v[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex: return "lex:" + priority_to_string(priority_);
    case Kind::GrLex: return "grlex:" + priority_to_string(priority_);
    case Kind::DegRevLex: return "degrevlex:" + priority_to_string(priority_);
    case Kind::Custom: break;
  }
  std::string s = "weights:[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += ',';
    s += '(';
    for (std::size_t i = 0; i < rows_[r].size(); ++i) {
      if (i) s += ',';
      s += rows_[r][i].get_str();
    }
    s += ')';
  }
  return s + "];tiebreak:" + priority_to_string(priority_);
}

MonomialOrder MonomialOrder::parse(std::string_view spec, int d) {
  auto colon = spec.find(':');
  std::string_view name = spec.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);
  if (name == "lex") return lex(d, parse_priority(rest, d));
  if (name == "grlex" || name == "deglex") return grlex(d, parse_priority(rest, d));
  if (name == "degrevlex" || name == "grevlex") return degrevlex(d, parse_priority(rest, d));
  if (name != "weights") throw Error(Errc::ParseError, "unknown order '" + std::string(spec) + "'");

  std::string_view rows_text = rest;
  std::vector<int> priority;
  if (auto semi = rest.find(';'); semi != std::string_view::npos) {
    rows_text = rest.substr(0, semi);
    std::string_view tail = rest.substr(semi + 1);
    if (!tail.starts_with("tiebreak:")) throw Error(Errc::ParseError, "expected tiebreak in '" + std::string(spec) + "'");
    priority = parse_priority(tail.substr(9), d);
  }
  if (rows_text.size() < 2 || rows_text.front() != '[' || rows_text.back() != ']')
    throw Error(Errc::ParseError, "weight rows must be bracketed in '" + std::string(spec) + "'");
  std::vector<RationalVector> rows;
  std::string_view body = rows_text.substr(1, rows_text.size() - 2);
  while (!body.empty()) {
    auto close = body.find(')');
    if (close == std::string_view::npos) throw Error(Errc::ParseError, "unbalanced weight row");
    rows.push_back(parse_weight_row(body.substr(0, close + 1)));
    body.remove_prefix(close + 1);
    if (!body.empty()) {
      if (body.front() != ',') throw Error(Errc::ParseError, "expected ',' between weight rows");
      body.remove_prefix(1);
    }
  }
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != d) throw Error(Errc::ParseError, "weight row has wrong dimension");
  return MonomialOrder(std::move(rows), checked_priority(d, std::move(priority)));
}

}  // namespace ugb
