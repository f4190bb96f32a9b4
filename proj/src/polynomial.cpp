#include "ugb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace ugb {

Polynomial Polynomial::monomial(Field field, const ExponentVector& e, const Scalar& coefficient) {
  Polynomial p(field, static_cast<int>(e.dim()));
  p.add_term(e, coefficient);
  return p;
}

Scalar Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

const ExponentVector& Polynomial::head(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(Errc::InvalidArgument, "zero polynomial has no head");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return best->first;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(field_, dim_);
  if (c.is_zero()) return out;
  for (const auto& [e, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, a * c);
  return out;
}

Polynomial Polynomial::shifted(const ExponentVector& e, const Scalar& c) const {
  Polynomial out(field_, dim_);
  if (c.is_zero()) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace(m + e, a * c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.field_, a.dim_);
  for (const auto& [e, c] : b.terms_) out += a.shifted(e, c);
  return out;
}

namespace {

std::string monomial_text(const ExponentVector& e) {
  std::string s;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string render(const std::vector<std::pair<ExponentVector, Scalar>>& terms, Field field) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [e, c] = terms[k];
    bool negative = field.is_rational() && sgn(c.rational()) < 0;
    Scalar magnitude = negative ? -c : c;
    if (k == 0)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    std::string mono = monomial_text(e);
    if (mono.empty())
      s += magnitude.to_string();
    else if (magnitude.is_one())
      s += mono;
    else
      s += magnitude.to_string() + "*" + mono;
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string(const MonomialOrder& order) const {
  std::vector<std::pair<ExponentVector, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return render(sorted, field_);
}

std::string Polynomial::to_string() const {
  std::vector<std::pair<ExponentVector, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return graded_less(b.first, a.first); });
  return render(sorted, field_);
}

Polynomial parse_polynomial(std::string_view text, Field field, int d) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  auto fail = [&](const std::string& why) {
    return Error(Errc::ParseError, why + " in polynomial '" + std::string(text) + "'");
  };
  if (compact.empty()) throw fail("empty input");

  Polynomial out(field, d);
  if (compact == "0") return out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw fail("expected '+' or '-'");
    }
    std::size_t end = compact.find_first_of("+-", pos);
    std::string_view term = std::string_view(compact).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (term.empty()) throw fail("empty term");
    pos = end == std::string::npos ? compact.size() : end;

    Scalar coefficient = Scalar::one(field);
    std::vector<int> exponent(d, 0);
    while (!term.empty()) {
      auto star = term.find('*');
      std::string_view factor = term.substr(0, star);
      if (factor.empty()) throw fail("empty factor");
      if (factor.front() == 'x') {
        auto caret = factor.find('^');
        std::string_view index_text = factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
        int power = 1;
        if (caret != std::string_view::npos) {
          std::string_view power_text = factor.substr(caret + 1);
          if (power_text.empty() || power_text.size() > 6 ||
              !std::all_of(power_text.begin(), power_text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw fail("bad exponent");
          power = std::stoi(std::string(power_text));
        }
        if (index_text.empty() || index_text.size() > 4 ||
            !std::all_of(index_text.begin(), index_text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw fail("bad variable");
        int index = std::stoi(std::string(index_text));
        if (index < 1 || index > d) throw fail("variable x" + std::to_string(index) + " out of range");
        exponent[index - 1] += power;
      } else {
        coefficient *= scalar_parse(factor, field);
      }
      if (star == std::string_view::npos) break;
      term.remove_prefix(star + 1);
      if (term.empty()) throw fail("dangling '*'");
    }
    out.add_term(ExponentVector(std::move(exponent)), negative ? -coefficient : coefficient);
  }
  return out;
}

Scalar poly_eval(const Polynomial& f, std::span<const Scalar> point) {
  if (static_cast<int>(point.size()) != f.dim()) throw Error(Errc::InvalidArgument, "point has wrong dimension");
  Scalar total = Scalar::zero(f.field());
  for (const auto& [e, c] : f.terms()) {
    Scalar term = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

}  // namespace ugb
