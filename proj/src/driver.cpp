#include "ugb/driver.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ugb {

UgbResult compute_ugb(const ReducedGroebnerBasis& g, const DriverOptions& options) {
  if (auto violation = validate_reduced_gb(g, g.length()))
    throw Error(Errc::InvalidBasis, std::string(violation_name(violation->kind)) + ": " + violation->detail);

  UgbResult result;
  result.n = static_cast<int>(g.length());
  result.d = g.dim();
  result.field = g.field;

  const CoeffTable table = normal_form_table(g);
  std::vector<RationalVector> witnesses;
  if (options.witnesses) {
    witnesses = *options.witnesses;
  } else {
    for (Chamber& c : positive_chambers(result.n, result.d, options.max_chambers)) witnesses.push_back(std::move(c.witness));
  }
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());

  for (const RationalVector& w : witnesses) {
    Conversion conversion;
    try {
      conversion = convert_basis(table, w);
    } catch (const Error& e) {
      if (e.code() == Errc::NonGenericWeight) throw Error(Errc::Internal, std::string("chamber witness is not generic: ") + e.what());
      throw;
    }
    result.witness_assignment.emplace_back(w, conversion.staircase);
    result.reduced_bases.try_emplace(conversion.staircase, std::move(conversion.basis));
  }

  for (const auto& [lambda, basis] : result.reduced_bases) result.initial_staircases.push_back(lambda);
  std::sort(result.initial_staircases.begin(), result.initial_staircases.end(),
            [](const Staircase& a, const Staircase& b) { return staircase_sum(a) < staircase_sum(b); });
  for (const Staircase& lambda : result.initial_staircases) result.state_vertices.push_back(staircase_sum(lambda));

  struct Entry {
    ExponentVector head;
    std::string text;
    Polynomial poly;
    MonomialOrder order;
  };
  std::vector<Entry> entries;
  for (const auto& [lambda, basis] : result.reduced_bases) {
    for (const auto& [u, tail] : basis.tails) {
      Polynomial element = Polynomial::monomial(basis.field, u) - tail;
      if (std::any_of(entries.begin(), entries.end(), [&](const Entry& e) { return e.poly == element; })) continue;
      entries.push_back({u, element.to_string(basis.order), std::move(element), basis.order});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.head != b.head) return graded_less(a.head, b.head);
    return a.text < b.text;
  });
  for (Entry& e : entries) {
    result.universal_basis.push_back(std::move(e.poly));
    result.universal_orders.push_back(std::move(e.order));
  }
  return result;
}

StatePolyhedron state_polyhedron(const UgbResult& result) {
  StatePolyhedron p;
  p.vertices = result.state_vertices;
  std::sort(p.vertices.begin(), p.vertices.end());
  p.recession_dim = result.d;
  return p;
}

std::vector<IntVector> universal_order_set(int n, int d, std::size_t max_chambers) {
  std::vector<IntVector> out;
  for (const Chamber& c : positive_chambers(n, d, max_chambers)) out.push_back(primitive_integer_vector(c.witness));
  return out;
}

std::string render_order_set(int n, int d, const std::vector<IntVector>& orders) {
  std::string s = "(" + std::to_string(n) + "," + std::to_string(d) + ")\n";
  for (const IntVector& w : orders) s += vector_to_string(w) + "\n";
  return s;
}

std::vector<IntVector> parse_order_set(const std::string& text, int n, int d) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "(" + std::to_string(n) + "," + std::to_string(d) + ")")
    throw Error(Errc::ParseError, "order set header does not match (" + std::to_string(n) + "," + std::to_string(d) + ")");
  std::vector<IntVector> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.size() < 2 || line.front() != '(' || line.back() != ')') throw Error(Errc::ParseError, "bad order line '" + line + "'");
    IntVector w;
    std::stringstream items(line.substr(1, line.size() - 2));
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        w.push_back(std::stoll(item));
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "bad order line '" + line + "'");
      }
    }
    if (static_cast<int>(w.size()) != d) throw Error(Errc::ParseError, "order vector has wrong dimension");
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<IntVector> cached_order_set(const std::filesystem::path& cache_dir, int n, int d, bool refresh,
                                        std::size_t max_chambers) {
  std::filesystem::path file = cache_dir / ("W_" + std::to_string(n) + "_" + std::to_string(d) + ".txt");
  if (!refresh && std::filesystem::exists(file)) {
    std::ifstream in(file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_order_set(buffer.str(), n, d);
  }
  std::vector<IntVector> orders = universal_order_set(n, d, max_chambers);
  std::filesystem::create_directories(cache_dir);
  std::ofstream out(file);
  out << render_order_set(n, d, orders);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write cache file " + file.string());
  return orders;
}

}  // namespace ugb
