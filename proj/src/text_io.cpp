#include "ugb/text_io.hpp"

#include <sstream>

namespace ugb {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

std::vector<std::string> vector_items(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',' || c == '\t') c = ' ';
  std::istringstream in(s);
  std::vector<std::string> items;
  std::string item;
  while (in >> item) items.push_back(item);
  return items;
}

[[maybe_unused]] int parse_positive_int(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(token, &used);
    if (used == token.size() && v > 0 && v <= 1'000'000) return static_cast<int>(v);
  } catch (const std::exception&) {
  }
  throw Error(Errc::ParseError, std::string("bad ") + what + " '" + token + "'");
}

}  // namespace

BasisFile parse_basis_file(std::string_view text) {
  std::vector<std::string> lines = content_lines(text);
  if (lines.empty()) throw Error(Errc::ParseError, "empty basis file");
  std::istringstream header(lines.front());
  std::string n_text, d_text, field_text, order_text;
  if (!(header >> n_text >> d_text >> field_text >> order_text))
    throw Error(Errc::ParseError, "basis header must read 'n d field order'");
  std::string rest;
  if (header >> rest) throw Error(Errc::ParseError, "trailing text in basis header");
  BasisFile file;
  file.n = static_cast<std::size_t>(parse_positive_int(n_text, "n"));
  file.d = parse_positive_int(d_text, "d");
  file.field = Field::parse(field_text);
  file.order = MonomialOrder::parse(order_text, file.d);
  for (std::size_t i = 1; i < lines.size(); ++i) file.polys.push_back(parse_polynomial(lines[i], file.field, file.d));
  return file;
}

ReducedGroebnerBasis basis_from_file(const BasisFile& file) {
  ReducedGroebnerBasis g = ReducedGroebnerBasis::from_elements(file.polys, file.order);
  if (auto violation = validate_reduced_gb(g, file.n))
    throw Error(Errc::InvalidBasis, std::string(violation_name(violation->kind)) + ": " + violation->detail);
  return g;
}

std::string render_basis_file(const ReducedGroebnerBasis& g) {
  std::string out = std::to_string(g.length()) + " " + std::to_string(g.dim()) + " " + g.field.to_string() + " " +
                    g.order.to_string() + "\n";
  for (const Polynomial& f : g.elements()) out += f.to_string(g.order) + "\n";
  return out;
}

IntVector parse_int_vector(std::string_view text) {
  IntVector out;
  for (const std::string& item : vector_items(text)) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad integer '" + item + "' in '" + std::string(text) + "'");
    }
  }
  if (out.empty()) throw Error(Errc::ParseError, "empty vector");
  return out;
}

RationalVector parse_rational_vector(std::string_view text) {
  RationalVector out;
  for (const std::string& item : vector_items(text)) out.push_back(scalar_parse(item, Field::rationals()).rational());
  if (out.empty()) throw Error(Errc::ParseError, "empty vector");
  return out;
}

PointConfiguration parse_points_file(std::string_view text, Field field) {
  PointConfiguration config;
  config.field = field;
  for (const std::string& line : content_lines(text)) {
    std::vector<Scalar> point;
    for (const std::string& item : vector_items(line)) point.push_back(scalar_parse(item, field));
    if (config.points.empty()) config.d = static_cast<int>(point.size());
    if (static_cast<int>(point.size()) != config.d)
      throw Error(Errc::ParseError, "point '" + line + "' does not have " + std::to_string(config.d) + " coordinates");
    config.points.push_back(std::move(point));
  }
  if (config.points.empty()) throw Error(Errc::ParseError, "no points given");
  return config;
}

LatticeBasis parse_lattice_file(std::string_view text) {
  std::vector<IntVector> columns;
  for (const std::string& line : content_lines(text)) columns.push_back(parse_int_vector(line));
  if (columns.empty()) throw Error(Errc::ParseError, "empty lattice file");
  for (const IntVector& col : columns)
    if (col.size() != columns.size()) throw Error(Errc::ParseError, "lattice file needs d lines of d integers");
  return LatticeBasis(std::move(columns));
}

std::string render_test_set(const TestSet& t) {
  std::string out;
  for (const IntVector& m : t.moves) out += vector_to_string(m) + "\n";
  return out;
}

TestSet parse_test_set(std::string_view text) {
  TestSet t;
  for (const std::string& line : content_lines(text)) t.moves.push_back(parse_int_vector(line));
  std::sort(t.moves.begin(), t.moves.end());
  t.moves.erase(std::unique(t.moves.begin(), t.moves.end()), t.moves.end());
  return t;
}

nlohmann::ordered_json ugb_to_json(const UgbResult& result) {
  nlohmann::ordered_json j;
  j["n"] = result.n;
  j["d"] = result.d;
  j["field"] = result.field.to_string();
  j["lambda"] = nlohmann::ordered_json::array();
  for (const Staircase& s : result.initial_staircases) j["lambda"].push_back(s.to_string());
  j["state_vertices"] = nlohmann::ordered_json::array();
  for (const IntVector& v : result.state_vertices) j["state_vertices"].push_back(vector_to_string(v));
  j["reduced_bases"] = nlohmann::ordered_json::object();
  for (const Staircase& s : result.initial_staircases) {
    const ReducedGroebnerBasis& g = result.reduced_bases.at(s);
    nlohmann::ordered_json entry;
    entry["order"] = g.order.to_string();
    entry["elements"] = nlohmann::ordered_json::array();
    for (const Polynomial& f : g.elements()) entry["elements"].push_back(f.to_string(g.order));
    j["reduced_bases"][s.to_string()] = std::move(entry);
  }
  j["ugb"] = nlohmann::ordered_json::array();
  j["ugb_orders"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < result.universal_basis.size(); ++i) {
    j["ugb"].push_back(result.universal_basis[i].to_string(result.universal_orders[i]));
    j["ugb_orders"].push_back(result.universal_orders[i].to_string());
  }
  j["witnesses"] = nlohmann::ordered_json::object();
  for (const auto& [w, s] : result.witness_assignment) j["witnesses"][vector_to_string(w)] = s.to_string();
  return j;
}

UgbResult ugb_from_json(const nlohmann::json& j) {
  try {
    UgbResult r;
    r.n = j.at("n").get<int>();
    r.d = j.at("d").get<int>();
    r.field = Field::parse(j.at("field").get<std::string>());
    for (const auto& s : j.at("lambda")) r.initial_staircases.push_back(parse_staircase(s.get<std::string>()));
    for (const auto& v : j.at("state_vertices")) r.state_vertices.push_back(parse_int_vector(v.get<std::string>()));
    for (const auto& [key, entry] : j.at("reduced_bases").items()) {
      MonomialOrder order = MonomialOrder::parse(entry.at("order").get<std::string>(), r.d);
      std::vector<Polynomial> elements;
      for (const auto& f : entry.at("elements")) elements.push_back(parse_polynomial(f.get<std::string>(), r.field, r.d));
      ReducedGroebnerBasis g = ReducedGroebnerBasis::from_elements(elements, order);
      if (g.staircase.to_string() != key)
        throw Error(Errc::InvalidBasis, "reduced basis heads disagree with its staircase");
      r.reduced_bases.emplace(g.staircase, std::move(g));
    }
    const auto& ugb = j.at("ugb");
    const auto& orders = j.at("ugb_orders");
    if (ugb.size() != orders.size()) throw Error(Errc::ParseError, "ugb and ugb_orders lengths differ");
    for (std::size_t i = 0; i < ugb.size(); ++i) {
      r.universal_basis.push_back(parse_polynomial(ugb[i].get<std::string>(), r.field, r.d));
      r.universal_orders.push_back(MonomialOrder::parse(orders[i].get<std::string>(), r.d));
    }
    for (const auto& [key, value] : j.at("witnesses").items()) {
      r.witness_assignment.emplace_back(parse_rational_vector(key), parse_staircase(value.get<std::string>()));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed result json: ") + e.what());
  }
}

}  // namespace ugb
