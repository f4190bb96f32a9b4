#include "ugb/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ugb/constructors.hpp"
#include "ugb/driver.hpp"
#include "ugb/oracle.hpp"
#include "ugb/text_io.hpp"

namespace ugb {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kGuardExceeded = 2;
constexpr int kOracleFailure = 3;

std::string read_input(const std::string& path) {
  if (path.empty()) throw Error(Errc::InvalidArgument, "an input file is required");
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const RunConfig& config, std::ostream& out, const std::string& artifact) {
  if (config.output.empty()) {
    out << artifact;
    return;
  }
  std::ofstream file(config.output);
  file << artifact;
  if (!file) throw Error(Errc::InvalidArgument, "cannot write " + config.output);
}

MonomialOrder required_order(const RunConfig& config, int d) {
  if (config.order_spec.empty()) throw Error(Errc::InvalidArgument, config.subcommand + " needs --order");
  return MonomialOrder::parse(config.order_spec, d);
}

void require_nd(const RunConfig& config) {
  if (config.n < 1 || config.d < 1) throw Error(Errc::InvalidArgument, config.subcommand + " needs -n and -d at least 1");
}

ReducedGroebnerBasis load_basis(const RunConfig& config) {
  BasisFile file = parse_basis_file(read_input(config.input));
  if (!config.repair) return basis_from_file(file);
  ReducedGroebnerBasis g = buchberger({file.polys, file.order}, config.guards.max_spairs);
  if (g.length() != file.n)
    throw Error(Errc::InvalidBasis, "generators define an ideal of length " + std::to_string(g.length()) + ", header says " +
                                        std::to_string(file.n));
  return g;
}

std::string render_ugb_text(const UgbResult& r) {
  std::ostringstream s;
  s << "n=" << r.n << " d=" << r.d << " field=" << r.field.to_string() << "\n";
  s << "staircases " << r.initial_staircases.size() << "\n";
  for (std::size_t i = 0; i < r.initial_staircases.size(); ++i)
    s << r.initial_staircases[i].to_string() << " sum=" << vector_to_string(r.state_vertices[i]) << "\n";
  s << "ugb " << r.universal_basis.size() << "\n";
  for (std::size_t i = 0; i < r.universal_basis.size(); ++i) s << r.universal_basis[i].to_string(r.universal_orders[i]) << "\n";
  return s.str();
}

int cmd_ugb(const RunConfig& config, std::ostream& out) {
  ReducedGroebnerBasis g = load_basis(config);
  const int n = static_cast<int>(g.length());
  DriverOptions options;
  options.max_chambers = config.guards.max_chambers;
  std::vector<IntVector> orders = cached_order_set(config.cache_dir, n, g.dim(), config.no_cache, config.guards.max_chambers);
  std::vector<RationalVector> witnesses;
  for (const IntVector& w : orders) witnesses.emplace_back(w.begin(), w.end());
  options.witnesses = std::move(witnesses);
  UgbResult result = compute_ugb(g, options);
  if (config.format == RunConfig::Format::Json)
    emit(config, out, ugb_to_json(result).dump(2) + "\n");
  else
    emit(config, out, render_ugb_text(result));
  return kOk;
}

int cmd_staircases(const RunConfig& config, std::ostream& out) {
  require_nd(config);
  std::vector<Staircase> all = enumerate_staircases(config.n, config.d, config.guards.max_staircases);
  if (config.format == RunConfig::Format::Json) {
    auto j = nlohmann::ordered_json::array();
    for (const Staircase& s : all) {
      auto sj = nlohmann::ordered_json::array();
      for (const ExponentVector& v : s) sj.push_back(v.coords());
      j.push_back(std::move(sj));
    }
    emit(config, out, j.dump() + "\n");
    return kOk;
  }
  std::string text;
  for (const Staircase& s : all) text += s.to_string() + "\n";
  emit(config, out, text);
  return kOk;
}

int cmd_vset(const RunConfig& config, std::ostream& out) {
  require_nd(config);
  std::vector<ExponentVector> v = v_set(config.n, config.d);
  std::vector<ExponentVector> u = u_set(config.n, config.d);
  if (config.format == RunConfig::Format::Json) {
    nlohmann::ordered_json j;
    j["V"] = nlohmann::ordered_json::array();
    for (const auto& e : v) j["V"].push_back(e.coords());
    j["U"] = nlohmann::ordered_json::array();
    for (const auto& e : u) j["U"].push_back(e.coords());
    emit(config, out, j.dump() + "\n");
    return kOk;
  }
  std::string text = "V";
  for (const auto& e : v) text += " " + e.to_string();
  text += "\nU";
  for (const auto& e : u) text += " " + e.to_string();
  emit(config, out, text + "\n");
  return kOk;
}

int cmd_zonotope(const RunConfig& config, std::ostream& out) {
  require_nd(config);
  DirectionSet directions = primitive_differences(config.n, config.d);
  std::vector<Chamber> chambers = config.all_chambers ? all_chambers(directions, config.guards.max_chambers)
                                                      : positive_chambers(directions, config.guards.max_chambers);
  auto signs_text = [](const std::vector<int>& signs) {
    std::string s;
    for (int x : signs) s += x > 0 ? '+' : '-';
    return s;
  };
  if (config.format == RunConfig::Format::Json) {
    nlohmann::ordered_json j;
    j["generators"] = directions.generators;
    j["chambers"] = nlohmann::ordered_json::array();
    for (const Chamber& c : chambers) {
      nlohmann::ordered_json cj;
      cj["w"] = primitive_integer_vector(c.witness);
      cj["vertex"] = c.vertex;
      cj["signs"] = signs_text(c.signs);
      j["chambers"].push_back(std::move(cj));
    }
    emit(config, out, j.dump() + "\n");
    return kOk;
  }
  std::string text;
  for (const Chamber& c : chambers)
    text += "w=" + vector_to_string(primitive_integer_vector(c.witness)) + " h=" + vector_to_string(c.vertex) +
            " signs=" + signs_text(c.signs) + "\n";
  emit(config, out, text);
  return kOk;
}

int cmd_orders(const RunConfig& config, std::ostream& out) {
  require_nd(config);
  std::vector<IntVector> orders = cached_order_set(config.cache_dir, config.n, config.d, config.no_cache, config.guards.max_chambers);
  emit(config, out, render_order_set(config.n, config.d, orders));
  return kOk;
}

int cmd_from_points(const RunConfig& config, std::ostream& out) {
  PointConfiguration points = parse_points_file(read_input(config.input), Field::parse(config.field_tag));
  emit(config, out, render_basis_file(from_points(points, required_order(config, points.d))));
  return kOk;
}

int cmd_from_lattice(const RunConfig& config, std::ostream& out) {
  LatticeBasis lattice = parse_lattice_file(read_input(config.input));
  Field field = Field::parse(config.field_tag);
  emit(config, out, render_basis_file(from_lattice(lattice, required_order(config, lattice.dim()), field)));
  return kOk;
}

UgbResult load_result(const RunConfig& config) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_input(config.input));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("result file is not json: ") + e.what());
  }
  return ugb_from_json(j);
}

int cmd_testset(const RunConfig& config, std::ostream& out) {
  emit(config, out, render_test_set(lattice_test_set(load_result(config).universal_basis)));
  return kOk;
}

int cmd_minimize(const RunConfig& config, std::ostream& out) {
  if (config.tests.empty() || config.x.empty() || config.w.empty())
    throw Error(Errc::InvalidArgument, "minimize needs --tests, --x and --w");
  TestSet t = parse_test_set(read_input(config.tests));
  IntVector best = lattice_minimize(t, parse_int_vector(config.x), parse_rational_vector(config.w));
  emit(config, out, vector_to_string(best) + "\n");
  return kOk;
}

struct Check {
  std::string name;
  std::optional<std::string> counterexample;
};

bool same_basis(const ReducedGroebnerBasis& a, const ReducedGroebnerBasis& b) {
  return a.staircase == b.staircase && a.tails == b.tails && a.field == b.field;
}

std::vector<Check> verify_result(const UgbResult& r, const RunConfig& config) {
  std::vector<Check> checks;
  auto add = [&](std::string name, std::optional<std::string> failure) { checks.push_back({std::move(name), std::move(failure)}); };
  if (r.reduced_bases.empty()) {
    add("nonempty", "result holds no reduced basis");
    return checks;
  }
  const ReducedGroebnerBasis& first = r.reduced_bases.begin()->second;
  const std::vector<Polynomial> generators = first.elements();
  const CoeffTable table = normal_form_table(first);

  std::optional<std::string> failure;
  for (const auto& [lambda, g] : r.reduced_bases)
    if (auto v = validate_reduced_gb(g, static_cast<std::size_t>(r.n)); v && !failure)
      failure = lambda.to_string() + ": " + std::string(violation_name(v->kind)) + " " + v->detail;
  add("reduced-shape", failure);

  failure.reset();
  if (r.initial_staircases.size() != r.reduced_bases.size()) failure = "staircase list and reduced bases differ in size";
  for (std::size_t i = 0; i < r.initial_staircases.size() && !failure; ++i) {
    if (!r.reduced_bases.count(r.initial_staircases[i])) failure = r.initial_staircases[i].to_string() + " has no reduced basis";
    else if (i >= r.state_vertices.size() || staircase_sum(r.initial_staircases[i]) != r.state_vertices[i])
      failure = "state vertex of " + r.initial_staircases[i].to_string() + " is not its staircase sum";
  }
  add("state-vertices", failure);

  failure.reset();
  for (const auto& [lambda, g] : r.reduced_bases) {
    if (failure) break;
    const std::vector<Polynomial> divisors = g.elements();
    for (const Polynomial& f : r.universal_basis) {
      Polynomial rem = divide(f, divisors, g.order).remainder;
      if (!rem.is_zero()) {
        failure = f.to_string() + " leaves " + rem.to_string() + " modulo the basis of " + lambda.to_string();
        break;
      }
    }
  }
  add("ugb-in-ideal", failure);

  failure.reset();
  {
    std::vector<Polynomial> uni;
    for (const auto& [lambda, g] : r.reduced_bases)
      for (const Polynomial& f : g.elements())
        if (std::find(uni.begin(), uni.end(), f) == uni.end()) uni.push_back(f);
    if (uni.size() != r.universal_basis.size()) failure = "ugb has " + std::to_string(r.universal_basis.size()) + " elements, union of bases has " + std::to_string(uni.size());
    for (const Polynomial& f : uni)
      if (!failure && std::find(r.universal_basis.begin(), r.universal_basis.end(), f) == r.universal_basis.end())
        failure = f.to_string() + " missing from ugb";
  }
  add("ugb-is-union", failure);

  failure.reset();
  for (const auto& [lambda, g] : r.reduced_bases) {
    try {
      ReducedGroebnerBasis reference = buchberger({generators, g.order}, config.guards.max_spairs);
      if (!same_basis(reference, g)) failure = "buchberger disagrees under " + g.order.to_string();
    } catch (const Error& e) {
      failure = std::string("buchberger failed: ") + e.what();
    }
    if (failure) break;
  }
  add("buchberger-agrees", failure);

  failure.reset();
  for (const auto& [w, lambda] : r.witness_assignment) {
    Staircase got = convert_basis(table, w).staircase;
    if (got != lambda) {
      failure = "weight " + vector_to_string(w) + " gives " + got.to_string();
      break;
    }
  }
  add("witnesses", failure);

  failure.reset();
  for (const Staircase& s : brute_initial_staircases(table, config.samples, config.seed))
    if (!r.reduced_bases.count(s)) {
      failure = "random weight found " + s.to_string();
      break;
    }
  add("random-weights", failure);

  failure.reset();
  if (r.d <= 3) {
    std::vector<IntVector> sums;
    for (const Staircase& s : basic_staircases(table)) sums.push_back(staircase_sum(s));
    std::vector<IntVector> hull = positive_hull_vertices(sums);
    std::vector<IntVector> expected = r.state_vertices;
    std::sort(expected.begin(), expected.end());
    if (hull != expected) failure = "hull of basic staircase sums has " + std::to_string(hull.size()) + " vertices";
  }
  add("hull", failure);

  failure.reset();
  const std::size_t expected_rank = table.width() - table.n();
  if (rank(relation_matrix(table)) != expected_rank) failure = "relation matrix rank differs from |U| - n";
  add("relation-rank", failure);
  return checks;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  std::vector<Check> checks = verify_result(load_result(config), config);
  std::string report;
  bool ok = true;
  for (const Check& c : checks) {
    if (c.counterexample) {
      ok = false;
      report += "FAIL " + c.name + ": " + *c.counterexample + "\n";
    } else {
      report += "PASS " + c.name + "\n";
    }
  }
  emit(config, out, report);
  return ok ? kOk : kOracleFailure;
}

int cmd_plucker(const RunConfig& config, std::ostream& out) {
  ReducedGroebnerBasis g = load_basis(config);
  std::string text;
  for (const auto& [subset, minor] : plucker_dual(normal_form_table(g))) {
    std::string key = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) key += (i ? "," : "") + subset[i].to_string();
    text += key + "} " + minor.to_string() + "\n";
  }
  emit(config, out, text);
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& c = config.subcommand;
    if (c == "ugb") return cmd_ugb(config, out);
    if (c == "staircases") return cmd_staircases(config, out);
    if (c == "vset") return cmd_vset(config, out);
    if (c == "zonotope") return cmd_zonotope(config, out);
    if (c == "orders") return cmd_orders(config, out);
    if (c == "from-points") return cmd_from_points(config, out);
    if (c == "from-lattice") return cmd_from_lattice(config, out);
    if (c == "testset") return cmd_testset(config, out);
    if (c == "minimize") return cmd_minimize(config, out);
    if (c == "verify") return cmd_verify(config, out);
    if (c == "plucker") return cmd_plucker(config, out);
    err << "unknown subcommand '" << c << "'\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::TooLarge:
      case Errc::Timeout:
        return kGuardExceeded;
      default:
        return kInputError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Universal Groebner bases of zero-dimensional ideals"};
  app.require_subcommand(1);
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", config.output, "Write the artifact to this file");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto guards = [&](CLI::App* sub) {
    sub->add_option("--max-chambers", config.guards.max_chambers, "Chamber guard");
    sub->add_option("--max-staircases", config.guards.max_staircases, "Staircase guard");
    sub->add_option("--max-spairs", config.guards.max_spairs, "S-pair budget");
  };
  auto nd = [&](CLI::App* sub) {
    sub->add_option("-n", config.n, "Ideal length")->required();
    sub->add_option("-d", config.d, "Number of variables")->required();
  };
  auto cache = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", config.cache_dir, "Directory of cached order sets");
    sub->add_flag("--no-cache", config.no_cache, "Recompute and rewrite the cached order set");
  };

  CLI::App* ugb = app.add_subcommand("ugb", "Reduced basis file to universal Groebner basis");
  ugb->add_option("input", config.input, "Basis file, '-' for stdin")->required();
  ugb->add_flag("--repair", config.repair, "Run Buchberger on the listed generators first");
  common(ugb), guards(ugb), cache(ugb);

  CLI::App* stairs = app.add_subcommand("staircases", "All n-element staircases in N^d");
  nd(stairs), common(stairs), guards(stairs);

  CLI::App* vset = app.add_subcommand("vset", "The supports V and U");
  nd(vset), common(vset);

  CLI::App* zono = app.add_subcommand("zonotope", "Chambers and vertices of the zonotope");
  nd(zono), common(zono), guards(zono);
  zono->add_flag("--all", config.all_chambers, "Every chamber, not only the positive ones");

  CLI::App* orders = app.add_subcommand("orders", "Write the universal order set to the cache");
  nd(orders), common(orders), guards(orders), cache(orders);

  CLI::App* points = app.add_subcommand("from-points", "Vanishing ideal of points");
  points->add_option("input", config.input, "Points file")->required();
  points->add_option("--order", config.order_spec, "Monomial order")->required();
  points->add_option("--field", config.field_tag, "Coefficient field");
  common(points);

  CLI::App* lattice = app.add_subcommand("from-lattice", "Lattice ideal");
  lattice->add_option("input", config.input, "Lattice file")->required();
  lattice->add_option("--order", config.order_spec, "Monomial order")->required();
  lattice->add_option("--field", config.field_tag, "Coefficient field");
  common(lattice);

  CLI::App* testset = app.add_subcommand("testset", "Test set of a lattice result");
  testset->add_option("input", config.input, "Result json")->required();
  common(testset);

  CLI::App* minimize = app.add_subcommand("minimize", "Augment a point along a test set");
  minimize->add_option("--tests", config.tests, "Test-set file")->required();
  minimize->add_option("--x", config.x, "Start point, e.g. (5,2)")->required();
  minimize->add_option("--w", config.w, "Positive cost vector")->required();
  common(minimize);

  CLI::App* verify = app.add_subcommand("verify", "Run the oracle checks on a result");
  verify->add_option("input", config.input, "Result json")->required();
  verify->add_option("--samples", config.samples, "Random weights to try");
  verify->add_option("--seed", config.seed, "Sampling seed");
  common(verify), guards(verify);

  CLI::App* plucker = app.add_subcommand("plucker", "Nonzero dual Pluecker coordinates");
  plucker->add_option("input", config.input, "Basis file")->required();
  plucker->add_flag("--repair", config.repair, "Run Buchberger on the listed generators first");
  common(plucker), guards(plucker);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? RunConfig::Format::Json : RunConfig::Format::Text;
  if (config.subcommand == "ugb" && !ugb->count("--format")) config.format = RunConfig::Format::Json;
  return run(config, out, err);
}

}  // namespace ugb
