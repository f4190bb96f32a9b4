#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace ugb {

struct Guards {
  std::size_t max_chambers = 1'000'000;
  std::size_t max_staircases = 1'000'000;
  std::size_t max_spairs = 10'000;
};

struct RunConfig {
  enum class Format { Text, Json };

  std::string subcommand;
  std::string input;   // "-" reads standard input
  std::string output;  // empty writes to the output stream
  std::string field_tag = "Q";
  std::string order_spec;
  Format format = Format::Text;
  std::filesystem::path cache_dir = ".ugb-cache";
  bool no_cache = false;
  Guards guards;
  bool repair = false;

  int n = 0;
  int d = 0;
  bool all_chambers = false;  // zonotope: every chamber, not only positive ones
  std::string tests;          // minimize: test-set file
  std::string x;              // minimize: start point
  std::string w;              // minimize: cost vector
  std::size_t samples = 200;  // verify: random weights per ideal
  std::uint64_t seed = 1;
};

/// Exit codes: 0 success, 1 input error, 2 guard exceeded, 3 oracle failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments into a RunConfig and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ugb
