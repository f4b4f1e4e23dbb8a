#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "freqmine/bench.hpp"
#include "freqmine/counters.hpp"
#include "freqmine/mining.hpp"

namespace freqmine::cli {

// Exit statuses shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnreadable = 2;
inline constexpr int kExitMalformed = 3;
inline constexpr int kExitInvalidParameter = 4;

enum class Subcommand { count, mine, bench };

// Either an absolute count (an integer literal) or a fraction in (0, 1]
// (anything with a decimal point or exponent).
using MinSupportArg = std::variant<std::uint64_t, double>;

// Throws InvalidMinSupport.
MinSupportArg parse_min_support(const std::string& text);

// Relative values become ceil(fraction * db_size).
MinSupport resolve_min_support(const MinSupportArg& arg, std::size_t db_size);

struct CliConfig {
  Subcommand subcommand = Subcommand::count;
  std::string input_path = "-";  // "-" reads standard input
  Backend backend = Backend::avl;
  std::string min_support;  // mine only, unparsed
  bool has_tid = false;
  bool summary = false;
  unsigned threads = 1;

  // bench only
  std::vector<Backend> bench_backends;
  std::vector<std::string> bench_kinds;
  std::size_t n = 1000;
  std::optional<std::size_t> distinct;  // defaults to n
  std::uint64_t seed = 42;
  int repeats = kBenchRepeats;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int run_count(const CliConfig& config, Streams io);
int run_mine(const CliConfig& config, Streams io);
int run_bench(const CliConfig& config, Streams io);

// Parses argv (argv[0] is the program name) and dispatches.
int run(int argc, const char* const* argv, Streams io);

}  // namespace freqmine::cli
