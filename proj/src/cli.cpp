#include "freqmine/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace freqmine::cli {

namespace {

constexpr const char* kBackendHelp =
    "Counter backend: bst (unbalanced search tree), avl (balanced search tree), "
    "hash, sorted_array";

constexpr const char* kCountFooter = R"(Input: UTF-8 text. Tokens are whitespace separated, lowercased, and
stripped of leading/trailing . , ; : ! ? " ' ( ) [ ] { }.
Output: one line per distinct token in ascending byte order, `<token>\t<count>`.)";

constexpr const char* kMineFooter = R"(Input: one transaction per line, items separated by commas. With --tid the
first field (ended by a tab, or else by whitespace) is a transaction ID,
e.g. `T100\tI1, I2, I5`. Items are trimmed, deduplicated and sorted; blank
lines and lines without items are skipped and do not count towards |D|.
Minimum support: an integer is an absolute transaction count (>= 1); a
value with a decimal point or exponent is a fraction in (0, 1], converted
to ceil(fraction * |D|).
Output: `<k>\t<item1,item2,...>\t<support>` per frequent itemset, ordered by
k then lexicographically. --summary appends `# |D|=<n> min_sup=<s> levels=<m>`.
Exit status: 2 unreadable input, 3 malformed line, 4 invalid minimum support.)";

constexpr const char* kBenchFooter = R"(Runs every (backend, kind) pair. Keys are k000, k001, ...; ascending emits
them in order (cycling), random and zipf emit each key once then draw the
rest uniformly or with weight 1/rank. Workloads use std::mt19937_64.
Output: header plus one row per run:
backend kind n distinct seed insert_ns lookup_ns inorder_ns height comparisons
Times are the minimum of --repeats runs; height is `-` for hash and
sorted_array. Exit status 4 on invalid workload parameters.)";

// Runs fn on the opened input, or reports it unreadable.
template <typename F>
int with_input(const std::string& path, Streams io, F&& fn) {
  if (path.empty() || path == "-") return fn(io.in);
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    io.err << "freqmine: cannot read input '" << path << "'\n";
    return kExitUnreadable;
  }
  int status = fn(file);
  if (file.bad()) {
    io.err << "freqmine: error while reading '" << path << "'\n";
    return kExitUnreadable;
  }
  return status;
}

std::vector<std::string> backend_names() {
  std::vector<std::string> names;
  for (auto b : kAllBackends) names.emplace_back(to_string(b));
  return names;
}

}  // namespace

MinSupportArg parse_min_support(const std::string& text) {
  if (text.empty()) throw InvalidMinSupport("minimum support is empty");
  const char* first = text.data();
  const char* last = text.data() + text.size();
  bool integral = std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (integral) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw InvalidMinSupport("minimum support '" + text + "' is out of range");
    }
    if (value < 1) throw InvalidMinSupport("absolute minimum support must be at least 1");
    return value;
  }
  double value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw InvalidMinSupport("minimum support '" + text + "' is not a number");
  }
  if (!(value > 0.0 && value <= 1.0)) {
    throw InvalidMinSupport("relative minimum support must be in (0, 1]");
  }
  return value;
}

MinSupport resolve_min_support(const MinSupportArg& arg, std::size_t db_size) {
  if (const auto* absolute = std::get_if<std::uint64_t>(&arg)) return MinSupport(*absolute);
  return MinSupport::from_relative(std::get<double>(arg), db_size);
}

int run_count(const CliConfig& config, Streams io) {
  return with_input(config.input_path, io, [&](std::istream& in) {
    auto tokens = tokenize(in);
    FrequencyCounter counter(config.backend);
    for (const auto& t : tokens) counter.insert(t);
    write_count_report(counter.inorder(), io.out);
    return kExitOk;
  });
}

int run_mine(const CliConfig& config, Streams io) {
  MinSupportArg min_support;
  try {
    min_support = parse_min_support(config.min_support);
  } catch (const InvalidMinSupport& e) {
    io.err << "freqmine: " << e.what() << '\n';
    return kExitInvalidParameter;
  }
  return with_input(config.input_path, io, [&](std::istream& in) {
    TransactionDatabase db;
    try {
      db = parse_transactions(in, config.has_tid);
    } catch (const MalformedLine& e) {
      io.err << "freqmine: " << e.what() << '\n';
      return kExitMalformed;
    }
    auto result = apriori(db, resolve_min_support(min_support, db.size()),
                          MiningOptions{config.backend, std::max(1u, config.threads)});
    write_mining_report(result, io.out, config.summary);
    return kExitOk;
  });
}

int run_bench(const CliConfig& config, Streams io) {
  std::vector<Workload> workloads;
  try {
    auto kinds = config.bench_kinds.empty() ? std::vector<std::string>{"random"} : config.bench_kinds;
    for (const auto& name : kinds) {
      auto kind = parse_workload_kind(name);
      if (!kind) throw InvalidWorkload("unknown workload kind '" + name + "'");
      Workload w{*kind, config.n, config.distinct.value_or(config.n), config.seed};
      w.validate();
      workloads.push_back(w);
    }
    if (config.repeats < 1) throw InvalidWorkload("--repeats must be at least 1");
  } catch (const InvalidWorkload& e) {
    io.err << "freqmine: " << e.what() << '\n';
    return kExitInvalidParameter;
  }

  auto backends = config.bench_backends.empty()
                      ? std::vector<Backend>(kAllBackends.begin(), kAllBackends.end())
                      : config.bench_backends;
  write_bench_header(io.out);
  for (auto b : backends) {
    for (const auto& w : workloads) write_bench_row(run_benchmark(b, w, config.repeats), io.out);
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Word-frequency counting and Apriori frequent-itemset mining", "freqmine"};
  app.require_subcommand(1);

  CliConfig config;
  const auto names = backend_names();
  std::string backend_name = "avl";
  std::vector<std::string> bench_backend_names;

  auto* count = app.add_subcommand("count", "Count word frequencies in a text");
  count->add_option("--backend", backend_name, kBackendHelp)
      ->check(CLI::IsMember(names))
      ->default_str("avl");
  count->add_option("input", config.input_path, "Text file, or - for standard input")
      ->default_str("-");
  count->footer(kCountFooter);

  auto* mine = app.add_subcommand("mine", "Mine frequent itemsets with Apriori");
  mine->add_option("--min-support", config.min_support,
                   "Absolute count (integer) or fraction of |D| in (0, 1]")
      ->required();
  mine->add_flag("--tid", config.has_tid, "Lines start with a transaction ID field");
  mine->add_option("--backend", backend_name, std::string(kBackendHelp) + " (for 1-itemsets)")
      ->check(CLI::IsMember(names))
      ->default_str("avl");
  mine->add_flag("--summary", config.summary, "Append a `# |D|=... min_sup=... levels=...` line");
  mine->add_option("--threads", config.threads, "Workers for support counting")
      ->check(CLI::Range(1u, 256u))
      ->default_str("1");
  mine->add_option("input", config.input_path, "Transaction file, or - for standard input")
      ->default_str("-");
  mine->footer(kMineFooter);

  auto* bench = app.add_subcommand("bench", "Benchmark the counter backends");
  bench->add_option("--backend", bench_backend_names,
                    std::string(kBackendHelp) + "; comma separated, default all")
      ->check(CLI::IsMember(names))
      ->delimiter(',');
  bench->add_option("--kind", config.bench_kinds,
                    "Workload kind: random, ascending, zipf; comma separated, default random")
      ->delimiter(',');
  bench->add_option("--n", config.n, "Number of insert operations")->default_str("1000");
  bench->add_option("--distinct", config.distinct, "Number of distinct keys (default n)");
  bench->add_option("--seed", config.seed, "Workload seed")->default_str("42");
  bench->add_option("--repeats", config.repeats, "Runs per row; times are the minimum")
      ->default_str(std::to_string(kBenchRepeats));
  bench->footer(kBenchFooter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e, io.out, io.err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  config.backend = *parse_backend(backend_name);
  for (const auto& name : bench_backend_names) config.bench_backends.push_back(*parse_backend(name));

  if (count->parsed()) {
    config.subcommand = Subcommand::count;
    return run_count(config, io);
  }
  if (mine->parsed()) {
    config.subcommand = Subcommand::mine;
    return run_mine(config, io);
  }
  config.subcommand = Subcommand::bench;
  return run_bench(config, io);
}

}  // namespace freqmine::cli
