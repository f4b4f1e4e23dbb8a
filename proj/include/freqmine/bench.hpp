#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "freqmine/counters.hpp"

namespace freqmine {

enum class WorkloadKind { random, ascending, zipf };

std::string_view to_string(WorkloadKind kind);
std::optional<WorkloadKind> parse_workload_kind(std::string_view name);

class InvalidWorkload : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Workload {
  WorkloadKind kind = WorkloadKind::random;
  std::size_t n = 1;
  std::size_t distinct = 1;
  std::uint64_t seed = 0;

  // Throws InvalidWorkload unless 1 <= distinct <= n.
  void validate() const;
};

// Identifier of the generator behind generate_workload.
inline constexpr std::string_view kWorkloadPrng = "std::mt19937_64";

// Key i is "k" followed by i zero-padded to at least three digits (wider
// when distinct needs it), so string order equals numeric order.
Token workload_key(std::size_t index, std::size_t distinct);

// ascending: keys 0..distinct-1 in order, repeated until n tokens.
// random/zipf: every key once in shuffled order, then n - distinct draws,
// uniform or with probability proportional to 1/(index+1).
std::vector<Token> generate_workload(const Workload& spec);

struct BenchReport {
  Backend backend = Backend::avl;
  Workload workload;
  // Minimum over the repeat runs, in nanoseconds.
  std::uint64_t insert_ns = 0;
  std::uint64_t lookup_ns = 0;
  std::uint64_t inorder_ns = 0;
  std::optional<std::size_t> height;  // tree backends only
  std::uint64_t comparisons = 0;      // during the insert phase
  std::size_t inorder_size = 0;
  std::uint64_t lookup_total = 0;  // sum of looked-up counts, equals n
  std::string_view prng = kWorkloadPrng;
};

inline constexpr int kBenchRepeats = 3;

BenchReport run_benchmark(Backend backend, const Workload& spec, int repeats = kBenchRepeats);

void write_bench_header(std::ostream& out);
void write_bench_row(const BenchReport& report, std::ostream& out);

}  // namespace freqmine
