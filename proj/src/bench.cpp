#include "freqmine/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

namespace freqmine {

std::string_view to_string(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::random: return "random";
    case WorkloadKind::ascending: return "ascending";
    case WorkloadKind::zipf: return "zipf";
  }
  return "?";
}

std::optional<WorkloadKind> parse_workload_kind(std::string_view name) {
  for (auto k : {WorkloadKind::random, WorkloadKind::ascending, WorkloadKind::zipf}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

void Workload::validate() const {
  if (n < 1) throw InvalidWorkload("workload n must be at least 1");
  if (distinct < 1) throw InvalidWorkload("workload distinct must be at least 1");
  if (distinct > n) throw InvalidWorkload("workload distinct must not exceed n");
}

Token workload_key(std::size_t index, std::size_t distinct) {
  std::size_t width = std::max<std::size_t>(3, std::to_string(distinct - 1).size());
  auto digits = std::to_string(index);
  return "k" + std::string(width - std::min(width, digits.size()), '0') + digits;
}

std::vector<Token> generate_workload(const Workload& spec) {
  spec.validate();
  std::vector<Token> keys(spec.distinct);
  for (std::size_t i = 0; i < spec.distinct; ++i) keys[i] = workload_key(i, spec.distinct);

  std::vector<Token> out;
  out.reserve(spec.n);
  if (spec.kind == WorkloadKind::ascending) {
    for (std::size_t i = 0; i < spec.n; ++i) out.push_back(keys[i % spec.distinct]);
    return out;
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<std::size_t> order(spec.distinct);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (auto i : order) out.push_back(keys[i]);

  const auto rest = spec.n - spec.distinct;
  if (spec.kind == WorkloadKind::random) {
    std::uniform_int_distribution<std::size_t> pick(0, spec.distinct - 1);
    for (std::size_t i = 0; i < rest; ++i) out.push_back(keys[pick(rng)]);
  } else {
    std::vector<double> weights(spec.distinct);
    for (std::size_t r = 0; r < spec.distinct; ++r) weights[r] = 1.0 / static_cast<double>(r + 1);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    for (std::size_t i = 0; i < rest; ++i) out.push_back(keys[pick(rng)]);
  }
  return out;
}

namespace {

template <typename F>
std::uint64_t time_ns(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

}  // namespace

BenchReport run_benchmark(Backend backend, const Workload& spec, int repeats) {
  auto tokens = generate_workload(spec);
  std::vector<Token> distinct_keys(spec.distinct);
  for (std::size_t i = 0; i < spec.distinct; ++i) distinct_keys[i] = workload_key(i, spec.distinct);

  BenchReport report;
  report.backend = backend;
  report.workload = spec;
  report.insert_ns = report.lookup_ns = report.inorder_ns = UINT64_MAX;

  for (int run = 0; run < std::max(1, repeats); ++run) {
    FrequencyCounter counter(backend);
    auto insert_ns = time_ns([&] {
      for (const auto& t : tokens) counter.insert(t);
    });
    std::uint64_t found = 0;
    auto lookup_ns = time_ns([&] {
      for (const auto& k : distinct_keys) found += counter.lookup(k);
    });
    std::vector<CountEntry> listing;
    auto inorder_ns = time_ns([&] { listing = counter.inorder(); });

    report.insert_ns = std::min(report.insert_ns, insert_ns);
    report.lookup_ns = std::min(report.lookup_ns, lookup_ns);
    report.inorder_ns = std::min(report.inorder_ns, inorder_ns);
    report.comparisons = counter.comparisons();
    report.inorder_size = listing.size();
    report.lookup_total = found;
    if (is_tree_backend(backend)) report.height = counter.height();
  }
  return report;
}

void write_bench_header(std::ostream& out) {
  out << "backend\tkind\tn\tdistinct\tseed\tinsert_ns\tlookup_ns\tinorder_ns\theight\tcomparisons\n";
}

void write_bench_row(const BenchReport& r, std::ostream& out) {
  out << to_string(r.backend) << '\t' << to_string(r.workload.kind) << '\t' << r.workload.n << '\t'
      << r.workload.distinct << '\t' << r.workload.seed << '\t' << r.insert_ns << '\t'
      << r.lookup_ns << '\t' << r.inorder_ns << '\t';
  if (r.height) {
    out << *r.height;
  } else {
    out << '-';
  }
  out << '\t' << r.comparisons << '\n';
}

}  // namespace freqmine
