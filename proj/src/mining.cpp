#include "freqmine/mining.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>

namespace freqmine {

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items)) {
  if (items_.empty()) throw std::invalid_argument("itemset must not be empty");
  for (std::size_t i = 1; i < items_.size(); ++i) {
    if (!(items_[i - 1] < items_[i])) {
      throw std::invalid_argument("itemset items must be strictly ascending");
    }
  }
}

bool Itemset::contained_in(const std::vector<Item>& sorted_items) const {
  return std::includes(sorted_items.begin(), sorted_items.end(), items_.begin(), items_.end());
}

MinSupport::MinSupport(std::uint64_t threshold) : threshold_(threshold) {
  if (threshold < 1) throw InvalidMinSupport("minimum support must be at least 1");
}

MinSupport MinSupport::from_relative(double fraction, std::size_t db_size) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InvalidMinSupport("relative minimum support must be in (0, 1]");
  }
  // The small slack keeps products like 0.3 * 10 from rounding up to 4.
  double scaled = fraction * static_cast<double>(db_size);
  auto threshold = static_cast<std::uint64_t>(std::ceil(scaled - 1e-9));
  return MinSupport(std::max<std::uint64_t>(threshold, 1));
}

MixedSizes::MixedSizes() : std::invalid_argument("join input itemsets differ in size") {}

UniverseTooLarge::UniverseTooLarge(std::size_t universe_size)
    : std::invalid_argument("brute-force enumeration needs at most " +
                            std::to_string(kBruteForceMaxUniverse) + " items, got " +
                            std::to_string(universe_size)) {}

std::vector<SupportedItemset> MiningResult::flatten() const {
  std::vector<SupportedItemset> out;
  for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
  return out;
}

FrequencyCounter count_1_itemsets(const TransactionDatabase& db, Backend backend) {
  FrequencyCounter counter(backend);
  for (const auto& t : db.transactions) {
    for (const auto& item : t.items) counter.insert(item);
  }
  return counter;
}

std::vector<SupportedItemset> frequent_1(const FrequencyCounter& counter, MinSupport min_sup) {
  std::vector<SupportedItemset> out;
  for (auto& [key, count] : counter.inorder()) {
    if (count >= min_sup.threshold()) out.push_back({Itemset{key}, count});
  }
  return out;
}

std::vector<Itemset> join(const std::vector<Itemset>& prev_level) {
  if (prev_level.empty()) return {};
  const auto width = prev_level.front().k();
  for (const auto& s : prev_level) {
    if (s.k() != width) throw MixedSizes();
  }
  auto sorted = prev_level;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Itemsets sharing a (k-2)-prefix are contiguous once sorted, and the
  // later one always has the larger last item.
  std::vector<Itemset> out;
  const auto prefix = width - 1;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& a = sorted[i].items();
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const auto& b = sorted[j].items();
      if (!std::equal(a.begin(), a.begin() + prefix, b.begin())) break;
      std::vector<Item> merged(a);
      merged.push_back(b.back());
      out.emplace_back(std::move(merged));
    }
  }
  return out;
}

std::vector<Itemset> prune(const std::vector<Itemset>& candidates,
                           const std::vector<Itemset>& prev_level) {
  auto known = prev_level;
  std::sort(known.begin(), known.end());

  std::vector<Itemset> out;
  for (const auto& c : candidates) {
    if (c.k() < 2) {
      out.push_back(c);
      continue;
    }
    bool keep = true;
    for (std::size_t drop = 0; drop < c.k() && keep; ++drop) {
      std::vector<Item> subset;
      subset.reserve(c.k() - 1);
      for (std::size_t i = 0; i < c.k(); ++i) {
        if (i != drop) subset.push_back(c[i]);
      }
      keep = std::binary_search(known.begin(), known.end(), Itemset(std::move(subset)));
    }
    if (keep) out.push_back(c);
  }
  return out;
}

std::vector<SupportedItemset> count_support(const TransactionDatabase& db,
                                            const std::vector<Itemset>& candidates,
                                            unsigned threads) {
  const auto& txns = db.transactions;
  auto scan = [&](std::size_t begin, std::size_t end, std::vector<std::uint64_t>& counts) {
    for (std::size_t t = begin; t < end; ++t) {
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (candidates[c].contained_in(txns[t].items)) ++counts[c];
      }
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(txns.size())));
  std::vector<std::vector<std::uint64_t>> partial(threads,
                                                  std::vector<std::uint64_t>(candidates.size()));
  if (threads == 1) {
    scan(0, txns.size(), partial[0]);
  } else {
    std::vector<std::jthread> workers;
    const auto chunk = (txns.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      auto begin = std::min(txns.size(), w * chunk);
      auto end = std::min(txns.size(), begin + chunk);
      workers.emplace_back([&, w, begin, end] { scan(begin, end, partial[w]); });
    }
  }

  std::vector<SupportedItemset> out;
  out.reserve(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    std::uint64_t total = 0;
    for (const auto& p : partial) total += p[c];
    out.push_back({candidates[c], total});
  }
  return out;
}

MiningResult apriori(const TransactionDatabase& db, MinSupport min_sup,
                     const MiningOptions& options) {
  MiningResult result;
  result.min_sup = min_sup;
  result.db_size = db.size();
  result.backend = options.backend;
  if (db.empty()) return result;

  auto level = frequent_1(count_1_itemsets(db, options.backend), min_sup);
  while (!level.empty()) {
    std::vector<Itemset> prev;
    prev.reserve(level.size());
    for (const auto& s : level) prev.push_back(s.itemset);
    result.levels.push_back(std::move(level));

    auto candidates = prune(join(prev), prev);
    result.candidates.push_back(candidates);
    if (candidates.empty()) break;

    level.clear();
    for (auto& s : count_support(db, candidates, options.threads)) {
      if (s.support >= min_sup.threshold()) level.push_back(std::move(s));
    }
  }
  return result;
}

std::vector<SupportedItemset> brute_force_frequent(const TransactionDatabase& db,
                                                   MinSupport min_sup) {
  const auto& universe = db.universe;
  if (universe.size() > kBruteForceMaxUniverse) throw UniverseTooLarge(universe.size());

  std::vector<SupportedItemset> out;
  const std::uint32_t limit = 1u << universe.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<Item> items;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (mask & (1u << i)) items.push_back(universe[i]);
    }
    std::uint64_t support = 0;
    for (const auto& t : db.transactions) {
      bool all = std::all_of(items.begin(), items.end(), [&](const Item& x) {
        return std::find(t.items.begin(), t.items.end(), x) != t.items.end();
      });
      if (all) ++support;
    }
    if (support >= min_sup.threshold()) out.push_back({Itemset(std::move(items)), support});
  }
  std::sort(out.begin(), out.end(), [](const SupportedItemset& a, const SupportedItemset& b) {
    if (a.itemset.k() != b.itemset.k()) return a.itemset.k() < b.itemset.k();
    return a.itemset < b.itemset;
  });
  return out;
}

void write_mining_report(const MiningResult& result, std::ostream& out, bool summary) {
  for (const auto& level : result.levels) {
    for (const auto& s : level) {
      out << s.itemset.k() << '\t';
      for (std::size_t i = 0; i < s.itemset.k(); ++i) {
        if (i) out << ',';
        out << s.itemset[i];
      }
      out << '\t' << s.support << '\n';
    }
  }
  if (summary) {
    out << "# |D|=" << result.db_size << " min_sup=" << result.min_sup.threshold()
        << " levels=" << result.levels.size() << '\n';
  }
}

}  // namespace freqmine
