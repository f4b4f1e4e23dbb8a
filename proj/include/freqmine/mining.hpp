#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "freqmine/counters.hpp"
#include "freqmine/ingest.hpp"

namespace freqmine {

// Sorted set of k >= 1 distinct items.
class Itemset {
 public:
  // Throws std::invalid_argument unless items are non-empty and strictly
  // ascending.
  explicit Itemset(std::vector<Item> items);
  Itemset(std::initializer_list<Item> items) : Itemset(std::vector<Item>(items)) {}

  const std::vector<Item>& items() const { return items_; }
  std::size_t k() const { return items_.size(); }
  const Item& operator[](std::size_t i) const { return items_[i]; }

  // True iff every item is in the (sorted) transaction.
  bool contained_in(const std::vector<Item>& sorted_items) const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend auto operator<=>(const Itemset&, const Itemset&) = default;

 private:
  std::vector<Item> items_;
};

struct SupportedItemset {
  Itemset itemset;
  std::uint64_t support = 0;

  friend bool operator==(const SupportedItemset&, const SupportedItemset&) = default;
  friend auto operator<=>(const SupportedItemset&, const SupportedItemset&) = default;
};

class InvalidMinSupport : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Absolute support threshold, always >= 1.
class MinSupport {
 public:
  explicit MinSupport(std::uint64_t threshold);

  // ceil(fraction * db_size), fraction in (0, 1]. Clamped to 1 for an
  // empty database.
  static MinSupport from_relative(double fraction, std::size_t db_size);

  std::uint64_t threshold() const { return threshold_; }

  friend bool operator==(const MinSupport&, const MinSupport&) = default;

 private:
  std::uint64_t threshold_;
};

class MixedSizes : public std::invalid_argument {
 public:
  MixedSizes();
};

class UniverseTooLarge : public std::invalid_argument {
 public:
  explicit UniverseTooLarge(std::size_t universe_size);
};

inline constexpr std::size_t kBruteForceMaxUniverse = 20;

struct MiningResult {
  // levels[k-1] holds the frequent k-itemsets, sorted. No trailing empty level.
  std::vector<std::vector<SupportedItemset>> levels;
  // candidates[k-2] holds C_k after pruning, for each k >= 2 that was tried.
  std::vector<std::vector<Itemset>> candidates;
  MinSupport min_sup{1};
  std::size_t db_size = 0;
  Backend backend = Backend::avl;

  std::vector<SupportedItemset> flatten() const;
};

struct MiningOptions {
  Backend backend = Backend::avl;
  // Workers used by count_support; results do not depend on this value.
  unsigned threads = 1;
};

FrequencyCounter count_1_itemsets(const TransactionDatabase& db, Backend backend);

std::vector<SupportedItemset> frequent_1(const FrequencyCounter& counter, MinSupport min_sup);

// Self-join of equal-size itemsets sharing their first k-2 items. Output is
// sorted and distinct. Throws MixedSizes.
std::vector<Itemset> join(const std::vector<Itemset>& prev_level);

// Keeps candidates whose (k-1)-subsets are all in prev_level.
std::vector<Itemset> prune(const std::vector<Itemset>& candidates,
                           const std::vector<Itemset>& prev_level);

// Support of every candidate, including zero. Candidate order is preserved.
std::vector<SupportedItemset> count_support(const TransactionDatabase& db,
                                            const std::vector<Itemset>& candidates,
                                            unsigned threads = 1);

MiningResult apriori(const TransactionDatabase& db, MinSupport min_sup,
                     const MiningOptions& options = {});

inline MiningResult apriori(const TransactionDatabase& db, MinSupport min_sup, Backend backend) {
  return apriori(db, min_sup, MiningOptions{backend, 1});
}

// Enumerates every non-empty subset of the universe. Sorted by k, then
// lexicographically. Throws UniverseTooLarge above kBruteForceMaxUniverse.
std::vector<SupportedItemset> brute_force_frequent(const TransactionDatabase& db,
                                                   MinSupport min_sup);

// `<k>\t<item1,item2,...>\t<support>\n` per itemset, then with summary a
// `# |D|=<n> min_sup=<s> levels=<m>` line.
void write_mining_report(const MiningResult& result, std::ostream& out, bool summary);

}  // namespace freqmine
