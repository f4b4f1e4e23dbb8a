#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "freqmine/mining.hpp"

using namespace freqmine;

namespace {

TransactionDatabase all_electronics() {
  return parse_transactions(
      "T100\tI1, I2, I5\nT200\tI2, I4\nT300\tI2, I3\nT400\tI1, I2, I4\nT500\tI1, I3\n"
      "T600\tI2, I3\nT700\tI1, I3\nT800\tI1, I2, I3, I5\nT900\tI1, I2, I3\n",
      true);
}

std::vector<Itemset> sets(std::initializer_list<std::initializer_list<Item>> list) {
  std::vector<Itemset> out;
  for (auto s : list) out.emplace_back(s);
  return out;
}

TransactionDatabase random_database(std::mt19937& rng, int max_txns, int max_items) {
  std::uniform_int_distribution<int> txns(0, max_txns), items(1, max_items);
  int universe = items(rng);
  std::bernoulli_distribution take(0.45);
  std::vector<std::vector<Item>> rows;
  for (int t = txns(rng); t > 0; --t) {
    std::vector<Item> row;
    for (int i = 0; i < universe; ++i) {
      if (take(rng)) row.push_back("i" + std::to_string(i));
    }
    rows.push_back(row);
  }
  return make_database(rows);
}

std::uint64_t direct_support(const TransactionDatabase& db, const std::vector<Item>& items) {
  std::uint64_t n = 0;
  for (const auto& t : db.transactions) {
    std::set<Item> have(t.items.begin(), t.items.end());
    if (std::all_of(items.begin(), items.end(), [&](const Item& x) { return have.count(x) > 0; })) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("Itemset rejects unsorted or empty input") {
  CHECK_THROWS_AS(Itemset(std::vector<Item>{}), std::invalid_argument);
  CHECK_THROWS_AS((Itemset{"b", "a"}), std::invalid_argument);
  CHECK_THROWS_AS((Itemset{"a", "a"}), std::invalid_argument);
  Itemset s{"a", "c"};
  CHECK(s.k() == 2);
  CHECK(s.contained_in({"a", "b", "c"}));
  CHECK(!s.contained_in({"a", "b"}));
}

TEST_CASE("MinSupport forms") {
  CHECK_THROWS_AS(MinSupport(0), InvalidMinSupport);
  CHECK(MinSupport::from_relative(0.22, 9).threshold() == 2);
  CHECK(MinSupport::from_relative(2.0 / 9.0, 9).threshold() == 2);
  CHECK(MinSupport::from_relative(0.3, 10).threshold() == 3);
  CHECK(MinSupport::from_relative(0.31, 10).threshold() == 4);
  CHECK(MinSupport::from_relative(1.0, 9).threshold() == 9);
  CHECK(MinSupport::from_relative(0.5, 0).threshold() == 1);
  CHECK_THROWS_AS(MinSupport::from_relative(0.0, 9), InvalidMinSupport);
  CHECK_THROWS_AS(MinSupport::from_relative(1.5, 9), InvalidMinSupport);
}

TEST_CASE("count_1_itemsets counts containing transactions") {
  auto db = all_electronics();
  for (auto b : kAllBackends) {
    auto counter = count_1_itemsets(db, b);
    CHECK(counter.inorder() ==
          std::vector<CountEntry>{{"I1", 6}, {"I2", 7}, {"I3", 6}, {"I4", 2}, {"I5", 2}});
    for (const auto& item : db.universe) CHECK(counter.lookup(item) == direct_support(db, {item}));
  }
  CHECK(count_1_itemsets(TransactionDatabase{}, Backend::bst).is_empty());
  auto single = count_1_itemsets(make_database({{"I1", "I2"}}), Backend::hash);
  CHECK(single.inorder() == std::vector<CountEntry>{{"I1", 1}, {"I2", 1}});
}

TEST_CASE("frequent_1 applies the threshold") {
  auto counter = count_1_itemsets(all_electronics(), Backend::avl);
  auto l1 = frequent_1(counter, MinSupport(2));
  CHECK(l1 == std::vector<SupportedItemset>{{Itemset{"I1"}, 6},
                                            {Itemset{"I2"}, 7},
                                            {Itemset{"I3"}, 6},
                                            {Itemset{"I4"}, 2},
                                            {Itemset{"I5"}, 2}});
  CHECK(frequent_1(counter, MinSupport(7)) == std::vector<SupportedItemset>{{Itemset{"I2"}, 7}});
  CHECK(frequent_1(counter, MinSupport(8)).empty());
}

TEST_CASE("join merges itemsets with a common prefix") {
  auto l2 = sets({{"I1", "I2"}, {"I1", "I3"}, {"I1", "I5"}, {"I2", "I3"}, {"I2", "I4"}, {"I2", "I5"}});
  CHECK(join(l2) == sets({{"I1", "I2", "I3"},
                          {"I1", "I2", "I5"},
                          {"I1", "I3", "I5"},
                          {"I2", "I3", "I4"},
                          {"I2", "I3", "I5"},
                          {"I2", "I4", "I5"}}));
  CHECK(join(sets({{"I1", "I2", "I3"}, {"I1", "I2", "I5"}})) == sets({{"I1", "I2", "I3", "I5"}}));
  CHECK(join(sets({{"I1", "I2"}})).empty());
  CHECK(join({}).empty());
  CHECK(join(sets({{"a"}, {"b"}, {"c"}})) == sets({{"a", "b"}, {"a", "c"}, {"b", "c"}}));
  // input order and duplicates do not matter
  CHECK(join(sets({{"b"}, {"a"}, {"b"}})) == sets({{"a", "b"}}));
  CHECK_THROWS_AS(join(sets({{"a"}, {"a", "b"}})), MixedSizes);
}

TEST_CASE("join produces C(n, 2) pairs from n singletons") {
  std::vector<Itemset> l1;
  for (int i = 0; i < 9; ++i) l1.push_back(Itemset{"x" + std::to_string(i)});
  CHECK(join(l1).size() == 36);
}

TEST_CASE("prune drops candidates with an infrequent subset") {
  auto l2 = sets({{"I1", "I2"}, {"I1", "I3"}, {"I1", "I5"}, {"I2", "I3"}, {"I2", "I4"}, {"I2", "I5"}});
  CHECK(prune(join(l2), l2) == sets({{"I1", "I2", "I3"}, {"I1", "I2", "I5"}}));
  CHECK(prune(sets({{"I1", "I2", "I3", "I5"}}), sets({{"I1", "I2", "I3"}, {"I1", "I2", "I5"}})).empty());
  auto l1 = sets({{"a"}, {"b"}, {"c"}});
  auto c2 = join(l1);
  CHECK(prune(c2, l1) == c2);
}

TEST_CASE("count_support scans every transaction") {
  auto db = all_electronics();
  auto counted = count_support(db, sets({{"I1", "I2", "I3"}, {"I1", "I2", "I5"}, {"I1", "I3", "I5"}}));
  CHECK(counted == std::vector<SupportedItemset>{{Itemset{"I1", "I2", "I3"}, 2},
                                                 {Itemset{"I1", "I2", "I5"}, 2},
                                                 {Itemset{"I1", "I3", "I5"}, 1}});
  auto empty = count_support(TransactionDatabase{}, sets({{"a", "b"}}));
  CHECK(empty == std::vector<SupportedItemset>{{Itemset{"a", "b"}, 0}});
}

TEST_CASE("count_support is independent of the worker count") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto db = random_database(rng, 60, 8);
    if (db.universe.size() < 2) continue;
    std::vector<Itemset> l1;
    for (const auto& i : db.universe) l1.push_back(Itemset{i});
    auto candidates = join(l1);
    auto sequential = count_support(db, candidates, 1);
    for (unsigned threads : {2u, 3u, 8u, 64u}) CHECK(count_support(db, candidates, threads) == sequential);
    for (const auto& s : sequential) CHECK(s.support == direct_support(db, s.itemset.items()));
  }
}

TEST_CASE("apriori reproduces the AllElectronics walk-through") {
  auto db = all_electronics();
  for (auto b : kAllBackends) {
    CAPTURE(to_string(b));
    auto result = apriori(db, MinSupport(2), b);
    REQUIRE(result.levels.size() == 3);
    CHECK(result.db_size == 9);
    CHECK(result.backend == b);
    CHECK(result.levels[0].size() == 5);
    CHECK(result.levels[1] == std::vector<SupportedItemset>{{Itemset{"I1", "I2"}, 4},
                                                            {Itemset{"I1", "I3"}, 4},
                                                            {Itemset{"I1", "I5"}, 2},
                                                            {Itemset{"I2", "I3"}, 4},
                                                            {Itemset{"I2", "I4"}, 2},
                                                            {Itemset{"I2", "I5"}, 2}});
    CHECK(result.levels[2] == std::vector<SupportedItemset>{{Itemset{"I1", "I2", "I3"}, 2},
                                                            {Itemset{"I1", "I2", "I5"}, 2}});
    REQUIRE(result.candidates.size() == 3);
    CHECK(result.candidates[0].size() == 10);  // C(5, 2), nothing pruned
    CHECK(result.candidates[1] == sets({{"I1", "I2", "I3"}, {"I1", "I2", "I5"}}));
    CHECK(result.candidates[2].empty());
  }
}

TEST_CASE("apriori on an empty database yields nothing") {
  auto result = apriori(TransactionDatabase{}, MinSupport(1), Backend::bst);
  CHECK(result.levels.empty());
  CHECK(result.candidates.empty());
  CHECK(result.db_size == 0);
}

TEST_CASE("brute force oracle") {
  auto fig = brute_force_frequent(all_electronics(), MinSupport(2));
  CHECK(fig.size() == 13);
  CHECK(fig == apriori(all_electronics(), MinSupport(2)).flatten());

  auto one = brute_force_frequent(make_database({{"a", "b"}}), MinSupport(1));
  CHECK(one == std::vector<SupportedItemset>{{Itemset{"a"}, 1}, {Itemset{"b"}, 1}, {Itemset{"a", "b"}, 1}});

  std::vector<Item> wide;
  for (int i = 0; i < 21; ++i) wide.push_back("x" + std::to_string(100 + i));
  CHECK_THROWS_AS(brute_force_frequent(make_database({wide}), MinSupport(1)), UniverseTooLarge);
}

TEST_CASE("min_sup 1 finds every itemset that occurs") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    auto db = random_database(rng, 6, 6);
    std::set<std::vector<Item>> occurring;
    for (const auto& t : db.transactions) {
      auto n = t.items.size();
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Item> s;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) s.push_back(t.items[i]);
        }
        occurring.insert(s);
      }
    }
    std::set<std::vector<Item>> mined;
    for (const auto& s : apriori(db, MinSupport(1)).flatten()) mined.insert(s.itemset.items());
    CHECK(mined == occurring);
  }
}

TEST_CASE("apriori properties on random databases") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto db = random_database(rng, 10, 8);
    MinSupport min_sup(1 + trial % 3);
    auto result = apriori(db, min_sup);
    auto flat = result.flatten();
    REQUIRE(flat == brute_force_frequent(db, min_sup));

    std::map<std::vector<Item>, std::uint64_t> support;
    for (const auto& s : flat) support[s.itemset.items()] = s.support;
    for (std::size_t k = 0; k < result.levels.size(); ++k) {
      for (const auto& s : result.levels[k]) {
        CHECK(s.itemset.k() == k + 1);
        CHECK(s.support >= min_sup.threshold());
        CHECK(s.support <= db.size());
        CHECK(s.support == direct_support(db, s.itemset.items()));
        // anti-monotone: adding any item never raises support
        for (const auto& extra : db.universe) {
          auto items = s.itemset.items();
          if (std::binary_search(items.begin(), items.end(), extra)) continue;
          items.insert(std::upper_bound(items.begin(), items.end(), extra), extra);
          CHECK(direct_support(db, items) <= s.support);
        }
      }
    }

    // Every oracle-frequent k-itemset is produced by join of L(k-1).
    for (std::size_t k = 1; k < result.levels.size(); ++k) {
      std::vector<Itemset> prev;
      for (const auto& s : result.levels[k - 1]) prev.push_back(s.itemset);
      auto joined = join(prev);
      for (const auto& s : result.levels[k]) {
        CHECK(std::binary_search(joined.begin(), joined.end(), s.itemset));
      }
    }

    for (auto b : kAllBackends) CHECK(apriori(db, min_sup, b).flatten() == flat);
  }
}

TEST_CASE("mining report format") {
  auto result = apriori(all_electronics(), MinSupport(2));
  std::ostringstream plain, summary;
  write_mining_report(result, plain, false);
  write_mining_report(result, summary, true);
  auto text = plain.str();
  CHECK(text.rfind("1\tI1\t6\n", 0) == 0);
  CHECK(text.ends_with("\n3\tI1,I2,I5\t2\n"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 13);
  CHECK(summary.str() == text + "# |D|=9 min_sup=2 levels=3\n");
}
