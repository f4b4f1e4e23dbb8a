#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "freqmine/ingest.hpp"

namespace freqmine {

enum class Backend { bst, avl, hash, sorted_array };

inline constexpr std::array<Backend, 4> kAllBackends = {Backend::bst, Backend::avl, Backend::hash,
                                                        Backend::sorted_array};

std::string_view to_string(Backend backend);
std::optional<Backend> parse_backend(std::string_view name);
bool is_tree_backend(Backend backend);

struct CountEntry {
  Token key;
  std::uint64_t count = 0;

  friend bool operator==(const CountEntry&, const CountEntry&) = default;
};

class UnsupportedBackend : public std::logic_error {
 public:
  explicit UnsupportedBackend(Backend backend);
};

namespace detail {

// Node storage shared by the two tree backends. Nodes live in a vector and
// link by index, so teardown and traversal never recurse on a degenerate
// (list-shaped) tree.
class TreeStorage {
 public:
  std::size_t size() const { return nodes_.size(); }
  bool is_empty() const { return root_ == kNil; }
  std::uint64_t comparisons() const { return comparisons_; }

  std::uint64_t lookup(std::string_view key) const;
  std::vector<CountEntry> inorder() const;

  // Nodes on the longest root-to-leaf path, found by walking the tree.
  std::size_t walk_height() const;

  // Keys strictly ascending in an inorder walk, every count >= 1, and every
  // stored node reachable from the root.
  bool check_ordering() const;

  // Parenthesised shape such as "b(a,c)" or "a(-,b)". Recursive; meant for
  // small trees in tests.
  std::string shape() const;

 protected:
  static constexpr std::int32_t kNil = -1;

  struct Node {
    Token key;
    std::uint64_t count = 1;
    std::int32_t left = kNil;
    std::int32_t right = kNil;
    std::int32_t height = 1;  // maintained by the AVL backend only
  };

  std::int32_t make_node(std::string_view key);
  int compare(std::string_view key, std::int32_t node) {
    ++comparisons_;
    return key.compare(nodes_[node].key);
  }

  std::vector<Node> nodes_;
  std::int32_t root_ = kNil;
  std::uint64_t comparisons_ = 0;

 private:
  void append_shape(std::int32_t node, std::string& out) const;
};

}  // namespace detail

// Unbalanced binary search tree with a count per node. Repeated keys bump
// the count; new keys are attached as leaves.
class BstCounter : public detail::TreeStorage {
 public:
  void insert(std::string_view key);
  std::size_t height() const { return walk_height(); }
};

// AVL-balanced search tree. Same observable behaviour as BstCounter, with
// height bounded by about 1.44*log2(n+2).
class AvlCounter : public detail::TreeStorage {
 public:
  void insert(std::string_view key);
  std::size_t height() const;

  // Stored heights are exact and every balance factor is in [-1, 1].
  bool check_balance() const;

 private:
  friend struct AvlCounterTestPeer;

  std::int32_t insert_at(std::int32_t node, std::string_view key);
  std::int32_t node_height(std::int32_t node) const {
    return node == kNil ? 0 : nodes_[node].height;
  }
  void update_height(std::int32_t node);
  std::int32_t rotate_left(std::int32_t node);
  std::int32_t rotate_right(std::int32_t node);
  std::int32_t rebalance(std::int32_t node);
};

class HashCounter {
 public:
  HashCounter();

  void insert(std::string_view key);
  std::uint64_t lookup(std::string_view key) const;
  std::vector<CountEntry> inorder() const;
  std::size_t size() const { return table_.size(); }
  bool is_empty() const { return table_.empty(); }
  std::uint64_t comparisons() const { return *equality_calls_; }

 private:
  struct CountingEqual {
    std::uint64_t* calls;
    bool operator()(const Token& a, const Token& b) const {
      ++*calls;
      return a == b;
    }
  };

  // Heap cell so the equality functor's pointer survives moves.
  std::unique_ptr<std::uint64_t> equality_calls_;
  std::unordered_map<Token, std::uint64_t, std::hash<Token>, CountingEqual> table_;
};

// Sorted vector with binary-search lookup and shift-on-insert.
class SortedArrayCounter {
 public:
  void insert(std::string_view key);
  std::uint64_t lookup(std::string_view key) const;
  std::vector<CountEntry> inorder() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_empty() const { return entries_.empty(); }
  std::uint64_t comparisons() const { return comparisons_; }

 private:
  std::vector<CountEntry> entries_;
  std::uint64_t comparisons_ = 0;
};

// A frequency dictionary over one of the four backends. Single writer;
// const members are safe to call concurrently on a quiescent counter.
class FrequencyCounter {
 public:
  explicit FrequencyCounter(Backend backend = Backend::avl);

  Backend backend() const;

  void insert(std::string_view key);
  std::uint64_t lookup(std::string_view key) const;

  // (key, count) pairs in ascending key order for every backend.
  std::vector<CountEntry> inorder() const;

  std::size_t size() const;
  bool is_empty() const;

  // Throws UnsupportedBackend for hash and sorted_array.
  std::size_t height() const;

  // Key comparisons performed by insert calls so far.
  std::uint64_t comparisons() const;

  const std::variant<BstCounter, AvlCounter, HashCounter, SortedArrayCounter>& impl() const {
    return impl_;
  }

 private:
  std::variant<BstCounter, AvlCounter, HashCounter, SortedArrayCounter> impl_;
};

inline FrequencyCounter new_counter(Backend backend) { return FrequencyCounter(backend); }

// `<token>\t<count>\n` per entry.
void write_count_report(const std::vector<CountEntry>& entries, std::ostream& out);

}  // namespace freqmine
