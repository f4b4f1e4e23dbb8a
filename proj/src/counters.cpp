#include "freqmine/counters.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace freqmine {

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::bst: return "bst";
    case Backend::avl: return "avl";
    case Backend::hash: return "hash";
    case Backend::sorted_array: return "sorted_array";
  }
  return "?";
}

std::optional<Backend> parse_backend(std::string_view name) {
  for (auto b : kAllBackends) {
    if (to_string(b) == name) return b;
  }
  return std::nullopt;
}

bool is_tree_backend(Backend backend) {
  return backend == Backend::bst || backend == Backend::avl;
}

UnsupportedBackend::UnsupportedBackend(Backend backend)
    : std::logic_error("operation not supported by backend " + std::string(to_string(backend))) {}

namespace detail {

std::int32_t TreeStorage::make_node(std::string_view key) {
  nodes_.push_back(Node{Token(key)});
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

std::uint64_t TreeStorage::lookup(std::string_view key) const {
  auto n = root_;
  while (n != kNil) {
    int c = key.compare(nodes_[n].key);
    if (c == 0) return nodes_[n].count;
    n = c < 0 ? nodes_[n].left : nodes_[n].right;
  }
  return 0;
}

std::vector<CountEntry> TreeStorage::inorder() const {
  std::vector<CountEntry> out;
  out.reserve(nodes_.size());
  std::vector<std::int32_t> stack;
  auto n = root_;
  while (n != kNil || !stack.empty()) {
    while (n != kNil) {
      stack.push_back(n);
      n = nodes_[n].left;
    }
    n = stack.back();
    stack.pop_back();
    out.push_back(CountEntry{nodes_[n].key, nodes_[n].count});
    n = nodes_[n].right;
  }
  return out;
}

std::size_t TreeStorage::walk_height() const {
  if (root_ == kNil) return 0;
  std::size_t best = 0;
  std::vector<std::pair<std::int32_t, std::size_t>> stack{{root_, 1}};
  while (!stack.empty()) {
    auto [n, depth] = stack.back();
    stack.pop_back();
    best = std::max(best, depth);
    if (nodes_[n].left != kNil) stack.emplace_back(nodes_[n].left, depth + 1);
    if (nodes_[n].right != kNil) stack.emplace_back(nodes_[n].right, depth + 1);
  }
  return best;
}

bool TreeStorage::check_ordering() const {
  auto entries = inorder();
  if (entries.size() != nodes_.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].count < 1) return false;
    if (i > 0 && !(entries[i - 1].key < entries[i].key)) return false;
  }
  return true;
}

std::string TreeStorage::shape() const {
  std::string out;
  append_shape(root_, out);
  return out;
}

void TreeStorage::append_shape(std::int32_t node, std::string& out) const {
  if (node == kNil) {
    out += '-';
    return;
  }
  const auto& n = nodes_[node];
  out += n.key;
  if (n.left == kNil && n.right == kNil) return;
  out += '(';
  append_shape(n.left, out);
  out += ',';
  append_shape(n.right, out);
  out += ')';
}

}  // namespace detail

void BstCounter::insert(std::string_view key) {
  if (root_ == kNil) {
    root_ = make_node(key);
    return;
  }
  auto n = root_;
  while (true) {
    int c = compare(key, n);
    if (c == 0) {
      ++nodes_[n].count;
      return;
    }
    auto next = c < 0 ? nodes_[n].left : nodes_[n].right;
    if (next == kNil) {
      auto leaf = make_node(key);
      (c < 0 ? nodes_[n].left : nodes_[n].right) = leaf;
      return;
    }
    n = next;
  }
}

void AvlCounter::insert(std::string_view key) { root_ = insert_at(root_, key); }

std::size_t AvlCounter::height() const { return static_cast<std::size_t>(node_height(root_)); }

std::int32_t AvlCounter::insert_at(std::int32_t node, std::string_view key) {
  if (node == kNil) return make_node(key);
  int c = compare(key, node);
  if (c == 0) {
    ++nodes_[node].count;
    return node;
  }
  if (c < 0) {
    auto child = insert_at(nodes_[node].left, key);
    nodes_[node].left = child;
  } else {
    auto child = insert_at(nodes_[node].right, key);
    nodes_[node].right = child;
  }
  return rebalance(node);
}

void AvlCounter::update_height(std::int32_t node) {
  auto& n = nodes_[node];
  n.height = 1 + std::max(node_height(n.left), node_height(n.right));
}

std::int32_t AvlCounter::rotate_left(std::int32_t node) {
  auto pivot = nodes_[node].right;
  nodes_[node].right = nodes_[pivot].left;
  nodes_[pivot].left = node;
  update_height(node);
  update_height(pivot);
  return pivot;
}

std::int32_t AvlCounter::rotate_right(std::int32_t node) {
  auto pivot = nodes_[node].left;
  nodes_[node].left = nodes_[pivot].right;
  nodes_[pivot].right = node;
  update_height(node);
  update_height(pivot);
  return pivot;
}

std::int32_t AvlCounter::rebalance(std::int32_t node) {
  update_height(node);
  auto left = nodes_[node].left;
  auto right = nodes_[node].right;
  int balance = node_height(left) - node_height(right);
  if (balance > 1) {
    if (node_height(nodes_[left].left) < node_height(nodes_[left].right)) {
      nodes_[node].left = rotate_left(left);
    }
    return rotate_right(node);
  }
  if (balance < -1) {
    if (node_height(nodes_[right].right) < node_height(nodes_[right].left)) {
      nodes_[node].right = rotate_right(right);
    }
    return rotate_left(node);
  }
  return node;
}

bool AvlCounter::check_balance() const {
  if (root_ == kNil) return nodes_.empty();
  // Post-order walk comparing stored heights against recomputed ones.
  std::vector<std::pair<std::int32_t, bool>> stack{{root_, false}};
  std::vector<std::int32_t> computed(nodes_.size(), 0);
  std::size_t visited = 0;
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    const auto& node = nodes_[n];
    if (!expanded) {
      stack.emplace_back(n, true);
      if (node.left != kNil) stack.emplace_back(node.left, false);
      if (node.right != kNil) stack.emplace_back(node.right, false);
      continue;
    }
    ++visited;
    auto lh = node.left == kNil ? 0 : computed[node.left];
    auto rh = node.right == kNil ? 0 : computed[node.right];
    computed[n] = 1 + std::max(lh, rh);
    if (computed[n] != node.height) return false;
    if (lh - rh > 1 || rh - lh > 1) return false;
  }
  return visited == nodes_.size();
}

HashCounter::HashCounter()
    : equality_calls_(std::make_unique<std::uint64_t>(0)),
      table_(0, std::hash<Token>{}, CountingEqual{equality_calls_.get()}) {}

void HashCounter::insert(std::string_view key) {
  auto [it, inserted] = table_.try_emplace(Token(key), 0);
  ++it->second;
}

std::uint64_t HashCounter::lookup(std::string_view key) const {
  // Lookups go through a separate plain comparison so they are not counted.
  auto bucket = table_.bucket(Token(key));
  for (auto it = table_.begin(bucket); it != table_.end(bucket); ++it) {
    if (it->first == key) return it->second;
  }
  return 0;
}

std::vector<CountEntry> HashCounter::inorder() const {
  std::vector<CountEntry> out;
  out.reserve(table_.size());
  for (const auto& [key, count] : table_) out.push_back(CountEntry{key, count});
  std::sort(out.begin(), out.end(),
            [](const CountEntry& a, const CountEntry& b) { return a.key < b.key; });
  return out;
}

void SortedArrayCounter::insert(std::string_view key) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [this](const CountEntry& e, std::string_view k) {
                               ++comparisons_;
                               return e.key < k;
                             });
  if (it != entries_.end()) {
    ++comparisons_;
    if (it->key == key) {
      ++it->count;
      return;
    }
  }
  entries_.insert(it, CountEntry{Token(key), 1});
}

std::uint64_t SortedArrayCounter::lookup(std::string_view key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const CountEntry& e, std::string_view k) { return e.key < k; });
  return it != entries_.end() && it->key == key ? it->count : 0;
}

namespace {

decltype(auto) make_impl(Backend backend) {
  using Impl = std::variant<BstCounter, AvlCounter, HashCounter, SortedArrayCounter>;
  switch (backend) {
    case Backend::bst: return Impl{std::in_place_type<BstCounter>};
    case Backend::avl: return Impl{std::in_place_type<AvlCounter>};
    case Backend::hash: return Impl{std::in_place_type<HashCounter>};
    case Backend::sorted_array: return Impl{std::in_place_type<SortedArrayCounter>};
  }
  return Impl{std::in_place_type<AvlCounter>};
}

}  // namespace

FrequencyCounter::FrequencyCounter(Backend backend) : impl_(make_impl(backend)) {}

Backend FrequencyCounter::backend() const { return kAllBackends[impl_.index()]; }

void FrequencyCounter::insert(std::string_view key) {
  std::visit([&](auto& c) { c.insert(key); }, impl_);
}

std::uint64_t FrequencyCounter::lookup(std::string_view key) const {
  return std::visit([&](const auto& c) { return c.lookup(key); }, impl_);
}

std::vector<CountEntry> FrequencyCounter::inorder() const {
  return std::visit([](const auto& c) { return c.inorder(); }, impl_);
}

std::size_t FrequencyCounter::size() const {
  return std::visit([](const auto& c) { return c.size(); }, impl_);
}

bool FrequencyCounter::is_empty() const {
  return std::visit([](const auto& c) { return c.is_empty(); }, impl_);
}

std::size_t FrequencyCounter::height() const {
  if (const auto* bst = std::get_if<BstCounter>(&impl_)) return bst->height();
  if (const auto* avl = std::get_if<AvlCounter>(&impl_)) return avl->height();
  throw UnsupportedBackend(backend());
}

std::uint64_t FrequencyCounter::comparisons() const {
  return std::visit([](const auto& c) { return c.comparisons(); }, impl_);
}

void write_count_report(const std::vector<CountEntry>& entries, std::ostream& out) {
  for (const auto& e : entries) out << e.key << '\t' << e.count << '\n';
}

}  // namespace freqmine
