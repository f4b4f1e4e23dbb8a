#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freqmine {

// Items and tokens are plain strings ordered by byte-wise lexicographic
// comparison (std::string's operator<).
using Item = std::string;
using Token = std::string;

struct Transaction {
  std::optional<std::string> tid;
  std::vector<Item> items;  // strictly ascending

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

struct TransactionDatabase {
  std::vector<Transaction> transactions;
  std::vector<Item> universe;  // sorted, distinct union of all items

  std::size_t size() const { return transactions.size(); }
  bool empty() const { return transactions.empty(); }

  friend bool operator==(const TransactionDatabase&, const TransactionDatabase&) = default;
};

class MalformedLine : public std::runtime_error {
 public:
  explicit MalformedLine(std::size_t line_no);
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

// Splits on whitespace, lowercases ASCII letters and strips leading and
// trailing ASCII punctuation from .,;:!?"'()[]{}. Tokens that end up empty
// are dropped.
std::vector<Token> tokenize(std::string_view text);
std::vector<Token> tokenize(std::istream& in);

// One transaction per non-blank line. With has_tid, the first field (ended
// by the first tab, or failing that the first whitespace run) is the TID.
// Items are comma separated, trimmed, deduplicated and sorted. Lines that
// yield no items are skipped. Line numbers in MalformedLine are 1-based.
TransactionDatabase parse_transactions(std::istream& in, bool has_tid);
TransactionDatabase parse_transactions(std::string_view text, bool has_tid);

// Builds a database from already-split item lists, applying the same
// dedupe/sort/drop-empty rules as the parser.
TransactionDatabase make_database(std::vector<std::vector<Item>> rows);

// Canonical form: `TID\titem1,item2\n`, or `item1,item2\n` without TIDs.
void write_transactions(const TransactionDatabase& db, std::ostream& out);

}  // namespace freqmine
