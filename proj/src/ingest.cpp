#include "freqmine/ingest.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace freqmine {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_strippable(char c) {
  constexpr std::string_view kPunct = ".,;:!?\"'()[]{}";
  return kPunct.find(c) != std::string_view::npos;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

void normalize(std::vector<Item>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

std::vector<Item> split_items(std::string_view field) {
  std::vector<Item> items;
  while (true) {
    auto comma = field.find(',');
    auto item = trim(field.substr(0, comma));
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    field.remove_prefix(comma + 1);
  }
  normalize(items);
  return items;
}

void fill_universe(TransactionDatabase& db) {
  db.universe.clear();
  for (const auto& t : db.transactions) {
    db.universe.insert(db.universe.end(), t.items.begin(), t.items.end());
  }
  normalize(db.universe);
}

}  // namespace

MalformedLine::MalformedLine(std::size_t line_no)
    : std::runtime_error("malformed transaction on line " + std::to_string(line_no) +
                         ": no item field after TID"),
      line_no_(line_no) {}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    auto word = text.substr(start, i - start);
    while (!word.empty() && is_strippable(word.front())) word.remove_prefix(1);
    while (!word.empty() && is_strippable(word.back())) word.remove_suffix(1);
    if (word.empty()) continue;
    Token tok(word);
    for (auto& c : tok) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::vector<Token> tokenize(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return tokenize(text);
}

TransactionDatabase parse_transactions(std::istream& in, bool has_tid) {
  TransactionDatabase db;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty()) continue;

    Transaction t;
    if (has_tid) {
      auto sep = body.find('\t');
      if (sep == std::string_view::npos) {
        sep = std::find_if(body.begin(), body.end(), is_space) - body.begin();
      }
      if (sep >= body.size() || trim(body.substr(sep + 1)).empty()) {
        throw MalformedLine(line_no);
      }
      t.tid = std::string(trim(body.substr(0, sep)));
      body = body.substr(sep + 1);
    }
    t.items = split_items(body);
    if (t.items.empty()) continue;
    db.transactions.push_back(std::move(t));
  }
  fill_universe(db);
  return db;
}

TransactionDatabase parse_transactions(std::string_view text, bool has_tid) {
  std::istringstream in{std::string(text)};
  return parse_transactions(in, has_tid);
}

TransactionDatabase make_database(std::vector<std::vector<Item>> rows) {
  TransactionDatabase db;
  for (auto& row : rows) {
    normalize(row);
    if (row.empty()) continue;
    db.transactions.push_back(Transaction{std::nullopt, std::move(row)});
  }
  fill_universe(db);
  return db;
}

void write_transactions(const TransactionDatabase& db, std::ostream& out) {
  for (const auto& t : db.transactions) {
    if (t.tid) out << *t.tid << '\t';
    for (std::size_t i = 0; i < t.items.size(); ++i) {
      if (i) out << ',';
      out << t.items[i];
    }
    out << '\n';
  }
}

}  // namespace freqmine
