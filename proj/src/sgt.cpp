#include "semichain/sgt.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace semichain {

namespace {

struct Token {
  std::string text;
  int line;
  int column;  // 1-based position of the first character
};

// Significant lines tokenized on whitespace; comments and blanks dropped.
std::vector<std::vector<Token>> tokenize(std::istream& in) {
  std::vector<std::vector<Token>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
        ++i;
      }
      toks.push_back({line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
    }
    if (toks.empty() || toks.front().text[0] == '#') {
      continue;
    }
    rows.push_back(std::move(toks));
  }
  return rows;
}

int parse_int(const Token& tok, const char* what) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw SgtParseError(tok.line, tok.column,
                        std::string("expected ") + what + ", got '" + tok.text + "'");
  }
  return value;
}

}  // namespace

CayleyTable parse_sgt(std::istream& in) {
  auto rows = tokenize(in);
  if (rows.empty()) {
    throw SgtParseError(1, 1, "empty input, expected the order on the first line");
  }
  const auto& head = rows[0];
  if (head.size() != 1) {
    throw SgtParseError(head[1].line, head[1].column,
                        "expected a single integer (the order) on the first line");
  }
  int n = parse_int(head[0], "the order");
  if (n < 1 || n > CayleyTable::max_order) {
    throw SgtParseError(head[0].line, head[0].column,
                        "order must lie in [1, " + std::to_string(CayleyTable::max_order) +
                            "], got " + std::to_string(n));
  }

  std::vector<Element> products;
  products.reserve(static_cast<std::size_t>(n) * n);
  std::size_t next = 1;
  for (int r = 0; r < n; ++r, ++next) {
    if (next >= rows.size()) {
      const Token& last = rows.back().back();
      throw SgtParseError(last.line, last.column + static_cast<int>(last.text.size()),
                          "expected " + std::to_string(n) + " table rows, got " +
                              std::to_string(r));
    }
    const auto& row = rows[next];
    if (row.size() != static_cast<std::size_t>(n)) {
      const Token& at = row.size() > static_cast<std::size_t>(n) ? row[n] : row.back();
      throw SgtParseError(at.line, at.column,
                          "row " + std::to_string(r) + " must have exactly " +
                              std::to_string(n) + " entries, got " +
                              std::to_string(row.size()));
    }
    for (const Token& tok : row) {
      int v = parse_int(tok, "a table entry");
      if (v < 0 || v >= n) {
        throw SgtParseError(tok.line, tok.column,
                            "entry " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n) + ")");
      }
      products.push_back(v);
    }
  }

  std::vector<std::string> labels;
  if (next < rows.size()) {
    const auto& row = rows[next];
    if (row[0].text != "labels:") {
      throw SgtParseError(row[0].line, row[0].column,
                          "unexpected content after the table (only a 'labels:' line may follow)");
    }
    if (row.size() != static_cast<std::size_t>(n) + 1) {
      throw SgtParseError(row[0].line, row[0].column,
                          "labels: line must carry exactly " + std::to_string(n) + " tokens");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (!seen.insert(row[i].text).second) {
        throw SgtParseError(row[i].line, row[i].column,
                            "duplicate label '" + row[i].text + "'");
      }
      labels.push_back(row[i].text);
    }
    ++next;
  }
  if (next < rows.size()) {
    throw SgtParseError(rows[next][0].line, rows[next][0].column,
                        "unexpected content after the table");
  }
  return CayleyTable(n, std::move(products), std::move(labels));
}

CayleyTable parse_sgt(const std::string& text) {
  std::istringstream in(text);
  return parse_sgt(in);
}

CayleyTable load_sgt(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return parse_sgt(in);
}

std::string emit_sgt(const CayleyTable& table) {
  std::ostringstream out;
  const int n = table.order();
  out << n << '\n';
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << table.at(x, y);
    }
    out << '\n';
  }
  if (table.has_labels()) {
    out << "labels:";
    for (const auto& label : table.labels()) {
      out << ' ' << label;
    }
    out << '\n';
  }
  return out.str();
}

void save_sgt(const CayleyTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << emit_sgt(table);
}

}  // namespace semichain
