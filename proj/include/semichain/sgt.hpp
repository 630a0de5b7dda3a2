#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "semichain/cayley_table.hpp"

namespace semichain {

// Parse failure with 1-based line/column of the offending token.
class SgtParseError : public std::runtime_error {
 public:
  SgtParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  int line;
  int column;
};

// .sgt format: first significant line holds the order n, the next n lines
// hold n space-separated 0-based entries each (row x, column y gives x*y),
// optionally followed by a `labels:` line with n tokens. Lines starting
// with `#` and blank lines are ignored.
CayleyTable parse_sgt(std::istream& in);
CayleyTable parse_sgt(const std::string& text);
CayleyTable load_sgt(const std::string& path);

std::string emit_sgt(const CayleyTable& table);
void save_sgt(const CayleyTable& table, const std::string& path);

}  // namespace semichain
