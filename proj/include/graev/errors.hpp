#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graev {

// A search or enumeration would exceed a configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word text. column is 1-based; line is 0 when parsing a single
// string rather than a corpus.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::invalid_argument(message), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace graev
