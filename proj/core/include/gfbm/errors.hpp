#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfbm {

// Covariance factorization failed even at the maximum jitter level.
class not_positive_definite_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Circulant embedding kept a negative eigenvalue at the padding cap.
class embedding_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed path CSV; carries the 1-based position of the offending byte.
class csv_parse_error : public std::runtime_error {
public:
  csv_parse_error(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("csv parse error at line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gfbm
