#ifndef KEMENY_ERRORS_HPP
#define KEMENY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kemeny {

// Common base so callers can catch every library error in one handler.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input too short, or lengths of paired inputs do not match.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A value outside the operation's domain (NaN data, |rho| > 1, bad alpha, ...).
class InvalidValueError : public Error {
 public:
  using Error::Error;
};

// Input carries no order information (all observations tied / zero variance).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration (generator parameters, replicate counts, env vars).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Structurally malformed input file; `row` is the 1-based line of the offense.
class FormatError : public Error {
 public:
  FormatError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

// A cell that cannot be read as a number; `row` and `column` are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::size_t column, const std::string& what)
      : Error("row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what),
        row_(row),
        column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace kemeny

#endif  // KEMENY_ERRORS_HPP
