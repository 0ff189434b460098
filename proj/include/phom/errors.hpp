#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phom {

/// Malformed input data. `line()` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A caller asked for something the inputs cannot answer (bad dimension,
/// non-prime field, out-of-range scale index, ...).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Broken internal invariant, e.g. a face missing from a filtration.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace phom
