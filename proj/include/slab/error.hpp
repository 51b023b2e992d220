#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slab {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph construction (self-loop, duplicate edge, endpoint out of range).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Labeling that is not a bijection onto 1..n, or does not fit the graph.
class LabelingError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input format recognised but not supported (e.g. MatrixMarket array format).
class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a solver's size limit and no override was given.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Generator or solver parameter outside its documented bounds.
class ParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace slab
