#pragma once

#include <stdexcept>
#include <string>

namespace coded {

struct ZeroInverse : std::domain_error {
  ZeroInverse() : std::domain_error("inverse of zero") {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct FieldTooSmall : std::invalid_argument {
  explicit FieldTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

struct DuplicatePoint : std::invalid_argument {
  explicit DuplicatePoint(const std::string& what) : std::invalid_argument(what) {}
};

struct DecodeFailure : std::runtime_error {
  explicit DecodeFailure(const std::string& what) : std::runtime_error(what) {}
};

struct Degree1Monomial : std::invalid_argument {
  explicit Degree1Monomial(const std::string& what) : std::invalid_argument(what) {}
};

struct InsufficientWorkers : std::invalid_argument {
  explicit InsufficientWorkers(const std::string& what) : std::invalid_argument(what) {}
};

struct InsufficientResponses : std::runtime_error {
  explicit InsufficientResponses(const std::string& what) : std::runtime_error(what) {}
};

// Parse errors carry a 1-based line/column of the offending token.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int ln, int col)
      : std::runtime_error(what + " (line " + std::to_string(ln) + ", column " +
                           std::to_string(col) + ")"),
        line(ln),
        column(col) {}
};

struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace coded
