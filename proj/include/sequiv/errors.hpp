#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "sequiv/bigint.hpp"

namespace sequiv {

// Malformed input text (JSON, CSV, polynomial strings). line/column are
// 1-based when known, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, int line = 0, int column = 0)
      : std::runtime_error(msg), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class DimensionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// det(A - A^t) != 1; carries the offending determinant.
class NotSeifertTypeError : public std::domain_error {
 public:
  explicit NotSeifertTypeError(Int det)
      : std::domain_error("not Seifert type: det(A - A^t) = " + det.str()),
        det_(std::move(det)) {}
  const Int& det() const { return det_; }

 private:
  Int det_;
};

class SingularMatrixError : public std::domain_error {
  using std::domain_error::domain_error;
};

class InvalidReductionSite : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ChainReplayError : public std::runtime_error {
 public:
  ChainReplayError(std::size_t move_index, const std::string& why)
      : std::runtime_error("move " + std::to_string(move_index) + " failed: " + why),
        move_index_(move_index) {}
  std::size_t move_index() const { return move_index_; }

 private:
  std::size_t move_index_;
};

// An internal exact-arithmetic self-check failed. This is a bug in the
// library, never a property of the input.
class InternalCheckError : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace sequiv
