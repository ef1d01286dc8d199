#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seshadri {

/// Malformed user input: bad expressions, bad points, inconsistent files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a polynomial expression, with the byte offset of the fault.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A required hypothesis failed to hold; `condition()` names it.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(std::string condition, const std::string& detail)
      : std::runtime_error(condition + ": " + detail), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// Two independent computations disagreed where the mathematics says they must agree.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A randomized construction produced a degenerate instance.
class DegenerateChoice : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seshadri
