#pragma once

#include <stdexcept>

namespace bimatch {

// Input violates a documented precondition (unbalanced colors, points not in
// general position, a line through an input point, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidMatchingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction step produced a state its invariants rule out. Signals a bug
// (or an input outside the supported degeneracy class), never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bimatch
