#pragma once

#include <stdexcept>
#include <string>

namespace jsj {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Exact solver refused because the instance is larger than the node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Gluing table or metadata is internally inconsistent.
class StructureError : public Error {
 public:
  using Error::Error;
};

// A construction step failed an internal consistency check.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Caller supplied an input outside the operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace jsj
