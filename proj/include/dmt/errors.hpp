#pragma once

#include <stdexcept>
#include <string>

namespace dmt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that cannot describe a simplicial complex or multigraph.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class NotAFace : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation was not met by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The enumeration of a Morse complex ran past its facet or time budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The input lies outside the hypotheses of a reconstruction theorem.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

// A reconstruction step produced something its theorem rules out: either the
// supplied isomorphism is not one, or there is a bug.
class TheoremContradiction : public Error {
 public:
  using Error::Error;
};

class InvalidIsomorphism : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace dmt
