#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace paradox {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text. `pos` is a byte offset into the source string.
struct ParseError : Error {
  size_t pos;
  ParseError(const std::string& msg, size_t pos_) : Error(msg), pos(pos_) {}
};

// Substitution would move a free variable of the replacement term under a
// binder. We reject instead of renaming; `quantVar` names the offending
// quantifier's variable.
struct CaptureError : Error {
  uint32_t quantVar;
  CaptureError(const std::string& msg, uint32_t v) : Error(msg), quantVar(v) {}
};

// Partial-function failures: not a code number, index out of range, a code
// that does not decode to the expected syntactic category, arity mismatches.
struct DomainError : Error {
  using Error::Error;
};

// Evaluation reached a variable the assignment does not cover.
struct UnassignedVariableError : Error {
  uint32_t var;
  UnassignedVariableError(const std::string& msg, uint32_t v) : Error(msg), var(v) {}
};

// A value is representable only in run-compressed form and the requested
// operation would need to expand it.
struct TooLargeError : Error {
  using Error::Error;
};

}  // namespace paradox
