#pragma once

#include <stdexcept>
#include <string>

namespace trihopf {

// Caller supplied inconsistent arguments (mismatched sizes or conductors,
// out-of-range indices, malformed input files).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Input data violates a mathematical precondition (not a group, not
// associative, not a cocycle, ...). The message names a witness.
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// An eigenvalue or idempotent needed over Q(zeta_N) does not exist there.
class NonSplitError : public std::runtime_error {
 public:
  explicit NonSplitError(const std::string& what)
      : std::runtime_error(what + " (enlarge conductor)") {}
};

// A search hit its budget before reaching a conclusion.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trihopf
