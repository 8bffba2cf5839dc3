#pragma once

#include <stdexcept>
#include <string>

namespace braidcert {

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two inputs that must agree (strand count, tuple length, ...) do not.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The two objects are provably not related (different products, unequal
/// words). Distinct from search exhaustion.
class NotEquivalent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search hit its configured state budget before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed certificate failed its own endpoint replay. Always a bug.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace braidcert
