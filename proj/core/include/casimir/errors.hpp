#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// A computation would exceed its configured size budget; the caller should
/// fall back to a cheaper strategy.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Peeling a character drove a multiplicity negative. Only reachable with
/// input that is not the character of a module.
class NotModuleCharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent strategies produced different answers for the same degree.
class StrategyDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace casimir
