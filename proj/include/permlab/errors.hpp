#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

/// Malformed permutation or pattern text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive scan was requested beyond the configured degree cap.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int n, int budget)
      : std::runtime_error("degree " + std::to_string(n) + " exceeds enumeration budget " +
                           std::to_string(budget)),
        n_(n),
        budget_(budget) {}

  int n() const noexcept { return n_; }
  int budget() const noexcept { return budget_; }

 private:
  int n_;
  int budget_;
};

/// A computed quantity violated an identity that must hold (e.g. a non-integral class count).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by queries that need at least one occurrence.
class NoOccurrence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration observed a stop request between classes.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("enumeration cancelled") {}
};

}  // namespace permlab
