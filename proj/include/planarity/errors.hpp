#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace planarity {

/// Input outside the domain of a formula (d < 2, l < m, negative genus...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (partitions, multiplicity trees, class expressions).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Engine not applicable to the query, e.g. the genus-0 closed form at g > 0.
class UnsupportedEngine : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A self-consistency check failed; always indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Brute-force enumeration hit its node budget before finishing.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t visited, std::uint64_t budget)
      : std::runtime_error("work budget of " + std::to_string(budget) +
                           " search nodes exceeded"),
        visited_(visited),
        budget_(budget) {}

  std::uint64_t visited() const { return visited_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t visited_;
  std::uint64_t budget_;
};

}  // namespace planarity
