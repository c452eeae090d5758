#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mafre/granular.hpp"

namespace mafre {

/// Malformed input: dimensions, granularity mismatches, unknown names.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested reduction set fails the consistency requirement.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search would exceed the configured candidate budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Pointwise difference between one rhs slice and its closure in the lattice.
struct SliceGap {
  std::size_t slice = 0;  // column w (primal) or row u (dual)
  FuzzySet rhs;
  FuzzySet interior;
};

/// Raised when a solution is requested from an unsolvable system. Carries the
/// slices whose rhs is not a fixpoint, which is what `approx` diagnoses.
class UnsolvableError : public std::runtime_error {
 public:
  explicit UnsolvableError(std::vector<SliceGap> gaps);
  const std::vector<SliceGap>& gaps() const { return gaps_; }

 private:
  std::vector<SliceGap> gaps_;
};

/// Broken mathematical invariant; indicates a library bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mafre
