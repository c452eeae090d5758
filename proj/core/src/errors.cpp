#include "mafre/errors.hpp"

namespace mafre {

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("search needs " + std::to_string(required) +
                         " candidates, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

namespace {

std::string describe_gaps(const std::vector<SliceGap>& gaps) {
  std::string msg = "system is unsolvable";
  for (const auto& g : gaps) {
    msg += "; slice " + std::to_string(g.slice) + ": rhs " + g.rhs.to_string() +
           " but closure gives " + g.interior.to_string();
  }
  return msg;
}

}  // namespace

UnsolvableError::UnsolvableError(std::vector<SliceGap> gaps)
    : std::runtime_error(describe_gaps(gaps)), gaps_(std::move(gaps)) {}

}  // namespace mafre
