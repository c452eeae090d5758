#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mafre/algebra.hpp"
#include "mafre/context.hpp"
#include "mafre/errors.hpp"
#include "mafre/granular.hpp"
#include "mafre/lattice.hpp"

namespace mafre {

enum class Orientation { kPrimal, kDual };

const char* to_string(Orientation o);

/// Solutions for one independent slice of the unknown: a column X_w for
/// R (.) X = T, a row X_u for X (.) S = T.
///
/// The solution set of the slice is the box (max_solution] minus the
/// down-sets of excluded_predecessors.
struct SliceSolutions {
  std::size_t slice = 0;
  FuzzySet max_solution;
  std::vector<FuzzySet> excluded_predecessors;
  std::uint64_t count = 0;
  /// Present when enumeration was materialized; capped by max_materialized.
  std::optional<std::vector<FuzzySet>> enumerated;
  bool truncated = false;

  bool contains(const FuzzySet& x) const;
  /// Minimal elements of the slice's solution set.
  std::vector<FuzzySet> minimal_solutions() const;
};

struct SolutionSet {
  Orientation orientation = Orientation::kPrimal;
  Level granularity = 1;
  std::size_t slice_length = 0;  // |V| in both orientations
  std::vector<SliceSolutions> slices;

  /// Product of slice counts, saturating at UINT64_MAX.
  std::uint64_t total_count() const;
  bool contains(const LevelMatrix& x) const;
  /// Full matrices (cartesian product of slices). Requires every slice to be
  /// materialized and untruncated.
  std::vector<LevelMatrix> matrices() const;
};

struct EnumerationOptions {
  bool materialize = false;
  /// Stop storing (but keep counting) after this many solutions per slice.
  std::optional<std::uint64_t> max_materialized;
  /// Largest box (max_solution] that will be scanned.
  std::uint64_t box_budget = std::uint64_t{1} << 32;
  LatticeStrategy strategy = LatticeStrategy::kAuto;
};

/// Scans the box below `max_solution` and keeps points not below any
/// predecessor.
SliceSolutions enumerate_slice(std::size_t slice, FuzzySet max_solution,
                               std::vector<FuzzySet> predecessors,
                               const EnumerationOptions& options);

/// R (.)_sigma X = T, with R over U x V, X over V x W, T over U x W and one
/// adjoint triple per unknown row v.
class FreInstance {
 public:
  FreInstance(FramePtr frame, std::vector<std::string> rows, std::vector<std::string> unknowns,
              std::vector<std::string> columns, LevelMatrix coefficients,
              std::vector<std::size_t> sigma, LevelMatrix rhs);

  const Frame& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  Level granularity() const { return frame_->granularity(); }

  const std::vector<std::string>& rows() const { return rows_; }          // U
  const std::vector<std::string>& unknowns() const { return unknowns_; }  // V
  const std::vector<std::string>& columns() const { return columns_; }    // W
  const LevelMatrix& coefficients() const { return coefficients_; }       // R
  const std::vector<std::size_t>& sigma() const { return sigma_; }
  const LevelMatrix& rhs() const { return rhs_; }  // T

  FreInstance with_rhs(LevelMatrix rhs) const;

  friend bool operator==(const FreInstance& a, const FreInstance& b);

 private:
  FramePtr frame_;
  std::vector<std::string> rows_;
  std::vector<std::string> unknowns_;
  std::vector<std::string> columns_;
  LevelMatrix coefficients_;
  std::vector<std::size_t> sigma_;
  LevelMatrix rhs_;
};

/// T(u,w) = sup_v R(u,v) &_{sigma(v)} X(v,w)
LevelMatrix sup_compose(const Frame& frame, const LevelMatrix& r, const LevelMatrix& x,
                        const std::vector<std::size_t>& sigma);
/// X(v,w) = inf_u T(u,w) <-_{sigma(v)} R(u,v), with the right residuum.
LevelMatrix inf_compose(const Frame& frame, const LevelMatrix& t, const LevelMatrix& r,
                        const std::vector<std::size_t>& sigma);

/// The context (U, V, R, sigma) with sigma replicated down each column.
Context associated_context(const FreInstance& fre);

bool is_solution(const FreInstance& fre, const LevelMatrix& x);
bool is_solvable(const FreInstance& fre);
/// Columns w with T_w != T_w^{down N up pi}; empty iff solvable.
std::vector<SliceGap> solvability_gaps(const FreInstance& fre);
/// Column w is T_w^{down N}. Throws UnsolvableError carrying the gaps.
LevelMatrix max_solution(const FreInstance& fre);

/// Complete solution description per column. Throws UnsolvableError.
SolutionSet enumerate_solutions(const FreInstance& fre, const EnumerationOptions& options = {});

/// Keeps only the equations (rows) in `kept`. With enforce_consistency the
/// set must be consistent for the associated context, otherwise
/// ConsistencyError.
FreInstance reduce_fre(const FreInstance& fre, const IndexSet& kept,
                       bool enforce_consistency = true);

inline constexpr std::uint64_t kDefaultBruteForceBudget = 50'000'000;

/// Exhaustive oracle: every X in L^{V x W} with R (.) X = T, in
/// lexicographic order. Throws BudgetExceeded when (n+1)^{|V||W|} > budget.
std::vector<LevelMatrix> brute_force_solutions(const FreInstance& fre,
                                               std::uint64_t budget = kDefaultBruteForceBudget);

}  // namespace mafre
