#include "mafre/fre.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "mafre/errors.hpp"

namespace mafre {

const char* to_string(Orientation o) { return o == Orientation::kPrimal ? "primal" : "dual"; }

bool SliceSolutions::contains(const FuzzySet& x) const {
  if (!x.leq(max_solution)) return false;
  return std::none_of(excluded_predecessors.begin(), excluded_predecessors.end(),
                      [&](const FuzzySet& p) { return x.leq(p); });
}

std::vector<FuzzySet> SliceSolutions::minimal_solutions() const {
  // The solution set is up-closed inside the box, so x is minimal iff no
  // single one-step decrease stays a solution.
  std::vector<FuzzySet> out;
  FuzzySet x = FuzzySet::constant(max_solution.granularity(), max_solution.size(), 0);
  do {
    if (!contains(x)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < x.size() && minimal; ++i) {
      if (x[i] == 0) continue;
      FuzzySet lower = x;
      --lower[i];
      if (contains(lower)) minimal = false;
    }
    if (minimal) out.push_back(x);
  } while (next_in_box(x.mutable_levels(), max_solution.levels()));
  return out;
}

std::uint64_t SolutionSet::total_count() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const auto& s : slices) {
    if (s.count == 0) return 0;
    if (total > kMax / s.count) return kMax;
    total *= s.count;
  }
  return total;
}

bool SolutionSet::contains(const LevelMatrix& x) const {
  const bool primal = orientation == Orientation::kPrimal;
  const std::size_t n_slices = primal ? x.cols() : x.rows();
  const std::size_t length = primal ? x.rows() : x.cols();
  if (n_slices != slices.size() || length != slice_length) {
    throw InputError("candidate solution has the wrong shape");
  }
  for (std::size_t i = 0; i < slices.size(); ++i) {
    if (!slices[i].contains(primal ? x.column(i) : x.row(i))) return false;
  }
  return true;
}

std::vector<LevelMatrix> SolutionSet::matrices() const {
  const bool primal = orientation == Orientation::kPrimal;
  for (const auto& s : slices) {
    if (!s.enumerated || s.truncated) {
      throw InputError("matrices() needs a fully materialized solution set");
    }
  }
  const std::size_t rows = primal ? slice_length : slices.size();
  const std::size_t cols = primal ? slices.size() : slice_length;
  std::vector<LevelMatrix> out;
  if (total_count() == 0) return out;
  std::vector<Level> pick(slices.size(), 0);
  std::vector<Level> upper(slices.size());
  for (std::size_t i = 0; i < slices.size(); ++i) {
    upper[i] = static_cast<Level>(slices[i].enumerated->size() - 1);
  }
  do {
    LevelMatrix m(rows, cols, granularity);
    for (std::size_t i = 0; i < slices.size(); ++i) {
      const auto& v = (*slices[i].enumerated)[pick[i]];
      if (primal) {
        m.set_column(i, v);
      } else {
        m.set_row(i, v);
      }
    }
    out.push_back(std::move(m));
  } while (next_in_box(pick, upper));
  std::sort(out.begin(), out.end());
  return out;
}

SliceSolutions enumerate_slice(std::size_t slice, FuzzySet max_solution,
                               std::vector<FuzzySet> predecessors,
                               const EnumerationOptions& options) {
  SliceSolutions out;
  out.slice = slice;
  out.max_solution = std::move(max_solution);
  out.excluded_predecessors = std::move(predecessors);
  const auto volume = box_volume(out.max_solution.levels());
  if (volume > options.box_budget) throw BudgetExceeded(volume, options.box_budget);

  if (options.materialize) out.enumerated.emplace();
  FuzzySet x = FuzzySet::constant(out.max_solution.granularity(), out.max_solution.size(), 0);
  do {
    if (!out.contains(x)) continue;
    ++out.count;
    if (out.enumerated) {
      if (options.max_materialized && out.enumerated->size() >= *options.max_materialized) {
        out.truncated = true;
      } else {
        out.enumerated->push_back(x);
      }
    }
  } while (next_in_box(x.mutable_levels(), out.max_solution.levels()));
  return out;
}

FreInstance::FreInstance(FramePtr frame, std::vector<std::string> rows,
                         std::vector<std::string> unknowns, std::vector<std::string> columns,
                         LevelMatrix coefficients, std::vector<std::size_t> sigma, LevelMatrix rhs)
    : frame_(std::move(frame)),
      rows_(std::move(rows)),
      unknowns_(std::move(unknowns)),
      columns_(std::move(columns)),
      coefficients_(std::move(coefficients)),
      sigma_(std::move(sigma)),
      rhs_(std::move(rhs)) {
  if (!frame_) throw InputError("relation equation without frame");
  if (rows_.empty() || unknowns_.empty() || columns_.empty()) {
    throw InputError("U, V and W must be non-empty");
  }
  if (coefficients_.rows() != rows_.size() || coefficients_.cols() != unknowns_.size()) {
    throw InputError("coefficient matrix must be |U| x |V| = " + std::to_string(rows_.size()) +
                     "x" + std::to_string(unknowns_.size()));
  }
  if (rhs_.rows() != rows_.size() || rhs_.cols() != columns_.size()) {
    throw InputError("rhs matrix must be |U| x |W| = " + std::to_string(rows_.size()) + "x" +
                     std::to_string(columns_.size()));
  }
  if (coefficients_.granularity() != granularity() || rhs_.granularity() != granularity()) {
    throw InputError("matrix granularity differs from the frame");
  }
  if (sigma_.size() != unknowns_.size()) {
    throw InputError("sigma must assign one triple per unknown");
  }
  for (std::size_t s : sigma_) {
    if (s >= frame_->triple_count()) {
      throw InputError("sigma index " + std::to_string(s + 1) + " addresses no triple");
    }
  }
}

FreInstance FreInstance::with_rhs(LevelMatrix rhs) const {
  return FreInstance(frame_, rows_, unknowns_, columns_, coefficients_, sigma_, std::move(rhs));
}

bool operator==(const FreInstance& a, const FreInstance& b) {
  return a.frame_ == b.frame_ && a.rows_ == b.rows_ && a.unknowns_ == b.unknowns_ &&
         a.columns_ == b.columns_ && a.coefficients_ == b.coefficients_ && a.sigma_ == b.sigma_ &&
         a.rhs_ == b.rhs_;
}

LevelMatrix sup_compose(const Frame& frame, const LevelMatrix& r, const LevelMatrix& x,
                        const std::vector<std::size_t>& sigma) {
  if (r.cols() != x.rows()) throw InputError("sup_compose: inner dimensions differ");
  if (sigma.size() != r.cols()) throw InputError("sup_compose: sigma length differs from |V|");
  if (r.granularity() != frame.granularity() || x.granularity() != frame.granularity()) {
    throw InputError("sup_compose: granularity mismatch");
  }
  LevelMatrix t(r.rows(), x.cols(), frame.granularity());
  for (std::size_t u = 0; u < r.rows(); ++u) {
    for (std::size_t w = 0; w < x.cols(); ++w) {
      Level sup = 0;
      for (std::size_t v = 0; v < r.cols(); ++v) {
        sup = std::max(sup, frame.triple(sigma[v]).conj(r(u, v), x(v, w)));
      }
      t(u, w) = sup;
    }
  }
  return t;
}

LevelMatrix inf_compose(const Frame& frame, const LevelMatrix& t, const LevelMatrix& r,
                        const std::vector<std::size_t>& sigma) {
  if (t.rows() != r.rows()) throw InputError("inf_compose: T and R must share the row set U");
  if (sigma.size() != r.cols()) throw InputError("inf_compose: sigma length differs from |V|");
  if (r.granularity() != frame.granularity() || t.granularity() != frame.granularity()) {
    throw InputError("inf_compose: granularity mismatch");
  }
  const Level top = frame.granularity();
  LevelMatrix x(r.cols(), t.cols(), top, top);
  for (std::size_t v = 0; v < r.cols(); ++v) {
    for (std::size_t w = 0; w < t.cols(); ++w) {
      Level inf = top;
      for (std::size_t u = 0; u < r.rows(); ++u) {
        inf = std::min(inf, frame.triple(sigma[v]).right_residuum(t(u, w), r(u, v)));
      }
      x(v, w) = inf;
    }
  }
  return x;
}

Context associated_context(const FreInstance& fre) {
  return Context::with_object_sigma(fre.frame_ptr(), fre.rows(), fre.unknowns(),
                                    fre.coefficients(), fre.sigma());
}

bool is_solution(const FreInstance& fre, const LevelMatrix& x) {
  if (x.rows() != fre.unknowns().size() || x.cols() != fre.columns().size()) {
    throw InputError("candidate must be |V| x |W|");
  }
  if (x.granularity() != fre.granularity()) throw InputError("candidate granularity mismatch");
  const Context ctx = associated_context(fre);
  for (std::size_t w = 0; w < x.cols(); ++w) {
    if (possibility(x.column(w), ctx) != fre.rhs().column(w)) return false;
  }
  return true;
}

std::vector<SliceGap> solvability_gaps(const FreInstance& fre) {
  const Context ctx = associated_context(fre);
  std::vector<SliceGap> gaps;
  for (std::size_t w = 0; w < fre.columns().size(); ++w) {
    FuzzySet t = fre.rhs().column(w);
    FuzzySet interior = attribute_interior(t, ctx);
    if (interior != t) gaps.push_back({w, std::move(t), std::move(interior)});
  }
  return gaps;
}

bool is_solvable(const FreInstance& fre) { return solvability_gaps(fre).empty(); }

LevelMatrix max_solution(const FreInstance& fre) {
  auto gaps = solvability_gaps(fre);
  if (!gaps.empty()) throw UnsolvableError(std::move(gaps));
  return inf_compose(fre.frame(), fre.rhs(), fre.coefficients(), fre.sigma());
}

SolutionSet enumerate_solutions(const FreInstance& fre, const EnumerationOptions& options) {
  const LevelMatrix maximum = max_solution(fre);
  const Context ctx = associated_context(fre);
  const ConceptLattice lattice = build_concept_lattice(ctx, options.strategy);

  SolutionSet out;
  out.orientation = Orientation::kPrimal;
  out.granularity = fre.granularity();
  out.slice_length = fre.unknowns().size();
  for (std::size_t w = 0; w < fre.columns().size(); ++w) {
    FuzzySet top = maximum.column(w);
    auto preds = predecessors(lattice, top);
    out.slices.push_back(enumerate_slice(w, std::move(top), std::move(preds), options));
  }
  return out;
}

FreInstance reduce_fre(const FreInstance& fre, const IndexSet& kept, bool enforce_consistency) {
  const IndexSet y = normalize_subset(kept, fre.rows().size());
  if (enforce_consistency) {
    const Context ctx = associated_context(fre);
    if (!ReductFinder(ctx).is_consistent(y)) {
      std::string names;
      for (std::size_t i : y) names += (names.empty() ? "" : ",") + fre.rows()[i];
      throw ConsistencyError("{" + names + "} is not a consistent set of the associated context");
    }
  }
  std::vector<std::string> rows;
  for (std::size_t i : y) rows.push_back(fre.rows()[i]);
  return FreInstance(fre.frame_ptr(), std::move(rows), fre.unknowns(), fre.columns(),
                     fre.coefficients().select_rows(y), fre.sigma(), fre.rhs().select_rows(y));
}

std::vector<LevelMatrix> brute_force_solutions(const FreInstance& fre, std::uint64_t budget) {
  const std::size_t cells = fre.unknowns().size() * fre.columns().size();
  const auto required = cube_volume(fre.granularity(), cells);
  if (required > budget) throw BudgetExceeded(required, budget);

  std::vector<LevelMatrix> out;
  LevelMatrix x(fre.unknowns().size(), fre.columns().size(), fre.granularity());
  std::vector<Level> flat(cells, 0);
  const std::vector<Level> upper(cells, fre.granularity());
  do {
    for (std::size_t i = 0; i < cells; ++i) x(i / x.cols(), i % x.cols()) = flat[i];
    if (sup_compose(fre.frame(), fre.coefficients(), x, fre.sigma()) == fre.rhs()) {
      out.push_back(x);
    }
  } while (next_in_box(flat, upper));
  return out;
}

}  // namespace mafre
