#include "mafre/dual.hpp"

#include <algorithm>
#include <set>

#include "mafre/errors.hpp"

namespace mafre {

DualContext::DualContext(FramePtr frame, std::vector<std::string> attributes,
                         std::vector<std::string> objects, LevelMatrix relation,
                         std::vector<std::size_t> cell_sigma)
    : frame_(std::move(frame)),
      attributes_(std::move(attributes)),
      objects_(std::move(objects)),
      relation_(std::move(relation)),
      sigma_(std::move(cell_sigma)) {
  if (!frame_) throw InputError("context without frame");
  if (attributes_.empty() || objects_.empty()) {
    throw InputError("a context needs non-empty attribute and object sets");
  }
  if (relation_.rows() != attributes_.size() || relation_.cols() != objects_.size()) {
    throw InputError("relation must be |V| x |W|");
  }
  if (relation_.granularity() != frame_->granularity()) {
    throw InputError("relation granularity differs from the frame");
  }
  if (sigma_.size() != attributes_.size() * objects_.size()) {
    throw InputError("sigma must assign a triple to every (attribute, object) pair");
  }
  for (std::size_t s : sigma_) {
    if (s >= frame_->triple_count()) {
      throw InputError("sigma index " + std::to_string(s + 1) + " addresses no triple");
    }
  }
}

DualContext DualContext::with_attribute_sigma(FramePtr frame, std::vector<std::string> attributes,
                                              std::vector<std::string> objects,
                                              LevelMatrix relation,
                                              const std::vector<std::size_t>& attribute_sigma) {
  if (attribute_sigma.size() != attributes.size()) {
    throw InputError("per-attribute sigma length differs from |V|");
  }
  std::vector<std::size_t> cells;
  for (std::size_t s : attribute_sigma) cells.insert(cells.end(), objects.size(), s);
  return DualContext(std::move(frame), std::move(attributes), std::move(objects),
                     std::move(relation), std::move(cells));
}

FuzzySet dual_possibility(const FuzzySet& f, const DualContext& ctx) {
  if (f.size() != ctx.attribute_count()) throw InputError("down-pi: index mismatch");
  if (f.granularity() != ctx.granularity()) throw InputError("down-pi: granularity mismatch");
  const auto& s = ctx.relation();
  std::vector<Level> out(ctx.object_count(), 0);
  for (std::size_t w = 0; w < ctx.object_count(); ++w) {
    Level sup = 0;
    for (std::size_t v = 0; v < ctx.attribute_count(); ++v) {
      sup = std::max(sup, ctx.frame().triple(ctx.sigma(v, w)).conj(f[v], s(v, w)));
    }
    out[w] = sup;
  }
  return FuzzySet(ctx.granularity(), std::move(out));
}

FuzzySet dual_necessity(const FuzzySet& g, const DualContext& ctx) {
  if (g.size() != ctx.object_count()) throw InputError("up-N: index mismatch");
  if (g.granularity() != ctx.granularity()) throw InputError("up-N: granularity mismatch");
  const auto& s = ctx.relation();
  std::vector<Level> out(ctx.attribute_count(), ctx.granularity());
  for (std::size_t v = 0; v < ctx.attribute_count(); ++v) {
    Level inf = ctx.granularity();
    for (std::size_t w = 0; w < ctx.object_count(); ++w) {
      inf = std::min(inf, ctx.frame().triple(ctx.sigma(v, w)).left_residuum(g[w], s(v, w)));
    }
    out[v] = inf;
  }
  return FuzzySet(ctx.granularity(), std::move(out));
}

FuzzySet intent_closure(const FuzzySet& f, const DualContext& ctx) {
  return dual_necessity(dual_possibility(f, ctx), ctx);
}

FuzzySet extent_interior(const FuzzySet& g, const DualContext& ctx) {
  return dual_possibility(dual_necessity(g, ctx), ctx);
}

GaloisPair intent_galois_pair(const DualContext& ctx) {
  GaloisPair p;
  p.granularity = ctx.granularity();
  p.closed_dim = ctx.attribute_count();
  p.other_dim = ctx.object_count();
  p.to_other = [&ctx](const FuzzySet& f) { return dual_possibility(f, ctx); };
  p.from_other = [&ctx](const FuzzySet& g) { return dual_necessity(g, ctx); };
  return p;
}

ConceptLattice build_object_oriented_lattice(const DualContext& ctx, LatticeStrategy strategy) {
  auto closed = enumerate_closed(intent_galois_pair(ctx), strategy);
  std::vector<Concept> concepts;
  concepts.reserve(closed.size());
  for (auto& [intent, extent] : closed) concepts.push_back({std::move(extent), std::move(intent)});
  return ConceptLattice(std::move(concepts));
}

std::vector<FuzzySet> intent_set(const DualContext& ctx, LatticeStrategy strategy) {
  auto closed = enumerate_closed(intent_galois_pair(ctx), strategy);
  std::vector<FuzzySet> out;
  out.reserve(closed.size());
  for (auto& pr : closed) out.push_back(std::move(pr.first));
  return out;
}

DualContext restrict_objects(const DualContext& ctx, const IndexSet& kept_objects) {
  const IndexSet kept = normalize_subset(kept_objects, ctx.object_count());
  std::vector<std::string> names;
  for (std::size_t w : kept) names.push_back(ctx.objects()[w]);
  std::vector<std::size_t> sigma;
  for (std::size_t v = 0; v < ctx.attribute_count(); ++v) {
    for (std::size_t w : kept) sigma.push_back(ctx.sigma(v, w));
  }
  return DualContext(ctx.frame_ptr(), ctx.attributes(), std::move(names),
                     ctx.relation().select_cols(kept), std::move(sigma));
}

DualReductFinder::DualReductFinder(const DualContext& ctx, LatticeStrategy strategy)
    : ctx_(&ctx), strategy_(strategy), full_(intent_set(ctx, strategy)) {}

bool DualReductFinder::is_consistent(const IndexSet& objects) const {
  const auto restricted = intent_set(restrict_objects(*ctx_, objects), strategy_);
  if (!std::includes(full_.begin(), full_.end(), restricted.begin(), restricted.end())) {
    throw InternalError("object restriction produced an intent that is not an intent of the "
                        "full context");
  }
  return std::includes(restricted.begin(), restricted.end(), full_.begin(), full_.end());
}

bool DualReductFinder::is_reduct(const IndexSet& objects) const {
  const IndexSet y = normalize_subset(objects, ctx_->object_count());
  if (!is_consistent(y)) return false;
  if (y.size() == 1) return true;
  for (std::size_t drop = 0; drop < y.size(); ++drop) {
    IndexSet smaller;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (i != drop) smaller.push_back(y[i]);
    }
    if (is_consistent(smaller)) return false;
  }
  return true;
}

std::vector<IndexSet> DualReductFinder::reducts() const {
  const std::size_t m = ctx_->object_count();
  std::vector<IndexSet> found;
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      IndexSet subset;
      for (std::size_t i = 0; i < m; ++i) {
        if (pick[i]) subset.push_back(i);
      }
      const bool contains_found = std::any_of(found.begin(), found.end(), [&](const IndexSet& r) {
        return std::includes(subset.begin(), subset.end(), r.begin(), r.end());
      });
      if (!contains_found && is_consistent(subset)) found.push_back(subset);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  for (const auto& r : found) {
    if (!is_reduct(r)) throw InternalError("I-reduct search returned a non-minimal set");
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool dual_is_consistent(const DualContext& ctx, const IndexSet& objects) {
  return DualReductFinder(ctx).is_consistent(objects);
}

std::vector<IndexSet> dual_enumerate_reducts(const DualContext& ctx) {
  return DualReductFinder(ctx).reducts();
}

DualFreInstance::DualFreInstance(FramePtr frame, std::vector<std::string> rows,
                                 std::vector<std::string> unknowns,
                                 std::vector<std::string> columns, LevelMatrix coefficients,
                                 std::vector<std::size_t> sigma, LevelMatrix rhs)
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
  if (coefficients_.rows() != unknowns_.size() || coefficients_.cols() != columns_.size()) {
    throw InputError("coefficient matrix S must be |V| x |W| = " +
                     std::to_string(unknowns_.size()) + "x" + std::to_string(columns_.size()));
  }
  if (rhs_.rows() != rows_.size() || rhs_.cols() != columns_.size()) {
    throw InputError("rhs matrix must be |U| x |W| = " + std::to_string(rows_.size()) + "x" +
                     std::to_string(columns_.size()));
  }
  if (coefficients_.granularity() != granularity() || rhs_.granularity() != granularity()) {
    throw InputError("matrix granularity differs from the frame");
  }
  if (sigma_.size() != unknowns_.size()) throw InputError("sigma must assign one triple per v");
  for (std::size_t s : sigma_) {
    if (s >= frame_->triple_count()) {
      throw InputError("sigma index " + std::to_string(s + 1) + " addresses no triple");
    }
  }
}

DualFreInstance DualFreInstance::with_rhs(LevelMatrix rhs) const {
  return DualFreInstance(frame_, rows_, unknowns_, columns_, coefficients_, sigma_,
                         std::move(rhs));
}

LevelMatrix dual_sup_compose(const Frame& frame, const LevelMatrix& x, const LevelMatrix& s,
                             const std::vector<std::size_t>& sigma) {
  if (x.cols() != s.rows()) throw InputError("dual_sup_compose: inner dimensions differ");
  if (sigma.size() != s.rows()) throw InputError("dual_sup_compose: sigma length differs from |V|");
  if (x.granularity() != frame.granularity() || s.granularity() != frame.granularity()) {
    throw InputError("dual_sup_compose: granularity mismatch");
  }
  LevelMatrix t(x.rows(), s.cols(), frame.granularity());
  for (std::size_t u = 0; u < x.rows(); ++u) {
    for (std::size_t w = 0; w < s.cols(); ++w) {
      Level sup = 0;
      for (std::size_t v = 0; v < s.rows(); ++v) {
        sup = std::max(sup, frame.triple(sigma[v]).conj(x(u, v), s(v, w)));
      }
      t(u, w) = sup;
    }
  }
  return t;
}

DualContext associated_context(const DualFreInstance& dfre) {
  return DualContext::with_attribute_sigma(dfre.frame_ptr(), dfre.unknowns(), dfre.columns(),
                                           dfre.coefficients(), dfre.sigma());
}

bool dual_is_solution(const DualFreInstance& dfre, const LevelMatrix& x) {
  if (x.rows() != dfre.rows().size() || x.cols() != dfre.unknowns().size()) {
    throw InputError("candidate must be |U| x |V|");
  }
  const DualContext ctx = associated_context(dfre);
  for (std::size_t u = 0; u < x.rows(); ++u) {
    if (dual_possibility(x.row(u), ctx) != dfre.rhs().row(u)) return false;
  }
  return true;
}

std::vector<SliceGap> dual_solvability_gaps(const DualFreInstance& dfre) {
  const DualContext ctx = associated_context(dfre);
  std::vector<SliceGap> gaps;
  for (std::size_t u = 0; u < dfre.rows().size(); ++u) {
    FuzzySet t = dfre.rhs().row(u);
    FuzzySet interior = extent_interior(t, ctx);
    if (interior != t) gaps.push_back({u, std::move(t), std::move(interior)});
  }
  return gaps;
}

bool dual_is_solvable(const DualFreInstance& dfre) { return dual_solvability_gaps(dfre).empty(); }

LevelMatrix dual_max_solution(const DualFreInstance& dfre) {
  auto gaps = dual_solvability_gaps(dfre);
  if (!gaps.empty()) throw UnsolvableError(std::move(gaps));
  const DualContext ctx = associated_context(dfre);
  LevelMatrix x(dfre.rows().size(), dfre.unknowns().size(), dfre.granularity());
  for (std::size_t u = 0; u < dfre.rows().size(); ++u) {
    x.set_row(u, dual_necessity(dfre.rhs().row(u), ctx));
  }
  return x;
}

SolutionSet dual_solutions(const DualFreInstance& dfre, const EnumerationOptions& options) {
  const LevelMatrix maximum = dual_max_solution(dfre);
  const DualContext ctx = associated_context(dfre);
  const ConceptLattice lattice = build_object_oriented_lattice(ctx, options.strategy);

  SolutionSet out;
  out.orientation = Orientation::kDual;
  out.granularity = dfre.granularity();
  out.slice_length = dfre.unknowns().size();
  for (std::size_t u = 0; u < dfre.rows().size(); ++u) {
    FuzzySet top = maximum.row(u);
    const auto idx = lattice.find_intent(top);
    if (!idx) throw InternalError("maximum dual solution is not an intent");
    std::vector<FuzzySet> preds;
    for (std::size_t i : lattice.lower_covers(*idx)) preds.push_back(lattice.concept_at(i).intent);
    out.slices.push_back(enumerate_slice(u, std::move(top), std::move(preds), options));
  }
  return out;
}

DualFreInstance dual_reduce(const DualFreInstance& dfre, const IndexSet& kept,
                            bool enforce_consistency) {
  const IndexSet y = normalize_subset(kept, dfre.columns().size());
  if (enforce_consistency) {
    const DualContext ctx = associated_context(dfre);
    if (!DualReductFinder(ctx).is_consistent(y)) {
      throw ConsistencyError("column subset is not an I-consistent set of the associated context");
    }
  }
  std::vector<std::string> cols;
  for (std::size_t i : y) cols.push_back(dfre.columns()[i]);
  return DualFreInstance(dfre.frame_ptr(), dfre.rows(), dfre.unknowns(), std::move(cols),
                         dfre.coefficients().select_cols(y), dfre.sigma(),
                         dfre.rhs().select_cols(y));
}

std::vector<LevelMatrix> dual_brute_force_solutions(const DualFreInstance& dfre,
                                                    std::uint64_t budget) {
  const std::size_t cells = dfre.rows().size() * dfre.unknowns().size();
  const auto required = cube_volume(dfre.granularity(), cells);
  if (required > budget) throw BudgetExceeded(required, budget);

  std::vector<LevelMatrix> out;
  LevelMatrix x(dfre.rows().size(), dfre.unknowns().size(), dfre.granularity());
  std::vector<Level> flat(cells, 0);
  const std::vector<Level> upper(cells, dfre.granularity());
  do {
    for (std::size_t i = 0; i < cells; ++i) x(i / x.cols(), i % x.cols()) = flat[i];
    if (dual_sup_compose(dfre.frame(), x, dfre.coefficients(), dfre.sigma()) == dfre.rhs()) {
      out.push_back(x);
    }
  } while (next_in_box(flat, upper));
  return out;
}

bool dual_is_feasible_reduct(const DualFreInstance& dfre, const IndexSet& reduct) {
  const IndexSet y = normalize_subset(reduct, dfre.columns().size());
  const DualContext ctx = associated_context(dfre);
  if (!DualReductFinder(ctx).is_reduct(y)) {
    throw InputError("column subset is not an I-reduct of the associated context");
  }
  return dual_is_solvable(dual_reduce(dfre, y, false));
}

std::vector<IndexSet> dual_find_feasible_reducts(const DualFreInstance& dfre) {
  std::vector<IndexSet> out;
  for (auto& y : dual_enumerate_reducts(associated_context(dfre))) {
    if (dual_is_solvable(dual_reduce(dfre, y, false))) out.push_back(std::move(y));
  }
  return out;
}

ApproximationResult dual_approximate(const DualFreInstance& dfre, const IndexSet& reduct,
                                     const EnumerationOptions& options) {
  const IndexSet y = normalize_subset(reduct, dfre.columns().size());
  if (!dual_is_feasible_reduct(dfre, y)) {
    throw InputError("column subset is not a feasible I-reduct");
  }
  const DualContext full = associated_context(dfre);
  const DualContext reduced = restrict_objects(full, y);
  const LevelMatrix t_y = dfre.rhs().select_cols(y);

  ApproximationResult out;
  out.orientation = Orientation::kDual;
  out.reduct = y;
  out.t_star = LevelMatrix(dfre.rows().size(), dfre.columns().size(), dfre.granularity());
  for (std::size_t u = 0; u < dfre.rows().size(); ++u) {
    out.t_star.set_row(u, dual_possibility(dual_necessity(t_y.row(u), reduced), full));
  }
  for (std::size_t u = 0; u < dfre.rows().size(); ++u) {
    for (std::size_t w = 0; w < dfre.columns().size(); ++w) {
      if (dfre.rhs()(u, w) == out.t_star(u, w)) continue;
      if (std::binary_search(y.begin(), y.end(), w)) {
        throw InternalError("dual approximation changed a column of the I-reduct");
      }
      out.modified.push_back({u, w, dfre.rhs()(u, w), out.t_star(u, w)});
    }
  }
  out.solutions = dual_solutions(dfre.with_rhs(out.t_star), options);
  return out;
}

}  // namespace mafre
