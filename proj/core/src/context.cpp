#include "mafre/context.hpp"

#include <algorithm>
#include <set>

#include "mafre/errors.hpp"

namespace mafre {

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw InputError(std::string("duplicate ") + what + " '" + n + "'");
  }
}

}  // namespace

Context::Context(FramePtr frame, std::vector<std::string> attributes,
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
  require_unique(attributes_, "attribute");
  require_unique(objects_, "object");
  if (relation_.rows() != attributes_.size() || relation_.cols() != objects_.size()) {
    throw InputError("relation is " + std::to_string(relation_.rows()) + "x" +
                     std::to_string(relation_.cols()) + ", expected " +
                     std::to_string(attributes_.size()) + "x" + std::to_string(objects_.size()));
  }
  if (relation_.granularity() != frame_->granularity()) {
    throw InputError("relation granularity differs from the frame");
  }
  if (sigma_.size() != attributes_.size() * objects_.size()) {
    throw InputError("sigma must assign a triple to every (attribute, object) pair");
  }
  for (std::size_t s : sigma_) {
    if (s >= frame_->triple_count()) {
      throw InputError("sigma index " + std::to_string(s + 1) + " addresses no triple (frame has " +
                       std::to_string(frame_->triple_count()) + ")");
    }
  }
}

Context Context::with_object_sigma(FramePtr frame, std::vector<std::string> attributes,
                                   std::vector<std::string> objects, LevelMatrix relation,
                                   const std::vector<std::size_t>& object_sigma) {
  if (object_sigma.size() != objects.size()) {
    throw InputError("per-object sigma has " + std::to_string(object_sigma.size()) +
                     " entries for " + std::to_string(objects.size()) + " objects");
  }
  std::vector<std::size_t> cells;
  cells.reserve(attributes.size() * objects.size());
  for (std::size_t a = 0; a < attributes.size(); ++a) {
    cells.insert(cells.end(), object_sigma.begin(), object_sigma.end());
  }
  return Context(std::move(frame), std::move(attributes), std::move(objects), std::move(relation),
                 std::move(cells));
}

IndexSet Context::attribute_indices(const std::vector<std::string>& names) const {
  IndexSet out;
  for (const auto& name : names) {
    auto it = std::find(attributes_.begin(), attributes_.end(), name);
    if (it == attributes_.end()) throw InputError("unknown attribute '" + name + "'");
    out.push_back(static_cast<std::size_t>(it - attributes_.begin()));
  }
  return out;
}

std::vector<std::string> Context::attribute_names(const IndexSet& indices) const {
  std::vector<std::string> out;
  for (std::size_t i : indices) out.push_back(attributes_.at(i));
  return out;
}

FuzzySet possibility(const FuzzySet& g, const Context& ctx) {
  if (g.size() != ctx.object_count()) {
    throw InputError("possibility: fuzzy set has " + std::to_string(g.size()) +
                     " entries, context has " + std::to_string(ctx.object_count()) + " objects");
  }
  if (g.granularity() != ctx.granularity()) throw InputError("possibility: granularity mismatch");
  const auto& r = ctx.relation();
  std::vector<Level> out(ctx.attribute_count(), 0);
  for (std::size_t a = 0; a < ctx.attribute_count(); ++a) {
    Level sup = 0;
    for (std::size_t b = 0; b < ctx.object_count(); ++b) {
      sup = std::max(sup, ctx.frame().triple(ctx.sigma(a, b)).conj(r(a, b), g[b]));
    }
    out[a] = sup;
  }
  return FuzzySet(ctx.granularity(), std::move(out));
}

FuzzySet necessity(const FuzzySet& f, const Context& ctx) {
  if (f.size() != ctx.attribute_count()) {
    throw InputError("necessity: fuzzy set has " + std::to_string(f.size()) +
                     " entries, context has " + std::to_string(ctx.attribute_count()) +
                     " attributes");
  }
  if (f.granularity() != ctx.granularity()) throw InputError("necessity: granularity mismatch");
  const auto& r = ctx.relation();
  std::vector<Level> out(ctx.object_count(), ctx.granularity());
  for (std::size_t b = 0; b < ctx.object_count(); ++b) {
    Level inf = ctx.granularity();
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) {
      inf = std::min(inf, ctx.frame().triple(ctx.sigma(a, b)).right_residuum(f[a], r(a, b)));
    }
    out[b] = inf;
  }
  return FuzzySet(ctx.granularity(), std::move(out));
}

FuzzySet object_closure(const FuzzySet& g, const Context& ctx) {
  return necessity(possibility(g, ctx), ctx);
}

FuzzySet attribute_interior(const FuzzySet& f, const Context& ctx) {
  return possibility(necessity(f, ctx), ctx);
}

GaloisPair extent_galois_pair(const Context& ctx) {
  GaloisPair p;
  p.granularity = ctx.granularity();
  p.closed_dim = ctx.object_count();
  p.other_dim = ctx.attribute_count();
  p.to_other = [&ctx](const FuzzySet& g) { return possibility(g, ctx); };
  p.from_other = [&ctx](const FuzzySet& f) { return necessity(f, ctx); };
  return p;
}

ConceptLattice build_concept_lattice(const Context& ctx, LatticeStrategy strategy) {
  auto closed = enumerate_closed(extent_galois_pair(ctx), strategy);
  std::vector<Concept> concepts;
  concepts.reserve(closed.size());
  for (auto& [extent, intent] : closed) concepts.push_back({std::move(extent), std::move(intent)});
  return ConceptLattice(std::move(concepts));
}

std::vector<FuzzySet> extent_set(const Context& ctx, LatticeStrategy strategy) {
  auto closed = enumerate_closed(extent_galois_pair(ctx), strategy);
  std::vector<FuzzySet> out;
  out.reserve(closed.size());
  for (auto& pr : closed) out.push_back(std::move(pr.first));
  return out;
}

std::vector<FuzzySet> predecessors(const ConceptLattice& lattice, const FuzzySet& extent) {
  const auto idx = lattice.find_extent(extent);
  if (!idx) throw InputError("predecessors: " + extent.to_string() + " is not an extent");
  std::vector<FuzzySet> out;
  for (std::size_t i : lattice.lower_covers(*idx)) out.push_back(lattice.concept_at(i).extent);
  return out;
}

IndexSet normalize_subset(IndexSet subset, std::size_t limit) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) throw InputError("subset must be non-empty");
  if (subset.back() >= limit) {
    throw InputError("subset index " + std::to_string(subset.back()) + " out of range");
  }
  return subset;
}

Context restrict(const Context& ctx, const IndexSet& kept_attributes) {
  const IndexSet kept = normalize_subset(kept_attributes, ctx.attribute_count());
  std::vector<std::size_t> sigma;
  sigma.reserve(kept.size() * ctx.object_count());
  for (std::size_t a : kept) {
    for (std::size_t b = 0; b < ctx.object_count(); ++b) sigma.push_back(ctx.sigma(a, b));
  }
  return Context(ctx.frame_ptr(), ctx.attribute_names(kept), ctx.objects(),
                 ctx.relation().select_rows(kept), std::move(sigma));
}

ReductFinder::ReductFinder(const Context& ctx, LatticeStrategy strategy)
    : ctx_(&ctx), strategy_(strategy), full_(extent_set(ctx, strategy)) {}

bool ReductFinder::is_consistent(const IndexSet& subset) const {
  const Context sub = restrict(*ctx_, subset);
  const auto restricted = extent_set(sub, strategy_);
  // Both lists are sorted.
  if (!std::includes(full_.begin(), full_.end(), restricted.begin(), restricted.end())) {
    throw InternalError("restricted context produced an extent that is not an extent of the "
                        "full context");
  }
  return std::includes(restricted.begin(), restricted.end(), full_.begin(), full_.end());
}

bool ReductFinder::is_reduct(const IndexSet& subset) const {
  const IndexSet y = normalize_subset(subset, ctx_->attribute_count());
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

std::vector<IndexSet> ReductFinder::reducts() const {
  const std::size_t m = ctx_->attribute_count();
  std::vector<IndexSet> found;
  // Breadth-first by cardinality; supersets of a found reduct are skipped
  // because they cannot be minimal.
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
    if (!is_reduct(r)) throw InternalError("reduct search returned a non-minimal set");
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool is_consistent(const Context& ctx, const IndexSet& subset) {
  return ReductFinder(ctx).is_consistent(subset);
}

std::vector<IndexSet> enumerate_reducts(const Context& ctx) { return ReductFinder(ctx).reducts(); }

}  // namespace mafre
