#pragma once

#include <string>
#include <vector>

#include "mafre/algebra.hpp"
#include "mafre/granular.hpp"
#include "mafre/lattice.hpp"

namespace mafre {

/// Attribute subset given as indices into the context's attribute list.
using IndexSet = std::vector<std::size_t>;

/// A multi-adjoint context (A, B, R, sigma) over a property-oriented frame.
/// sigma is stored per cell; with_object_sigma() builds the per-object form
/// used by relation equations.
class Context {
 public:
  Context(FramePtr frame, std::vector<std::string> attributes, std::vector<std::string> objects,
          LevelMatrix relation, std::vector<std::size_t> cell_sigma);

  static Context with_object_sigma(FramePtr frame, std::vector<std::string> attributes,
                                   std::vector<std::string> objects, LevelMatrix relation,
                                   const std::vector<std::size_t>& object_sigma);

  const Frame& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  Level granularity() const { return frame_->granularity(); }

  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t attribute_count() const { return attributes_.size(); }
  std::size_t object_count() const { return objects_.size(); }

  const LevelMatrix& relation() const { return relation_; }
  std::size_t sigma(std::size_t a, std::size_t b) const { return sigma_[a * objects_.size() + b]; }
  const std::vector<std::size_t>& cell_sigma() const { return sigma_; }

  /// Resolves attribute names to indices; throws InputError on unknown names.
  IndexSet attribute_indices(const std::vector<std::string>& names) const;
  std::vector<std::string> attribute_names(const IndexSet& indices) const;

 private:
  FramePtr frame_;
  std::vector<std::string> attributes_;
  std::vector<std::string> objects_;
  LevelMatrix relation_;
  std::vector<std::size_t> sigma_;
};

/// g^{up pi}(a) = sup_b R(a,b) &_{a,b} g(b)
FuzzySet possibility(const FuzzySet& g, const Context& ctx);
/// f^{down N}(b) = inf_a f(a) <-_{a,b} R(a,b), using the right residuum.
FuzzySet necessity(const FuzzySet& f, const Context& ctx);
/// g -> g^{up pi down N}; a closure operator on fuzzy object sets.
FuzzySet object_closure(const FuzzySet& g, const Context& ctx);
/// f -> f^{down N up pi}; an interior operator on fuzzy attribute sets.
FuzzySet attribute_interior(const FuzzySet& f, const Context& ctx);

/// The Galois pair whose closed sets are the extents of the context.
GaloisPair extent_galois_pair(const Context& ctx);

ConceptLattice build_concept_lattice(const Context& ctx,
                                     LatticeStrategy strategy = LatticeStrategy::kAuto);

/// All extents, sorted lexicographically.
std::vector<FuzzySet> extent_set(const Context& ctx,
                                 LatticeStrategy strategy = LatticeStrategy::kAuto);

/// Extents directly covered by `extent` in the lattice. Throws InputError if
/// `extent` is not an extent of `lattice`.
std::vector<FuzzySet> predecessors(const ConceptLattice& lattice, const FuzzySet& extent);

/// Rows limited to Y, sigma restricted to Y x B. Indices keep context order
/// regardless of the order given.
Context restrict(const Context& ctx, const IndexSet& kept_attributes);

/// Reduct search state: the full extent set is computed once and reused for
/// every candidate subset.
class ReductFinder {
 public:
  explicit ReductFinder(const Context& ctx, LatticeStrategy strategy = LatticeStrategy::kAuto);

  /// True iff the Y-restricted lattice has exactly the extents of the full
  /// one. Checks both containments; the restricted-into-full direction always
  /// holds for adjoint triples, so a failure there raises InternalError.
  bool is_consistent(const IndexSet& subset) const;
  bool is_reduct(const IndexSet& subset) const;

  /// All minimal consistent sets, each sorted, in lexicographic order.
  std::vector<IndexSet> reducts() const;

  const std::vector<FuzzySet>& full_extents() const { return full_; }

 private:
  const Context* ctx_;
  LatticeStrategy strategy_;
  std::vector<FuzzySet> full_;
};

bool is_consistent(const Context& ctx, const IndexSet& subset);
std::vector<IndexSet> enumerate_reducts(const Context& ctx);

/// Sorts, removes duplicates and validates against `limit`; throws InputError
/// for an empty set or out-of-range index.
IndexSet normalize_subset(IndexSet subset, std::size_t limit);

}  // namespace mafre
