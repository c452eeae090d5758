#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mafre/granular.hpp"

namespace mafre {

/// How closed sets are enumerated.
///
/// kObjectClosure   close every point of L^closed_dim and keep distinct images.
/// kAttributeImage  map every point of L^other_dim back to the closed side;
///                  the images are exactly the closed sets.
/// kNextClosure     lectic-order generation; visits only closed sets.
/// kAuto            the cheaper of the two exhaustive routes, or NextClosure
///                  once both exceed kExhaustiveLimit candidates.
enum class LatticeStrategy { kAuto, kObjectClosure, kAttributeImage, kNextClosure };

inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 24;

const char* to_string(LatticeStrategy s);

/// An isotone Galois connection between L^closed_dim and L^other_dim.
/// `from_other` after `to_other` is a closure operator on the closed side.
struct GaloisPair {
  Level granularity = 1;
  std::size_t closed_dim = 0;
  std::size_t other_dim = 0;
  std::function<FuzzySet(const FuzzySet&)> to_other;
  std::function<FuzzySet(const FuzzySet&)> from_other;
};

/// Every closed set paired with its image on the other side, sorted
/// lexicographically by the closed set.
std::vector<std::pair<FuzzySet, FuzzySet>> enumerate_closed(const GaloisPair& pair,
                                                            LatticeStrategy strategy);

/// A fixpoint pair. For property-oriented lattices the extent lives on the
/// objects and the intent on the attributes; object-oriented lattices fill
/// the same fields for their own object and attribute sides.
struct Concept {
  FuzzySet extent;
  FuzzySet intent;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// Finite concept lattice ordered componentwise, with its Hasse diagram.
/// Concepts are kept in lexicographic order of extents so that output is
/// independent of how they were generated.
class ConceptLattice {
 public:
  ConceptLattice() = default;
  explicit ConceptLattice(std::vector<Concept> concepts);

  std::size_t size() const { return concepts_.size(); }
  const std::vector<Concept>& concepts() const { return concepts_; }
  const Concept& concept_at(std::size_t i) const { return concepts_.at(i); }

  std::optional<std::size_t> find_extent(const FuzzySet& extent) const;
  std::optional<std::size_t> find_intent(const FuzzySet& intent) const;

  bool leq(std::size_t i, std::size_t j) const;
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_.at(i); }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_.at(i); }
  /// (lower, upper) pairs in index order.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  std::vector<FuzzySet> extents() const;
  std::vector<FuzzySet> intents() const;

 private:
  std::vector<Concept> concepts_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Elements strictly below `target` with nothing in between, taken from an
/// arbitrary finite family (closed under nothing in particular).
std::vector<std::size_t> maximal_strictly_below(const std::vector<FuzzySet>& family,
                                                const FuzzySet& target);

struct DotOptions {
  bool show_intents = false;
  std::string graph_name = "concepts";
};

/// Hasse diagram in DOT: one node per concept labelled with extent numerators
/// (and optionally intent numerators), edges lower -> upper, drawn bottom-up.
std::string to_dot(const ConceptLattice& lattice, const DotOptions& options = {});

}  // namespace mafre
