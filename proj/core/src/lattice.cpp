#include "mafre/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "mafre/errors.hpp"

namespace mafre {

const char* to_string(LatticeStrategy s) {
  switch (s) {
    case LatticeStrategy::kAuto: return "auto";
    case LatticeStrategy::kObjectClosure: return "object-closure";
    case LatticeStrategy::kAttributeImage: return "attribute-image";
    case LatticeStrategy::kNextClosure: return "next-closure";
  }
  return "?";
}

namespace {

using ClosedPairs = std::vector<std::pair<FuzzySet, FuzzySet>>;

ClosedPairs by_closure(const GaloisPair& p) {
  std::set<FuzzySet> closed;
  FuzzySet g = FuzzySet::constant(p.granularity, p.closed_dim, 0);
  const std::vector<Level> upper(p.closed_dim, p.granularity);
  do {
    closed.insert(p.from_other(p.to_other(g)));
  } while (next_in_box(g.mutable_levels(), upper));

  ClosedPairs out;
  out.reserve(closed.size());
  for (const auto& c : closed) out.emplace_back(c, p.to_other(c));
  return out;
}

ClosedPairs by_image(const GaloisPair& p) {
  std::set<FuzzySet> closed;
  FuzzySet f = FuzzySet::constant(p.granularity, p.other_dim, 0);
  const std::vector<Level> upper(p.other_dim, p.granularity);
  do {
    closed.insert(p.from_other(f));
  } while (next_in_box(f.mutable_levels(), upper));

  ClosedPairs out;
  out.reserve(closed.size());
  for (const auto& c : closed) out.emplace_back(c, p.to_other(c));
  return out;
}

// Lectic enumeration over a product of chains. From closed set g, the next one
// is found at the largest position i for which raising g[i] by one step,
// zeroing everything after i and closing leaves the prefix before i intact.
// Raising by more than one step cannot help: any closed set above the larger
// seed is also above the one-step seed.
ClosedPairs by_next_closure(const GaloisPair& p) {
  auto close = [&](const FuzzySet& g) { return p.from_other(p.to_other(g)); };
  ClosedPairs out;
  FuzzySet current = close(FuzzySet::constant(p.granularity, p.closed_dim, 0));
  while (true) {
    out.emplace_back(current, p.to_other(current));
    bool advanced = false;
    for (std::size_t i = p.closed_dim; i-- > 0;) {
      if (current[i] == p.granularity) continue;
      FuzzySet seed = current;
      seed[i] = static_cast<Level>(current[i] + 1);
      for (std::size_t j = i + 1; j < p.closed_dim; ++j) seed[j] = 0;
      FuzzySet next = close(seed);
      if (std::equal(next.levels().begin(), next.levels().begin() + static_cast<long>(i),
                     current.levels().begin())) {
        current = std::move(next);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;  // lectic order is lexicographic order
}

}  // namespace

ClosedPairs enumerate_closed(const GaloisPair& pair, LatticeStrategy strategy) {
  if (!pair.to_other || !pair.from_other) throw InputError("incomplete Galois pair");
  if (strategy == LatticeStrategy::kAuto) {
    const auto closed_cost = cube_volume(pair.granularity, pair.closed_dim);
    const auto other_cost = cube_volume(pair.granularity, pair.other_dim);
    if (std::min(closed_cost, other_cost) > kExhaustiveLimit) {
      strategy = LatticeStrategy::kNextClosure;
    } else {
      strategy = other_cost < closed_cost ? LatticeStrategy::kAttributeImage
                                          : LatticeStrategy::kObjectClosure;
    }
  }
  switch (strategy) {
    case LatticeStrategy::kObjectClosure: return by_closure(pair);
    case LatticeStrategy::kAttributeImage: return by_image(pair);
    case LatticeStrategy::kNextClosure: return by_next_closure(pair);
    case LatticeStrategy::kAuto: break;
  }
  throw InternalError("unhandled lattice strategy");
}

std::vector<std::size_t> maximal_strictly_below(const std::vector<FuzzySet>& family,
                                                const FuzzySet& target) {
  std::vector<std::size_t> below;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].strictly_less(target)) below.push_back(i);
  }
  // Larger sums first: an element can only be dominated by one processed
  // before it, and every maximal element is accepted when reached.
  std::stable_sort(below.begin(), below.end(), [&](std::size_t a, std::size_t b) {
    return family[a].level_sum() > family[b].level_sum();
  });
  std::vector<std::size_t> maximal;
  for (std::size_t i : below) {
    const bool dominated = std::any_of(maximal.begin(), maximal.end(), [&](std::size_t m) {
      return family[i].leq(family[m]);
    });
    if (!dominated) maximal.push_back(i);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

ConceptLattice::ConceptLattice(std::vector<Concept> concepts) : concepts_(std::move(concepts)) {
  if (concepts_.empty()) throw InputError("a concept lattice has at least one concept");
  std::sort(concepts_.begin(), concepts_.end(),
            [](const Concept& a, const Concept& b) { return a.extent < b.extent; });
  for (std::size_t i = 1; i < concepts_.size(); ++i) {
    if (concepts_[i].extent == concepts_[i - 1].extent) {
      throw InputError("duplicate extent in concept list");
    }
  }

  const std::size_t n = concepts_.size();
  const auto ext = extents();
  lower_.assign(n, {});
  upper_.assign(n, {});
  for (std::size_t j = 0; j < n; ++j) {
    lower_[j] = maximal_strictly_below(ext, ext[j]);
    for (std::size_t i : lower_[j]) upper_[i].push_back(j);
  }

  // Bottom is below everything, top above everything; both exist in a
  // complete lattice, and their sums are extremal.
  bottom_ = 0;
  top_ = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (ext[i].leq(ext[bottom_])) bottom_ = i;
    if (ext[top_].leq(ext[i])) top_ = i;
  }
}

std::optional<std::size_t> ConceptLattice::find_extent(const FuzzySet& extent) const {
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), extent,
                             [](const Concept& c, const FuzzySet& e) { return c.extent < e; });
  if (it == concepts_.end() || it->extent != extent) return std::nullopt;
  return static_cast<std::size_t>(it - concepts_.begin());
}

std::optional<std::size_t> ConceptLattice::find_intent(const FuzzySet& intent) const {
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (concepts_[i].intent == intent) return i;
  }
  return std::nullopt;
}

bool ConceptLattice::leq(std::size_t i, std::size_t j) const {
  return concepts_.at(i).extent.leq(concepts_.at(j).extent);
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    for (std::size_t i : lower_[j]) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FuzzySet> ConceptLattice::extents() const {
  std::vector<FuzzySet> out;
  out.reserve(concepts_.size());
  for (const auto& c : concepts_) out.push_back(c.extent);
  return out;
}

std::vector<FuzzySet> ConceptLattice::intents() const {
  std::vector<FuzzySet> out;
  out.reserve(concepts_.size());
  for (const auto& c : concepts_) out.push_back(c.intent);
  return out;
}

namespace {

std::string numerators(const FuzzySet& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ')';
  return os.str();
}

}  // namespace

std::string to_dot(const ConceptLattice& lattice, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph " << options.graph_name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& c = lattice.concept_at(i);
    os << "  c" << i << " [label=\"" << numerators(c.extent);
    if (options.show_intents) os << "\\n" << numerators(c.intent);
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.covers()) {
    os << "  c" << lo << " -> c" << hi << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mafre
