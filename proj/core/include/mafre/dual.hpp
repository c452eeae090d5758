#pragma once

#include <string>
#include <vector>

#include "mafre/approx.hpp"
#include "mafre/fre.hpp"

namespace mafre {

/// An object-oriented context (V, W, S, sigma): attributes V, objects W.
/// The conjunctor takes the attribute-side value first, S(v,w) second.
///
///   f^{down pi}(w) = sup_v f(v) &_{v,w} S(v,w)
///   g^{up N}(v)    = inf_w g(w) <-_{v,w} S(v,w)     (left residuum)
///
/// so f <= g^{up N} iff f^{down pi} <= g. The closed sets on V are the
/// intents of the object-oriented concept lattice.
class DualContext {
 public:
  DualContext(FramePtr frame, std::vector<std::string> attributes,
              std::vector<std::string> objects, LevelMatrix relation,
              std::vector<std::size_t> cell_sigma);

  static DualContext with_attribute_sigma(FramePtr frame, std::vector<std::string> attributes,
                                          std::vector<std::string> objects, LevelMatrix relation,
                                          const std::vector<std::size_t>& attribute_sigma);

  const Frame& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  Level granularity() const { return frame_->granularity(); }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t attribute_count() const { return attributes_.size(); }
  std::size_t object_count() const { return objects_.size(); }
  const LevelMatrix& relation() const { return relation_; }
  std::size_t sigma(std::size_t v, std::size_t w) const { return sigma_[v * objects_.size() + w]; }

 private:
  FramePtr frame_;
  std::vector<std::string> attributes_;
  std::vector<std::string> objects_;
  LevelMatrix relation_;
  std::vector<std::size_t> sigma_;
};

FuzzySet dual_possibility(const FuzzySet& f, const DualContext& ctx);  // down pi
FuzzySet dual_necessity(const FuzzySet& g, const DualContext& ctx);    // up N
FuzzySet intent_closure(const FuzzySet& f, const DualContext& ctx);
FuzzySet extent_interior(const FuzzySet& g, const DualContext& ctx);

GaloisPair intent_galois_pair(const DualContext& ctx);
/// Concepts carry extent on W and intent on V.
ConceptLattice build_object_oriented_lattice(const DualContext& ctx,
                                             LatticeStrategy strategy = LatticeStrategy::kAuto);
std::vector<FuzzySet> intent_set(const DualContext& ctx,
                                 LatticeStrategy strategy = LatticeStrategy::kAuto);

/// Keeps only the objects (columns of S) in `kept`.
DualContext restrict_objects(const DualContext& ctx, const IndexSet& kept);

/// I-side reduct search: compares intent sets under object removal.
class DualReductFinder {
 public:
  explicit DualReductFinder(const DualContext& ctx,
                            LatticeStrategy strategy = LatticeStrategy::kAuto);
  bool is_consistent(const IndexSet& objects) const;
  bool is_reduct(const IndexSet& objects) const;
  std::vector<IndexSet> reducts() const;

 private:
  const DualContext* ctx_;
  LatticeStrategy strategy_;
  std::vector<FuzzySet> full_;
};

bool dual_is_consistent(const DualContext& ctx, const IndexSet& objects);
std::vector<IndexSet> dual_enumerate_reducts(const DualContext& ctx);

/// X (.)_sigma S = T with X over U x V unknown, S over V x W, T over U x W and
/// one triple per row v of S.
class DualFreInstance {
 public:
  DualFreInstance(FramePtr frame, std::vector<std::string> rows,
                  std::vector<std::string> unknowns, std::vector<std::string> columns,
                  LevelMatrix coefficients, std::vector<std::size_t> sigma, LevelMatrix rhs);

  const Frame& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  Level granularity() const { return frame_->granularity(); }
  const std::vector<std::string>& rows() const { return rows_; }          // U
  const std::vector<std::string>& unknowns() const { return unknowns_; }  // V
  const std::vector<std::string>& columns() const { return columns_; }    // W
  const LevelMatrix& coefficients() const { return coefficients_; }       // S, V x W
  const std::vector<std::size_t>& sigma() const { return sigma_; }
  const LevelMatrix& rhs() const { return rhs_; }  // T, U x W

  DualFreInstance with_rhs(LevelMatrix rhs) const;

 private:
  FramePtr frame_;
  std::vector<std::string> rows_;
  std::vector<std::string> unknowns_;
  std::vector<std::string> columns_;
  LevelMatrix coefficients_;
  std::vector<std::size_t> sigma_;
  LevelMatrix rhs_;
};

/// T(u,w) = sup_v X(u,v) &_{sigma(v)} S(v,w)
LevelMatrix dual_sup_compose(const Frame& frame, const LevelMatrix& x, const LevelMatrix& s,
                             const std::vector<std::size_t>& sigma);

DualContext associated_context(const DualFreInstance& dfre);

bool dual_is_solution(const DualFreInstance& dfre, const LevelMatrix& x);
/// Rows u with T_u != T_u^{up N down pi}.
std::vector<SliceGap> dual_solvability_gaps(const DualFreInstance& dfre);
bool dual_is_solvable(const DualFreInstance& dfre);
/// Row u is T_u^{up N}. Throws UnsolvableError.
LevelMatrix dual_max_solution(const DualFreInstance& dfre);
/// Per-row description: (T_u^{up N}] minus the down-sets of its
/// predecessors among the intents.
SolutionSet dual_solutions(const DualFreInstance& dfre, const EnumerationOptions& options = {});

/// Keeps the columns Y of S and T. With enforce_consistency, Y must be
/// I-consistent.
DualFreInstance dual_reduce(const DualFreInstance& dfre, const IndexSet& kept,
                            bool enforce_consistency = true);

std::vector<LevelMatrix> dual_brute_force_solutions(
    const DualFreInstance& dfre, std::uint64_t budget = kDefaultBruteForceBudget);

bool dual_is_feasible_reduct(const DualFreInstance& dfre, const IndexSet& reduct);
std::vector<IndexSet> dual_find_feasible_reducts(const DualFreInstance& dfre);

/// T*_u = ((T_Y)_u^{up N_Y})^{down pi}; agrees with T on the columns in Y.
ApproximationResult dual_approximate(const DualFreInstance& dfre, const IndexSet& reduct,
                                     const EnumerationOptions& options = {});

}  // namespace mafre
