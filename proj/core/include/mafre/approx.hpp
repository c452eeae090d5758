#pragma once

#include <string>
#include <vector>

#include "mafre/fre.hpp"

namespace mafre {

/// One rhs entry changed by an approximation.
struct RhsChange {
  std::size_t row = 0;
  std::size_t column = 0;
  Level before = 0;
  Level after = 0;

  unsigned steps() const { return before > after ? before - after : after - before; }
  friend bool operator==(const RhsChange&, const RhsChange&) = default;
};

/// Rows of T outside the reduct are replaced so that the whole system becomes
/// solvable while the reduct's rows keep their values.
struct ApproximationResult {
  Orientation orientation = Orientation::kPrimal;
  IndexSet reduct;  // preserved rows (primal) or columns (dual)
  LevelMatrix t_star;
  std::vector<RhsChange> modified;
  SolutionSet solutions;
};

/// Whether the Y-reduced system is solvable. Y must be a reduct of the
/// associated context (InputError otherwise). For a solvable system this is
/// always true.
bool is_feasible_reduct(const FreInstance& fre, const IndexSet& reduct);

/// Every reduct whose reduced system is solvable, in lexicographic order.
std::vector<IndexSet> find_feasible_reducts(const FreInstance& fre);

/// Experimental: Y consistent and the Y-reduced system solvable. Makes no
/// claim beyond guaranteeing that some feasible reduct lies inside Y.
bool is_feasible_consistent_set(const FreInstance& fre, const IndexSet& subset);

/// T*_w = ((T_Y)_w^{down N_Y})^{up pi}. Throws InputError if Y is not a
/// feasible reduct.
ApproximationResult approximate_by_reduct(const FreInstance& fre, const IndexSet& reduct,
                                          const EnumerationOptions& options = {});

/// Columnwise interior T_w^{down N up pi}; always solvable and below T.
LevelMatrix pessimistic_approximation(const FreInstance& fre);

enum class Severity { kSlight, kNotable };
const char* to_string(Severity s);

struct Deviation {
  RhsChange change;
  Severity severity = Severity::kSlight;
};

struct ReductDiagnosis {
  IndexSet reduct;
  bool feasible = false;
  LevelMatrix t_star;  // only meaningful when feasible
  std::vector<Deviation> deviations;
};

struct DiagnosisOptions {
  /// Deviations of more than this many granular steps are notable.
  unsigned notable_threshold = 1;
};

struct Diagnosis {
  bool solvable = false;
  std::vector<SliceGap> gaps;
  std::vector<ReductDiagnosis> reducts;
  bool has_repair() const;
};

Diagnosis diagnose(const FreInstance& fre, const DiagnosisOptions& options = {});

/// Narrative report naming rows by their labels.
std::string render_text(const Diagnosis& diagnosis, const FreInstance& fre);

}  // namespace mafre
