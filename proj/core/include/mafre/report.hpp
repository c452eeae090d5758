#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mafre/approx.hpp"
#include "mafre/fre.hpp"
#include "mafre/lattice.hpp"

namespace mafre {

// JSON output keeps numerators; the granularity is stated once per document.

nlohmann::json to_json(const FuzzySet& f);
nlohmann::json to_json(const LevelMatrix& m);
nlohmann::json to_json(const std::vector<SliceGap>& gaps);
nlohmann::json to_json(const SolutionSet& s, bool include_solutions);
nlohmann::json to_json(const ApproximationResult& r, bool include_solutions);
nlohmann::json to_json(const Diagnosis& d);
nlohmann::json to_json(const ConceptLattice& l);

/// Aligned decimal table with row and column labels.
std::string render_matrix(const LevelMatrix& m, const std::vector<std::string>& row_names,
                          const std::vector<std::string>& col_names);

/// "{u1, u2}" from indices into `names`.
std::string render_index_set(const IndexSet& set, const std::vector<std::string>& names);

}  // namespace mafre
