#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mafre/dual.hpp"
#include "mafre/fre.hpp"

namespace mafre {

/// A triple in a problem file: either a built-in name, or explicit tables of
/// numerators indexed [first argument][second argument].
struct TripleSpec {
  std::string name;
  std::optional<std::vector<std::vector<Level>>> conj;
  std::optional<std::vector<std::vector<Level>>> left_residuum;
  std::optional<std::vector<std::vector<Level>>> right_residuum;

  bool is_table() const { return conj.has_value(); }
  friend bool operator==(const TripleSpec&, const TripleSpec&) = default;
};

/// In-memory form of the JSON problem file.
///
///   {
///     "granularity": 8,
///     "orientation": "primal",            // optional, "primal" | "dual"
///     "triples": ["sq-left", "sq-right"],
///     "U": ["u1", ...], "V": [...], "W": [...],
///     "relation": [[...], ...],           // R: U x V, or S: V x W for dual
///     "sigma": [1, 1, 2, 1, 2],           // 1-based, one entry per v
///     "rhs": [[...], ...]                 // U x W
///   }
///
/// All truth values are integer numerators over "granularity".
struct ProblemFile {
  Level granularity = 1;
  Orientation orientation = Orientation::kPrimal;
  std::vector<TripleSpec> triples;
  std::vector<std::string> u;
  std::vector<std::string> v;
  std::vector<std::string> w;
  std::vector<std::vector<Level>> relation;
  std::vector<std::size_t> sigma;  // 0-based in memory
  std::vector<std::vector<Level>> rhs;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Throws InputError for any structural or range problem, naming the field.
ProblemFile parse_problem(const nlohmann::json& j);
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem(const std::filesystem::path& path);

/// Keys in the documented order.
nlohmann::ordered_json to_json(const ProblemFile& p);
std::string dump_problem(const ProblemFile& p);

/// Builds and verifies every triple. A table failing the adjunction raises
/// InputError carrying the witness.
FramePtr build_frame(const ProblemFile& p);

FreInstance to_fre(const ProblemFile& p);
DualFreInstance to_dual(const ProblemFile& p);

ProblemFile from_fre(const FreInstance& fre);
ProblemFile from_dual(const DualFreInstance& dfre);

}  // namespace mafre
