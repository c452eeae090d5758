#include "mafre/approx.hpp"

#include <algorithm>
#include <sstream>

#include "mafre/errors.hpp"

namespace mafre {

namespace {

std::string join_names(const std::vector<std::string>& names, const IndexSet& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? ", " : "") + names.at(idx[i]);
  return out + "}";
}

std::vector<RhsChange> diff_rhs(const LevelMatrix& before, const LevelMatrix& after) {
  std::vector<RhsChange> out;
  for (std::size_t r = 0; r < before.rows(); ++r) {
    for (std::size_t c = 0; c < before.cols(); ++c) {
      if (before(r, c) != after(r, c)) out.push_back({r, c, before(r, c), after(r, c)});
    }
  }
  return out;
}

LevelMatrix reduct_rhs(const FreInstance& fre, const IndexSet& y) {
  const Context full = associated_context(fre);
  const Context reduced = restrict(full, y);
  const LevelMatrix t_y = fre.rhs().select_rows(y);
  LevelMatrix t_star(fre.rows().size(), fre.columns().size(), fre.granularity());
  for (std::size_t w = 0; w < fre.columns().size(); ++w) {
    t_star.set_column(w, possibility(necessity(t_y.column(w), reduced), full));
  }
  return t_star;
}

}  // namespace

bool is_feasible_reduct(const FreInstance& fre, const IndexSet& reduct) {
  const IndexSet y = normalize_subset(reduct, fre.rows().size());
  const Context ctx = associated_context(fre);
  if (!ReductFinder(ctx).is_reduct(y)) {
    throw InputError(join_names(fre.rows(), y) + " is not a reduct of the associated context");
  }
  return is_solvable(reduce_fre(fre, y, /*enforce_consistency=*/false));
}

std::vector<IndexSet> find_feasible_reducts(const FreInstance& fre) {
  std::vector<IndexSet> out;
  for (auto& y : enumerate_reducts(associated_context(fre))) {
    if (is_solvable(reduce_fre(fre, y, false))) out.push_back(std::move(y));
  }
  return out;
}

bool is_feasible_consistent_set(const FreInstance& fre, const IndexSet& subset) {
  const IndexSet y = normalize_subset(subset, fre.rows().size());
  if (!ReductFinder(associated_context(fre)).is_consistent(y)) return false;
  return is_solvable(reduce_fre(fre, y, false));
}

ApproximationResult approximate_by_reduct(const FreInstance& fre, const IndexSet& reduct,
                                          const EnumerationOptions& options) {
  const IndexSet y = normalize_subset(reduct, fre.rows().size());
  if (!is_feasible_reduct(fre, y)) {
    throw InputError(join_names(fre.rows(), y) + " is not a feasible reduct");
  }
  ApproximationResult out;
  out.orientation = Orientation::kPrimal;
  out.reduct = y;
  out.t_star = reduct_rhs(fre, y);
  out.modified = diff_rhs(fre.rhs(), out.t_star);
  for (const auto& change : out.modified) {
    if (std::binary_search(y.begin(), y.end(), change.row)) {
      throw InternalError("approximation changed a row of the reduct");
    }
  }
  out.solutions = enumerate_solutions(fre.with_rhs(out.t_star), options);
  return out;
}

LevelMatrix pessimistic_approximation(const FreInstance& fre) {
  const Context ctx = associated_context(fre);
  LevelMatrix out = fre.rhs();
  for (std::size_t w = 0; w < fre.columns().size(); ++w) {
    out.set_column(w, attribute_interior(fre.rhs().column(w), ctx));
  }
  return out;
}

const char* to_string(Severity s) { return s == Severity::kNotable ? "notable" : "slight"; }

bool Diagnosis::has_repair() const {
  return std::any_of(reducts.begin(), reducts.end(),
                     [](const ReductDiagnosis& r) { return r.feasible; });
}

Diagnosis diagnose(const FreInstance& fre, const DiagnosisOptions& options) {
  Diagnosis d;
  d.gaps = solvability_gaps(fre);
  d.solvable = d.gaps.empty();
  if (d.solvable) return d;

  for (auto& y : enumerate_reducts(associated_context(fre))) {
    ReductDiagnosis rd;
    rd.reduct = std::move(y);
    rd.feasible = is_solvable(reduce_fre(fre, rd.reduct, false));
    if (rd.feasible) {
      rd.t_star = reduct_rhs(fre, rd.reduct);
      for (const auto& change : diff_rhs(fre.rhs(), rd.t_star)) {
        const Severity sev =
            change.steps() > options.notable_threshold ? Severity::kNotable : Severity::kSlight;
        rd.deviations.push_back({change, sev});
      }
      std::stable_sort(rd.deviations.begin(), rd.deviations.end(),
                       [](const Deviation& a, const Deviation& b) {
                         return a.change.steps() > b.change.steps();
                       });
    }
    d.reducts.push_back(std::move(rd));
  }
  return d;
}

std::string render_text(const Diagnosis& d, const FreInstance& fre) {
  const Level n = fre.granularity();
  const bool single_column = fre.columns().size() == 1;
  auto cell = [&](const RhsChange& c) {
    return single_column ? fre.rows()[c.row] : fre.rows()[c.row] + "/" + fre.columns()[c.column];
  };

  std::ostringstream os;
  if (d.solvable) {
    os << "The system is solvable: no incoherence detected.\n";
    return os.str();
  }
  os << "The system is unsolvable.\n";
  for (const auto& g : d.gaps) {
    os << "  column " << fre.columns()[g.slice] << ": rhs " << g.rhs.to_string()
       << " differs from its closure " << g.interior.to_string() << "\n";
  }
  if (!d.has_repair()) {
    os << "No reduct-based repair exists: every reduct leaves an unsolvable reduced system.\n";
  }
  for (const auto& r : d.reducts) {
    IndexSet outside;
    for (std::size_t u = 0; u < fre.rows().size(); ++u) {
      if (!std::binary_search(r.reduct.begin(), r.reduct.end(), u)) outside.push_back(u);
    }
    const std::string kept = join_names(fre.rows(), r.reduct);
    if (!r.feasible) {
      os << "Reduct " << kept << " is not feasible: the system stays unsolvable while the rows in "
         << kept << " keep their values, whatever the rhs of "
         << (outside.empty() ? std::string("{}") : join_names(fre.rows(), outside)) << ".\n";
      continue;
    }
    os << "Reduct " << kept << " is feasible; its equations are left untouched.\n";
    if (r.deviations.empty()) {
      os << "  No rhs entry needs to change.\n";
      continue;
    }
    for (const auto& dev : r.deviations) {
      const auto& c = dev.change;
      os << "  " << cell(c) << ": " << format_level(c.before, n) << " -> "
         << format_level(c.after, n) << " (" << c.steps() << " step" << (c.steps() == 1 ? "" : "s")
         << ", "
         << (dev.severity == Severity::kNotable ? "notably inaccurate, should be checked"
                                                : "slightly imprecise")
         << ")\n";
    }
  }
  return os.str();
}

}  // namespace mafre
