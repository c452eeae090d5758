#include "mafre_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "mafre/approx.hpp"
#include "mafre/dual.hpp"
#include "mafre/errors.hpp"
#include "mafre/problem_file.hpp"
#include "mafre/report.hpp"

namespace mafre::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string file;
  std::string set;
  std::string output;
  bool enumerate = false;
  std::optional<std::uint64_t> max_count;
  bool force = false;
  bool pessimistic = false;
  unsigned threshold = 1;
  bool dot = false;
  bool intents = false;
  std::string strategy = "auto";
  std::uint64_t budget = kDefaultBruteForceBudget;
};

LatticeStrategy parse_strategy(const std::string& s) {
  for (auto st : {LatticeStrategy::kAuto, LatticeStrategy::kObjectClosure,
                  LatticeStrategy::kAttributeImage, LatticeStrategy::kNextClosure}) {
    if (s == to_string(st)) return st;
  }
  throw InputError("unknown lattice strategy '" + s + "'");
}

IndexSet resolve_names(const std::string& list, const std::vector<std::string>& universe,
                       const char* what) {
  IndexSet out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    auto it = std::find(universe.begin(), universe.end(), item);
    if (it == universe.end()) throw InputError("unknown " + std::string(what) + " '" + item + "'");
    out.push_back(static_cast<std::size_t>(it - universe.begin()));
  }
  return normalize_subset(std::move(out), universe.size());
}

std::string gap_lines(const std::vector<SliceGap>& gaps, const std::vector<std::string>& names,
                      const char* slice_kind) {
  std::ostringstream os;
  for (const auto& g : gaps) {
    os << "  " << slice_kind << " " << names[g.slice] << ": rhs " << g.rhs.to_string()
       << " differs from its closure " << g.interior.to_string() << "\n";
  }
  return os.str();
}

std::string plural(std::uint64_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

// One problem loaded in either orientation.
struct Loaded {
  ProblemFile file;
  std::optional<FreInstance> primal;
  std::optional<DualFreInstance> dual;

  bool is_dual() const { return dual.has_value(); }
  // Names of the equations that reductions select from.
  const std::vector<std::string>& equation_names() const {
    return is_dual() ? dual->columns() : primal->rows();
  }
  // Names of the independent slices of the unknown.
  const std::vector<std::string>& slice_names() const {
    return is_dual() ? dual->rows() : primal->columns();
  }
  const char* slice_kind() const { return is_dual() ? "row" : "column"; }
  const char* equation_kind() const { return is_dual() ? "column" : "row"; }
};

Loaded load(const std::string& path) {
  Loaded l;
  l.file = load_problem(path);
  if (l.file.orientation == Orientation::kPrimal) {
    l.primal.emplace(to_fre(l.file));
  } else {
    l.dual.emplace(to_dual(l.file));
  }
  return l;
}

class Command {
 public:
  Command(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int check() {
    const Loaded l = load(o_.file);
    const Frame& frame = l.is_dual() ? l.dual->frame() : l.primal->frame();
    const auto& f = l.file;
    json triples = json::array();
    for (const auto& t : frame.triples()) {
      const auto report = verify_adjoint_triple(t, frame.lattice());
      triples.push_back({{"name", t.name()}, {"builtin", t.is_builtin()},
                         {"triples_checked", report.checked}});
    }
    if (o_.json) {
      out_ << json{{"valid", true},
                   {"orientation", to_string(f.orientation)},
                   {"granularity", f.granularity},
                   {"sizes", {{"U", f.u.size()}, {"V", f.v.size()}, {"W", f.w.size()}}},
                   {"triples", triples}}
                  .dump(2)
           << "\n";
      return kExitOk;
    }
    out_ << "valid " << to_string(f.orientation) << " problem: |U|=" << f.u.size()
         << " |V|=" << f.v.size() << " |W|=" << f.w.size() << "\n";
    out_ << plural(frame.triple_count(), "triple") << " verified on [0,1]_" << f.granularity
         << ":\n";
    for (const auto& t : frame.triples()) {
      out_ << "  " << t.name() << (t.is_builtin() ? " (built-in)" : " (table)") << "\n";
    }
    out_ << "sigma:";
    for (std::size_t i = 0; i < f.v.size(); ++i) {
      out_ << " " << f.v[i] << "->" << frame.triple(f.sigma[i]).name();
    }
    out_ << "\n";
    return kExitOk;
  }

  int solve() {
    const Loaded l = load(o_.file);
    const auto gaps = l.is_dual() ? dual_solvability_gaps(*l.dual) : solvability_gaps(*l.primal);
    if (!gaps.empty()) {
      if (o_.json) {
        out_ << json{{"solvable", false}, {"gaps", to_json(gaps)}}.dump(2) << "\n";
      } else {
        out_ << "unsolvable: " << plural(gaps.size(), l.slice_kind())
             << " of the rhs not closed\n"
             << gap_lines(gaps, l.slice_names(), l.slice_kind());
      }
      return kExitUnsolvable;
    }
    EnumerationOptions opts;
    opts.materialize = o_.enumerate;
    opts.max_materialized = o_.max_count;
    opts.strategy = parse_strategy(o_.strategy);
    const SolutionSet s =
        l.is_dual() ? dual_solutions(*l.dual, opts) : enumerate_solutions(*l.primal, opts);
    if (o_.json) {
      json j = to_json(s, o_.enumerate);
      j["solvable"] = true;
      out_ << j.dump(2) << "\n";
      return kExitOk;
    }
    out_ << "solvable\n";
    if (l.is_dual()) {
      out_ << "maximum solution (U x V):\n"
           << render_matrix(dual_max_solution(*l.dual), l.dual->rows(), l.dual->unknowns());
    } else {
      out_ << "maximum solution (V x W):\n"
           << render_matrix(max_solution(*l.primal), l.primal->unknowns(), l.primal->columns());
    }
    const std::uint64_t total = s.total_count();
    out_ << "solutions: "
         << (total == UINT64_MAX ? std::string("more than 2^64") : std::to_string(total)) << "\n";
    for (const auto& sl : s.slices) {
      out_ << l.slice_kind() << " " << l.slice_names()[sl.slice] << ": maximum "
           << sl.max_solution.to_string() << ", "
           << plural(sl.excluded_predecessors.size(), "predecessor") << " excluded, "
           << plural(sl.count, "solution") << "\n";
      for (const auto& p : sl.excluded_predecessors) out_ << "  excluded below " << p.to_string() << "\n";
      for (const auto& m : sl.minimal_solutions()) out_ << "  minimal " << m.to_string() << "\n";
      if (sl.enumerated) {
        for (const auto& x : *sl.enumerated) out_ << "  " << x.to_string() << "\n";
        if (sl.truncated) out_ << "  ... (output capped)\n";
      }
    }
    return kExitOk;
  }

  int reducts() {
    const Loaded l = load(o_.file);
    const auto& names = l.equation_names();
    std::vector<IndexSet> all;
    std::optional<bool> consistent, reduct;
    IndexSet set;
    if (l.is_dual()) {
      const DualContext ctx = associated_context(*l.dual);
      DualReductFinder finder(ctx, parse_strategy(o_.strategy));
      all = finder.reducts();
      if (!o_.set.empty()) {
        set = resolve_names(o_.set, names, "column");
        consistent = finder.is_consistent(set);
        reduct = finder.is_reduct(set);
      }
    } else {
      const Context ctx = associated_context(*l.primal);
      ReductFinder finder(ctx, parse_strategy(o_.strategy));
      all = finder.reducts();
      if (!o_.set.empty()) {
        set = resolve_names(o_.set, names, "row");
        consistent = finder.is_consistent(set);
        reduct = finder.is_reduct(set);
      }
    }
    if (o_.json) {
      json j;
      json rs = json::array();
      for (const auto& r : all) {
        json named = json::array();
        for (std::size_t i : r) named.push_back(names[i]);
        rs.push_back(named);
      }
      j["reducts"] = rs;
      if (consistent) {
        j["set"] = {{"members", set}, {"consistent", *consistent}, {"reduct", *reduct}};
      }
      out_ << j.dump(2) << "\n";
      return kExitOk;
    }
    out_ << plural(all.size(), "reduct") << ":\n";
    for (const auto& r : all) out_ << "  " << render_index_set(r, names) << "\n";
    if (consistent) {
      out_ << render_index_set(set, names) << ": "
           << (*reduct ? "consistent, a reduct" : *consistent ? "consistent, not minimal"
                                                              : "not consistent")
           << "\n";
    }
    return kExitOk;
  }

  int reduce() {
    const Loaded l = load(o_.file);
    const IndexSet set = resolve_names(o_.set, l.equation_names(), l.equation_kind());
    ProblemFile reduced;
    try {
      reduced = l.is_dual() ? from_dual(dual_reduce(*l.dual, set, !o_.force))
                            : from_fre(reduce_fre(*l.primal, set, !o_.force));
    } catch (const ConsistencyError&) {
      throw ConsistencyError(render_index_set(set, l.equation_names()) +
                             " is not a consistent set; refusing to reduce (use --force)");
    }
    if (o_.output.empty()) {
      out_ << dump_problem(reduced);
      return kExitOk;
    }
    std::ofstream f(o_.output);
    if (!f) throw InputError("cannot write " + o_.output);
    f << dump_problem(reduced);
    if (o_.json) {
      out_ << json{{"written", o_.output}, {"kept", reduced.orientation == Orientation::kDual
                                                        ? reduced.w
                                                        : reduced.u}}
                  .dump(2)
           << "\n";
    } else {
      out_ << "wrote " << o_.output << " (" << plural(set.size(), "equation") << " kept)\n";
    }
    return kExitOk;
  }

  int approximate() {
    const Loaded l = load(o_.file);
    EnumerationOptions opts;
    opts.strategy = parse_strategy(o_.strategy);
    return l.is_dual() ? approximate_dual(*l.dual, opts) : approximate_primal(*l.primal, opts);
  }

  int lattice() {
    const Loaded l = load(o_.file);
    const LatticeStrategy strategy = parse_strategy(o_.strategy);
    ConceptLattice lat;
    if (l.is_dual()) {
      DualContext ctx = associated_context(*l.dual);
      if (!o_.set.empty()) {
        ctx = restrict_objects(ctx, resolve_names(o_.set, l.equation_names(), "column"));
      }
      lat = build_object_oriented_lattice(ctx, strategy);
    } else {
      Context ctx = associated_context(*l.primal);
      if (!o_.set.empty()) ctx = restrict(ctx, resolve_names(o_.set, l.equation_names(), "row"));
      lat = build_concept_lattice(ctx, strategy);
    }
    if (o_.dot) {
      DotOptions d;
      d.show_intents = o_.intents;
      out_ << to_dot(lat, d);
      return kExitOk;
    }
    if (o_.json) {
      json j = to_json(lat);
      j["granularity"] = l.file.granularity;
      out_ << j.dump(2) << "\n";
      return kExitOk;
    }
    out_ << plural(lat.size(), "concept") << "\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto& c = lat.concept_at(i);
      out_ << "  [" << i << "] extent " << c.extent.to_string();
      if (o_.intents) out_ << " intent " << c.intent.to_string();
      out_ << "\n";
    }
    return kExitOk;
  }

  int oracle() {
    const Loaded l = load(o_.file);
    std::vector<LevelMatrix> brute, analytic;
    EnumerationOptions opts;
    opts.materialize = true;
    if (l.is_dual()) {
      brute = dual_brute_force_solutions(*l.dual, o_.budget);
      if (dual_is_solvable(*l.dual)) analytic = dual_solutions(*l.dual, opts).matrices();
    } else {
      brute = brute_force_solutions(*l.primal, o_.budget);
      if (is_solvable(*l.primal)) analytic = enumerate_solutions(*l.primal, opts).matrices();
    }
    std::sort(brute.begin(), brute.end());
    std::sort(analytic.begin(), analytic.end());
    const bool match = brute == analytic;
    if (o_.json) {
      out_ << json{{"match", match}, {"brute_force", brute.size()}, {"analytic", analytic.size()}}
                  .dump(2)
           << "\n";
    } else if (match) {
      out_ << "MATCH (" << plural(brute.size(), "solution") << ")\n";
    } else {
      out_ << "MISMATCH: brute force found " << plural(brute.size(), "solution")
           << ", the analytic solver " << analytic.size() << "\n";
    }
    return match ? kExitOk : kExitInternalError;
  }

 private:
  int approximate_primal(const FreInstance& fre, const EnumerationOptions& opts) {
    if (o_.pessimistic) {
      const LevelMatrix p = pessimistic_approximation(fre);
      if (o_.json) {
        out_ << json{{"pessimistic", to_json(p)}, {"rhs", to_json(fre.rhs())}}.dump(2) << "\n";
      } else {
        out_ << "pessimistic rhs (U x W):\n" << render_matrix(p, fre.rows(), fre.columns());
      }
      return kExitOk;
    }
    DiagnosisOptions dopts;
    dopts.notable_threshold = o_.threshold;
    const Diagnosis d = diagnose(fre, dopts);
    std::vector<ApproximationResult> results;
    for (const auto& r : d.reducts) {
      if (r.feasible) results.push_back(approximate_by_reduct(fre, r.reduct, opts));
    }
    if (o_.json) {
      json j = to_json(d);
      json approx = json::array();
      for (const auto& r : results) approx.push_back(to_json(r, false));
      j["approximations"] = approx;
      out_ << j.dump(2) << "\n";
      return kExitOk;
    }
    out_ << render_text(d, fre);
    for (const auto& r : results) print_approximation(r, fre.rows(), fre.columns(),
                                                      fre.rows(), "column", fre.columns());
    return kExitOk;
  }

  int approximate_dual(const DualFreInstance& dfre, const EnumerationOptions& opts) {
    const DualContext ctx = associated_context(dfre);
    if (o_.pessimistic) {
      LevelMatrix p = dfre.rhs();
      for (std::size_t u = 0; u < p.rows(); ++u) p.set_row(u, extent_interior(dfre.rhs().row(u), ctx));
      if (o_.json) {
        out_ << json{{"pessimistic", to_json(p)}, {"rhs", to_json(dfre.rhs())}}.dump(2) << "\n";
      } else {
        out_ << "pessimistic rhs (U x W):\n" << render_matrix(p, dfre.rows(), dfre.columns());
      }
      return kExitOk;
    }
    const auto gaps = dual_solvability_gaps(dfre);
    std::vector<IndexSet> feasible;
    std::vector<ApproximationResult> results;
    if (!gaps.empty()) {
      feasible = dual_find_feasible_reducts(dfre);
      for (const auto& y : feasible) results.push_back(dual_approximate(dfre, y, opts));
    }
    if (o_.json) {
      json approx = json::array();
      for (const auto& r : results) approx.push_back(to_json(r, false));
      out_ << json{{"solvable", gaps.empty()},
                   {"gaps", to_json(gaps)},
                   {"feasible_reducts", feasible},
                   {"approximations", approx}}
                  .dump(2)
           << "\n";
      return kExitOk;
    }
    if (gaps.empty()) {
      out_ << "The system is solvable: no incoherence detected.\n";
      return kExitOk;
    }
    out_ << "The system is unsolvable.\n" << gap_lines(gaps, dfre.rows(), "row");
    if (feasible.empty()) {
      out_ << "No reduct-based repair exists: every I-reduct leaves an unsolvable reduced "
              "system.\n";
    }
    for (const auto& r : results) print_approximation(r, dfre.rows(), dfre.columns(),
                                                      dfre.columns(), "row", dfre.rows());
    return kExitOk;
  }

  void print_approximation(const ApproximationResult& r, const std::vector<std::string>& rows,
                           const std::vector<std::string>& cols,
                           const std::vector<std::string>& reduct_names, const char* slice_kind,
                           const std::vector<std::string>& slice_names) {
    const Level n = r.t_star.granularity();
    out_ << "\nT* for reduct " << render_index_set(r.reduct, reduct_names) << ":\n"
         << render_matrix(r.t_star, rows, cols);
    for (const auto& c : r.modified) {
      const char* sev = c.steps() > o_.threshold ? "notable" : "slight";
      out_ << "  changed " << rows[c.row] << "/" << cols[c.column] << ": "
           << format_level(c.before, n) << " -> " << format_level(c.after, n) << " ("
           << sev << ")\n";
    }
    out_ << "approximated system: " << plural(r.solutions.total_count(), "solution") << "\n";
    for (const auto& sl : r.solutions.slices) {
      out_ << "  " << slice_kind << " " << slice_names[sl.slice] << ": maximum "
           << sl.max_solution.to_string() << "\n";
      for (const auto& m : sl.minimal_solutions()) out_ << "    minimal " << m.to_string() << "\n";
    }
  }

  const Options& o_;
  std::ostream& out_;
};

void report_error(const Options& o, std::ostream& out, std::ostream& err, int code,
                  const std::string& kind, const std::string& message) {
  if (o.json) out << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump(2) << "\n";
  err << "mafre: " << kind << ": " << message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Solve, reduce and repair multi-adjoint fuzzy relation equations", "mafre"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable output");

  std::function<int(Command&)> action;
  auto add = [&](const char* name, const char* help, int (Command::*fn)()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Problem file (JSON)")->required();
    sub->add_option("--strategy", o.strategy,
                    "Lattice construction: auto, object-closure, attribute-image, next-closure");
    sub->callback([&action, fn] { action = [fn](Command& c) { return (c.*fn)(); }; });
    return sub;
  };

  add("check", "Validate a problem file and verify its triples", &Command::check);
  auto* solve = add("solve", "Decide solvability and describe the solution set", &Command::solve);
  solve->add_flag("--enumerate", o.enumerate, "List every solution");
  solve->add_option("--max-count", o.max_count, "Cap on listed solutions per slice");
  auto* reducts = add("reducts", "List reducts of the associated context", &Command::reducts);
  reducts->add_option("--set", o.set, "Comma-separated equation names to test");
  auto* reduce = add("reduce", "Write the system restricted to a set of equations",
                     &Command::reduce);
  reduce->add_option("--set", o.set, "Comma-separated equation names to keep")->required();
  reduce->add_flag("--force", o.force, "Reduce even if the set is not consistent");
  reduce->add_option("-o,--output", o.output, "Output file (default: stdout)");
  auto* approx = add("approximate", "Diagnose an unsolvable system and repair its rhs",
                     &Command::approximate);
  approx->add_flag("--pessimistic", o.pessimistic, "Print the interior of the rhs instead");
  approx->add_option("--threshold", o.threshold,
                     "Deviations above this many granular steps are notable");
  auto* lattice = add("lattice", "Print the concept lattice of the associated context",
                      &Command::lattice);
  lattice->add_flag("--dot", o.dot, "Emit a DOT graph");
  lattice->add_flag("--intents", o.intents, "Include intents in node labels");
  lattice->add_option("--set", o.set, "Restrict to these equations first");
  auto* oracle = add("oracle", "Compare the analytic solver with exhaustive search",
                     &Command::oracle);
  oracle->add_option("--budget", o.budget, "Largest number of candidates to scan");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Command cmd(o, out);
  try {
    return action(cmd);
  } catch (const UnsolvableError& e) {
    report_error(o, out, err, kExitUnsolvable, "unsolvable", e.what());
    return kExitUnsolvable;
  } catch (const BudgetExceeded& e) {
    report_error(o, out, err, kExitBudgetExceeded, "budget exceeded", e.what());
    return kExitBudgetExceeded;
  } catch (const InputError& e) {
    report_error(o, out, err, kExitInputError, "input error", e.what());
    return kExitInputError;
  } catch (const ConsistencyError& e) {
    report_error(o, out, err, kExitInputError, "input error", e.what());
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    report_error(o, out, err, kExitInputError, "input error", e.what());
    return kExitInputError;
  } catch (const std::exception& e) {
    report_error(o, out, err, kExitInternalError, "internal error", e.what());
    return kExitInternalError;
  }
}

}  // namespace mafre::cli
