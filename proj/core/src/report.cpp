#include "mafre/report.hpp"

#include <algorithm>
#include <sstream>

namespace mafre {

using nlohmann::json;

json to_json(const FuzzySet& f) { return json(std::vector<Level>(f.levels().begin(), f.levels().end())); }

json to_json(const LevelMatrix& m) { return json(m.to_nested()); }

json to_json(const std::vector<SliceGap>& gaps) {
  json out = json::array();
  for (const auto& g : gaps) {
    out.push_back({{"slice", g.slice}, {"rhs", to_json(g.rhs)}, {"closure", to_json(g.interior)}});
  }
  return out;
}

json to_json(const SolutionSet& s, bool include_solutions) {
  json j;
  j["orientation"] = to_string(s.orientation);
  j["granularity"] = s.granularity;
  j["count"] = s.total_count();
  json slices = json::array();
  for (const auto& sl : s.slices) {
    json e;
    e["slice"] = sl.slice;
    e["maximum"] = to_json(sl.max_solution);
    json preds = json::array();
    for (const auto& p : sl.excluded_predecessors) preds.push_back(to_json(p));
    e["predecessors"] = preds;
    e["count"] = sl.count;
    json mins = json::array();
    for (const auto& m : sl.minimal_solutions()) mins.push_back(to_json(m));
    e["minimal"] = mins;
    if (include_solutions && sl.enumerated) {
      json all = json::array();
      for (const auto& x : *sl.enumerated) all.push_back(to_json(x));
      e["solutions"] = all;
      e["truncated"] = sl.truncated;
    }
    slices.push_back(e);
  }
  j["slices"] = slices;
  return j;
}

json to_json(const ApproximationResult& r, bool include_solutions) {
  json j;
  j["orientation"] = to_string(r.orientation);
  j["reduct"] = r.reduct;
  j["t_star"] = to_json(r.t_star);
  json mods = json::array();
  for (const auto& c : r.modified) {
    mods.push_back({{"row", c.row},
                    {"column", c.column},
                    {"before", c.before},
                    {"after", c.after},
                    {"steps", c.steps()}});
  }
  j["modified"] = mods;
  j["solutions"] = to_json(r.solutions, include_solutions);
  return j;
}

json to_json(const Diagnosis& d) {
  json j;
  j["solvable"] = d.solvable;
  j["gaps"] = to_json(d.gaps);
  j["has_repair"] = d.has_repair();
  json reducts = json::array();
  for (const auto& r : d.reducts) {
    json e;
    e["reduct"] = r.reduct;
    e["feasible"] = r.feasible;
    if (r.feasible) {
      e["t_star"] = to_json(r.t_star);
      json devs = json::array();
      for (const auto& dev : r.deviations) {
        devs.push_back({{"row", dev.change.row},
                        {"column", dev.change.column},
                        {"before", dev.change.before},
                        {"after", dev.change.after},
                        {"steps", dev.change.steps()},
                        {"severity", to_string(dev.severity)}});
      }
      e["deviations"] = devs;
    }
    reducts.push_back(e);
  }
  j["reducts"] = reducts;
  return j;
}

json to_json(const ConceptLattice& l) {
  json j;
  json concepts = json::array();
  for (const auto& c : l.concepts()) {
    concepts.push_back({{"extent", to_json(c.extent)}, {"intent", to_json(c.intent)}});
  }
  j["size"] = l.size();
  j["concepts"] = concepts;
  json edges = json::array();
  for (const auto& [lo, hi] : l.covers()) edges.push_back({lo, hi});
  j["covers"] = edges;
  j["bottom"] = l.bottom();
  j["top"] = l.top();
  return j;
}

std::string render_matrix(const LevelMatrix& m, const std::vector<std::string>& row_names,
                          const std::vector<std::string>& col_names) {
  std::vector<std::vector<std::string>> cells(m.rows() + 1);
  cells[0].push_back("");
  for (const auto& c : col_names) cells[0].push_back(c);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cells[r + 1].push_back(r < row_names.size() ? row_names[r] : std::to_string(r + 1));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r + 1].push_back(format_level(m(r, c), m.granularity()));
    }
  }
  std::vector<std::size_t> width(m.cols() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  return os.str();
}

std::string render_index_set(const IndexSet& set, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += set[i] < names.size() ? names[set[i]] : std::to_string(set[i]);
  }
  return out + "}";
}

}  // namespace mafre
