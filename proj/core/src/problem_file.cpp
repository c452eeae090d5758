#include "mafre/problem_file.hpp"

#include <fstream>
#include <sstream>

#include "mafre/errors.hpp"

namespace mafre {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

long as_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<long>();
}

std::vector<std::string> parse_names(const json& j, const char* key) {
  const json& arr = require(j, key);
  if (!arr.is_array() || arr.empty()) {
    throw InputError(std::string("\"") + key + "\" must be a non-empty array of names");
  }
  std::vector<std::string> out;
  for (const auto& e : arr) {
    if (!e.is_string()) throw InputError(std::string("\"") + key + "\" entries must be strings");
    out.push_back(e.get<std::string>());
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = i + 1; k < out.size(); ++k) {
      if (out[i] == out[k]) {
        throw InputError(std::string("duplicate name \"") + out[i] + "\" in \"" + key + "\"");
      }
    }
  }
  return out;
}

std::vector<std::vector<Level>> parse_matrix(const json& j, const std::string& key, Level n,
                                             std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw InputError("\"" + key + "\" must have " + std::to_string(rows) + " rows");
  }
  std::vector<std::vector<Level>> out(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw InputError("\"" + key + "\" row " + std::to_string(r + 1) + " must have " +
                       std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string where =
          key + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]";
      const long k = as_integer(row[c], where);
      if (k < 0 || k > n) {
        throw InputError(where + " = " + std::to_string(k) + " is outside [0, " +
                         std::to_string(n) + "]");
      }
      out[r].push_back(static_cast<Level>(k));
    }
  }
  return out;
}

TripleSpec parse_triple(const json& j, Level n, std::size_t index) {
  const std::string where = "triples[" + std::to_string(index + 1) + "]";
  if (j.is_string()) return TripleSpec{j.get<std::string>(), {}, {}, {}};
  if (!j.is_object()) throw InputError(where + ": expected a name or a table object");
  TripleSpec t;
  const json& name = require(j, "name");
  if (!name.is_string()) throw InputError(where + ".name must be a string");
  t.name = name.get<std::string>();
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  t.conj = parse_matrix(require(j, "conj"), where + ".conj", n, side, side);
  t.left_residuum =
      parse_matrix(require(j, "left_residuum"), where + ".left_residuum", n, side, side);
  t.right_residuum =
      parse_matrix(require(j, "right_residuum"), where + ".right_residuum", n, side, side);
  return t;
}

AdjointTriple::Table flatten(const std::vector<std::vector<Level>>& m) {
  AdjointTriple::Table out;
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<std::vector<Level>> unflatten(const AdjointTriple::Table& t, Level n) {
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<Level>> out(side);
  for (std::size_t r = 0; r < side; ++r) {
    out[r].assign(t.begin() + static_cast<long>(r * side),
                  t.begin() + static_cast<long>((r + 1) * side));
  }
  return out;
}

std::vector<TripleSpec> specs_of(const Frame& frame) {
  std::vector<TripleSpec> out;
  for (const auto& t : frame.triples()) {
    if (t.is_builtin()) {
      out.push_back({t.name(), {}, {}, {}});
    } else {
      out.push_back({t.name(), unflatten(t.conj_table(), t.granularity()),
                     unflatten(t.left_table(), t.granularity()),
                     unflatten(t.right_table(), t.granularity())});
    }
  }
  return out;
}

}  // namespace

ProblemFile parse_problem(const json& j) {
  if (!j.is_object()) throw InputError("problem file must be a JSON object");
  ProblemFile p;

  const long n = as_integer(require(j, "granularity"), "granularity");
  if (n < 1 || n > kMaxGranularity) {
    throw InputError("granularity must lie in [1, " + std::to_string(kMaxGranularity) + "]");
  }
  p.granularity = static_cast<Level>(n);

  if (auto it = j.find("orientation"); it != j.end()) {
    const std::string o = it->is_string() ? it->get<std::string>() : "";
    if (o == "primal") {
      p.orientation = Orientation::kPrimal;
    } else if (o == "dual") {
      p.orientation = Orientation::kDual;
    } else {
      throw InputError("orientation must be \"primal\" or \"dual\"");
    }
  }

  const json& triples = require(j, "triples");
  if (!triples.is_array() || triples.empty()) {
    throw InputError("\"triples\" must be a non-empty array");
  }
  for (std::size_t i = 0; i < triples.size(); ++i) {
    p.triples.push_back(parse_triple(triples[i], p.granularity, i));
  }

  p.u = parse_names(j, "U");
  p.v = parse_names(j, "V");
  p.w = parse_names(j, "W");

  if (p.orientation == Orientation::kPrimal) {
    p.relation = parse_matrix(require(j, "relation"), "relation", p.granularity, p.u.size(),
                              p.v.size());
  } else {
    p.relation = parse_matrix(require(j, "relation"), "relation", p.granularity, p.v.size(),
                              p.w.size());
  }
  p.rhs = parse_matrix(require(j, "rhs"), "rhs", p.granularity, p.u.size(), p.w.size());

  const json& sigma = require(j, "sigma");
  if (!sigma.is_array() || sigma.size() != p.v.size()) {
    throw InputError("\"sigma\" must list one triple index per element of V");
  }
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const std::string where = "sigma[" + std::to_string(i + 1) + "]";
    const long s = as_integer(sigma[i], where);
    if (s < 1 || static_cast<std::size_t>(s) > p.triples.size()) {
      throw InputError(where + " = " + std::to_string(s) + " does not name one of the " +
                       std::to_string(p.triples.size()) + " triples");
    }
    p.sigma.push_back(static_cast<std::size_t>(s - 1));
  }
  return p;
}

ProblemFile parse_problem_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j);
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

nlohmann::ordered_json to_json(const ProblemFile& p) {
  nlohmann::ordered_json j;
  j["granularity"] = p.granularity;
  j["orientation"] = to_string(p.orientation);
  auto triples = nlohmann::ordered_json::array();
  for (const auto& t : p.triples) {
    if (!t.is_table()) {
      triples.push_back(t.name);
    } else {
      triples.push_back({{"name", t.name},
                         {"conj", *t.conj},
                         {"left_residuum", *t.left_residuum},
                         {"right_residuum", *t.right_residuum}});
    }
  }
  j["triples"] = triples;
  j["U"] = p.u;
  j["V"] = p.v;
  j["W"] = p.w;
  j["relation"] = p.relation;
  auto sigma = nlohmann::ordered_json::array();
  for (std::size_t s : p.sigma) sigma.push_back(s + 1);
  j["sigma"] = sigma;
  j["rhs"] = p.rhs;
  return j;
}

std::string dump_problem(const ProblemFile& p) { return to_json(p).dump(2) + "\n"; }

FramePtr build_frame(const ProblemFile& p) {
  std::vector<AdjointTriple> triples;
  for (const auto& spec : p.triples) {
    if (!spec.is_table()) {
      triples.push_back(builtin_triple(spec.name, p.granularity));
    } else {
      triples.push_back(make_custom_triple(spec.name, p.granularity, flatten(*spec.conj),
                                           flatten(*spec.left_residuum),
                                           flatten(*spec.right_residuum)));
    }
  }
  return std::make_shared<const Frame>(GranularLattice(p.granularity), std::move(triples));
}

FreInstance to_fre(const ProblemFile& p) {
  if (p.orientation != Orientation::kPrimal) throw InputError("problem is not primal");
  return FreInstance(build_frame(p), p.u, p.v, p.w, LevelMatrix(p.granularity, p.relation),
                     p.sigma, LevelMatrix(p.granularity, p.rhs));
}

DualFreInstance to_dual(const ProblemFile& p) {
  if (p.orientation != Orientation::kDual) throw InputError("problem is not dual");
  return DualFreInstance(build_frame(p), p.u, p.v, p.w, LevelMatrix(p.granularity, p.relation),
                         p.sigma, LevelMatrix(p.granularity, p.rhs));
}

ProblemFile from_fre(const FreInstance& fre) {
  ProblemFile p;
  p.granularity = fre.granularity();
  p.orientation = Orientation::kPrimal;
  p.triples = specs_of(fre.frame());
  p.u = fre.rows();
  p.v = fre.unknowns();
  p.w = fre.columns();
  p.relation = fre.coefficients().to_nested();
  p.sigma = fre.sigma();
  p.rhs = fre.rhs().to_nested();
  return p;
}

ProblemFile from_dual(const DualFreInstance& dfre) {
  ProblemFile p;
  p.granularity = dfre.granularity();
  p.orientation = Orientation::kDual;
  p.triples = specs_of(dfre.frame());
  p.u = dfre.rows();
  p.v = dfre.unknowns();
  p.w = dfre.columns();
  p.relation = dfre.coefficients().to_nested();
  p.sigma = dfre.sigma();
  p.rhs = dfre.rhs().to_nested();
  return p;
}

}  // namespace mafre
