// One PASS/FAIL line per acceptance criterion. Exact arithmetic throughout:
// every value below is a numerator over the instance granularity.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mafre/approx.hpp"
#include "mafre/dual.hpp"
#include "mafre/fre.hpp"
#include "support/fixtures.hpp"

using namespace mafre;
using fixtures::eighths;

namespace {

std::string show(const oracle::Vec& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

std::string show(const FuzzySet& f) { return show(oracle::to_vec(f)); }

// Collects failed sub-checks of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

std::vector<oracle::Vec> first_columns(const SolutionSet& s) {
  std::vector<oracle::Vec> out;
  for (const auto& m : s.matrices()) out.push_back(oracle::column(oracle::to_mat(m), 0));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Vec> brute_columns(const FreInstance& fre) {
  std::vector<oracle::Vec> out;
  for (const auto& m : brute_force_solutions(fre)) out.push_back(oracle::column(oracle::to_mat(m), 0));
  std::sort(out.begin(), out.end());
  return out;
}

SolutionSet materialized(const FreInstance& fre) {
  EnumerationOptions o;
  o.materialize = true;
  return enumerate_solutions(fre, o);
}

std::vector<oracle::Mat> sorted_mats(const std::vector<LevelMatrix>& ms) {
  std::vector<oracle::Mat> out;
  for (const auto& m : ms) out.push_back(oracle::to_mat(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Mat> row_product(const std::vector<std::vector<oracle::Vec>>& rows) {
  std::vector<oracle::Mat> out = {oracle::Mat{}};
  for (const auto& row : rows) {
    std::vector<oracle::Mat> next;
    for (const auto& partial : out) {
      for (const auto& x : row) {
        auto m = partial;
        m.push_back(x);
        next.push_back(m);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void criterion1(Check& c) {
  const auto fre = oracle::to_instance(fixtures::solvable_example());
  const Context ctx = associated_context(fre);
  const FuzzySet t = fre.rhs().column(0);
  const FuzzySet down = necessity(t, ctx);
  c.expect(down == eighths({0, 0, 0, 7, 0}), "T^N = " + show(down));
  c.expect(possibility(down, ctx) == t, "T^N^pi != T");
  const oracle::Toy toy{8, fixtures::multi_adjoint_relation(), {}};
  oracle::Toy named = toy;
  named.sigma.assign(5, {"sq-left", "sq-left", "sq-right", "sq-left", "sq-right"});
  const auto tv = oracle::column(fixtures::solvable_example().t, 0);
  c.expect(oracle::down_n(named, tv) == oracle::Vec{0, 0, 0, 7, 0}, "oracle T^N differs");
  c.expect(oracle::up_pi(named, oracle::down_n(named, tv)) == tv, "oracle T^N^pi != T");
}

void criterion2(Check& c) {
  const auto fre = oracle::to_instance(fixtures::solvable_example());
  const auto got = enumerate_reducts(associated_context(fre));
  c.expect(got == std::vector<IndexSet>{{0, 1, 2}, {1, 2, 3}}, "library reducts differ");
  oracle::Toy toy{8, fixtures::multi_adjoint_relation(), {}};
  toy.sigma.assign(5, {"sq-left", "sq-left", "sq-right", "sq-left", "sq-right"});
  c.expect(oracle::reducts(toy) == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 2, 3}},
           "oracle reducts differ");
}

void criterion3(Check& c) {
  const auto fre = oracle::to_instance(fixtures::solvable_example());
  const Context y1 = restrict(associated_context(fre), {0, 1, 2});
  const ConceptLattice lat = build_concept_lattice(y1);
  c.expect(lat.size() == 40, "lattice size " + std::to_string(lat.size()));
  const auto pre = predecessors(lat, eighths({0, 0, 0, 7, 0}));
  c.expect(pre == std::vector<FuzzySet>{eighths({0, 0, 0, 5, 0})},
           "predecessors " + std::to_string(pre.size()));

  oracle::Toy toy{8, fixtures::multi_adjoint_relation(), {}};
  toy.sigma.assign(5, {"sq-left", "sq-left", "sq-right", "sq-left", "sq-right"});
  const auto ext = oracle::extents(oracle::restrict(toy, {0, 1, 2}));
  c.expect(ext.size() == 40, "oracle extent count " + std::to_string(ext.size()));
  c.expect(oracle::predecessors(ext, {0, 0, 0, 7, 0}) == std::set<oracle::Vec>{{0, 0, 0, 5, 0}},
           "oracle predecessors differ");
}

void criterion4(Check& c) {
  const std::vector<oracle::Vec> expected = {{0, 0, 0, 6, 0}, {0, 0, 0, 7, 0}};
  const auto fre = oracle::to_instance(fixtures::solvable_example());
  const auto reduced = reduce_fre(fre, {0, 1, 2});
  c.expect(first_columns(materialized(fre)) == expected, "full solution set differs");
  c.expect(first_columns(materialized(reduced)) == expected, "Y1 solution set differs");
  c.expect(brute_columns(fre) == expected, "brute force on full differs");
  c.expect(brute_columns(reduced) == expected, "brute force on Y1 differs");
}

void criterion5(Check& c) {
  const auto fre = oracle::to_instance(fixtures::solvable_example());
  const auto y3 = reduce_fre(fre, {2, 3}, false);
  const auto sols = first_columns(materialized(y3));
  c.expect(sols.size() == 4, std::to_string(sols.size()) + " solutions");
  c.expect(sols == brute_columns(y3), "brute force differs");
  std::set<int> x4;
  int spurious = 0;
  for (const auto& x : sols) {
    x4.insert(x[3]);
    if (!is_solution(fre, oracle::to_levels(8, {{x[0]}, {x[1]}, {x[2]}, {x[3]}, {x[4]}}))) ++spurious;
  }
  c.expect(x4 == std::set<int>{5, 6, 7, 8}, "x4 values differ");
  c.expect(spurious == 2, std::to_string(spurious) + " spurious");
}

void criterion6(Check& c) {
  const auto fre = oracle::to_instance(fixtures::unsolvable_example());
  const Context ctx = associated_context(fre);
  const FuzzySet t = fre.rhs().column(0);
  const FuzzySet interior = attribute_interior(t, ctx);
  c.expect(interior == eighths({2, 5, 1, 2, 1}) && interior != t, "interior " + show(interior));

  c.expect(is_feasible_reduct(fre, {0, 1, 2}), "Y1 not feasible");
  const FuzzySet y1_down = necessity(eighths({4, 7, 3}), restrict(ctx, {0, 1, 2}));
  c.expect(y1_down == eighths({5, 8, 8, 8, 7}), "Y1 necessity " + show(y1_down));

  c.expect(!is_feasible_reduct(fre, {1, 2, 3}), "Y2 feasible");
  const Context y2 = restrict(ctx, {1, 2, 3});
  const FuzzySet y2_image = possibility(necessity(eighths({7, 3, 5}), y2), y2);
  c.expect(y2_image == eighths({7, 3, 4}), "Y2 image " + show(y2_image));

  EnumerationOptions o;
  o.materialize = true;
  const auto r = approximate_by_reduct(fre, {0, 1, 2}, o);
  const FuzzySet star = r.t_star.column(0);
  c.expect(star == eighths({4, 7, 3, 4, 4}), "T* " + show(star));

  const auto& slice = r.solutions.slices.at(0);
  c.expect(slice.max_solution == eighths({5, 8, 8, 8, 7}), "maximum " + show(slice.max_solution));
  const auto mins = slice.minimal_solutions();
  c.expect(mins == std::vector<FuzzySet>{eighths({0, 0, 0, 0, 7})}, "minimal solutions differ");

  const std::uint64_t count = r.solutions.total_count();
  const std::uint64_t oracle_count = oracle::solution_count(fixtures::multi_adjoint({4, 7, 3, 4, 4}));
  c.expect(count == oracle_count, "library count " + std::to_string(count) + " vs oracle " +
                                      std::to_string(oracle_count));
  c.expect(count == 4734, "approximated instance has " + std::to_string(count) +
                              " solutions, expected 4734");
}

void criterion7(Check& c) {
  const auto fre = oracle::to_instance(fixtures::max_min_example());
  c.expect(is_solvable(fre), "not solvable");
  c.expect(enumerate_reducts(associated_context(fre)) == std::vector<IndexSet>{{0, 1, 2}, {0, 2, 3}},
           "reducts differ");
  c.expect(oracle::reducts(fixtures::max_min_example().context()) ==
               std::vector<std::vector<std::size_t>>{{0, 1, 2}, {0, 2, 3}},
           "oracle reducts differ");
  const auto sols = materialized(fre);
  c.expect(sols.total_count() == 875, std::to_string(sols.total_count()) + " solutions");
  c.expect(oracle::solution_count(fixtures::max_min_example()) == 875, "oracle count differs");
  c.expect(brute_columns(fre).size() == 875, "brute force count differs");
  const auto& slice = sols.slices.at(0);
  c.expect(slice.max_solution == eighths({8, 3, 3, 3, 3}), "maximum " + show(slice.max_solution));
  std::vector<FuzzySet> mins = slice.minimal_solutions();
  std::sort(mins.begin(), mins.end(), [](const FuzzySet& a, const FuzzySet& b) {
    return oracle::to_vec(a) < oracle::to_vec(b);
  });
  const std::vector<FuzzySet> expected = {eighths({4, 0, 0, 0, 3}), eighths({4, 0, 0, 3, 0}),
                                          eighths({4, 0, 3, 0, 0}), eighths({4, 3, 0, 0, 0})};
  c.expect(mins == expected, "minimal solutions differ");
}

void criterion8(Check& c) {
  for (int n = 1; n <= 16; ++n) {
    for (const auto& name : builtin_triple_names()) {
      const AdjointTriple t = builtin_triple(name, n);
      const auto report = verify_adjoint_triple(t, GranularLattice(n));
      const auto cube = static_cast<std::uint64_t>(n + 1) * (n + 1) * (n + 1);
      c.expect(report.holds && report.checked == cube, name + " n=" + std::to_string(n));
      // Second route: closed-form conjunctor and the residua found by search.
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n; ++b) {
          if (t.conj(a, b) != oracle::conj(name, n, a, b) ||
              t.left_residuum(a, b) != oracle::left_res(name, n, a, b) ||
              t.right_residuum(a, b) != oracle::right_res(name, n, a, b)) {
            c.expect(false, name + " table mismatch n=" + std::to_string(n));
            a = n + 1;
            break;
          }
        }
      }
    }
  }
}

void criterion9(Check& c) {
  std::mt19937 rng(9001);
  int contexts = 0;
  for (; contexts < 100; ++contexts) {
    const auto toy = oracle::random_toy(rng, 6, 4, 4);
    const Context ctx = oracle::to_context(toy);
    bool ok = true;
    for (int k = 0; k < 25 && ok; ++k) {
      const auto gv = oracle::random_mat(rng, toy.n, 1, toy.objs())[0];
      const auto fv = oracle::random_mat(rng, toy.n, 1, toy.attrs())[0];
      const auto g = oracle::to_set(toy.n, gv);
      const auto f = oracle::to_set(toy.n, fv);
      ok = ok && oracle::to_vec(possibility(g, ctx)) == oracle::up_pi(toy, gv);
      ok = ok && oracle::to_vec(necessity(f, ctx)) == oracle::down_n(toy, fv);
      ok = ok && g.leq(necessity(f, ctx)) == possibility(g, ctx).leq(f);
      ok = ok && oracle::leq(gv, oracle::down_n(toy, fv)) == oracle::leq(oracle::up_pi(toy, gv), fv);
      const auto cl = object_closure(g, ctx);
      ok = ok && g.leq(cl) && object_closure(cl, ctx) == cl;
      const auto in = attribute_interior(f, ctx);
      ok = ok && in.leq(f) && attribute_interior(in, ctx) == in;
      ok = ok && necessity(possibility(necessity(f, ctx), ctx), ctx) == necessity(f, ctx);
    }
    if (!ok) {
      c.expect(false, "law violated on context " + std::to_string(contexts));
      return;
    }
  }
}

void criterion10(Check& c) {
  std::mt19937 rng(1010);
  int instances = 0;
  for (; instances < 100; ++instances) {
    const auto s = oracle::random_solvable(rng, 6, 4, 4, 1);
    const auto fre = oracle::to_instance(s);
    const auto analytic = sorted_mats(materialized(fre).matrices());
    const auto brute = sorted_mats(brute_force_solutions(fre));
    if (analytic != brute || analytic.size() != oracle::solution_count(s)) {
      c.expect(false, "enumeration differs on instance " + std::to_string(instances));
      return;
    }
  }
  int pairs = 0;
  while (pairs < 60) {
    const auto s = oracle::random_solvable(rng, 5, 5, 3, 1);
    const auto fre = oracle::to_instance(s);
    const auto full = sorted_mats(materialized(fre).matrices());
    for (const auto& y : oracle::all_subsets(s.rows())) {
      if (!is_consistent(associated_context(fre), y)) continue;
      const auto reduced = sorted_mats(materialized(reduce_fre(fre, y)).matrices());
      if (reduced != full || oracle::solution_count(oracle::restrict_rows(s, y)) != full.size()) {
        c.expect(false, "reduced solution set differs on pair " + std::to_string(pairs));
        return;
      }
      ++pairs;
    }
  }
}

void criterion11(Check& c) {
  std::mt19937 rng(1111);
  int checked = 0;
  while (checked < 60) {
    auto s = oracle::random_solvable(rng, 5, 4, 3, 1);
    const auto reducts = oracle::reducts(s.context());
    const IndexSet y = reducts[std::uniform_int_distribution<std::size_t>(0, reducts.size() - 1)(rng)];
    std::uniform_int_distribution<int> level(0, s.n);
    for (std::size_t u = 0; u < s.rows(); ++u) {
      if (!std::binary_search(y.begin(), y.end(), u)) s.t[u][0] = level(rng);
    }
    if (oracle::solution_count(s) != 0) continue;
    const auto fre = oracle::to_instance(s);
    bool ok = !is_solvable(fre) && is_feasible_reduct(fre, y);
    if (ok) {
      const auto r = approximate_by_reduct(fre, y);
      oracle::System fixed = s;
      fixed.t = oracle::to_mat(r.t_star);
      const auto count = oracle::solution_count(fixed);
      ok = count > 0 && is_solvable(fre.with_rhs(r.t_star)) && r.solutions.total_count() == count;
      for (std::size_t u : y) ok = ok && fixed.t[u] == s.t[u];
      ok = ok && reduce_fre(fre.with_rhs(r.t_star), y, false) == reduce_fre(fre, y, false);
    }
    if (!ok) {
      c.expect(false, "repair property failed on instance " + std::to_string(checked));
      return;
    }
    ++checked;
  }
}

void criterion12(Check& c) {
  std::mt19937 rng(1212);
  int solvable = 0;
  for (int i = 0; i < 80; ++i) {
    const auto d = oracle::random_dual(rng, 5, 3, 3, 3, false);
    const auto inst = oracle::to_instance(d);
    const auto expected = row_product(oracle::row_solutions(d));
    std::vector<oracle::Mat> analytic;
    if (dual_is_solvable(inst)) {
      EnumerationOptions o;
      o.materialize = true;
      analytic = sorted_mats(dual_solutions(inst, o).matrices());
    }
    const auto brute = sorted_mats(dual_brute_force_solutions(inst));
    if (analytic != expected || brute != expected) {
      c.expect(false, "dual brute-force disagreement on toy " + std::to_string(i));
      return;
    }
    if (!expected.empty()) ++solvable;
  }
  c.expect(solvable >= 25, "only " + std::to_string(solvable) + " solvable dual toys");
  for (int i = 0; i < 60; ++i) {
    const auto d = oracle::random_dual(rng, 5, 3, 3, 3, true);
    oracle::System p;
    p.n = d.n;
    p.r = oracle::transpose(d.s);
    p.sigma = d.sigma;
    p.t = oracle::transpose(d.t);
    const auto dual = oracle::to_instance(d);
    const auto primal = oracle::to_instance(p);
    bool ok = dual_is_solvable(dual) == is_solvable(primal);
    if (ok && is_solvable(primal)) {
      EnumerationOptions o;
      o.materialize = true;
      std::vector<oracle::Mat> transposed;
      for (const auto& m : enumerate_solutions(primal, o).matrices()) {
        transposed.push_back(oracle::to_mat(m.transposed()));
      }
      std::sort(transposed.begin(), transposed.end());
      ok = dual_max_solution(dual) == max_solution(primal).transposed() &&
           sorted_mats(dual_solutions(dual, o).matrices()) == transposed;
    }
    if (!ok) {
      c.expect(false, "transposition correspondence failed on toy " + std::to_string(i));
      return;
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"solvable 5x5 system: closure fixes T", criterion1},
      {"solvable 5x5 system: reducts", criterion2},
      {"reduced lattice size and predecessor", criterion3},
      {"solution sets of full and reduced system", criterion4},
      {"inconsistent reduction adds spurious solutions", criterion5},
      {"unsolvable instance approximation", criterion6},
      {"max-min instance", criterion7},
      {"exhaustive adjunction, n = 1..16", criterion8},
      {"Galois laws on 100 random contexts", criterion9},
      {"oracle equivalence and reduct solution sets", criterion10},
      {"repair properties on 60 constructed instances", criterion11},
      {"dual brute force and transposition", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    if (c.ok()) {
      std::printf("PASS %2zu %s\n", i + 1, criteria[i].first);
    } else {
      ++failed;
      std::printf("FAIL %2zu %s: %s\n", i + 1, criteria[i].first, c.detail().c_str());
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
