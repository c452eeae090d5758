#include <gtest/gtest.h>

#include "mafre/algebra.hpp"
#include "mafre/errors.hpp"
#include "support/oracles.hpp"

using namespace mafre;

namespace {

AdjointTriple::Table table_of(Level n, int (*f)(int, int)) {
  AdjointTriple::Table t;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) t.push_back(static_cast<Level>(f(a, b)));
  }
  return t;
}

}  // namespace

TEST(BuiltinTriples, MatchClosedFormsAndSearchedResidua) {
  for (int n = 1; n <= 16; ++n) {
    for (const auto& name : builtin_triple_names()) {
      const AdjointTriple t = builtin_triple(name, n);
      EXPECT_TRUE(t.is_builtin());
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n; ++b) {
          const Level x = static_cast<Level>(a), y = static_cast<Level>(b);
          ASSERT_EQ(t.conj(x, y), oracle::conj(name, n, a, b)) << name << " n=" << n;
          ASSERT_EQ(t.left_residuum(x, y), oracle::left_res(name, n, a, b)) << name << " n=" << n;
          ASSERT_EQ(t.right_residuum(x, y), oracle::right_res(name, n, a, b)) << name << " n=" << n;
        }
      }
    }
  }
}

TEST(BuiltinTriples, AdjunctionHoldsExhaustively) {
  for (int n = 1; n <= 16; ++n) {
    for (const auto& name : builtin_triple_names()) {
      const auto report = verify_adjoint_triple(builtin_triple(name, n), GranularLattice(n));
      EXPECT_TRUE(report.holds) << name << " n=" << n << ": " << report.describe(n);
      EXPECT_EQ(report.checked, static_cast<std::uint64_t>((n + 1) * (n + 1) * (n + 1)));
    }
  }
}

TEST(BuiltinTriples, WorkedValues) {
  const auto sq = builtin_triple(kSquareLeft, 8);
  EXPECT_EQ(apply_conj(sq, make_granular(6, 8), make_granular(7, 8)), make_granular(4, 8));
  EXPECT_EQ(apply_right_residuum(sq, make_granular(2, 8), make_granular(6, 8)),
            make_granular(3, 8));
  EXPECT_EQ(apply_right_residuum(sq, make_granular(0, 8), make_granular(6, 8)),
            make_granular(0, 8));

  const auto g = builtin_triple(kGodel, 8);
  EXPECT_EQ(apply_conj(g, make_granular(4, 8), make_granular(7, 8)), make_granular(4, 8));
  EXPECT_EQ(apply_conj(g, make_granular(8, 8), make_granular(3, 8)), make_granular(3, 8));

  for (const auto& name : builtin_triple_names()) {
    const auto t = builtin_triple(name, 8);
    for (Level z = 0; z <= 8; ++z) {
      EXPECT_EQ(t.right_residuum(z, 0), 8) << name;
      EXPECT_EQ(t.left_residuum(z, 0), 8) << name;
    }
  }
}

TEST(BuiltinTriples, SquareLeftIsNotCommutative) {
  const auto t = builtin_triple(kSquareLeft, 8);
  EXPECT_NE(t.conj(6, 2), t.conj(2, 6));
}

TEST(BuiltinTriples, UnknownNameIsAnInputError) {
  EXPECT_THROW(builtin_triple("lukasiewicz", 8), InputError);
}

TEST(CustomTriples, MaxWithGodelResiduaFailsWithWitness) {
  const Level n = 4;
  const auto conj = table_of(n, [](int a, int b) { return std::max(a, b); });
  const auto godel = builtin_triple(kGodel, n);
  const AdjointTriple broken("max-godel", n, conj, godel.left_table(), godel.right_table());
  const auto report = verify_adjoint_triple(broken, GranularLattice(n));
  ASSERT_FALSE(report.holds);
  ASSERT_TRUE(report.witness.has_value());
  const auto& w = *report.witness;
  const bool a = w.x_leq_left, b = w.conj_leq_z, c = w.y_leq_right;
  EXPECT_FALSE(a == b && b == c);
  // The witness must really break the equivalence under the tables.
  EXPECT_EQ(a, w.x <= broken.left_residuum(w.z, w.y));
  EXPECT_EQ(b, broken.conj(w.x, w.y) <= w.z);
  EXPECT_EQ(c, w.y <= broken.right_residuum(w.z, w.x));
  EXPECT_NE(report.describe(n).find("x="), std::string::npos);

  try {
    make_custom_triple("max-godel", n, conj, godel.left_table(), godel.right_table());
    ADD_FAILURE() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("max-godel"), std::string::npos) << e.what();
  }
  EXPECT_THROW(Frame(GranularLattice(n), {broken}), InputError);
}

TEST(CustomTriples, TablesOfAValidTripleAreAccepted) {
  const auto g = builtin_triple(kGodel, 5);
  const auto t = make_custom_triple("min", 5, g.conj_table(), g.left_table(), g.right_table());
  EXPECT_FALSE(t.is_builtin());
  EXPECT_EQ(t.conj(3, 4), 3);
}

TEST(CustomTriples, BadShapesAreRejected) {
  const auto g = builtin_triple(kGodel, 3);
  AdjointTriple::Table short_table(5, 0);
  EXPECT_THROW(AdjointTriple("x", 3, short_table, g.left_table(), g.right_table()), InputError);
  auto bad = g.conj_table();
  bad[0] = 7;
  EXPECT_THROW(AdjointTriple("x", 3, bad, g.left_table(), g.right_table()), InputError);
}

TEST(Frame, RejectsMismatchedOrEmptyTriples) {
  EXPECT_THROW(Frame(GranularLattice(8), {builtin_triple(kGodel, 4)}), InputError);
  EXPECT_THROW(Frame(GranularLattice(8), {}), InputError);
  const auto f = make_frame(8, {kSquareLeft, kSquareRight});
  EXPECT_EQ(f->triple_count(), 2u);
  EXPECT_EQ(f->triple(1).name(), kSquareRight);
}

TEST(Apply, GranularityMismatchIsAnInputError) {
  const auto t = builtin_triple(kGodel, 8);
  EXPECT_THROW(apply_conj(t, make_granular(1, 4), make_granular(1, 8)), InputError);
}
