#pragma once

// The three worked 5x5 systems over [0,1]_8, as plain numerators.

#include "oracles.hpp"

namespace fixtures {

inline const oracle::Mat& multi_adjoint_relation() {
  static const oracle::Mat r = {{6, 4, 0, 4, 4},
                                {4, 2, 2, 6, 8},
                                {6, 4, 1, 0, 3},
                                {6, 4, 0, 4, 4},
                                {6, 4, 1, 0, 4}};
  return r;
}

inline oracle::System multi_adjoint(const oracle::Vec& rhs) {
  oracle::System s;
  s.n = 8;
  s.r = multi_adjoint_relation();
  s.sigma = {"sq-left", "sq-left", "sq-right", "sq-left", "sq-right"};
  for (int t : rhs) s.t.push_back({t});
  return s;
}

inline oracle::System solvable_example() { return multi_adjoint({2, 4, 0, 2, 0}); }
inline oracle::System unsolvable_example() { return multi_adjoint({4, 7, 3, 5, 1}); }

inline oracle::System max_min_example() {
  oracle::System s;
  s.n = 8;
  s.r = {{4, 2, 6, 5, 2}, {2, 4, 6, 4, 3}, {1, 4, 6, 4, 4}, {2, 4, 4, 4, 3}, {4, 2, 6, 4, 2}};
  s.sigma.assign(5, "godel");
  for (int t : {4, 3, 3, 3, 4}) s.t.push_back({t});
  return s;
}

inline mafre::FuzzySet eighths(const oracle::Vec& v) { return oracle::to_set(8, v); }

}  // namespace fixtures
