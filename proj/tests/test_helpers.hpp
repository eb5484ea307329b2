#pragma once

// Shared fixture builders for the unit tests.

#include "silting/algebra.hpp"

namespace silting::testing {

// 3 -> 2 -> 1, no relations
inline AlgebraPtr alg_a3() {
  Quiver q;
  q.vertex_names = {"1", "2", "3"};
  q.arrows = {{"a", 2, 1}, {"b", 1, 0}};
  return path_algebra(q);
}

// alpha: 4->2, beta: 2->1, gamma: 4->3, delta: 3->1, no relations
inline AlgebraPtr alg_her4() {
  Quiver q;
  q.vertex_names = {"1", "2", "3", "4"};
  q.arrows = {{"alpha", 3, 1}, {"beta", 1, 0}, {"gamma", 3, 2}, {"delta", 2, 0}};
  return path_algebra(q);
}

// same quiver with relations alpha*beta = 0, gamma*delta = 0
inline AlgebraPtr alg_gen4() {
  Quiver q;
  q.vertex_names = {"1", "2", "3", "4"};
  q.arrows = {{"alpha", 3, 1}, {"beta", 1, 0}, {"gamma", 3, 2}, {"delta", 2, 0}};
  std::vector<LinComb> rels = {monomial_relation(q, {"alpha", "beta"}),
                               monomial_relation(q, {"gamma", "delta"})};
  return BoundQuiverAlgebra::build(q, rels);
}

// n isolated vertices
inline AlgebraPtr alg_semisimple(int n) {
  Quiver q;
  for (int i = 0; i < n; ++i) q.vertex_names.push_back(std::to_string(i + 1));
  return path_algebra(q);
}

}  // namespace silting::testing
