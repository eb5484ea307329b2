#pragma once

// Auslander-Reiten machinery: the translate from minimal presentations via
// the Nakayama functor, almost split sequences from the socle of
// Ext^1(Y, tau Y) over End(Y), and the indecomposable catalog grown by
// knitting (tau orbits plus middle terms) with an honest completeness flag.

#include <vector>

#include "silting/decompose.hpp"
#include "silting/rep.hpp"

namespace silting {

struct MinPresentation {
  ProjMap d;        // P1 -> P0 between projective sums
  ModuleMap cover;  // P0 -> X, a projective cover
  Representation p1, p0;
};
MinPresentation min_presentation(const Representation& x);

Representation tau(const Representation& x);      // zero on projectives
Representation tau_inv(const Representation& x);  // zero on injectives

struct AlmostSplit {
  Representation start;  // tau Y
  Representation middle;
  std::vector<Representation> middle_parts;
  Representation end;  // Y
  ModuleMap left;      // start -> middle
  ModuleMap right;     // middle -> end
};
// Y must be indecomposable and non-projective.
AlmostSplit almost_split_sequence(const Representation& y);

struct IndecCatalog {
  AlgebraPtr alg;
  int bound = 0;
  bool complete = false;
  std::vector<Representation> modules;
  std::vector<int> tau_of;       // catalog index of tau(module); -1 if none
  std::vector<bool> projective;
  std::vector<bool> injective;

  int size() const { return static_cast<int>(modules.size()); }
  int find(const Representation& x) const;  // index up to iso, -1 if absent
};

IndecCatalog enumerate_indecomposables(AlgebraPtr alg, int bound);

enum class RepType { Finite, Infinite, Unknown };

// Gabriel: a hereditary algebra is representation-finite iff its Tits form
// is positive definite; decided exactly by integer leading minors.
RepType hereditary_type(const BoundQuiverAlgebra& alg);

}  // namespace silting
