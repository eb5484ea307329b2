#pragma once

// Direct-sum decomposition and isomorphism testing.  Everything reduces to
// idempotents: a module is indecomposable iff its endomorphism algebra has
// no idempotent besides 0 and 1, and two indecomposables are isomorphic iff
// some composite of a map each way is invertible.

#include <optional>
#include <vector>

#include "silting/abstract.hpp"
#include "silting/rep.hpp"

namespace silting {

struct EndAlgebra {
  AbstractAlgebra algebra;
  std::vector<ModuleMap> basis;
  Representation module;

  ModuleMap realize(const Vec& coords) const;
  Vec coords_of(const ModuleMap& f) const;
};

EndAlgebra end_algebra(const Representation& x);

// A nontrivial idempotent of the algebra, or nullopt with a certificate that
// none exists (the algebra is local).  Search order: Fitting idempotents of
// basis elements, shifted basis elements, pairwise sums and products; then
// exhaustive enumeration when p^dim fits the cap; then the radical route.
// Throws if every route is exhausted without a certificate.
std::optional<Vec> find_nontrivial_idempotent(const AbstractAlgebra& e,
                                              int enum_cap_log2 = 16);

// Newton lifting e -> 3e^2 - 2e^3 of an idempotent of a/ideal along a
// nilpotent ideal; x0 is any preimage.
Vec lift_idempotent(const AbstractAlgebra& a, const Vec& x0);

// Orthogonal block idempotents of a split commutative semisimple subalgebra
// (columns of `sub` closed under multiplication, Frobenius-fixed).
std::vector<Vec> split_orthogonal_idempotents(const AbstractAlgebra& a,
                                              const Mat& sub, const Vec& unit);

std::vector<Representation> decompose(const Representation& x);
bool is_indecomposable(const Representation& x);

bool is_isomorphic_indec(const Representation& x, const Representation& y);
bool is_isomorphic(const Representation& x, const Representation& y);

// multiset matching of decompositions (Krull-Schmidt)
bool same_summand_multiset(std::vector<Representation> xs,
                           std::vector<Representation> ys);

// radical of End(sum of pairwise non-isomorphic indecomposables), assembled
// structurally: off-diagonal homs plus the shifted local blocks.  The parts
// must tile `e.module` in order.
Mat end_radical_for_summands(const EndAlgebra& e,
                             const std::vector<Representation>& parts);

}  // namespace silting
