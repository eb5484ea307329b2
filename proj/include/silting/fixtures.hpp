#pragma once

// Bundled example algebras, modules and complexes.  The same objects are
// shipped as DSL files under fixtures/; the builders here are the canonical
// in-code constructions, and the parser tests check the two agree.

#include "silting/rep.hpp"
#include "silting/two_term.hpp"

namespace silting::fixtures {

// 3 -> 2 -> 1 linear quiver, no relations
AlgebraPtr alg_a3();
// square quiver alpha: 4->2, beta: 2->1, gamma: 4->3, delta: 3->1, free
AlgebraPtr alg_her4();
// same quiver bound by alpha*beta = 0 and gamma*delta = 0
AlgebraPtr alg_gen4();

// the two other orientations of the A3 line graph (middle sink/source)
AlgebraPtr alg_a3_sink();
AlgebraPtr alg_a3_source();

// tilting module 1 + 4/3/1 + 4/2/1 + 4 over alg_her4
Representation t41(const AlgebraPtr& her4);

// two-term complexes from the worked examples
TwoTermComplex p41(const AlgebraPtr& her4);  // projective presentation of t41
TwoTermComplex p42(const AlgebraPtr& gen4);
TwoTermComplex p43(const AlgebraPtr& a3);

// fixture lookup by name (ALG-A3, ALG-HER4, ALG-GEN4)
AlgebraPtr algebra_by_name(const std::string& name);
bool is_algebra_fixture(const std::string& name);

}  // namespace silting::fixtures
