#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "silting/decompose.hpp"
#include "silting/quiverize.hpp"
#include "test_helpers.hpp"

using namespace silting;
using namespace silting::testing;

TEST_CASE("quiverize round-trips the bundled algebras") {
  Fp::set_modulus(2);
  for (auto alg : {alg_a3(), alg_gen4(), alg_her4(), alg_semisimple(2)}) {
    Quiverized qz = quiverize(alg->to_abstract());
    CHECK(qz.algebra->dim() == alg->dim());
    CHECK(presentation_isomorphic(*qz.algebra, *alg));
    CHECK_FALSE(qz.morita_reduced);
  }
}

TEST_CASE("quiverize of End(A + A) Morita-reduces") {
  Fp::set_modulus(2);
  auto a3 = alg_a3();
  Representation m = direct_sum(algebra_as_module(a3), algebra_as_module(a3));
  EndAlgebra e = end_algebra(m);
  Quiverized qz = quiverize(e.algebra);
  CHECK(qz.morita_reduced);
  CHECK(qz.algebra->dim() == a3->dim());
  CHECK(presentation_isomorphic(*qz.algebra, *a3));
}

TEST_CASE("End of the regular module presents the algebra") {
  Fp::set_modulus(2);
  for (auto alg : {alg_a3(), alg_gen4()}) {
    Representation m = algebra_as_module(alg);
    EndAlgebra e = end_algebra(m);
    CHECK(e.algebra.dim() == alg->dim());
    auto parts = decompose(m);
    Mat rad = end_radical_for_summands(e, parts.size() == m.dims.size()
                                              ? parts
                                              : parts);
    Quiverized qz = quiverize(e.algebra, &rad);
    // End_A(A) is A up to opposite; both have the same quiver here up to
    // arrow direction, so compare against the algebra or its opposite
    bool same = presentation_isomorphic(*qz.algebra, *alg) ||
                presentation_isomorphic(*qz.algebra, *alg->opposite());
    CHECK(same);
  }
}

TEST_CASE("quotient by the annihilator of the A3 torsion generator") {
  Fp::set_modulus(2);
  auto a3 = alg_a3();
  // the annihilator of [2] + [3/2] is spanned by e1, b, ab
  Representation x = direct_sum(
      cokernel_rep(projective_rep(a3, 0), projective_rep(a3, 1),
                   [&] {
                     ProjMap pm;
                     pm.alg = a3;
                     pm.dom = {0};
                     pm.cod = {1};
                     pm.entry = {{a3->path_vector(Path{1, {1}})}};
                     return pm.to_module_map();
                   }(),
                   nullptr),
      cokernel_rep(projective_rep(a3, 0), projective_rep(a3, 2),
                   [&] {
                     ProjMap pm;
                     pm.alg = a3;
                     pm.dom = {0};
                     pm.cod = {2};
                     pm.entry = {{a3->path_vector(Path{2, {0, 1}})}};
                     return pm.to_module_map();
                   }(),
                   nullptr));
  // annihilator = kernel of the action map
  Mat act(static_cast<Index>(x.total_dim() * x.total_dim()), a3->dim());
  for (int k = 0; k < a3->dim(); ++k)
    act.col(k) = flatten(x.element_action(unit_vec(a3->dim(), k)));
  Mat ann = kernel_basis<Fp>(act);
  CHECK(ann.cols() == 3);
  QuotientPresentation qp = quotient_algebra(a3, ann);
  CHECK(qp.presented.algebra->dim() == 3);
  CHECK(qp.presented.algebra->num_vertices() == 2);
  CHECK(qp.presented.algebra->num_arrows() == 1);
  CHECK(qp.presented.algebra->relations().empty());
  // restricting the module to the quotient keeps its total dimension
  Representation rx = restrict_to_quotient(qp, x);
  CHECK(rx.total_dim() == x.total_dim());
}

TEST_CASE("quotient by a non-ideal is rejected") {
  Fp::set_modulus(2);
  auto a3 = alg_a3();
  // span{e1} is not a two-sided ideal (e1 * b ... b*e1 = b leaves it)
  Mat sub = Mat(a3->dim(), 1);
  sub.col(0) = a3->idempotent(0);
  CHECK_THROWS(quotient_algebra(a3, sub));
}
