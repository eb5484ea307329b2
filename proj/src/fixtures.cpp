#include "silting/fixtures.hpp"

#include <stdexcept>

namespace silting::fixtures {

AlgebraPtr alg_a3() {
  Quiver q;
  q.vertex_names = {"1", "2", "3"};
  q.arrows = {{"a", 2, 1}, {"b", 1, 0}};
  return path_algebra(q);
}

namespace {
Quiver square_quiver() {
  Quiver q;
  q.vertex_names = {"1", "2", "3", "4"};
  q.arrows = {{"alpha", 3, 1}, {"beta", 1, 0}, {"gamma", 3, 2}, {"delta", 2, 0}};
  return q;
}
}  // namespace

AlgebraPtr alg_her4() { return path_algebra(square_quiver()); }

AlgebraPtr alg_gen4() {
  Quiver q = square_quiver();
  std::vector<LinComb> rels = {monomial_relation(q, {"alpha", "beta"}),
                               monomial_relation(q, {"gamma", "delta"})};
  return BoundQuiverAlgebra::build(q, rels);
}

AlgebraPtr alg_a3_sink() {
  Quiver q;
  q.vertex_names = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 2, 1}};
  return path_algebra(q);
}

AlgebraPtr alg_a3_source() {
  Quiver q;
  q.vertex_names = {"1", "2", "3"};
  q.arrows = {{"a", 1, 0}, {"b", 1, 2}};
  return path_algebra(q);
}

Representation t41(const AlgebraPtr& her4) {
  const Quiver& q = her4->quiver();
  auto quotient_of_p4 = [&](const std::string& arrow) {
    int a = q.arrow_index(arrow);
    int src = q.arrows[static_cast<std::size_t>(a)].tgt;  // P(src) -> P(4)
    ProjMap pm;
    pm.alg = her4;
    pm.dom = {src};
    pm.cod = {3};
    pm.entry = {{her4->path_vector(Path{3, {a}})}};
    Representation dom = pm.dom_rep(), cod = pm.cod_rep();
    return cokernel_rep(dom, cod, pm.to_module_map(), nullptr);
  };
  Representation s1 = simple_rep(her4, 0);
  Representation m431 = quotient_of_p4("alpha");  // kill alpha: top 4 over 3/1
  Representation m421 = quotient_of_p4("gamma");  // kill gamma: top 4 over 2/1
  Representation s4 = simple_rep(her4, 3);
  return direct_sum({s1, m431, m421, s4});
}

TwoTermComplex p41(const AlgebraPtr& her4) {
  return proj_presentation(t41(her4));
}

TwoTermComplex p42(const AlgebraPtr& gen4) {
  const Quiver& q = gen4->quiver();
  TwoTermComplex p1;  // 0 -> P(4)
  p1.d.alg = gen4;
  p1.d.cod = {3};
  p1.d.entry = {{}};
  TwoTermComplex p2;  // P(3) -> P(4) via gamma
  p2.d.alg = gen4;
  p2.d.dom = {2};
  p2.d.cod = {3};
  p2.d.entry = {{gen4->path_vector(Path{3, {q.arrow_index("gamma")}})}};
  TwoTermComplex p3;  // P(2) -> P(4) via alpha
  p3.d.alg = gen4;
  p3.d.dom = {1};
  p3.d.cod = {3};
  p3.d.entry = {{gen4->path_vector(Path{3, {q.arrow_index("alpha")}})}};
  TwoTermComplex p4 = shifted_projectives(gen4, {0});  // 1 -> 0
  return direct_sum_complex({p1, p2, p3, p4});
}

TwoTermComplex p43(const AlgebraPtr& a3) {
  const Quiver& q = a3->quiver();
  TwoTermComplex p1;  // P(1) -> P(2) via b
  p1.d.alg = a3;
  p1.d.dom = {0};
  p1.d.cod = {1};
  p1.d.entry = {{a3->path_vector(Path{1, {q.arrow_index("b")}})}};
  TwoTermComplex p2;  // P(1) -> P(3) via a*b
  p2.d.alg = a3;
  p2.d.dom = {0};
  p2.d.cod = {2};
  p2.d.entry = {
      {a3->path_vector(Path{2, {q.arrow_index("a"), q.arrow_index("b")}})}};
  // the shifted summand is P(1)[1]: this is the unique choice under which
  // the sum is silting and induces the torsion pair ({2, 3/2, 3}, rest)
  TwoTermComplex p3 = shifted_projectives(a3, {0});
  return direct_sum_complex({p1, p2, p3});
}

AlgebraPtr algebra_by_name(const std::string& name) {
  if (name == "ALG-A3") return alg_a3();
  if (name == "ALG-HER4") return alg_her4();
  if (name == "ALG-GEN4") return alg_gen4();
  throw std::invalid_argument("unknown algebra fixture: " + name);
}

bool is_algebra_fixture(const std::string& name) {
  return name == "ALG-A3" || name == "ALG-HER4" || name == "ALG-GEN4";
}

}  // namespace silting::fixtures
