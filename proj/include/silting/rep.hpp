#pragma once

// Right modules over a bound quiver algebra as quiver representations.
// Convention: a right module is a representation with one matrix per arrow
// (source -> target); a path a then b acts as M_b * M_a.  Under this
// convention P(i) = e_i A has dim Hom(P(i), X) = dim X_i.

#include <optional>
#include <string>
#include <vector>

#include "silting/algebra.hpp"

namespace silting {

struct Representation {
  AlgebraPtr alg;
  std::vector<int> dims;   // per vertex
  std::vector<Mat> maps;   // per arrow: dims[tgt] x dims[src]

  int num_vertices() const { return static_cast<int>(dims.size()); }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  int dim_at(int v) const { return dims[static_cast<std::size_t>(v)]; }
  const Mat& map_of(int a) const { return maps[static_cast<std::size_t>(a)]; }

  void validate() const;           // shapes and relations
  Mat path_action(const Path& p) const;      // dims[tgt] x dims[src]
  std::vector<Index> vertex_offsets() const;  // block layout, plus total at end

  // right action of an algebra element on the total space
  Mat element_action(const Vec& x) const;
  std::vector<Mat> basis_actions() const;  // one per algebra basis element

  std::string dim_string() const;
};

Representation zero_rep(AlgebraPtr alg);
Representation simple_rep(AlgebraPtr alg, int v);
Representation projective_rep(AlgebraPtr alg, int v);
Representation injective_rep(AlgebraPtr alg, int v);
Representation direct_sum(const Representation& x, const Representation& y);
Representation direct_sum(const std::vector<Representation>& parts);
Representation algebra_as_module(AlgebraPtr alg);   // = sum of all P(v)

// layout helpers for projective/injective vertex slots:
// projective_rep(alg, v) at vertex w is spanned by algebra basis paths
// v ~> w in increasing basis order; injective_rep(alg, v) at w by duals of
// basis paths w ~> v.
std::vector<int> proj_slot_basis(const BoundQuiverAlgebra& alg, int v, int w);
std::vector<int> inj_slot_basis(const BoundQuiverAlgebra& alg, int v, int w);

struct ModuleMap {
  std::vector<Mat> blocks;  // per vertex: Ydims[v] x Xdims[v]
  bool is_zero() const;
};

ModuleMap zero_map(const Representation& x, const Representation& y);
ModuleMap identity_map(const Representation& x);
ModuleMap add(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale(Fp c, const ModuleMap& f);
// compose(f, g): apply g first, then f
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);
bool is_module_map(const Representation& x, const Representation& y,
                   const ModuleMap& f);
bool is_invertible_map(const ModuleMap& f);
ModuleMap inverse_map(const ModuleMap& f);

Vec flatten_map(const ModuleMap& f);
ModuleMap unflatten_map(const Representation& x, const Representation& y,
                        const Vec& coords);

std::vector<ModuleMap> hom_basis(const Representation& x,
                                 const Representation& y);
Index hom_dim(const Representation& x, const Representation& y);

// subrepresentation spanned by per-vertex column spaces (must be invariant);
// the inclusion map is returned through `inclusion` when non-null
Representation sub_rep(const Representation& x, std::vector<Mat> spans,
                       ModuleMap* inclusion);
// quotient by an invariant per-vertex subspace; projection through `proj`,
// and a linear section of it through `section` (not a module map in general)
Representation quotient_rep(const Representation& x,
                            const std::vector<Mat>& spans, ModuleMap* proj,
                            ModuleMap* section = nullptr);

std::vector<Mat> kernel_spaces(const Representation& x,
                               const Representation& y, const ModuleMap& f);
std::vector<Mat> image_spaces(const Representation& x,
                              const Representation& y, const ModuleMap& f);

Representation kernel_rep(const Representation& x, const Representation& y,
                          const ModuleMap& f, ModuleMap* inclusion);
Representation image_rep(const Representation& x, const Representation& y,
                         const ModuleMap& f, ModuleMap* inclusion);
Representation cokernel_rep(const Representation& x, const Representation& y,
                            const ModuleMap& f, ModuleMap* projection);

Representation radical_rep(const Representation& x, ModuleMap* inclusion);
Representation top_rep(const Representation& x, ModuleMap* projection);
Representation socle_rep(const Representation& x, ModuleMap* inclusion);

// k-dual over the opposite algebra; dual(dual(x)) is isomorphic to x
Representation dual_rep(const Representation& x);
ModuleMap dual_map(const Representation& x, const Representation& y,
                   const ModuleMap& f);  // Hom(X,Y) -> Hom(DY, DX)

// trace of M in X: the largest submodule of X generated by images of maps
// from M; X lies in Fac M iff the trace is all of X
std::vector<Mat> trace_spaces(const Representation& m,
                              const Representation& x);
Representation trace_in(const Representation& m, const Representation& x,
                        ModuleMap* inclusion);

// projective cover P -> X (minimal); summand vertices listed in order
struct ProjCover {
  std::vector<int> vertices;
  Representation proj;
  ModuleMap onto;
};
ProjCover projective_cover(const Representation& x);

bool is_projective(const Representation& x);
bool is_injective(const Representation& x);

// map between explicit projective sums recorded by algebra elements:
// entry(r, c) in e_{cod_r} A e_{dom_c} acts by left multiplication
struct ProjMap {
  AlgebraPtr alg;
  std::vector<int> dom, cod;            // summand vertices
  std::vector<std::vector<Vec>> entry;  // [r][c], algebra coordinates

  Representation dom_rep() const;
  Representation cod_rep() const;
  ModuleMap to_module_map() const;
  static ProjMap from_module_map(AlgebraPtr alg, std::vector<int> dom,
                                 std::vector<int> cod, const ModuleMap& f);
};

// Nakayama functor on a map between projective sums: nu P(i) = I(i), and the
// block I(i) -> I(j) of an element a in e_j A e_i is the transpose of right
// multiplication by a.
ModuleMap nakayama_map(const ProjMap& f);
Representation injective_sum(AlgebraPtr alg, const std::vector<int>& vertices);

// per-vertex random change of basis (for Krull-Schmidt robustness tests)
Representation conjugate(const Representation& x,
                         const std::vector<Mat>& base_change);

std::string stack_notation(const Representation& x);

}  // namespace silting
