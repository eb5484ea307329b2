#pragma once

// Two-term complexes of projectives P^{-1} -> P^0, their homotopy-category
// hom spaces, silting/tilting predicates, cohomology, the Nakayama image,
// and the induced complex over B = End(P).  Hom spaces in the homotopy
// category are handled as solution spaces of chain conditions modulo an
// explicit homotopy subspace, with chosen class representatives.

#include <optional>
#include <vector>

#include "silting/ar.hpp"
#include "silting/homological.hpp"
#include "silting/quiverize.hpp"
#include "silting/rep.hpp"

namespace silting {

struct TwoTermComplex {
  ProjMap d;  // dom summands sit in degree -1, cod summands in degree 0

  AlgebraPtr algebra() const { return d.alg; }
  const std::vector<int>& deg_m1() const { return d.dom; }
  const std::vector<int>& deg_0() const { return d.cod; }
  Representation m1_rep() const { return d.dom_rep(); }
  Representation zero_rep_() const { return d.cod_rep(); }
  std::string display() const;
};

TwoTermComplex stalk_complex(AlgebraPtr alg);  // A[0] = (0 -> A)
TwoTermComplex shifted_projectives(AlgebraPtr alg,
                                   const std::vector<int>& vertices);  // P[1]
TwoTermComplex direct_sum_complex(const TwoTermComplex& x,
                                  const TwoTermComplex& y);
TwoTermComplex direct_sum_complex(const std::vector<TwoTermComplex>& parts);

// minimal projective presentation of a module, as a complex in degrees -1, 0
TwoTermComplex proj_presentation(const Representation& m);

Representation h0(const TwoTermComplex& p);
Representation hm1(const TwoTermComplex& p);

// chain map between two-term complexes (shift 0)
struct ChainMap {
  ModuleMap fm1, f0;
};
ChainMap identity_chain_map(const TwoTermComplex& p);
ChainMap compose_chain(const ChainMap& f, const ChainMap& g);

// basis of Hom_{K^b(proj A)}(P, Sigma^i Q) with chosen representatives
struct HomShift {
  int shift = 0;
  Index dim = 0;
  Mat class_basis;  // [homotopy subspace | representatives], flattened
  Index sub_dim = 0;
  // representatives in unflattened form:
  std::vector<ChainMap> reps0;      // shift 0
  std::vector<ModuleMap> reps_one;  // shift 1: P^{-1} -> Q^0; shift -1: P^0 -> Q^{-1}

  Vec coords(const Vec& flattened) const;  // class coordinates
};

HomShift hom_shift(const TwoTermComplex& p, const TwoTermComplex& q, int i);

// cancel contractible pairs until the differential is radical
TwoTermComplex minimize_complex(const TwoTermComplex& p);

std::vector<TwoTermComplex> decompose_complex(const TwoTermComplex& p);

bool is_presilting(const TwoTermComplex& p);
bool is_silting(const TwoTermComplex& p);
bool is_tilting(const TwoTermComplex& p);

// mutually inverse chain maps (up to homotopy) between indecomposable
// minimal complexes; nullopt if not isomorphic
struct ComplexIso {
  ChainMap fwd, bwd;
};
std::optional<ComplexIso> homotopy_iso_indec(const TwoTermComplex& x,
                                             const TwoTermComplex& y);
bool homotopy_isomorphic(const TwoTermComplex& x, const TwoTermComplex& y);

// Nakayama image: a two-term complex of injectives with its cohomology
struct NakayamaComplex {
  Representation im1, i0;  // nu P^{-1}, nu P^0
  ModuleMap d;
  Representation h0, hm1;
};
NakayamaComplex nakayama_complex(const TwoTermComplex& p);

// End_{D^b(A)}(P) together with everything needed to move between the
// homotopy-class picture and the bound quiver presentation of B.
struct SiltingContext {
  TwoTermComplex p;                        // basic model: sum of the summand types
  std::vector<TwoTermComplex> summands;    // pairwise non-isomorphic indec
  HomShift end0;                           // End_K(P) classes
  AbstractAlgebra b;                       // algebra on those classes
  Mat b_radical;
  Quiverized qb;                           // bound quiver presentation of B
  std::vector<Vec> summand_identities;     // e_i in B coordinates

  Vec class_of(const ChainMap& f) const;   // End_K class coordinates
  ChainMap realize(const Vec& b_coords) const;
};

SiltingContext make_silting_context(const TwoTermComplex& p);

// Hom_{D^b}(P, Sigma^i X) for a module X: dimension and a basis
struct DbHom {
  int shift = 0;
  Index dim = 0;
  // shift 0: maps P^0 -> X killed by the differential; shift 1: class space
  std::vector<ModuleMap> basis;       // representatives
  Mat class_basis;                    // shift 1 only
  Index sub_dim = 0;
};
DbHom dbhom(const TwoTermComplex& p, const Representation& x, int i);

// modules over the presented B through the two functors
Representation h_module(const SiltingContext& ctx, const Representation& x);
Representation e_module(const SiltingContext& ctx, const Representation& x);

// the induced two-term complex over B from a minimal left add(P)-
// approximation of the stalk A[0]
struct InducedComplex {
  TwoTermComplex q;        // over ctx.qb.algebra
  int approx_summands = 0; // size of P' in indecomposable copies
};
InducedComplex induced_q(const SiltingContext& ctx);

struct DoubleEndoReport {
  bool pass = false;
  Index dim_a = 0, dim_end_q = 0;
  bool tilting = false;
  bool presentation_match = false;  // only meaningful when tilting
};
DoubleEndoReport verify_double_endo(const SiltingContext& ctx);

// all basic two-term silting complexes, via pairs (tau-rigid part, shifted
// projective part) over a complete catalog
std::vector<TwoTermComplex> enumerate_2term_silting(const IndecCatalog& cat);

}  // namespace silting
