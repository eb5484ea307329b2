#pragma once

// Representation finiteness, representation dimension by generator-
// cogenerator search, and the comparison theorems wired end to end.

#include <optional>

#include "silting/silting_theory.hpp"

namespace silting {

struct Finiteness {
  enum Kind { Finite, Infinite, Unknown } kind = Unknown;
  int count = 0;  // number of indecomposables when finite
  int bound = 0;
  std::string reason;
};

Finiteness is_rep_finite(AlgebraPtr alg, int bound = 12);

struct RepDimReport {
  Finiteness finiteness;
  Dim value;
  std::string reasoning;
};

// rep.dim: 0 for semisimple, 2 for representation-finite non-semisimple
// (certified by gl.dim End of the additive generator), 3 for representation-
// infinite hereditary, otherwise an honest lower bound
RepDimReport rep_dim(AlgebraPtr alg, int bound = 12);

struct AuslanderReport {
  std::vector<int> indices;  // catalog indices of the minimizer
  Dim gldim;
  std::vector<std::pair<std::vector<int>, Dim>> table;
};

AuslanderReport auslander_generator(const IndecCatalog& cat,
                                    int dim_bound = kDefaultDimBound,
                                    int max_candidates = 256);

struct TheoremOutcome {
  Verdict verdict = Verdict::Inapplicable;
  std::string detail;
  std::optional<Dim> repdim_a, repdim_b;
};

// rep.dim B = rep.dim A for a separating silting complex whose torsion-free
// class has injective dimension at most one
TheoremOutcome verify_main_theorem(const SiltingContext& ctx,
                                   const IndecCatalog* cat);

// rep.dim End_A(H^0(P)) = rep.dim A/ann for splitting and separating P
TheoremOutcome verify_h0_endo_repdim(const SiltingContext& ctx,
                                     const IndecCatalog* cat);

// hereditary base: rep.dim B <= 3, and finiteness transfers
TheoremOutcome verify_hereditary_transfer(const SiltingContext& ctx,
                                          const IndecCatalog* cat);

// the classical comparison: a separating and splitting tilting module has
// rep.dim End_A(T) = rep.dim A
TheoremOutcome verify_tilting_repdim(const Representation& t,
                                     const IndecCatalog& cat);

}  // namespace silting
