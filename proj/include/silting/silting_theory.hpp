#pragma once

// Torsion pairs from two-term silting complexes and the executable forms of
// the structural statements about them: separating/splitting predicates,
// Ext-projective identification, almost-split middle terms, Hom vanishing,
// annihilator quotients.  Verifiers are tri-state so that fixtures violating
// a hypothesis report "inapplicable" rather than failure.

#include <optional>
#include <string>
#include <vector>

#include "silting/ar.hpp"
#include "silting/homological.hpp"
#include "silting/two_term.hpp"

namespace silting {

enum class Verdict { Pass, Fail, Inapplicable };

struct CheckResult {
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "FAIL";
    default: return "inapplicable";
  }
}

bool in_torsion_class(const TwoTermComplex& p, const Representation& x);
bool in_torsion_free_class(const TwoTermComplex& p, const Representation& x);

struct TorsionPairReport {
  std::vector<int> torsion;       // catalog indices
  std::vector<int> torsion_free;
  std::vector<int> unassigned;
  bool split = false;
};

// classify every catalog member; requires a complete catalog
TorsionPairReport torsion_pair(const TwoTermComplex& p,
                               const IndecCatalog& cat);

// split flag of (T(P), F(P)), decided through the catalog when available or
// through the pd_B criterion when gl.dim A <= 1 forces the hypothesis
struct RouteVerdict {
  bool value = false;
  std::string route;
};
RouteVerdict is_separating(const SiltingContext& ctx, const IndecCatalog* cat,
                           int b_bound = 12);

// split flag of (X(P), Y(P)) over B; the Ext^2 route and the B-catalog
// route are cross-checked when both are available
RouteVerdict is_splitting(const SiltingContext& ctx, const IndecCatalog* cat,
                          int b_bound = 12);

CheckResult check_id_restriction(const SiltingContext& ctx,
                                 const IndecCatalog* cat);
CheckResult check_pd_restriction(const SiltingContext& ctx,
                                 const IndecCatalog* cat);

// separating <=> pd_B <= 1 on X(P) under the id restriction (and its dual)
CheckResult verify_separating_criterion(const SiltingContext& ctx,
                                        const IndecCatalog* cat,
                                        int b_bound = 12);

// Ext-projectives of T(P) are exactly add H^0(P); Ext-injectives of F(P)
// are exactly add H^{-1}(nu P)
CheckResult verify_ext_projectives(const SiltingContext& ctx,
                                   const IndecCatalog& cat);

// middle terms of almost split sequences ending at non-projective summands
// of H^0(P) lie in add(H^0(P) + H^{-1}(nu P))
CheckResult verify_ar_middle(const SiltingContext& ctx,
                             const IndecCatalog& cat);

// Hom_B vanishing for images of the torsion-free class
CheckResult verify_hom_vanishing(const SiltingContext& ctx,
                                 const IndecCatalog& cat);

// annihilator of a module inside its algebra (kernel of the action map)
Mat annihilator(const Representation& x);

bool is_tilting_module(const Representation& t);

// H^0(P) is a separating and splitting tilting module over A/ann
CheckResult verify_h0_quotient_tilting(const SiltingContext& ctx,
                                       const IndecCatalog* cat);

// projectivity/injectivity of the canonical B-modules plus the two
// dimension decompositions of B and D(B)
CheckResult verify_b_decompositions(const SiltingContext& ctx,
                                    const IndecCatalog& cat);

// torsion pair axioms on the report: no maps from T to F, and the canonical
// sequence through the trace of H^0(P)
CheckResult verify_torsion_axioms(const SiltingContext& ctx,
                                  const IndecCatalog& cat);

}  // namespace silting
