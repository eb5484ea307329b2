#pragma once

// Presenting an abstract algebra as a bound quiver algebra: vertices from a
// complete set of primitive orthogonal idempotents (one per block, so the
// presentation is the basic Morita reduct), arrows from rad/rad^2, relations
// from the kernel of the path-algebra surjection.

#include <optional>

#include "silting/abstract.hpp"
#include "silting/algebra.hpp"
#include "silting/rep.hpp"

namespace silting {

struct Quiverized {
  AlgebraPtr algebra;               // the bound quiver presentation
  Mat basis_in_source;              // source-coords of each presented basis elt
  std::vector<Vec> vertex_idempotents;  // in source coordinates
  std::vector<Vec> arrow_reps;          // in source coordinates
  Vec corner_unit;                  // sum of the vertex idempotents
  bool morita_reduced = false;
  std::vector<Index> block_multiplicities;  // per vertex

  // source element -> presented coordinates (only valid on the corner)
  Vec to_presented(const Vec& source_elt) const;
};

Quiverized quiverize(const AbstractAlgebra& a,
                     const Mat* radical_hint = nullptr,
                     bool allow_morita_reduction = true);

// Right module over the source algebra, given by the right-action matrices
// of the source basis, re-expressed as a representation of the quiverized
// presentation.  For Morita-reduced presentations this is the corner module.
Representation module_from_action(const Quiverized& qz,
                                  const std::vector<Mat>& right_action);

// Quotient of a bound quiver algebra by a two-sided ideal, re-presented.
struct QuotientPresentation {
  Quiverized presented;
  AbstractAlgebra quotient;   // abstract quotient of the source
  Mat projection;             // source -> quotient coordinates
  Mat section;                // quotient -> source
};
QuotientPresentation quotient_algebra(const AlgebraPtr& a, const Mat& ideal);

// Restrict a module annihilated by the ideal to the quotient presentation.
Representation restrict_to_quotient(const QuotientPresentation& qp,
                                    const Representation& x);

// Structural comparison of bound quiver presentations up to vertex
// relabelling (and arrow matching with scalar adjustments).  Sound but not
// complete in general; exact for the monomial-relation algebras used here.
bool presentation_isomorphic(const BoundQuiverAlgebra& a,
                             const BoundQuiverAlgebra& b);

// The permutation sending vertices of `a` to vertices of `b` when the
// presentations match; empty if none found.
std::optional<std::vector<int>> presentation_vertex_matching(
    const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);

}  // namespace silting
