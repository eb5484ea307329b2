#pragma once

// Associative unital F_p-algebras given by structure constants.  This is the
// form in which endomorphism algebras arrive before they get a bound-quiver
// presentation.

#include <vector>

#include "silting/linalg.hpp"

namespace silting {

class AbstractAlgebra {
 public:
  AbstractAlgebra() = default;
  // mult[i] is the left-multiplication matrix of basis element i, so that
  // coords(b_i * x) = mult[i] * coords(x).
  AbstractAlgebra(std::vector<Mat> left_mult, Vec one);

  Index dim() const { return static_cast<Index>(left_mult_.size()); }
  const Vec& one() const { return one_; }

  Vec multiply(const Vec& x, const Vec& y) const;
  Mat left_mult_matrix(const Vec& x) const;   // y -> x*y
  Mat right_mult_matrix(const Vec& x) const;  // y -> y*x
  Vec power(const Vec& x, int n) const;

  bool is_associative() const;  // exhaustive check over basis triples
  bool is_unital() const;

  // Corner algebra e*A*e for an idempotent e; returns the corner together
  // with the embedding of its basis into this algebra (columns).
  struct Corner;
  Corner corner(const Vec& idempotent) const;

  // Quotient by a two-sided ideal (columns span the ideal).  Returns the
  // quotient and the projection matrix parent -> quotient coordinates.
  struct Quotient;
  Quotient quotient(const Mat& ideal_basis) const;

  // Subalgebra/ideal utilities (columns span subspaces of this algebra).
  Mat product_space(const Mat& a, const Mat& b) const;  // span{x*y}
  bool is_two_sided_ideal(const Mat& subspace) const;
  bool is_nilpotent_space(const Mat& subspace) const;

 private:
  std::vector<Mat> left_mult_;
  Vec one_;
};

struct AbstractAlgebra::Corner {
  AbstractAlgebra algebra;
  Mat basis_in_parent;
};

struct AbstractAlgebra::Quotient {
  AbstractAlgebra algebra;
  Mat projection;  // (dim - ideal rank) x dim
  Mat section;     // dim x (dim - ideal rank), right inverse
};

// Jacobson radical over the prime field: iterated kernels of the linear
// forms x -> Tr((L_x L_y)^{p^i}); these are F_p-linear because the trace of
// a p-th power is additive in characteristic p.  Returns a canonical column
// basis.
Mat jacobson_radical(const AbstractAlgebra& a);

// Centre { z : zx = xz for all x }.
Mat algebra_center(const AbstractAlgebra& a);

// Basis of the fixed points of the Frobenius x -> x^p restricted to a
// commutative subalgebra (columns of `sub` must be closed under product).
Mat frobenius_fixed_points(const AbstractAlgebra& a, const Mat& sub);

}  // namespace silting
