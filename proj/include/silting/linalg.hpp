#pragma once

// Exact dense linear algebra over F_p.  Eigen supplies the dense container
// and expression arithmetic; elimination is written here because it must be
// exact and bit-for-bit deterministic (first nonzero pivot, fixed row order).
// 0 x n and n x 0 matrices are legal everywhere and behave as zero maps.

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "silting/fp.hpp"

namespace Eigen {
template <>
struct NumTraits<silting::Fp> {
  typedef silting::Fp Real;
  typedef silting::Fp NonInteger;
  typedef silting::Fp Literal;
  typedef silting::Fp Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return silting::Fp(0); }
  static inline Real dummy_precision() { return silting::Fp(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace silting {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using ColVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = Matrix<Fp>;
using Vec = ColVec<Fp>;
using Index = Eigen::Index;

template <class S>
struct Echelon {
  Matrix<S> reduced;         // reduced row echelon form
  std::vector<Index> pivots; // pivot column of each of the first `rank` rows
  Index rank = 0;
};

template <class S>
Echelon<S> row_echelon(Matrix<S> m) {
  Echelon<S> e;
  Index rows = m.rows(), cols = m.cols(), r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != S(0)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    m.row(r) *= m(r, c).inverse();
    for (Index i = 0; i < rows; ++i)
      if (i != r && m(i, c) != S(0)) m.row(i) -= m(i, c) * m.row(r);
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  e.reduced = std::move(m);
  return e;
}

template <class S>
Index rank(const Matrix<S>& m) {
  return row_echelon(m).rank;
}

template <class S>
bool is_zero(const Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != S(0)) return false;
  return true;
}

// Basis of { x : m x = 0 }, one column per basis vector.  Count equals
// cols(m) - rank(m); the basis is the standard one read off the RREF.
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& m) {
  Echelon<S> e = row_echelon(m);
  Index cols = m.cols();
  std::vector<Index> free_cols;
  {
    std::size_t pi = 0;
    for (Index c = 0; c < cols; ++c) {
      if (pi < e.pivots.size() && e.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix<S> k = Matrix<S>::Zero(cols, static_cast<Index>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    Index fc = free_cols[j];
    k(fc, static_cast<Index>(j)) = S(1);
    for (Index r = 0; r < e.rank; ++r)
      k(e.pivots[static_cast<std::size_t>(r)], static_cast<Index>(j)) =
          -e.reduced(r, fc);
  }
  return k;
}

// Columns of m at its pivot positions: the first maximal independent set.
template <class S>
Matrix<S> image_basis(const Matrix<S>& m) {
  Echelon<S> e = row_echelon(m);
  Matrix<S> b(m.rows(), e.rank);
  for (Index j = 0; j < e.rank; ++j)
    b.col(j) = m.col(e.pivots[static_cast<std::size_t>(j)]);
  return b;
}

// Canonical basis of the column space (column-reduced echelon form), unique
// per subspace, so subspace equality is matrix equality.
template <class S>
Matrix<S> column_space(const Matrix<S>& m) {
  Echelon<S> e = row_echelon(Matrix<S>(m.transpose()));
  return e.reduced.topRows(e.rank).transpose();
}

template <class S>
std::optional<Matrix<S>> solve_matrix(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  Echelon<S> e = row_echelon(aug);
  // consistent iff no pivot falls in the b-block
  for (Index p : e.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix<S> x = Matrix<S>::Zero(a.cols(), b.cols());
  for (Index r = 0; r < e.rank; ++r)
    x.row(e.pivots[static_cast<std::size_t>(r)]) =
        e.reduced.row(r).tail(b.cols());
  return x;
}

template <class S>
std::optional<ColVec<S>> solve(const Matrix<S>& a, const ColVec<S>& b) {
  auto x = solve_matrix<S>(a, b);
  if (!x) return std::nullopt;
  return ColVec<S>(x->col(0));
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve_matrix<S>(a, Matrix<S>::Identity(a.rows(), a.rows()));
  return x;
}

template <class S>
bool is_invertible(const Matrix<S>& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

template <class S>
bool in_column_space(const Matrix<S>& basis, const ColVec<S>& v) {
  return solve<S>(basis, v).has_value();
}

template <class S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> m(std::max(a.rows(), b.rows()), a.cols() + b.cols());
  m.setZero();
  m.block(0, 0, a.rows(), a.cols()) = a;
  m.block(0, a.cols(), b.rows(), b.cols()) = b;
  return m;
}

template <class S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> m(a.rows() + b.rows(), std::max(a.cols(), b.cols()));
  m.setZero();
  m.block(0, 0, a.rows(), a.cols()) = a;
  m.block(a.rows(), 0, b.rows(), b.cols()) = b;
  return m;
}

template <class S>
Matrix<S> sum_spaces(const Matrix<S>& a, const Matrix<S>& b) {
  return column_space<S>(hstack(a, b));
}

// Intersection of two column spaces via the kernel of [A | -B].
template <class S>
Matrix<S> intersect_spaces(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() == 0 || b.cols() == 0)
    return Matrix<S>(std::max(a.rows(), b.rows()), 0);
  Matrix<S> k = kernel_basis<S>(hstack(a, Matrix<S>(-b)));
  Matrix<S> inter = a * k.topRows(a.cols());
  return column_space<S>(inter);
}

inline Vec unit_vec(Index n, Index i) {
  Vec v = Vec::Zero(n);
  v(i) = Fp(1);
  return v;
}

// Characteristic polynomial, exact over the field: similarity reduction to
// upper Hessenberg form followed by the leading-minor recurrence.  Returned
// coefficients are ascending: c[0] + c[1] t + ... + c[n] t^n with c[n] = 1.
template <class S>
std::vector<S> char_poly(Matrix<S> m) {
  Index n = m.rows();
  for (Index j = 0; j + 2 < n; ++j) {
    Index piv = -1;
    for (Index i = j + 1; i < n; ++i)
      if (m(i, j) != S(0)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      m.row(piv).swap(m.row(j + 1));
      m.col(piv).swap(m.col(j + 1));
    }
    for (Index i = j + 2; i < n; ++i) {
      if (m(i, j) == S(0)) continue;
      S f = m(i, j) / m(j + 1, j);
      m.row(i) -= f * m.row(j + 1);
      m.col(j + 1) += f * m.col(i);
    }
  }
  // p_k = char poly of leading k x k block of the Hessenberg matrix
  std::vector<std::vector<S>> p(static_cast<std::size_t>(n) + 1);
  p[0] = {S(1)};
  for (Index k = 1; k <= n; ++k) {
    std::vector<S> cur(static_cast<std::size_t>(k) + 1, S(0));
    const auto& prev = p[static_cast<std::size_t>(k - 1)];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] += prev[d];                   // t * p_{k-1}
      cur[d] -= m(k - 1, k - 1) * prev[d];     // - h_kk p_{k-1}
    }
    S sub = S(1);
    for (Index i = k - 2; i >= 0; --i) {
      sub *= m(i + 1, i);
      if (sub == S(0)) break;
      S coef = m(i, k - 1) * sub;
      const auto& pi = p[static_cast<std::size_t>(i)];
      for (std::size_t d = 0; d < pi.size(); ++d) cur[d] -= coef * pi[d];
    }
    p[static_cast<std::size_t>(k)] = std::move(cur);
  }
  return p[static_cast<std::size_t>(n)];
}

// Flatten column-major; the fixed convention used to coordinatize spaces of
// matrices (hom spaces, chain maps).
template <class S>
ColVec<S> flatten(const Matrix<S>& m) {
  ColVec<S> v(m.rows() * m.cols());
  Index k = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  return v;
}

template <class S>
Matrix<S> unflatten(const ColVec<S>& v, Index rows, Index cols) {
  Matrix<S> m(rows, cols);
  Index k = 0;
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = v(k++);
  return m;
}

}  // namespace silting
