#include "silting/abstract.hpp"

#include <stdexcept>

namespace silting {

AbstractAlgebra::AbstractAlgebra(std::vector<Mat> left_mult, Vec one)
    : left_mult_(std::move(left_mult)), one_(std::move(one)) {
  Index n = dim();
  if (one_.size() != n)
    throw std::invalid_argument("algebra unit has wrong dimension");
  for (const Mat& m : left_mult_)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("structure constant block has wrong shape");
}

Vec AbstractAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec r = Vec::Zero(dim());
  for (Index i = 0; i < dim(); ++i)
    if (x(i) != Fp(0)) r += x(i) * (left_mult_[static_cast<std::size_t>(i)] * y);
  return r;
}

Mat AbstractAlgebra::left_mult_matrix(const Vec& x) const {
  Mat r = Mat::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i)
    if (x(i) != Fp(0)) r += x(i) * left_mult_[static_cast<std::size_t>(i)];
  return r;
}

Mat AbstractAlgebra::right_mult_matrix(const Vec& x) const {
  // column j = coords(b_j * x)
  Mat r(dim(), dim());
  for (Index j = 0; j < dim(); ++j)
    r.col(j) = left_mult_[static_cast<std::size_t>(j)] * x;
  return r;
}

Vec AbstractAlgebra::power(const Vec& x, int n) const {
  Vec r = one_;
  for (int i = 0; i < n; ++i) r = multiply(r, x);
  return r;
}

bool AbstractAlgebra::is_associative() const {
  Index n = dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vec ij = left_mult_[static_cast<std::size_t>(i)] * unit_vec(n, j);
      for (Index k = 0; k < n; ++k) {
        Vec jk = left_mult_[static_cast<std::size_t>(j)] * unit_vec(n, k);
        Vec lhs = multiply(ij, unit_vec(n, k));
        Vec rhs = left_mult_[static_cast<std::size_t>(i)] * jk;
        if (lhs != rhs) return false;
      }
    }
  return true;
}

bool AbstractAlgebra::is_unital() const {
  Index n = dim();
  for (Index i = 0; i < n; ++i) {
    Vec b = unit_vec(n, i);
    if (multiply(one_, b) != b || multiply(b, one_) != b) return false;
  }
  return true;
}

AbstractAlgebra::Corner AbstractAlgebra::corner(const Vec& e) const {
  // image of x -> e x e
  Mat cols(dim(), dim());
  Mat le = left_mult_matrix(e);
  Mat re = right_mult_matrix(e);
  Mat both = le * re;  // x -> e x e  (left and right actions commute)
  Mat basis = column_space<Fp>(Mat(both));
  Index d = basis.cols();
  std::vector<Mat> mult(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) {
    Mat li = left_mult_matrix(Vec(basis.col(i)));
    // express l_i * basis in corner coordinates
    auto coords = solve_matrix<Fp>(basis, Mat(li * basis));
    if (!coords) throw std::logic_error("corner not multiplicatively closed");
    mult[static_cast<std::size_t>(i)] = *coords;
  }
  auto ecoords = solve<Fp>(basis, e);
  if (!ecoords) throw std::logic_error("corner idempotent outside corner");
  Corner c;
  c.algebra = AbstractAlgebra(std::move(mult), *ecoords);
  c.basis_in_parent = basis;
  return c;
}

AbstractAlgebra::Quotient AbstractAlgebra::quotient(const Mat& ideal) const {
  Index n = dim();
  Mat ib = column_space<Fp>(ideal);
  // complement basis: greedily extend by unit vectors
  Mat full = ib;
  std::vector<Index> chosen;
  for (Index i = 0; i < n && full.cols() < n; ++i) {
    Mat cand = hstack(full, Mat(unit_vec(n, i)));
    if (rank<Fp>(cand) > full.cols()) {
      full = cand;
      chosen.push_back(i);
    }
  }
  Index q = n - ib.cols();
  // projection: coordinates along the complement part of the decomposition
  auto coords = inverse<Fp>(full);
  if (!coords) throw std::logic_error("quotient basis not full rank");
  Mat proj = coords->bottomRows(q);
  Mat section(n, q);
  for (Index j = 0; j < q; ++j)
    section.col(j) = unit_vec(n, chosen[static_cast<std::size_t>(j)]);
  std::vector<Mat> mult(static_cast<std::size_t>(q));
  for (Index i = 0; i < q; ++i) {
    Mat li = left_mult_matrix(Vec(section.col(i)));
    mult[static_cast<std::size_t>(i)] = proj * li * section;
  }
  Quotient out;
  out.algebra = AbstractAlgebra(std::move(mult), Vec(proj * one_));
  out.projection = proj;
  out.section = section;
  return out;
}

Mat AbstractAlgebra::product_space(const Mat& a, const Mat& b) const {
  Mat prods(dim(), a.cols() * b.cols());
  Index k = 0;
  for (Index i = 0; i < a.cols(); ++i) {
    Mat li = left_mult_matrix(Vec(a.col(i)));
    for (Index j = 0; j < b.cols(); ++j) prods.col(k++) = li * b.col(j);
  }
  return column_space<Fp>(prods);
}

bool AbstractAlgebra::is_two_sided_ideal(const Mat& sub) const {
  Mat s = column_space<Fp>(sub);
  for (Index i = 0; i < dim(); ++i) {
    Vec b = unit_vec(dim(), i);
    Mat lb = left_mult_matrix(b), rb = right_mult_matrix(b);
    for (Index j = 0; j < s.cols(); ++j) {
      if (!in_column_space<Fp>(s, Vec(lb * s.col(j)))) return false;
      if (!in_column_space<Fp>(s, Vec(rb * s.col(j)))) return false;
    }
  }
  return true;
}

bool AbstractAlgebra::is_nilpotent_space(const Mat& sub) const {
  Mat cur = column_space<Fp>(sub);
  for (Index it = 0; it <= dim(); ++it) {
    if (cur.cols() == 0) return true;
    Mat next = product_space(cur, sub);
    if (next.cols() >= cur.cols() && next == cur) return false;
    cur = next;
  }
  return cur.cols() == 0;
}

// Radical over the prime field by iterated kernels of the characteristic
// polynomial coefficients of p-power degree: with V_0 = A,
//   V_{i+1} = { x in V_i : c_{p^i}(L_x L_y) = 0 for all y in V_i },
// where c_j is the degree-j elementary symmetric coefficient of the char
// poly in the regular representation.  Restricted to V_i the map is
// F_p-linear (the plain trace form alone degenerates in characteristic p).
// The final V is the radical; the ideal and nilpotency guards below make the
// routine fail loudly rather than return a wrong space.
Mat jacobson_radical(const AbstractAlgebra& a) {
  Index n = a.dim();
  if (n == 0) return Mat(0, 0);
  std::uint32_t p = Fp::modulus();
  std::vector<Mat> reg(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i)
    reg[static_cast<std::size_t>(i)] = a.left_mult_matrix(unit_vec(n, i));
  auto rep_of = [&](const Vec& x) {
    Mat r = Mat::Zero(n, n);
    for (Index t = 0; t < n; ++t)
      if (x(t) != Fp(0)) r += x(t) * reg[static_cast<std::size_t>(t)];
    return r;
  };

  Mat v = Mat::Identity(n, n);
  std::uint64_t pk = 1;
  while (pk <= static_cast<std::uint64_t>(n) && v.cols() > 0) {
    std::vector<Mat> vrep(static_cast<std::size_t>(v.cols()));
    for (Index i = 0; i < v.cols(); ++i)
      vrep[static_cast<std::size_t>(i)] = rep_of(Vec(v.col(i)));
    Mat cond(v.cols(), v.cols());
    for (Index yi = 0; yi < v.cols(); ++yi)
      for (Index xi = 0; xi < v.cols(); ++xi) {
        Mat prod = vrep[static_cast<std::size_t>(xi)] *
                   vrep[static_cast<std::size_t>(yi)];
        std::vector<Fp> cp = char_poly<Fp>(prod);
        // c_j = coefficient of t^{n-j}
        cond(yi, xi) = cp[static_cast<std::size_t>(
            n - static_cast<Index>(pk))];
      }
    Mat k = kernel_basis<Fp>(cond);
    v = column_space<Fp>(Mat(v * k));
    pk *= p;
  }
  if (!a.is_two_sided_ideal(v) || !a.is_nilpotent_space(v))
    throw std::logic_error("radical computation produced an invalid space");
  return v;
}

Mat algebra_center(const AbstractAlgebra& a) {
  Index n = a.dim();
  // conditions [z, b_i] = 0 stacked
  Mat sys(n * n, n);
  for (Index i = 0; i < n; ++i) {
    Vec b = unit_vec(n, i);
    Mat c = a.left_mult_matrix(b) - a.right_mult_matrix(b);
    sys.block(i * n, 0, n, n) = c;
  }
  return column_space<Fp>(kernel_basis<Fp>(sys));
}

Mat frobenius_fixed_points(const AbstractAlgebra& a, const Mat& sub) {
  if (sub.cols() == 0) return sub;
  std::uint32_t p = Fp::modulus();
  // Frobenius on the subalgebra, expressed in sub coordinates
  Mat frob(sub.cols(), sub.cols());
  for (Index j = 0; j < sub.cols(); ++j) {
    Vec x = sub.col(j);
    Vec xp = x;
    for (std::uint32_t e = 1; e < p; ++e) xp = a.multiply(xp, x);
    auto c = solve<Fp>(sub, xp);
    if (!c) throw std::logic_error("subspace not closed under Frobenius");
    frob.col(j) = *c;
  }
  Mat k = kernel_basis<Fp>(Mat(frob - Mat::Identity(sub.cols(), sub.cols())));
  return column_space<Fp>(Mat(sub * k));
}

}  // namespace silting
