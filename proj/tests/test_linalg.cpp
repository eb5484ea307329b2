#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "silting/linalg.hpp"

using namespace silting;

namespace {

Mat random_matrix(Index rows, Index cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(Fp::modulus()) - 1);
  Mat m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = Fp(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rank on the pinned examples") {
  Fp::set_modulus(2);
  CHECK(rank<Fp>(Mat::Identity(2, 2)) == 2);
  CHECK(rank<Fp>(Mat::Zero(3, 2)) == 0);
  Mat m(2, 2);
  m << Fp(1), Fp(1), Fp(1), Fp(1);
  CHECK(rank<Fp>(m) == 1);
}

TEST_CASE("kernel bases") {
  Fp::set_modulus(2);
  CHECK(kernel_basis<Fp>(Mat::Identity(3, 3)).cols() == 0);
  CHECK(kernel_basis<Fp>(Mat::Zero(2, 3)).cols() == 3);
  Mat m(1, 2);
  m << Fp(1), Fp(1);
  Mat k = kernel_basis<Fp>(m);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == Fp(1));
  CHECK(k(1, 0) == Fp(1));
}

TEST_CASE("solve: identity, zero, inconsistent") {
  Fp::set_modulus(2);
  Vec b(2);
  b << Fp(1), Fp(0);
  auto x = solve<Fp>(Mat::Identity(2, 2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CHECK(!solve<Fp>(Mat::Zero(2, 2), b).has_value());

  Mat a(2, 2);
  a << Fp(1), Fp(0), Fp(1), Fp(0);
  CHECK(!solve<Fp>(a, b).has_value());
}

TEST_CASE("empty shapes act as zero maps") {
  Fp::set_modulus(2);
  Mat a(0, 3), b(3, 0);
  CHECK(rank<Fp>(a) == 0);
  CHECK(rank<Fp>(b) == 0);
  CHECK(kernel_basis<Fp>(a).cols() == 3);
  CHECK(kernel_basis<Fp>(b).cols() == 0);
  Mat prod = b * a;  // 3x3 zero through the empty middle
  CHECK(prod.rows() == 3);
  CHECK(is_zero(prod));
}

TEST_CASE("rank-nullity and solve certificates over random matrices") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Fp::set_modulus(p);
    std::mt19937_64 rng(20240131 + p);
    for (int it = 0; it < 1000; ++it) {
      Index rows = static_cast<Index>(rng() % 6);
      Index cols = static_cast<Index>(rng() % 6);
      Mat m = random_matrix(rows, cols, rng);
      Mat k = kernel_basis<Fp>(m);
      CHECK(rank<Fp>(m) + k.cols() == cols);
      if (k.cols() > 0) CHECK(is_zero(Mat(m * k)));

      Vec b = random_matrix(rows, 1, rng);
      auto x = solve<Fp>(m, b);
      if (x) {
        CHECK(is_zero(Mat(m * *x - b)));
      } else {
        CHECK(rank<Fp>(hstack(m, Mat(b))) == rank<Fp>(m) + 1);
      }
    }
  }
  Fp::set_modulus(2);
}

TEST_CASE("canonical column spaces give subspace equality") {
  Fp::set_modulus(3);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Mat m = random_matrix(4, 3, rng);
    Mat g = random_matrix(3, 3, rng);
    if (!is_invertible(g)) continue;
    CHECK(column_space<Fp>(m) == column_space<Fp>(Mat(m * g)));
  }
  Fp::set_modulus(2);
}

TEST_CASE("deterministic elimination: repeated runs agree") {
  Fp::set_modulus(2);
  std::mt19937_64 rng(99);
  Mat m = random_matrix(5, 7, rng);
  auto e1 = row_echelon<Fp>(m);
  auto e2 = row_echelon<Fp>(m);
  CHECK(e1.reduced == e2.reduced);
  CHECK(e1.pivots == e2.pivots);
}
