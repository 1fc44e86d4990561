#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torcert/arith.hpp"
#include "torcert/coef.hpp"
#include "torcert/linalg.hpp"

using namespace torcert;

TEST_CASE("perfect squares") {
  Int root;
  CHECK(is_perfect_square(Int(4), &root));
  CHECK(root == 2);
  CHECK_FALSE(is_perfect_square(Int(5)));
  CHECK(is_perfect_square(Int(0), &root));
  CHECK(root == 0);
  CHECK(is_perfect_square(Int("152399025")));  // 12345^2
  CHECK_THROWS_AS((void)is_perfect_square(Int(-1)), Error);
}

TEST_CASE("rational coefficients") {
  Coef a(Rat(1, 3)), b(Rat(1, 6));
  CHECK((a + b) == Coef(Rat(1, 2)));
  CHECK((a * b) == Coef(Rat(1, 18)));
  CHECK((a - a).is_zero());
  CHECK(a.inv() == Coef(3));
}

TEST_CASE("prime field coefficients") {
  Field f5 = Field::prime(5);
  Coef a = Coef::of(Rat(3), f5);
  Coef b = Coef::of(Rat(4), f5);
  CHECK((a + b) == Coef::of(Rat(2), f5));
  CHECK((a * b) == Coef::of(Rat(2), f5));
  CHECK(a.inv() == Coef::of(Rat(2), f5));  // 3*2 = 6 = 1 mod 5

  // Integer literals coerce on contact.
  CHECK((a + Coef(2)).fp_value() == 0);
  CHECK((Coef(1) - a) == Coef::of(Rat(-2), f5));

  // Rationals with invertible denominator embed canonically.
  Coef half = Coef::of(Rat(1, 2), Field::prime(32003));
  CHECK((half + half) == Coef(1));

  // Distinct prime fields never mix.
  Coef c7 = Coef::of(Rat(1), Field::prime(7));
  CHECK_THROWS_AS((void)(a + c7), Error);
  CHECK_THROWS_AS((void)Field::prime(6), Error);
}

TEST_CASE("dense exact linear algebra") {
  CMat a(3, 3);
  a << Coef(1), Coef(2), Coef(3),
       Coef(2), Coef(4), Coef(6),
       Coef(1), Coef(0), Coef(1);
  CHECK(rank_of(a) == 2);
  CMat ker = kernel_basis(a);
  CHECK(ker.cols() == 1);
  CMat prod = a * ker;
  for (int i = 0; i < prod.rows(); ++i) CHECK(prod(i, 0).is_zero());

  // Eigen expression templates with the exact scalar.
  CMat sq = a * a;
  CHECK(sq(0, 0) == Coef(8));

  CVec b(3), x;
  b << Coef(6), Coef(12), Coef(2);
  CHECK(solve_exact(a, b, &x));
  CVec res = a * x;
  for (int i = 0; i < 3; ++i) CHECK(res(i) == b(i));
}

TEST_CASE("linear algebra over F_p") {
  Field fp = Field::prime(32003);
  CMat a(2, 3);
  a << Coef::of(Rat(1), fp), Coef::of(Rat(2), fp), Coef::of(Rat(3), fp),
       Coef::of(Rat(2), fp), Coef::of(Rat(4), fp), Coef::of(Rat(6), fp);
  CHECK(rank_of(a) == 1);
  CMat ker = kernel_basis(a);
  CHECK(ker.cols() == 2);
  CMat prod = a * ker;
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j) CHECK(prod(i, j).is_zero());
}

TEST_CASE("sparse rref agrees with dense rank") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    CMat a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        a(i, j) = Coef(static_cast<long>(rng() % 5) - 2);
    SparseRref sr;
    for (int i = 0; i < rows; ++i) {
      SparseVec v;
      for (int j = 0; j < cols; ++j)
        if (!a(i, j).is_zero()) v.emplace_back(j, a(i, j));
      sr.insert(std::move(v));
    }
    CHECK(sr.rank() == rank_of(a));
  }
}
