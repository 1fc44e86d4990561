#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torcert/factor.hpp"

using namespace torcert;

namespace {

bool has_factor(const Factorization& f, const UniPoly& g, int mult) {
  for (const auto& fac : f.factors)
    if (fac.f == g && fac.mult == mult) return true;
  return false;
}

}  // namespace

TEST_CASE("difference of squares") {
  Factorization f = upoly_factor(UniPoly{1, 0, -1});  // 1 - z^2
  REQUIRE(f.factors.size() == 2);
  CHECK(has_factor(f, UniPoly{1, 1}, 1));
  CHECK(has_factor(f, UniPoly{1, -1}, 1));
  CHECK(f.product() == UniPoly{1, 0, -1});
}

TEST_CASE("(1-z)^3 - z is irreducible") {
  UniPoly f = UniPoly{1, -1}.pow(3) - UniPoly{0, 1};
  CHECK(f == UniPoly{1, -4, 3, -1});
  Factorization fac = upoly_factor(f);
  CHECK(fac.is_irreducible());
  CHECK(fac.product() == f);
}

TEST_CASE("(1-z)^5 - z splits off z^2-z+1") {
  UniPoly f = UniPoly{1, -1}.pow(5) - UniPoly{0, 1};
  // Division oracle: z^2 - z + 1 divides f with the expected cofactor.
  UniPoly q;
  REQUIRE(divide_exact(f, UniPoly{1, -1, 1}, &q));
  CHECK(q == UniPoly{1, -5, 4, -1});

  Factorization fac = upoly_factor(f);
  REQUIRE(fac.factors.size() == 2);
  CHECK(has_factor(fac, UniPoly{1, -1, 1}, 1));
  CHECK(has_factor(fac, UniPoly{1, -5, 4, -1}, 1));
  CHECK(fac.product() == f);
}

TEST_CASE("multiplicities and content") {
  // 12 * z^2 * (1+z)^3 * (1 - z + z^2)
  UniPoly d = UniPoly::constant(12) * UniPoly{0, 0, 1} *
              UniPoly{1, 1}.pow(3) * UniPoly{1, -1, 1};
  Factorization f = upoly_factor(d);
  CHECK(has_factor(f, UniPoly{0, 1}, 2));
  CHECK(has_factor(f, UniPoly{1, 1}, 3));
  CHECK(has_factor(f, UniPoly{1, -1, 1}, 1));
  CHECK(f.constant == Rat(12));
  CHECK(f.product() == d);
}

TEST_CASE("cyclotomic factors of z^12 - 1") {
  std::vector<Int> c(13, Int(0));
  c[0] = -1;
  c[12] = 1;
  Factorization f = upoly_factor(UniPoly(std::move(c)));
  REQUIRE(f.factors.size() == 6);
  CHECK(has_factor(f, UniPoly{1, 1}, 1));        // 1+z
  CHECK(has_factor(f, UniPoly{1, 1, 1}, 1));     // 1+z+z^2
  CHECK(has_factor(f, UniPoly{1, 0, 1}, 1));     // 1+z^2
  CHECK(has_factor(f, UniPoly{1, -1, 1}, 1));    // 1-z+z^2
  CHECK(has_factor(f, UniPoly{1, 0, -1, 0, 1}, 1));
  CHECK(f.product().degree() == 12);
}

TEST_CASE("constants and errors") {
  Factorization f = upoly_factor(UniPoly::constant(6));
  CHECK(f.factors.empty());
  CHECK(f.constant == Rat(6));
  CHECK_THROWS_AS(upoly_factor(UniPoly::zero()), Error);
}

TEST_CASE("factor product round trip on random inputs") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly d = UniPoly::constant(Int(1 + static_cast<long>(rng() % 4)));
    int pieces = 1 + rng() % 3;
    for (int i = 0; i < pieces; ++i) {
      int deg = 1 + rng() % 3;
      std::vector<Int> c(deg + 1);
      for (auto& x : c) x = Int(static_cast<long>(rng() % 9) - 4);
      UniPoly g(std::move(c));
      if (g.degree() < 1) g = UniPoly{1, 1};
      d = d * g;
    }
    if (rng() % 2) d = -d;
    Factorization f = upoly_factor(d);
    CHECK(f.product() == d);
    // Returned factors are sorted and repeated factors merged into mult.
    for (size_t i = 1; i < f.factors.size(); ++i)
      CHECK(UniPoly::less(f.factors[i - 1].f, f.factors[i].f));
  }
}

TEST_CASE("roots: linear cases are exact") {
  auto roots = upoly_roots(UniPoly{1, 1}, Rat(1, 1000000000));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].exact_rational);
  CHECK(roots[0].value == Rat(-1));

  roots = upoly_roots(UniPoly{1, -2}, Rat(1, 1000000000));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].exact_rational);
  CHECK(roots[0].value == Rat(1, 2));
}

TEST_CASE("roots of z^2 - z + 1 have modulus one") {
  auto roots = upoly_roots(UniPoly{1, -1, 1}, Rat(1, 1000000000));
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK_FALSE(r.exact_rational);
    // quadratic formula oracle: (1 +- i sqrt 3)/2
    CHECK(std::abs(r.z.real() - 0.5) < 1e-9);
    CHECK(std::abs(std::abs(r.z.imag()) - std::sqrt(3.0) / 2) < 1e-9);
    CHECK(std::abs(std::abs(r.z) - 1.0) < 1e-9);
    CHECK(r.radius <= 1e-9);
  }
}

TEST_CASE("root residuals bounded in terms of tolerance") {
  std::mt19937_64 rng(99);
  Rat tol(1, 100000000);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Int> c(3 + rng() % 5);
    for (auto& x : c) x = Int(static_cast<long>(rng() % 21) - 10);
    UniPoly d(std::move(c));
    if (d.degree() < 1) continue;
    auto roots = upoly_roots(d, tol);
    int count = 0;
    for (const auto& r : roots) {
      count += r.mult;
      // |d(z)| <= radius * sum_i i*|c_i|*M^(i-1), M = |z| + radius
      double m = std::abs(r.z) + r.radius;
      double bound = 0;
      for (int i = 1; i <= d.degree(); ++i)
        bound += i * std::abs(d[i].get_d()) * std::pow(std::max(m, 1.0), i - 1);
      std::complex<double> v = 0;
      for (int i = d.degree(); i >= 0; --i) v = v * r.z + d[i].get_d();
      CHECK(std::abs(v) <= bound * r.radius + 1e-12);
    }
    CHECK(count == d.degree());
  }
  CHECK_THROWS_AS(upoly_roots(UniPoly{1, 1}, Rat(0)), Error);
  CHECK_THROWS_AS(upoly_roots(UniPoly{1}, Rat(1, 10)), Error);
}

TEST_CASE("multiple roots report multiplicity") {
  UniPoly d = UniPoly{1, 1}.pow(2) * UniPoly{1, -1, 1};
  auto roots = upoly_roots(d, Rat(1, 1000000));
  int total = 0;
  bool saw_double = false;
  for (const auto& r : roots) {
    total += r.mult;
    if (r.exact_rational && r.value == Rat(-1)) {
      CHECK(r.mult == 2);
      saw_double = true;
    }
  }
  CHECK(total == 4);
  CHECK(saw_double);
}
