#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torcert/unipoly.hpp"

using namespace torcert;

TEST_CASE("basic arithmetic") {
  UniPoly a{1, 2, 1};   // (1+z)^2
  UniPoly b{1, -1};     // 1 - z
  UniPoly one{1};
  CHECK((a * b) == UniPoly{1, 1, -1, -1});
  CHECK((a + b) == UniPoly{2, 1, 1});
  CHECK((a - a).is_zero());
  CHECK(UniPoly{1, 1}.pow(2) == a);
  CHECK(a.derivative() == UniPoly{2, 2});
  CHECK(a.eval(Int(2)) == 9);
  CHECK(a.at_negated() == UniPoly{1, -2, 1});
  CHECK(one.shifted(3) == UniPoly{0, 0, 0, 1});
  // p(z-1) for p = z^2: (z-1)^2 = 1 - 2z + z^2
  CHECK(UniPoly{0, 0, 1}.shift_arg_minus_one() == UniPoly{1, -2, 1});
}

TEST_CASE("division and gcd") {
  UniPoly f{1, -6, 10, -10, 5, -1};  // (1-z)^5 - z
  UniPoly q;
  REQUIRE(divide_exact(f, UniPoly{1, -1, 1}, &q));
  CHECK(q == UniPoly{1, -5, 4, -1});
  CHECK_FALSE(divide_exact(f, UniPoly{1, 1}, &q));

  UniPoly a = UniPoly{1, 1} * UniPoly{1, 0, 1};
  UniPoly b = UniPoly{1, 1} * UniPoly{1, 2};
  CHECK(gcd_upoly(a, b) == UniPoly{1, 1});
  CHECK(gcd_upoly(a, UniPoly::zero()) == a.primitive_part());

  // Non-monic divisor through the pseudo-division path.
  UniPoly g{2, 3};              // 2 + 3z
  UniPoly h = g * UniPoly{5, -1, 7};
  REQUIRE(divide_exact(h, g, &q));
  CHECK(q == UniPoly{5, -1, 7});
}

TEST_CASE("series of rational functions") {
  // geometric series
  CHECK(series_of_rational(UniPoly{1}, UniPoly{1, -1}, 4) ==
        SeriesTrunc({Int(1), Int(1), Int(1), Int(1), Int(1)}));
  // (1+z)^2/(1-3z^2-2z^3) = 1/(1-2z): powers of two
  CHECK(series_of_rational(UniPoly{1, 2, 1}, UniPoly{1, 0, -3, -2}, 4) ==
        SeriesTrunc({Int(1), Int(2), Int(4), Int(8), Int(16)}));
  // (1+z)^2/(1-z^2)^2 = 1/(1-z)^2
  CHECK(series_of_rational(UniPoly{1, 2, 1}, UniPoly{1, 0, -2, 0, 1}, 4) ==
        SeriesTrunc({Int(1), Int(2), Int(3), Int(4), Int(5)}));
  // (1+z)^3/(1-z^2)^3 = 1/(1-z)^3: binomial oracle C(n+2,2)
  UniPoly num = UniPoly{1, 1}.pow(3);
  UniPoly den = UniPoly{1, 0, -1}.pow(3);
  SeriesTrunc s = series_of_rational(num, den, 4);
  for (int n = 0; n <= 4; ++n) CHECK(s[n] == binomial(n + 2, 2));

  CHECK_THROWS_AS(series_of_rational(UniPoly{1}, UniPoly{0, 1}, 3), Error);
  CHECK_THROWS_AS(series_of_rational(UniPoly{1}, UniPoly{2, 1}, 3), Error);
}

TEST_CASE("series recomputed at higher order agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Int> num(1 + rng() % 5), den(2 + rng() % 5);
    for (auto& c : num) c = Int(static_cast<long>(rng() % 11) - 5);
    for (auto& c : den) c = Int(static_cast<long>(rng() % 11) - 5);
    den[0] = (rng() % 2) ? 1 : -1;
    UniPoly n(std::move(num)), d(std::move(den));
    int N = 6;
    SeriesTrunc a = series_of_rational(n, d, N);
    SeriesTrunc b = series_of_rational(n, d, N + 10);
    for (int i = 0; i <= N; ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("sturm counting") {
  // z^2 - z + 1: no real roots at all
  CHECK(sturm_count_positive(UniPoly{1, -1, 1}) == 0);
  // (z-1)(z-3) = 3 - 4z + z^2: two positive roots
  CHECK(sturm_count_positive(UniPoly{3, -4, 1}) == 2);
  // (z+1)(z-2): one positive
  CHECK(sturm_count_positive(UniPoly{-2, -1, 1}) == 1);
  // z^3: roots only at the origin
  CHECK(sturm_count_positive(UniPoly{0, 0, 0, 1}) == 0);
  // (1-z)^5 - z has exactly one positive real root
  UniPoly f = UniPoly{1, -1}.pow(5) - UniPoly{0, 1};
  CHECK(sturm_count_positive(f) == 1);
  // interval counts
  CHECK(sturm_count(UniPoly{3, -4, 1}, Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(UniPoly{3, -4, 1}, Rat(0), Rat(4)) == 2);
}

TEST_CASE("deterministic polynomial order") {
  CHECK(UniPoly::less(UniPoly{1, 1}, UniPoly{1, 0, 1}));
  CHECK(UniPoly::less(UniPoly{1, -1, 1}, UniPoly{1, 1, 1}));
  CHECK_FALSE(UniPoly::less(UniPoly{1, 1}, UniPoly{1, 1}));
}

TEST_CASE("printing") {
  CHECK(UniPoly{1, -2, 0, 1}.str() == "1 - 2*z + z^3");
  CHECK(UniPoly::zero().str() == "0");
  CHECK(UniPoly{0, -1}.str() == "-z");
}
