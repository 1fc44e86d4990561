#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "torcert/arith.hpp"

namespace torcert {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first.  The leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  UniPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
  }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Int& a) { return UniPoly({}, a); }
  static UniPoly one() { return constant(1); }
  /// c * z^k
  static UniPoly monomial(int k, const Int& c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& operator[](int i) const;
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const { return c_.back(); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Int& k) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly pow(unsigned e) const;
  UniPoly shifted(int k) const;  // multiply by z^k
  UniPoly derivative() const;
  /// p(-z)
  UniPoly at_negated() const;
  /// p(z - 1)
  UniPoly shift_arg_minus_one() const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  Int content() const;  // gcd of coefficients, >= 0
  /// Content removed; sign chosen so the lowest nonzero coefficient is
  /// positive.
  UniPoly primitive_part() const;
  bool has_nonnegative_coeffs() const;

  /// Deterministic order: by degree, then coefficients from the constant term
  /// up.
  static bool less(const UniPoly& a, const UniPoly& b);

  std::string str(const std::string& var = "z") const;

 private:
  UniPoly(std::vector<Int> coeffs, const Int& c0) {
    c_ = std::move(coeffs);
    c_.insert(c_.begin(), c0);
    normalize();
  }
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Quotient and remainder over the rationals; exact arithmetic throughout.
/// Returns coefficient-cleared integer (q, r) with den*a = q*b + r scaled by
/// `den` (den > 0), so a = (q*b + r)/den in Q[z].
void divrem_rat(const UniPoly& a, const UniPoly& b, UniPoly* q, UniPoly* r,
                Int* den);

/// Exact division in Z[z]: returns true and sets q when b divides a.
bool divide_exact(const UniPoly& a, const UniPoly& b, UniPoly* q);

/// Primitive gcd in Z[z] (positive leading coefficient; gcd(0,0) = 0).
UniPoly gcd_upoly(const UniPoly& a, const UniPoly& b);

/// Number of distinct real roots in the open interval (a, b), a < b, where
/// f(a) != 0 and f(b) != 0; via Sturm chains over Q.
int sturm_count(const UniPoly& f, const Rat& a, const Rat& b);
/// Distinct real roots in (0, +infinity); requires f != 0.
int sturm_count_positive(const UniPoly& f);
/// Cauchy bound: every complex root has |z| < bound.
Rat root_bound(const UniPoly& f);

/// Truncated power series with integer coefficients c0..cN.
struct SeriesTrunc {
  std::vector<Int> c;

  SeriesTrunc() = default;
  explicit SeriesTrunc(std::vector<Int> coeffs) : c(std::move(coeffs)) {}
  int order() const { return static_cast<int>(c.size()) - 1; }
  const Int& operator[](int i) const { return c.at(i); }
  bool operator==(const SeriesTrunc& o) const { return c == o.c; }
  /// a <= b coefficientwise (same order required).
  static bool leq(const SeriesTrunc& a, const SeriesTrunc& b);
  std::string str() const;
};

/// Coefficients of num/den up to degree N by exact long division.
/// Requires den(0) = +-1 (NotASeriesUnit otherwise).
SeriesTrunc series_of_rational(const UniPoly& num, const UniPoly& den, int N);

}  // namespace torcert
