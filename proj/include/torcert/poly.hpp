#pragma once

#include <string>
#include <vector>

#include "torcert/coef.hpp"
#include "torcert/monomial.hpp"

namespace torcert {

struct Term {
  Monomial m;
  Coef c;
};

/// Multivariate polynomial over a fixed coefficient field, terms kept
/// strictly descending in degrevlex, no zero coefficients.
class Poly {
 public:
  Poly(int nvars, Field f) : nvars_(nvars), field_(f) {}

  static Poly zero(int nvars, Field f) { return Poly(nvars, f); }
  static Poly constant(int nvars, Field f, const Coef& c);
  static Poly variable(int nvars, Field f, int i);
  static Poly from_term(int nvars, Field f, const Monomial& m, const Coef& c);

  int nvars() const { return nvars_; }
  Field field() const { return field_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  const Term& leading() const;
  /// Top total degree (-1 for the zero polynomial).
  int degree() const { return t_.empty() ? -1 : t_.front().m.degree(); }
  bool is_homogeneous() const;
  /// Nonzero constant (degree-zero polynomial)?
  bool is_unit_constant() const {
    return t_.size() == 1 && t_[0].m.is_one();
  }
  Coef constant_coeff() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Coef& c) const;
  /// this * c * m
  Poly times_term(const Coef& c, const Monomial& m) const;

  bool operator==(const Poly& o) const;

  /// Substitute value for variable i (value must live in the same ring).
  Poly substitute(int var, const Poly& value) const;
  /// Remove variable `var` (all exponents of it must be zero) and reindex.
  Poly drop_var(int var) const;

  std::string str(const std::vector<std::string>& names) const;

  /// Throws InputMismatch unless both polynomials share ring data.
  static void check_compatible(const Poly& a, const Poly& b);

 private:
  int nvars_;
  Field field_;
  std::vector<Term> t_;
};

}  // namespace torcert
