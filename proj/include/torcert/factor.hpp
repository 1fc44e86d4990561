#pragma once

#include <complex>
#include <vector>

#include "torcert/unipoly.hpp"

namespace torcert {

struct UPolyFactor {
  UniPoly f;  // primitive, irreducible over Q, lowest nonzero coefficient > 0
  int mult;
};

struct Factorization {
  Rat constant;  // d = constant * prod f_i^{m_i}
  std::vector<UPolyFactor> factors;

  UniPoly product() const;
  bool is_irreducible() const {
    return factors.size() == 1 && factors[0].mult == 1;
  }
};

/// Factor d into irreducibles over Q.  Factors are primitive integer
/// polynomials in a deterministic order (degree, then coefficients from the
/// constant term up).  Requires d != 0.
Factorization upoly_factor(const UniPoly& d);

struct RootBox {
  std::complex<double> z;
  double radius;  // certified: a true root lies within `radius` of z
  int mult;
  bool exact_rational;
  Rat value;  // meaningful when exact_rational
};

/// Roots of d with multiplicity.  Rational roots are found exactly; the
/// remaining roots are isolated numerically with certified radius <= tol.
/// Requires d nonconstant and tol > 0.
std::vector<RootBox> upoly_roots(const UniPoly& d, const Rat& tol);

}  // namespace torcert
