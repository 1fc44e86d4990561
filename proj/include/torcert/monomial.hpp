#pragma once

#include <string>
#include <vector>

#include "torcert/error.hpp"

namespace torcert {

/// Exponent vector with cached total degree.
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : e_(std::move(e)) {
    for (int x : e_) {
      if (x < 0) fail(errc::invalid_input, "negative exponent");
      deg_ += x;
    }
  }

  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial var(int nvars, int i, int e = 1) {
    Monomial m(nvars);
    m.e_[i] = e;
    m.deg_ = e;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
    r.deg_ += o.deg_;
    return r;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  /// m / this (requires divisibility).
  Monomial quotient_of(const Monomial& m) const {
    Monomial r(m);
    for (int i = 0; i < nvars(); ++i) r.e_[i] -= e_[i];
    r.deg_ = m.deg_ - deg_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (int i = 0; i < a.nvars(); ++i) {
      if (b.e_[i] > r.e_[i]) {
        r.deg_ += b.e_[i] - r.e_[i];
        r.e_[i] = b.e_[i];
      }
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<int> e_;
  int deg_ = 0;
};

/// Degree-reverse-lexicographic: a < b iff deg a < deg b, or degrees agree and
/// the rightmost differing exponent of a is larger.
inline bool drl_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

struct DrlGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return drl_less(b, a);
  }
};

/// All monomials in nvars variables of total degree d, descending in the
/// degree-reverse-lexicographic order (deterministic enumeration).
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace torcert
