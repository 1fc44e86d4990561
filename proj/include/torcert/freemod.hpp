#pragma once

#include <optional>
#include <vector>

#include "torcert/ring.hpp"

namespace torcert {

/// Element of a free module over the polynomial cover P, one polynomial per
/// component.  Dense storage; intended for the small exact computations, the
/// graded engine works in coordinates instead.
class FreeModElem {
 public:
  FreeModElem(int rank, int nvars, Field f)
      : c_(rank, Poly::zero(nvars, f)) {}
  explicit FreeModElem(std::vector<Poly> comps) : c_(std::move(comps)) {}

  int rank() const { return static_cast<int>(c_.size()); }
  const Poly& operator[](int i) const { return c_[i]; }
  Poly& at(int i) { return c_[i]; }
  const std::vector<Poly>& comps() const { return c_; }

  bool is_zero() const {
    for (const auto& p : c_)
      if (!p.is_zero()) return false;
    return true;
  }

  FreeModElem operator+(const FreeModElem& o) const;
  FreeModElem operator-(const FreeModElem& o) const;
  FreeModElem operator-() const;
  FreeModElem times_term(const Coef& c, const Monomial& m) const;
  FreeModElem scaled(const Coef& c) const;
  FreeModElem times_poly(const Poly& p) const;

  /// Total degree when homogeneous with respect to the twists, else nullopt.
  std::optional<int> homogeneous_degree(const std::vector<int>& twists) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<Poly> c_;
};

/// Term position in a free module: component index plus monomial.
struct ModTerm {
  int comp;
  Monomial m;
};

/// Module order: total degree (monomial degree + twist) first, then degrevlex
/// on the monomial, then the smaller component index wins.
inline bool mod_term_less(const ModTerm& a, const ModTerm& b,
                          const std::vector<int>& twists) {
  int da = a.m.degree() + twists[a.comp];
  int db = b.m.degree() + twists[b.comp];
  if (da != db) return da < db;
  if (!(a.m == b.m)) return drl_less(a.m, b.m);
  return a.comp > b.comp;
}

/// Leading (largest) term of a nonzero element.
ModTerm leading_mod_term(const FreeModElem& f, const std::vector<int>& twists);
Coef coef_at(const FreeModElem& f, const ModTerm& t);

/// A homogeneous generating set of a submodule of the graded free module
/// ring^{rank} with the given twists; entries are polynomial coordinates over
/// the cover P, interpreted modulo the defining ideal.
struct SubmodulePres {
  RingPtr ring;
  std::vector<int> twists;
  std::vector<FreeModElem> gens;

  int rank() const { return static_cast<int>(twists.size()); }
  /// Degrees of the generators; throws NotHomogeneous (with index) if some
  /// generator is not homogeneous.
  std::vector<int> gen_degrees() const;
  void check() const;
};

/// Sparse column of a matrix over R: (component, polynomial entry) pairs.
struct SparseCol {
  std::vector<std::pair<int, Poly>> entries;  // sorted by component

  bool is_zero() const { return entries.empty(); }
  FreeModElem dense(int rank, int nvars, Field f) const;
  static SparseCol from_dense(const FreeModElem& e);
  std::optional<int> homogeneous_degree(const std::vector<int>& twists) const;
};

}  // namespace torcert
