#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torcert/poly.hpp"

namespace torcert {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// Provenance of a quotient-by-regular-sequence construction: this ring is
/// base/(seq) with seq a regular sequence on base.
struct Deformation {
  RingPtr base;
  std::vector<Poly> seq;  // elements of base (coordinates over base's cover)
};

/// Standard graded quotient k[x_1..x_n]/I with I homogeneous, minimally
/// generated in degrees >= 2.  Linear generators are eliminated by
/// substitution at construction time, so the presentation is always a minimal
/// one.  Caches (Groebner basis, graded bases, invariants) are write-once.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
 public:
  /// Builds a ring; minimalizes the generating set, checks homogeneity
  /// (NotHomogeneous carries the offending generator index), and eliminates
  /// linear generators by substitution.
  static RingPtr make(Field f, std::vector<std::string> var_names,
                      std::vector<Poly> gens, std::string label = "R",
                      std::optional<Deformation> provenance = std::nullopt);
  static RingPtr polynomial(Field f, std::vector<std::string> var_names,
                            std::string label = "P");

  int nvars() const { return nvars_; }
  Field field() const { return field_; }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::vector<Poly>& defining() const { return defining_; }
  const std::string& label() const { return label_; }
  bool is_polynomial_ring() const { return defining_.empty(); }

  /// Reduced Groebner basis of the defining ideal (lazy).
  const std::vector<Poly>& gb() const;
  /// Leading monomials of gb().
  const std::vector<Monomial>& gb_lts() const;

  /// Standard monomial basis of the degree-d piece of R.
  const std::vector<Monomial>& std_monomials(int d) const;
  int graded_dim(int d) const;
  /// True when dim_k R < infinity (every variable axis is blocked by a
  /// leading term).
  bool is_artinian() const;
  /// Largest d with R_d != 0 (artinian only).
  int top_degree() const;
  Int total_dim() const;
  /// True iff the square of the irrelevant ideal vanishes.
  bool m_squared_zero() const;

  Poly zero() const { return Poly::zero(nvars_, field_); }
  Poly var(int i) const { return Poly::variable(nvars_, field_, i); }
  Poly one() const {
    return Poly::constant(nvars_, field_, Coef::one(field_));
  }
  /// Normal form modulo the defining ideal.
  Poly reduce(const Poly& f) const;

  const std::optional<Deformation>& deformation() const { return deform_; }

  /// Golod certification order, filled by the series layer.
  mutable std::optional<int> golod_up_to;

 private:
  GradedRing() = default;

  int nvars_ = 0;
  Field field_;
  std::vector<std::string> names_;
  std::vector<Poly> defining_;
  std::string label_;
  std::optional<Deformation> deform_;

  mutable std::optional<std::vector<Poly>> gb_;
  mutable std::optional<std::vector<Monomial>> gb_lts_;
  mutable std::map<int, std::vector<Monomial>> std_mono_;
  mutable std::optional<bool> artinian_;
  mutable std::optional<int> top_degree_;
};

}  // namespace torcert
