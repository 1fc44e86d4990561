#pragma once

#include <map>

#include "torcert/freemod.hpp"
#include "torcert/linalg.hpp"

namespace torcert {

// ---------------------------------------------------------------------------
// Ideal-level interface (over the polynomial cover P).
// ---------------------------------------------------------------------------

/// Reduced monic Groebner basis in degrevlex; deterministic.
std::vector<Poly> ideal_groebner(const std::vector<Poly>& gens);
/// Normal form against a Groebner basis.
Poly ideal_nf(const Poly& f, const std::vector<Poly>& gb);

// ---------------------------------------------------------------------------
// Module-level engine.
// ---------------------------------------------------------------------------

/// Groebner data of a submodule of a graded free module over R = P/I.  The
/// engine appends I * e_j columns, so normal forms are canonical
/// representatives modulo (submodule + I * ambient).
class ModuleGB {
 public:
  struct Entry {
    FreeModElem f;
    ModTerm lt;
    Coef lc;
    // Sparse history over the inputs: f = sum hist[t] * input[t].
    std::vector<std::pair<int, Poly>> hist;
  };

  RingPtr ring;
  std::vector<int> twists;
  int ngens = 0;    // original generators: inputs 0..ngens-1
  int ninputs = 0;  // originals plus quotient columns
  std::vector<Entry> basis;
  /// Raw syzygies over the original generators (coordinates modulo I), kept
  /// only when requested.  Homogeneous.
  std::vector<FreeModElem> syzygies;

  /// Normal form; when cof is non-null it receives coordinates over the
  /// original generators with f - sum cof[g]*gen[g] in I * ambient + rem.
  FreeModElem nf(const FreeModElem& f,
                 std::vector<Poly>* cof = nullptr) const;
  bool member(const FreeModElem& f) const { return nf(f).is_zero(); }

  /// Leading terms of the basis restricted to the quotient view (includes the
  /// quotient columns).
  const std::vector<ModTerm>& lts() const { return lts_; }

  /// Standard module monomials of ambient/(submodule + I*ambient) in degree d.
  const std::vector<ModTerm>& std_monomials(int d) const;
  int quotient_dim(int d) const {
    return static_cast<int>(std_monomials(d).size());
  }
  /// True when the quotient is a finite-dimensional k-space.
  bool quotient_finite() const;
  /// Largest degree with nonzero quotient piece (finite quotients only).
  int quotient_top_degree() const;

 private:
  friend ModuleGB module_groebner(const SubmodulePres&, bool);
  mutable std::vector<ModTerm> lts_;
  mutable std::map<int, std::vector<ModTerm>> std_cache_;
};

ModuleGB module_groebner(const SubmodulePres& pres, bool want_syzygies);

/// Generating set of the syzygy module of pres.gens over R (raw, not
/// minimalized).  Ambient of the result is free on the generators with twists
/// equal to their degrees.
SubmodulePres syzygy_presentation(const SubmodulePres& pres);

/// Coordinates of v over pres.gens modulo I (throws InputMismatch when v is
/// not a member).
std::vector<Poly> express(const FreeModElem& v, const ModuleGB& gb);

// ---------------------------------------------------------------------------
// Graded-piece coordinate engine.
// ---------------------------------------------------------------------------

/// Coordinates for the graded pieces of a free module F = (+)_j R(-a_j): the
/// degree-d basis is all (component j, standard monomial m of R) with
/// deg m + a_j = d, ordered by component then descending degrevlex.
class PieceContext {
 public:
  PieceContext(RingPtr ring, std::vector<int> twists);

  const std::vector<int>& twists() const { return twists_; }
  const RingPtr& ring() const { return ring_; }

  const std::vector<ModTerm>& basis(int d) const;
  int dim(int d) const { return static_cast<int>(basis(d).size()); }
  /// Index of (comp, std monomial) in basis(d), -1 when absent.
  int index_of(int comp, const Monomial& m, int d) const;

  /// Multiplication by x_k as sparse images of basis(d) inside basis(d+1).
  const std::vector<SparseVec>& var_action(int k, int d) const;

  /// Coordinates of a homogeneous element of degree d (entries reduced
  /// modulo the defining ideal first).
  SparseVec vectorize(const SparseCol& col, int d) const;
  SparseVec vectorize(const FreeModElem& e, int d) const;
  SparseCol devectorize(const SparseVec& v, int d) const;

  /// v |-> x_k * v on coordinates.
  SparseVec apply_var(int k, int d, const SparseVec& v) const;

 private:
  RingPtr ring_;
  std::vector<int> twists_;
  mutable std::map<int, std::vector<ModTerm>> basis_;
  mutable std::map<int, std::map<std::pair<int, std::vector<int>>, int>> index_;
  mutable std::map<std::pair<int, int>, std::vector<SparseVec>> action_;
};

}  // namespace torcert
