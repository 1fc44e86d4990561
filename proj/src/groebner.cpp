#include "torcert/groebner.hpp"

#include <algorithm>
#include <set>

#include "torcert/error.hpp"

namespace torcert {

// ---------------------------------------------------------------------------
// FreeModElem / SubmodulePres basics.
// ---------------------------------------------------------------------------

FreeModElem FreeModElem::operator+(const FreeModElem& o) const {
  std::vector<Poly> v;
  v.reserve(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v.push_back(c_[i] + o.c_[i]);
  return FreeModElem(std::move(v));
}

FreeModElem FreeModElem::operator-(const FreeModElem& o) const {
  std::vector<Poly> v;
  v.reserve(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v.push_back(c_[i] - o.c_[i]);
  return FreeModElem(std::move(v));
}

FreeModElem FreeModElem::operator-() const {
  std::vector<Poly> v;
  v.reserve(c_.size());
  for (const auto& p : c_) v.push_back(-p);
  return FreeModElem(std::move(v));
}

FreeModElem FreeModElem::times_term(const Coef& c, const Monomial& m) const {
  std::vector<Poly> v;
  v.reserve(c_.size());
  for (const auto& p : c_) v.push_back(p.times_term(c, m));
  return FreeModElem(std::move(v));
}

FreeModElem FreeModElem::scaled(const Coef& c) const {
  std::vector<Poly> v;
  v.reserve(c_.size());
  for (const auto& p : c_) v.push_back(p.scaled(c));
  return FreeModElem(std::move(v));
}

FreeModElem FreeModElem::times_poly(const Poly& p) const {
  std::vector<Poly> v;
  v.reserve(c_.size());
  for (const auto& q : c_) v.push_back(q * p);
  return FreeModElem(std::move(v));
}

std::optional<int> FreeModElem::homogeneous_degree(
    const std::vector<int>& twists) const {
  std::optional<int> deg;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!c_[i].is_homogeneous()) return std::nullopt;
    int d = c_[i].degree() + twists[i];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return c_.empty() || !deg ? std::optional<int>(0) : deg;
}

std::string FreeModElem::str(const std::vector<std::string>& names) const {
  std::string s = "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].str(names);
  }
  return s + ")";
}

ModTerm leading_mod_term(const FreeModElem& f, const std::vector<int>& twists) {
  std::optional<ModTerm> best;
  for (int i = 0; i < f.rank(); ++i) {
    if (f[i].is_zero()) continue;
    ModTerm t{i, f[i].leading().m};
    if (!best || mod_term_less(*best, t, twists)) best = t;
  }
  if (!best) fail(errc::invalid_input, "leading term of zero module element");
  return *best;
}

Coef coef_at(const FreeModElem& f, const ModTerm& t) {
  for (const auto& term : f[t.comp].terms())
    if (term.m == t.m) return term.c;
  return Coef(0);
}

std::vector<int> SubmodulePres::gen_degrees() const {
  std::vector<int> out;
  out.reserve(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    auto d = gens[i].homogeneous_degree(twists);
    if (!d)
      fail(errc::not_homogeneous,
           "generator " + std::to_string(i) + " is not homogeneous");
    out.push_back(*d);
  }
  return out;
}

void SubmodulePres::check() const {
  for (const auto& g : gens)
    if (g.rank() != rank())
      fail(errc::input_mismatch, "generator rank does not match ambient");
  (void)gen_degrees();
}

FreeModElem SparseCol::dense(int rank, int nvars, Field f) const {
  FreeModElem e(rank, nvars, f);
  for (const auto& [c, p] : entries) e.at(c) = p;
  return e;
}

SparseCol SparseCol::from_dense(const FreeModElem& e) {
  SparseCol col;
  for (int i = 0; i < e.rank(); ++i)
    if (!e[i].is_zero()) col.entries.emplace_back(i, e[i]);
  return col;
}

std::optional<int> SparseCol::homogeneous_degree(
    const std::vector<int>& twists) const {
  std::optional<int> deg;
  for (const auto& [c, p] : entries) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return std::nullopt;
    int d = p.degree() + twists[c];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg ? deg : std::optional<int>(0);
}

// ---------------------------------------------------------------------------
// Buchberger engine with input-level history tracking.
// ---------------------------------------------------------------------------

namespace {

using Hist = std::vector<std::pair<int, Poly>>;  // sparse over inputs

void hist_add(Hist& h, int idx, const Poly& p) {
  for (auto& [i, q] : h) {
    if (i == idx) {
      q = q + p;
      return;
    }
  }
  h.emplace_back(idx, p);
}

void hist_axpy(Hist& h, const Hist& src, const Coef& c, const Monomial& m) {
  // h -= c*m*src
  for (const auto& [i, p] : src) hist_add(h, i, -p.times_term(c, m));
}

struct TermRef {
  Coef c;
  Monomial m;
};

}  // namespace

FreeModElem ModuleGB::nf(const FreeModElem& f, std::vector<Poly>* cof) const {
  if (f.rank() != static_cast<int>(twists.size()))
    fail(errc::input_mismatch, "element rank does not match ambient");
  const int nv = f.rank() ? f[0].nvars() : 0;
  Field fl = f.rank() ? f[0].field() : Field();
  FreeModElem work = f;
  FreeModElem rem(f.rank(), nv, fl);
  Hist hist;
  while (!work.is_zero()) {
    ModTerm lt = leading_mod_term(work, twists);
    Coef c = coef_at(work, lt);
    int red = -1;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (basis[b].lt.comp == lt.comp && basis[b].lt.m.divides(lt.m)) {
        red = static_cast<int>(b);
        break;
      }
    }
    if (red >= 0) {
      const Entry& e = basis[red];
      Coef q = c / e.lc;
      Monomial mq = e.lt.m.quotient_of(lt.m);
      work = work - e.f.times_term(q, mq);
      if (cof)
        for (const auto& [i, p] : e.hist) hist_add(hist, i, p.times_term(q, mq));
    } else {
      rem.at(lt.comp) =
          rem[lt.comp] + Poly::from_term(nv, fl, lt.m, c);
      work.at(lt.comp) = work[lt.comp] - Poly::from_term(nv, fl, lt.m, c);
    }
  }
  if (cof) {
    cof->assign(ngens, Poly::zero(nv, fl));
    for (const auto& [i, p] : hist)
      if (i < ngens) (*cof)[i] = ring ? ring->reduce(p) : p;
  }
  return rem;
}

const std::vector<ModTerm>& ModuleGB::std_monomials(int d) const {
  auto it = std_cache_.find(d);
  if (it != std_cache_.end()) return it->second;
  std::vector<ModTerm> out;
  for (int j = 0; j < static_cast<int>(twists.size()); ++j) {
    int md = d - twists[j];
    if (md < 0) continue;
    int nv = 0;
    if (ring) nv = ring->nvars();
    else if (!basis.empty()) nv = basis[0].f[0].nvars();
    for (const auto& m : monomials_of_degree(nv, md)) {
      bool reducible = false;
      for (const auto& lt : lts_) {
        if (lt.comp == j && lt.m.divides(m)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) out.push_back({j, m});
    }
  }
  return std_cache_.emplace(d, std::move(out)).first->second;
}

bool ModuleGB::quotient_finite() const {
  int nv = ring ? ring->nvars() : (basis.empty() ? 0 : basis[0].f[0].nvars());
  for (int j = 0; j < static_cast<int>(twists.size()); ++j) {
    for (int k = 0; k < nv; ++k) {
      bool blocked = false;
      for (const auto& lt : lts_) {
        if (lt.comp != j) continue;
        bool pure = lt.m[k] > 0;
        for (int k2 = 0; pure && k2 < nv; ++k2)
          if (k2 != k && lt.m[k2] > 0) pure = false;
        if (pure) {
          blocked = true;
          break;
        }
      }
      if (!blocked) return false;
    }
  }
  return true;
}

int ModuleGB::quotient_top_degree() const {
  if (!quotient_finite())
    fail(errc::requires_finite_length, "quotient is not finite-dimensional");
  int lo = *std::min_element(twists.begin(), twists.end());
  int hi = *std::max_element(twists.begin(), twists.end());
  int top = lo - 1;
  for (int d = lo;; ++d) {
    if (quotient_dim(d) > 0)
      top = d;
    else if (d >= hi)
      break;
  }
  return top;
}

ModuleGB module_groebner(const SubmodulePres& pres, bool want_syzygies) {
  pres.check();
  const RingPtr& R = pres.ring;
  const int nv = R->nvars();
  const Field fl = R->field();
  const std::vector<int>& twists = pres.twists;

  ModuleGB gb;
  gb.ring = R;
  gb.twists = twists;
  gb.ngens = static_cast<int>(pres.gens.size());

  // Inputs: original generators, then I*e_j columns.
  std::vector<FreeModElem> inputs = pres.gens;
  for (int j = 0; j < pres.rank(); ++j) {
    for (const auto& q : R->gb()) {
      FreeModElem e(pres.rank(), nv, fl);
      e.at(j) = q;
      inputs.push_back(std::move(e));
    }
  }
  gb.ninputs = static_cast<int>(inputs.size());

  auto push_entry = [&](FreeModElem f, Hist hist) {
    ModTerm lt = leading_mod_term(f, twists);
    Coef lc = coef_at(f, lt);
    gb.basis.push_back({std::move(f), lt, lc, std::move(hist)});
  };

  for (int t = 0; t < gb.ninputs; ++t) {
    if (inputs[t].is_zero()) continue;
    Hist h;
    h.emplace_back(t, Poly::constant(nv, fl, Coef::one(fl)));
    push_entry(inputs[t], std::move(h));
  }

  // Pair queue ordered by (total degree of lcm, i, j).
  std::set<std::tuple<int, int, int>> pairs;
  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (gb.basis[i].lt.comp != gb.basis[j].lt.comp) continue;
      // Product criterion (ideals only, and only when syzygies are not
      // being collected: skipped pairs would be missing relations).
      if (!want_syzygies && pres.rank() == 1 &&
          gb.basis[i].lt.m.coprime(gb.basis[j].lt.m))
        continue;
      Monomial l = Monomial::lcm(gb.basis[i].lt.m, gb.basis[j].lt.m);
      int deg = l.degree() + twists[gb.basis[i].lt.comp];
      pairs.emplace(deg, i, j);
    }
  };
  for (size_t j = 0; j < gb.basis.size(); ++j) add_pairs_for(static_cast<int>(j));

  auto reduce_full = [&](FreeModElem& work, Hist& hist) {
    FreeModElem rem(pres.rank(), nv, fl);
    while (!work.is_zero()) {
      ModTerm lt = leading_mod_term(work, twists);
      Coef c = coef_at(work, lt);
      int red = -1;
      for (size_t b = 0; b < gb.basis.size(); ++b) {
        if (gb.basis[b].lt.comp == lt.comp && gb.basis[b].lt.m.divides(lt.m)) {
          red = static_cast<int>(b);
          break;
        }
      }
      if (red >= 0) {
        const auto& e = gb.basis[red];
        Coef q = c / e.lc;
        Monomial mq = e.lt.m.quotient_of(lt.m);
        work = work - e.f.times_term(q, mq);
        hist_axpy(hist, e.hist, -q, mq);  // hist += q*mq*e.hist
      } else {
        rem.at(lt.comp) = rem[lt.comp] + Poly::from_term(nv, fl, lt.m, c);
        work.at(lt.comp) = work[lt.comp] - Poly::from_term(nv, fl, lt.m, c);
      }
    }
    work = rem;
  };

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const auto& ei = gb.basis[i];
    const auto& ej = gb.basis[j];
    Monomial l = Monomial::lcm(ei.lt.m, ej.lt.m);
    Monomial mi = ei.lt.m.quotient_of(l);
    Monomial mj = ej.lt.m.quotient_of(l);
    Coef ci = ei.lc.inv();
    Coef cj = ej.lc.inv();
    FreeModElem s = ei.f.times_term(ci, mi) - ej.f.times_term(cj, mj);
    Hist hist;
    if (want_syzygies || true) {
      for (const auto& [t, p] : ei.hist) hist_add(hist, t, p.times_term(ci, mi));
      for (const auto& [t, p] : ej.hist)
        hist_add(hist, t, -p.times_term(cj, mj));
    }
    // During reduction the invariant is s_current + rem = sum hist*inputs,
    // with hist updated as reducers are used... reduce_full uses the
    // convention hist += used combination, so seed with the S-pair combo and
    // subtract the remainder contribution at the end.
    FreeModElem work = s;
    Hist used;
    reduce_full(work, used);
    if (work.is_zero()) {
      if (want_syzygies) {
        // hist - used is a syzygy over the inputs; project to the original
        // generators.
        for (const auto& [t, p] : used) hist_add(hist, t, -p);
        FreeModElem syz(gb.ngens, nv, fl);
        bool nonzero = false;
        for (const auto& [t, p] : hist) {
          if (t >= gb.ngens) continue;
          Poly q = R->reduce(p);
          if (!q.is_zero()) {
            syz.at(t) = q;
            nonzero = true;
          }
        }
        if (nonzero) gb.syzygies.push_back(std::move(syz));
      }
      continue;
    }
    // New basis element: its history is (S-pair combo) - (used combination).
    for (const auto& [t, p] : used) hist_add(hist, t, -p);
    Hist clean;
    for (auto& [t, p] : hist)
      if (!p.is_zero()) clean.emplace_back(t, p);
    push_entry(std::move(work), std::move(clean));
    add_pairs_for(static_cast<int>(gb.basis.size()) - 1);
  }

  gb.lts_.clear();
  for (const auto& e : gb.basis) gb.lts_.push_back(e.lt);
  return gb;
}

SubmodulePres syzygy_presentation(const SubmodulePres& pres) {
  ModuleGB gb = module_groebner(pres, true);
  SubmodulePres out;
  out.ring = pres.ring;
  out.twists = pres.gen_degrees();
  out.gens = std::move(gb.syzygies);
  return out;
}

std::vector<Poly> express(const FreeModElem& v, const ModuleGB& gb) {
  std::vector<Poly> cof;
  FreeModElem rem = gb.nf(v, &cof);
  if (!rem.is_zero())
    fail(errc::input_mismatch, "element is not a member of the submodule");
  return cof;
}

// ---------------------------------------------------------------------------
// Ideal-level wrappers.
// ---------------------------------------------------------------------------

Poly ideal_nf(const Poly& f, const std::vector<Poly>& gb) {
  Poly work = f;
  Poly rem = Poly::zero(f.nvars(), f.field());
  while (!work.is_zero()) {
    const Term& lt = work.leading();
    int red = -1;
    for (size_t b = 0; b < gb.size(); ++b) {
      if (gb[b].leading().m.divides(lt.m)) {
        red = static_cast<int>(b);
        break;
      }
    }
    if (red >= 0) {
      Coef q = lt.c / gb[red].leading().c;
      Monomial mq = gb[red].leading().m.quotient_of(lt.m);
      work = work - gb[red].times_term(q, mq);
    } else {
      Poly t = Poly::from_term(f.nvars(), f.field(), lt.m, lt.c);
      rem = rem + t;
      work = work - t;
    }
  }
  return rem;
}

std::vector<Poly> ideal_groebner(const std::vector<Poly>& gens) {
  std::vector<Poly> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return {};
  const int nv = nonzero[0].nvars();
  const Field fl = nonzero[0].field();
  for (const auto& g : nonzero) Poly::check_compatible(nonzero[0], g);

  std::vector<Poly> basis = nonzero;
  std::set<std::tuple<int, int, int>> pairs;
  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (basis[i].leading().m.coprime(basis[j].leading().m)) continue;
      Monomial l = Monomial::lcm(basis[i].leading().m, basis[j].leading().m);
      pairs.emplace(l.degree(), i, j);
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) add_pairs_for(static_cast<int>(j));
  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    Monomial l = Monomial::lcm(basis[i].leading().m, basis[j].leading().m);
    Poly s = basis[i].times_term(basis[i].leading().c.inv(),
                                 basis[i].leading().m.quotient_of(l)) -
             basis[j].times_term(basis[j].leading().c.inv(),
                                 basis[j].leading().m.quotient_of(l));
    Poly r = ideal_nf(s, basis);
    if (!r.is_zero()) {
      basis.push_back(r);
      add_pairs_for(static_cast<int>(basis.size()) - 1);
    }
  }

  // Reduce: drop elements whose leading monomial is divisible by another's,
  // then tail-reduce and normalize to monic; sort for determinism.
  std::vector<Poly> reduced;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].leading().m.divides(basis[i].leading().m) &&
          !(basis[j].leading().m == basis[i].leading().m && j > i))
        redundant = true;
    }
    if (!redundant) reduced.push_back(basis[i]);
  }
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = ideal_nf(reduced[i], others);
    if (reduced[i].is_zero())
      fail(errc::invalid_input, "interreduction produced zero");
    reduced[i] = reduced[i].scaled(reduced[i].leading().c.inv());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return drl_less(a.leading().m, b.leading().m);
  });
  return reduced;
}

// ---------------------------------------------------------------------------
// PieceContext.
// ---------------------------------------------------------------------------

PieceContext::PieceContext(RingPtr ring, std::vector<int> twists)
    : ring_(std::move(ring)), twists_(std::move(twists)) {}

const std::vector<ModTerm>& PieceContext::basis(int d) const {
  auto it = basis_.find(d);
  if (it != basis_.end()) return it->second;
  std::vector<ModTerm> out;
  for (int j = 0; j < static_cast<int>(twists_.size()); ++j) {
    int md = d - twists_[j];
    if (md < 0) continue;
    for (const auto& m : ring_->std_monomials(md)) out.push_back({j, m});
  }
  auto& slot = basis_[d];
  slot = std::move(out);
  auto& idx = index_[d];
  for (size_t i = 0; i < slot.size(); ++i)
    idx[{slot[i].comp, slot[i].m.exps()}] = static_cast<int>(i);
  return slot;
}

int PieceContext::index_of(int comp, const Monomial& m, int d) const {
  basis(d);
  const auto& idx = index_.at(d);
  auto it = idx.find({comp, m.exps()});
  return it == idx.end() ? -1 : it->second;
}

const std::vector<SparseVec>& PieceContext::var_action(int k, int d) const {
  auto key = std::make_pair(k, d);
  auto it = action_.find(key);
  if (it != action_.end()) return it->second;
  const auto& from = basis(d);
  std::vector<SparseVec> out(from.size());
  for (size_t i = 0; i < from.size(); ++i) {
    Poly prod = ring_->reduce(Poly::from_term(
        ring_->nvars(), ring_->field(),
        from[i].m * Monomial::var(ring_->nvars(), k), Coef::one(ring_->field())));
    SparseVec v;
    for (const auto& t : prod.terms()) {
      int pos = index_of(from[i].comp, t.m, d + 1);
      if (pos >= 0) v.emplace_back(pos, t.c);
    }
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out[i] = std::move(v);
  }
  return action_.emplace(key, std::move(out)).first->second;
}

SparseVec PieceContext::vectorize(const SparseCol& col, int d) const {
  SparseVec v;
  for (const auto& [comp, p] : col.entries) {
    Poly q = ring_->reduce(p);
    for (const auto& t : q.terms()) {
      int pos = index_of(comp, t.m, d);
      if (pos < 0)
        fail(errc::invalid_input, "term outside the graded piece basis");
      v.emplace_back(pos, t.c);
    }
  }
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

SparseVec PieceContext::vectorize(const FreeModElem& e, int d) const {
  return vectorize(SparseCol::from_dense(e), d);
}

SparseCol PieceContext::devectorize(const SparseVec& v, int d) const {
  const auto& b = basis(d);
  SparseCol col;
  std::map<int, Poly> per_comp;
  for (const auto& [pos, c] : v) {
    const ModTerm& t = b[pos];
    auto it = per_comp.find(t.comp);
    Poly term = Poly::from_term(ring_->nvars(), ring_->field(), t.m, c);
    if (it == per_comp.end())
      per_comp.emplace(t.comp, term);
    else
      it->second = it->second + term;
  }
  for (auto& [comp, p] : per_comp)
    if (!p.is_zero()) col.entries.emplace_back(comp, std::move(p));
  return col;
}

SparseVec PieceContext::apply_var(int k, int d, const SparseVec& v) const {
  const auto& act = var_action(k, d);
  SparseVec out;
  for (const auto& [pos, c] : v) out = sparse_axpy(out, c, act[pos]);
  return out;
}

}  // namespace torcert
