#include "torcert/ring.hpp"

#include <algorithm>

#include "torcert/groebner.hpp"

namespace torcert {

RingPtr GradedRing::make(Field f, std::vector<std::string> var_names,
                         std::vector<Poly> gens, std::string label,
                         std::optional<Deformation> provenance) {
  int nvars = static_cast<int>(var_names.size());
  std::vector<Poly> work;
  for (size_t i = 0; i < gens.size(); ++i) {
    const Poly& g = gens[i];
    if (g.nvars() != nvars)
      fail(errc::input_mismatch,
           "generator " + std::to_string(i) + " has wrong variable count");
    if (!(g.field() == f))
      fail(errc::input_mismatch,
           "generator " + std::to_string(i) + " over the wrong field");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      fail(errc::not_homogeneous,
           "generator " + std::to_string(i) + " is not homogeneous: " +
               g.str(var_names));
    if (g.degree() == 0)
      fail(errc::invalid_input, "defining ideal contains a unit");
    work.push_back(g);
  }

  // Minimalize; eliminate any linear generators by substitution so the
  // presentation is a minimal one (defining ideal inside the square of the
  // irrelevant ideal).
  for (;;) {
    std::stable_sort(work.begin(), work.end(), [](const Poly& a, const Poly& b) {
      return a.degree() < b.degree();
    });
    std::vector<Poly> kept;
    for (const auto& g : work) {
      if (kept.empty()) {
        kept.push_back(g);
        continue;
      }
      if (!ideal_nf(g, ideal_groebner(kept)).is_zero()) kept.push_back(g);
    }
    work = std::move(kept);

    auto lin = std::find_if(work.begin(), work.end(),
                            [](const Poly& g) { return g.degree() == 1; });
    if (lin == work.end()) break;

    // Solve the linear form for its highest-index variable and substitute.
    Poly g = *lin;
    int pivot = -1;
    Coef pc(0);
    for (const auto& t : g.terms()) {
      for (int k = nvars - 1; k >= 0; --k) {
        if (t.m[k] > 0 && k > pivot) {
          pivot = k;
          pc = t.c;
        }
      }
    }
    Poly rest = g - Poly::from_term(nvars, f, Monomial::var(nvars, pivot), pc);
    Poly value = rest.scaled(-(pc.inv()));  // x_pivot = value
    std::vector<Poly> next;
    for (const auto& h : work) {
      if (&h == &*lin) continue;
      Poly s = h.substitute(pivot, value).drop_var(pivot);
      if (!s.is_zero()) next.push_back(s);
    }
    var_names.erase(var_names.begin() + pivot);
    --nvars;
    work = std::move(next);
  }

  auto ring = std::shared_ptr<GradedRing>(new GradedRing());
  ring->nvars_ = nvars;
  ring->field_ = f;
  ring->names_ = std::move(var_names);
  ring->defining_ = std::move(work);
  ring->label_ = std::move(label);
  ring->deform_ = std::move(provenance);
  return ring;
}

RingPtr GradedRing::polynomial(Field f, std::vector<std::string> var_names,
                               std::string label) {
  return make(f, std::move(var_names), {}, std::move(label));
}

const std::vector<Poly>& GradedRing::gb() const {
  if (!gb_) gb_ = ideal_groebner(defining_);
  return *gb_;
}

const std::vector<Monomial>& GradedRing::gb_lts() const {
  if (!gb_lts_) {
    std::vector<Monomial> lts;
    for (const auto& g : gb()) lts.push_back(g.leading().m);
    gb_lts_ = std::move(lts);
  }
  return *gb_lts_;
}

const std::vector<Monomial>& GradedRing::std_monomials(int d) const {
  auto it = std_mono_.find(d);
  if (it != std_mono_.end()) return it->second;
  std::vector<Monomial> out;
  if (d >= 0) {
    for (const auto& m : monomials_of_degree(nvars_, d)) {
      bool reducible = false;
      for (const auto& lt : gb_lts()) {
        if (lt.divides(m)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) out.push_back(m);
    }
  }
  return std_mono_.emplace(d, std::move(out)).first->second;
}

int GradedRing::graded_dim(int d) const {
  return static_cast<int>(std_monomials(d).size());
}

bool GradedRing::is_artinian() const {
  if (!artinian_) {
    bool fin = true;
    for (int k = 0; k < nvars_ && fin; ++k) {
      bool blocked = false;
      for (const auto& lt : gb_lts()) {
        bool pure = lt[k] > 0;
        for (int k2 = 0; pure && k2 < nvars_; ++k2)
          if (k2 != k && lt[k2] > 0) pure = false;
        if (pure) {
          blocked = true;
          break;
        }
      }
      fin = blocked;
    }
    artinian_ = fin;
  }
  return *artinian_;
}

int GradedRing::top_degree() const {
  if (!top_degree_) {
    if (!is_artinian())
      fail(errc::requires_finite_length, "ring has positive dimension");
    int d = 0;
    while (graded_dim(d + 1) > 0) ++d;
    top_degree_ = d;
  }
  return *top_degree_;
}

Int GradedRing::total_dim() const {
  Int total(0);
  for (int d = 0; d <= top_degree(); ++d) total += graded_dim(d);
  return total;
}

bool GradedRing::m_squared_zero() const { return graded_dim(2) == 0; }

Poly GradedRing::reduce(const Poly& f) const {
  if (f.nvars() != nvars_)
    fail(errc::input_mismatch, "polynomial has wrong variable count");
  return ideal_nf(f, gb());
}

}  // namespace torcert
