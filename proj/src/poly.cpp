#include "torcert/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace torcert {

std::string Monomial::str(const std::vector<std::string>& names) const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nvars(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << "*";
    os << names[i];
    if (e_[i] > 1) os << "^" << e_[i];
    first = false;
  }
  return os.str();
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial(0));
    return out;
  }
  std::vector<int> e(nvars, 0);
  // Recursive enumeration, then sort descending in degrevlex.
  std::vector<std::vector<int>> all;
  std::vector<int> cur(nvars, 0);
  auto rec = [&](auto&& self, int var, int rest) -> void {
    if (var == nvars - 1) {
      cur[var] = rest;
      all.push_back(cur);
      return;
    }
    for (int k = rest; k >= 0; --k) {
      cur[var] = k;
      self(self, var + 1, rest - k);
    }
    cur[var] = 0;
  };
  rec(rec, 0, d);
  for (auto& v : all) out.push_back(Monomial(std::move(v)));
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return drl_less(b, a); });
  return out;
}

Poly Poly::constant(int nvars, Field f, const Coef& c) {
  Poly p(nvars, f);
  Coef cc = coerce_into(c, f);
  if (!cc.is_zero()) p.t_.push_back({Monomial::one(nvars), cc});
  return p;
}

Poly Poly::variable(int nvars, Field f, int i) {
  Poly p(nvars, f);
  p.t_.push_back({Monomial::var(nvars, i), Coef::one(f)});
  return p;
}

Poly Poly::from_term(int nvars, Field f, const Monomial& m, const Coef& c) {
  Poly p(nvars, f);
  Coef cc = coerce_into(c, f);
  if (!cc.is_zero()) p.t_.push_back({m, cc});
  return p;
}

const Term& Poly::leading() const {
  if (t_.empty()) fail(errc::invalid_input, "leading term of zero polynomial");
  return t_.front();
}

bool Poly::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = t_.front().m.degree();
  for (const auto& t : t_)
    if (t.m.degree() != d) return false;
  return true;
}

Coef Poly::constant_coeff() const {
  if (!t_.empty() && t_.back().m.is_one()) return t_.back().c;
  return Coef::zero(field_);
}

void Poly::check_compatible(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_)
    fail(errc::input_mismatch, "polynomials in different variable counts");
  if (!(a.field_ == b.field_))
    fail(errc::input_mismatch, "polynomials over different coefficient fields");
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(*this, o);
  Poly r(nvars_, field_);
  // Merge two sorted term lists.
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j >= o.t_.size() ||
        (i < t_.size() && drl_less(o.t_[j].m, t_[i].m))) {
      r.t_.push_back(t_[i++]);
    } else if (i >= t_.size() || drl_less(t_[i].m, o.t_[j].m)) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Coef c = t_[i].c + o.t_[j].c;
      if (!c.is_zero()) r.t_.push_back({t_[i].m, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_compatible(*this, o);
  std::map<Monomial, Coef, DrlGreater> acc;
  for (const auto& a : t_)
    for (const auto& b : o.t_) {
      Monomial m = a.m * b.m;
      Coef c = a.c * b.c;
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
  Poly r(nvars_, field_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.t_.push_back({m, c});
  return r;
}

Poly Poly::scaled(const Coef& c) const {
  Poly r(nvars_, field_);
  if (c.is_zero()) return r;
  r.t_ = t_;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Poly Poly::times_term(const Coef& c, const Monomial& m) const {
  Poly r(nvars_, field_);
  if (c.is_zero()) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (nvars_ != o.nvars_ || !(field_ == o.field_) ||
      t_.size() != o.t_.size())
    return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
  return true;
}

Poly Poly::substitute(int var, const Poly& value) const {
  Poly r = Poly::zero(nvars_, field_);
  for (const auto& t : t_) {
    std::vector<int> e = t.m.exps();
    int k = e[var];
    e[var] = 0;
    Poly term = Poly::from_term(nvars_, field_, Monomial(std::move(e)), t.c);
    for (int i = 0; i < k; ++i) term = term * value;
    r = r + term;
  }
  return r;
}

Poly Poly::drop_var(int var) const {
  Poly r(nvars_ - 1, field_);
  for (const auto& t : t_) {
    if (t.m[var] != 0)
      fail(errc::invalid_input, "drop_var with nonzero exponent");
    std::vector<int> e;
    e.reserve(nvars_ - 1);
    for (int i = 0; i < nvars_; ++i)
      if (i != var) e.push_back(t.m[i]);
    r.t_.push_back({Monomial(std::move(e)), t.c});
  }
  // Order is preserved by deleting a zero coordinate in degrevlex.
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    std::string cs = t.c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit = (cs == "1");
    if (!unit || t.m.is_one()) os << cs;
    if (!t.m.is_one()) {
      if (!unit) os << "*";
      os << t.m.str(names);
    }
    first = false;
  }
  return os.str();
}

}  // namespace torcert
