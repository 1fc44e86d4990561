#include "torcert/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "torcert/error.hpp"

namespace torcert {

UniPoly UniPoly::monomial(int k, const Int& c) {
  std::vector<Int> v(k + 1, Int(0));
  v[k] = c;
  return UniPoly(std::move(v));
}

const Int& UniPoly::operator[](int i) const {
  static const Int kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Int& k) const {
  UniPoly r(*this);
  for (auto& c : r.c_) c *= k;
  r.normalize();
  return r;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = UniPoly::one();
  UniPoly b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero()) return UniPoly();
  std::vector<Int> v(c_.size() + k, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Int> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::at_negated() const {
  UniPoly r(*this);
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

UniPoly UniPoly::shift_arg_minus_one() const {
  // Horner: p(z-1) = (...((c_n)(z-1) + c_{n-1})(z-1) + ...)
  UniPoly r;
  UniPoly zm1({-1, 1});
  for (int i = degree(); i >= 0; --i) r = r * zm1 + UniPoly::constant(c_[i]);
  return r;
}

Int UniPoly::eval(const Int& x) const {
  Int r(0);
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

Rat UniPoly::eval(const Rat& x) const {
  Rat r(0);
  for (int i = degree(); i >= 0; --i) r = r * x + Rat(c_[i]);
  return r;
}

Int UniPoly::content() const {
  Int g(0);
  for (const auto& c : c_) g = gcd_int(g, c);
  return g;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return UniPoly();
  Int g = content();
  UniPoly r(*this);
  for (auto& c : r.c_) c /= g;
  for (const auto& c : r.c_) {
    if (c != 0) {
      if (c < 0)
        for (auto& cc : r.c_) cc = -cc;
      break;
    }
  }
  return r;
}

bool UniPoly::has_nonnegative_coeffs() const {
  for (const auto& c : c_)
    if (c < 0) return false;
  return true;
}

bool UniPoly::less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int mag = ::abs(a);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) {
      if (mag != 1) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

void divrem_rat(const UniPoly& a, const UniPoly& b, UniPoly* q, UniPoly* r,
                Int* den) {
  if (b.is_zero()) fail(errc::invalid_input, "division by zero polynomial");
  // Pseudo-division: lc(b)^k * a = q*b + r.
  std::vector<Int> rem(a.coeffs());
  std::vector<Int> quo;
  const Int& lb = b.leading();
  int db = b.degree();
  Int scale(1);
  int da = static_cast<int>(rem.size()) - 1;
  if (da >= db) quo.assign(da - db + 1, Int(0));
  while (da >= db) {
    // Multiply everything by lb, then cancel the top term.
    for (auto& c : rem) c *= lb;
    for (auto& c : quo) c *= lb;
    scale *= lb;
    Int f = rem[da] / lb;  // exact: rem[da] was just multiplied by lb
    quo[da - db] = f;
    for (int i = 0; i <= db; ++i) rem[da - db + i] -= f * b[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    da = static_cast<int>(rem.size()) - 1;
  }
  if (q) *q = UniPoly(std::move(quo));
  if (r) *r = UniPoly(std::move(rem));
  if (den) *den = scale;
}

bool divide_exact(const UniPoly& a, const UniPoly& b, UniPoly* q) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    if (q) *q = UniPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  UniPoly qq, rr;
  Int den;
  divrem_rat(a, b, &qq, &rr, &den);
  if (!rr.is_zero()) return false;
  // a = (qq * b)/den; division succeeds iff den divides qq coefficientwise.
  std::vector<Int> v(qq.coeffs());
  for (auto& c : v) {
    if (c % den != 0) return false;
    c /= den;
  }
  if (q) *q = UniPoly(std::move(v));
  return true;
}

UniPoly gcd_upoly(const UniPoly& a, const UniPoly& b) {
  UniPoly f = a.is_zero() ? a : a.primitive_part();
  UniPoly g = b.is_zero() ? b : b.primitive_part();
  while (!g.is_zero()) {
    UniPoly r;
    divrem_rat(f, g, nullptr, &r, nullptr);
    f = g;
    g = r.is_zero() ? UniPoly() : r.primitive_part();
  }
  if (f.is_zero()) return f;
  UniPoly p = f.primitive_part();
  if (p.leading() < 0) p = -p;
  return p;
}

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Scale by the (positive) content only, keeping signs: Sturm chains tolerate
// positive rescaling but not sign flips.
UniPoly content_scaled(const UniPoly& p) {
  if (p.is_zero()) return p;
  Int g = p.content();
  std::vector<Int> v(p.coeffs());
  for (auto& c : v) c /= g;
  return UniPoly(std::move(v));
}

std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  std::vector<UniPoly> chain;
  chain.push_back(content_scaled(f));
  UniPoly d = f.derivative();
  if (!d.is_zero()) chain.push_back(content_scaled(d));
  while (chain.size() >= 2 && !chain.back().is_zero()) {
    UniPoly r;
    Int den;
    divrem_rat(chain[chain.size() - 2], chain.back(), nullptr, &r, &den);
    if (r.is_zero()) break;
    // den * f_{k-2} = q * f_{k-1} + r with den = lc^j, possibly negative;
    // the next chain member is -r/den up to a positive factor.
    chain.push_back(content_scaled(den < 0 ? r : -r));
  }
  return chain;
}

int variations_at(const std::vector<UniPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int variations_at_infinity(const std::vector<UniPoly>& chain, bool plus) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    int s = sign_of(Rat(p.leading()));
    if (!plus && (p.degree() % 2 == 1)) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

int sturm_count(const UniPoly& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) fail(errc::invalid_input, "sturm_count of zero polynomial");
  auto chain = sturm_chain(f);
  return variations_at(chain, a) - variations_at(chain, b);
}

int sturm_count_positive(const UniPoly& f) {
  if (f.is_zero()) fail(errc::invalid_input, "sturm_count of zero polynomial");
  UniPoly g = f;
  // Strip roots at the origin so the count is over the open interval.
  while (g[0] == 0 && !g.is_zero()) {
    std::vector<Int> v(g.coeffs().begin() + 1, g.coeffs().end());
    g = UniPoly(std::move(v));
  }
  if (g.degree() <= 0) return 0;
  auto chain = sturm_chain(g);
  return variations_at(chain, Rat(0)) - variations_at_infinity(chain, true);
}

Rat root_bound(const UniPoly& f) {
  if (f.degree() < 1) return Rat(1);
  Rat m(0);
  for (int i = 0; i < f.degree(); ++i) {
    Rat v = ::abs(Rat(f[i]) / Rat(f.leading()));
    if (v > m) m = v;
  }
  return m + 1;
}

bool SeriesTrunc::leq(const SeriesTrunc& a, const SeriesTrunc& b) {
  if (a.c.size() != b.c.size())
    fail(errc::input_mismatch, "series truncation orders differ");
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] > b.c[i]) return false;
  return true;
}

std::string SeriesTrunc::str() const {
  std::string s = "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += c[i].get_str();
  }
  return s + "]";
}

SeriesTrunc series_of_rational(const UniPoly& num, const UniPoly& den, int N) {
  if (N < 0) fail(errc::invalid_input, "series order must be >= 0");
  const Int d0 = den[0];
  if (d0 == 0)
    fail(errc::not_a_series_unit, "denominator has zero constant term");
  if (d0 != 1 && d0 != -1)
    fail(errc::not_a_series_unit,
         "denominator constant term must be a unit in Z");
  std::vector<Int> c(N + 1, Int(0));
  for (int k = 0; k <= N; ++k) {
    Int acc = num[k];
    for (int j = 1; j <= k && j <= den.degree(); ++j) acc -= den[j] * c[k - j];
    c[k] = (d0 == 1) ? acc : -acc;
  }
  return SeriesTrunc(std::move(c));
}

}  // namespace torcert
