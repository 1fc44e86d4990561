#include "torcert/factor.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "torcert/error.hpp"

namespace torcert {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for the small internal primes of the Zassenhaus run.
// Coefficients live in [0, p), constant term first, no trailing zeros.
// ---------------------------------------------------------------------------

using PVec = std::vector<unsigned long>;

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PVec& a) { return static_cast<int>(a.size()) - 1; }

PVec padd(const PVec& a, const PVec& b, unsigned long p) {
  PVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  ptrim(r);
  return r;
}

PVec psub(const PVec& a, const PVec& b, unsigned long p) {
  PVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  ptrim(r);
  return r;
}

PVec pmul(const PVec& a, const PVec& b, unsigned long p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<unsigned long long>(a[i]) * b[j]) % p;
  }
  ptrim(r);
  return r;
}

unsigned long pinv(unsigned long a, unsigned long p) {
  long long t = 0, nt = 1, r = static_cast<long long>(p), nr = a % p;
  while (nr) {
    long long q = r / nr, tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<unsigned long>(t);
}

void pdivrem(const PVec& a, const PVec& b, unsigned long p, PVec* q, PVec* r) {
  PVec rem = a;
  PVec quo;
  int db = pdeg(b);
  unsigned long binv = pinv(b.back(), p);
  if (pdeg(rem) >= db) quo.assign(pdeg(rem) - db + 1, 0);
  while (pdeg(rem) >= db) {
    int k = pdeg(rem) - db;
    unsigned long f =
        static_cast<unsigned long>(static_cast<unsigned long long>(rem.back()) * binv % p);
    quo[k] = f;
    for (int i = 0; i <= db; ++i)
      rem[k + i] = (rem[k + i] + p - static_cast<unsigned long long>(f) * b[i] % p) % p;
    ptrim(rem);
  }
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

PVec pmod(const PVec& a, const PVec& b, unsigned long p) {
  PVec r;
  pdivrem(a, b, p, nullptr, &r);
  return r;
}

PVec pgcd(PVec a, PVec b, unsigned long p) {
  while (!b.empty()) {
    PVec r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    unsigned long inv = pinv(a.back(), p);
    for (auto& c : a) c = static_cast<unsigned long>(static_cast<unsigned long long>(c) * inv % p);
  }
  return a;
}

// ext gcd: s*a + t*b = g (monic) in F_p[x]
void pextgcd(const PVec& a, const PVec& b, unsigned long p, PVec* g, PVec* s,
             PVec* t) {
  PVec r0 = a, r1 = b;
  PVec s0 = {1}, s1 = {};
  PVec t0 = {}, t1 = {1};
  while (!r1.empty()) {
    PVec q, r;
    pdivrem(r0, r1, p, &q, &r);
    PVec s2 = psub(s0, pmul(q, s1, p), p);
    PVec t2 = psub(t0, pmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  unsigned long inv = pinv(r0.back(), p);
  auto scale = [&](PVec& v) {
    for (auto& c : v) c = static_cast<unsigned long>(static_cast<unsigned long long>(c) * inv % p);
  };
  scale(r0);
  scale(s0);
  scale(t0);
  *g = std::move(r0);
  *s = std::move(s0);
  *t = std::move(t0);
}

PVec ppowmod(const PVec& base, const Int& e, const PVec& mod, unsigned long p) {
  PVec result = {1};
  PVec b = pmod(base, mod, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = pmod(pmul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = pmod(pmul(result, b, p), mod, p);
  }
  return result;
}

PVec pderiv(const PVec& a, unsigned long p) {
  if (a.size() <= 1) return {};
  PVec r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = static_cast<unsigned long>(static_cast<unsigned long long>(a[i]) * (i % p) % p);
  ptrim(r);
  return r;
}

PVec to_modp(const UniPoly& f, unsigned long p) {
  PVec r(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i)
    r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  ptrim(r);
  return r;
}

// ---------------------------------------------------------------------------
// Distinct-degree + equal-degree splitting (Cantor-Zassenhaus), p odd.
// ---------------------------------------------------------------------------

void equal_degree_split(const PVec& f, int d, unsigned long p,
                        std::mt19937_64& rng, std::vector<PVec>* out) {
  if (pdeg(f) == d) {
    out->push_back(f);
    return;
  }
  Int exponent = (pow_int(Int(static_cast<long>(p)), d) - 1) / 2;
  for (;;) {
    PVec a(pdeg(f));
    for (auto& c : a) c = rng() % p;
    ptrim(a);
    if (pdeg(a) < 1) continue;
    PVec g = pgcd(f, a, p);
    if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
      equal_degree_split(g, d, p, rng, out);
      PVec h;
      pdivrem(f, g, p, &h, nullptr);
      equal_degree_split(h, d, p, rng, out);
      return;
    }
    PVec b = ppowmod(a, exponent, f, p);
    b = psub(b, PVec{1}, p);
    g = pgcd(f, b, p);
    if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
      equal_degree_split(g, d, p, rng, out);
      PVec h;
      pdivrem(f, g, p, &h, nullptr);
      equal_degree_split(h, d, p, rng, out);
      return;
    }
  }
}

std::vector<PVec> factor_modp(const PVec& f, unsigned long p) {
  // f monic squarefree mod p.
  std::vector<PVec> out;
  std::mt19937_64 rng(0x5eed1234abcdefULL);
  PVec g = f;
  PVec h = {0, 1};  // x
  int d = 0;
  while (pdeg(g) > 0) {
    ++d;
    if (2 * d > pdeg(g)) {
      out.push_back(g);
      break;
    }
    h = ppowmod(h, Int(static_cast<long>(p)), g, p);
    PVec hx = psub(h, PVec{0, 1}, p);
    PVec gd = pgcd(g, hx, p);
    if (pdeg(gd) > 0) {
      equal_degree_split(gd, d, p, rng, &out);
      PVec q;
      pdivrem(g, gd, p, &q, nullptr);
      g = std::move(q);
      h = pmod(h, g, p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting (binary tree, quadratic steps), everything monic.
// ---------------------------------------------------------------------------

using ZVec = std::vector<Int>;

ZVec zreduce(ZVec a, const Int& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZVec zmul(const ZVec& a, const ZVec& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zreduce(std::move(r), m);
}

ZVec zsub(const ZVec& a, const ZVec& b, const Int& m) {
  ZVec r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zreduce(std::move(r), m);
}

ZVec zadd(const ZVec& a, const ZVec& b, const Int& m) {
  ZVec r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zreduce(std::move(r), m);
}

// Division by a monic polynomial in (Z/m)[x].
void zdivrem_monic(const ZVec& a, const ZVec& b, const Int& m, ZVec* q,
                   ZVec* r) {
  ZVec rem = a;
  ZVec quo;
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(rem.size()) - 1;
  if (da >= db) quo.assign(da - db + 1, Int(0));
  while (da >= db) {
    Int f = rem[da];
    quo[da - db] = f;
    for (int i = 0; i <= db; ++i) {
      rem[da - db + i] -= f * b[i];
      rem[da - db + i] %= m;
    }
    rem = zreduce(std::move(rem), m);
    da = static_cast<int>(rem.size()) - 1;
  }
  if (q) *q = zreduce(std::move(quo), m);
  if (r) *r = std::move(rem);
}

struct HenselPair {
  ZVec g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m)
};

// One quadratic step m -> m^2; f, g, h monic.
void hensel_step(const ZVec& f, HenselPair& pr, const Int& m) {
  Int m2 = m * m;
  ZVec e = zsub(zreduce(f, m2), zmul(pr.g, pr.h, m2), m2);
  ZVec q, r;
  zdivrem_monic(zmul(pr.s, e, m2), pr.h, m2, &q, &r);
  ZVec hstar = zadd(pr.h, r, m2);
  // Recover the cofactor by exact division: hstar is monic and f = g*h mod
  // m^2 for a unique monic g of matching degree.
  ZVec gstar, rr;
  zdivrem_monic(zreduce(f, m2), hstar, m2, &gstar, &rr);
  if (!rr.empty())
    fail(errc::mathematical_discrepancy, "Hensel step lost divisibility");
  ZVec b = zsub(zadd(zmul(pr.s, gstar, m2), zmul(pr.t, hstar, m2), m2),
                ZVec{Int(1)}, m2);
  ZVec c, d;
  zdivrem_monic(zmul(pr.s, b, m2), hstar, m2, &c, &d);
  ZVec sstar = zsub(pr.s, d, m2);
  ZVec tstar =
      zsub(zsub(pr.t, zmul(pr.t, b, m2), m2), zmul(c, gstar, m2), m2);
  pr = HenselPair{gstar, hstar, sstar, tstar};
}

ZVec from_pvec(const PVec& a) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<long>(a[i]));
  return r;
}

// Lift the factorization f = prod(facs) from mod p to mod M >= bound.
// f and all factors monic.  Returns factors mod M and sets M.
void hensel_tree(const ZVec& f, const std::vector<PVec>& facs_p,
                 unsigned long p, const Int& bound, std::vector<ZVec>* out,
                 Int* modulus) {
  // Determine the final modulus: p^(2^j) >= bound.
  Int m(static_cast<long>(p));
  while (m < bound) m = m * m;
  *modulus = m;
  struct Frame {
    ZVec f;
    size_t lo, hi;
  };
  out->assign(facs_p.size(), ZVec{});
  std::vector<Frame> stack{{zreduce(f, m), 0, facs_p.size()}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.hi - fr.lo == 1) {
      (*out)[fr.lo] = fr.f;
      continue;
    }
    size_t mid = fr.lo + (fr.hi - fr.lo) / 2;
    PVec gl = {1}, gr = {1};
    for (size_t i = fr.lo; i < mid; ++i) gl = pmul(gl, facs_p[i], p);
    for (size_t i = mid; i < fr.hi; ++i) gr = pmul(gr, facs_p[i], p);
    PVec gg, ss, tt;
    pextgcd(gl, gr, p, &gg, &ss, &tt);
    if (pdeg(gg) != 0)
      fail(errc::mathematical_discrepancy,
           "modular factors not coprime in Hensel tree");
    HenselPair pr{from_pvec(gl), from_pvec(gr), from_pvec(ss), from_pvec(tt)};
    Int cur(static_cast<long>(p));
    while (cur < m) {
      hensel_step(fr.f, pr, cur);
      cur = cur * cur;
    }
    stack.push_back({pr.g, fr.lo, mid});
    stack.push_back({pr.h, mid, fr.hi});
  }
}

// ---------------------------------------------------------------------------
// Zassenhaus driver for a primitive squarefree monic polynomial.
// ---------------------------------------------------------------------------

UniPoly from_zvec_centered(const ZVec& a, const Int& m) {
  std::vector<Int> v(a.size());
  Int half = m / 2;
  for (size_t i = 0; i < a.size(); ++i) v[i] = (a[i] > half) ? a[i] - m : a[i];
  return UniPoly(std::move(v));
}

std::vector<UniPoly> factor_squarefree_monic(const UniPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};

  // Pick small primes where f stays squarefree; prefer few modular factors.
  std::vector<PVec> best_facs;
  unsigned long best_p = 0;
  unsigned long p = 2;
  int tried = 0;
  while (tried < 3) {
    do {
      ++p;
    } while (!is_prime(p));
    PVec fp = to_modp(f, p);
    if (pdeg(fp) != n) continue;  // p divides lc (impossible: monic)
    if (pdeg(pgcd(fp, pderiv(fp, p), p)) != 0) continue;
    auto facs = factor_modp(fp, p);
    ++tried;
    if (best_p == 0 || facs.size() < best_facs.size()) {
      best_facs = std::move(facs);
      best_p = p;
    }
    if (best_facs.size() == 1) break;
  }
  if (best_facs.size() == 1) return {f};

  // Landau-Mignotte style bound on factor coefficients.
  Rat norm2_sq(0);
  for (int i = 0; i <= n; ++i) norm2_sq += Rat(f[i]) * Rat(f[i]);
  Int norm2 = norm2_sq.get_num() / norm2_sq.get_den();
  Int bound = (pow_int(Int(2), n + 1) * (norm2 + 1) + 1) * 2;

  std::vector<ZVec> lifted;
  Int m;
  ZVec fz(f.coeffs().begin(), f.coeffs().end());
  hensel_tree(fz, best_facs, best_p, bound, &lifted, &m);

  // Subset recombination.
  std::vector<UniPoly> result;
  std::vector<int> alive(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
  UniPoly rest = f;
  size_t take = 1;
  while (2 * take <= alive.size()) {
    bool found = false;
    std::vector<size_t> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = i;
    for (;;) {
      ZVec prod{Int(1)};
      for (size_t i : idx) prod = zmul(prod, lifted[alive[i]], m);
      UniPoly cand = from_zvec_centered(prod, m);
      UniPoly quo;
      if (divide_exact(rest, cand, &quo)) {
        result.push_back(cand);
        rest = quo;
        std::vector<int> next;
        for (size_t i = 0, j = 0; i < alive.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          next.push_back(alive[i]);
        }
        alive = std::move(next);
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(take) - 1;
      while (pos >= 0 && idx[pos] == alive.size() - take + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++take;
  }
  if (rest.degree() > 0) result.push_back(rest);
  return result;
}

// Squarefree decomposition over Q (Yun); input primitive, positive lead.
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly a = gcd_upoly(f, f.derivative());
  if (a.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  UniPoly b, c;
  divide_exact(f, a, &b);
  divide_exact(f.derivative(), a, &c);
  // Yun's loop: d = c - b', g_i = gcd(b, d).
  int i = 1;
  for (;;) {
    UniPoly d = c - b.derivative();
    if (d.is_zero()) {
      if (b.degree() > 0) out.emplace_back(b, i);
      break;
    }
    UniPoly g = gcd_upoly(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    UniPoly nb, nc;
    divide_exact(b, g, &nb);
    divide_exact(d, g, &nc);
    b = std::move(nb);
    c = std::move(nc);
    ++i;
    if (b.degree() == 0) break;
  }
  return out;
}

}  // namespace

UniPoly Factorization::product() const {
  UniPoly r = UniPoly::constant(constant.get_num());
  for (const auto& f : factors)
    for (int i = 0; i < f.mult; ++i) r = r * f.f;
  if (constant.get_den() != 1) {
    // constant is rational only when the input content was; scale back.
    std::vector<Int> v(r.coeffs());
    for (auto& c : v) {
      if (c % constant.get_den() != 0)
        fail(errc::mathematical_discrepancy, "non-integral factor product");
      c /= constant.get_den();
    }
    r = UniPoly(std::move(v));
  }
  return r;
}

Factorization upoly_factor(const UniPoly& d) {
  if (d.is_zero()) fail(errc::invalid_input, "cannot factor the zero polynomial");
  Factorization out;

  UniPoly f = d.primitive_part();

  // Strip powers of z.
  int zpow = 0;
  while (!f.is_zero() && f[0] == 0) {
    std::vector<Int> v(f.coeffs().begin() + 1, f.coeffs().end());
    f = UniPoly(std::move(v));
    ++zpow;
  }
  if (zpow > 0) out.factors.push_back({UniPoly({0, 1}), zpow});

  if (f.degree() >= 1) {
    for (auto& [part, mult] : squarefree_decompose(f)) {
      // Monicize: F(y) = l^(n-1) * part(y/l) is monic with integer
      // coefficients; factors map back through primitive_part(G(l*z)).
      const Int l = part.leading();
      const int n = part.degree();
      std::vector<Int> F(n + 1);
      F[n] = 1;
      Int pw(1);
      for (int i = n - 1; i >= 0; --i) {
        F[i] = part[i] * pw;
        pw *= l;
      }
      UniPoly monic{std::vector<Int>(F)};
      for (auto& g : factor_squarefree_monic(monic)) {
        // Map back: z -> l*z, then take the primitive part.
        std::vector<Int> back(g.degree() + 1);
        Int lp(1);
        for (int i = 0; i <= g.degree(); ++i) {
          back[i] = g[i] * lp;
          lp *= l;
        }
        UniPoly h = UniPoly(std::move(back)).primitive_part();
        out.factors.push_back({h, mult});
      }
    }
  }

  std::sort(out.factors.begin(), out.factors.end(),
            [](const UPolyFactor& a, const UPolyFactor& b) {
              if (!(a.f == b.f)) return UniPoly::less(a.f, b.f);
              return a.mult < b.mult;
            });

  // d = constant * prod with prod primitive, so the constant is the ratio of
  // leading coefficients.
  UniPoly prod = UniPoly::one();
  for (const auto& fac : out.factors)
    for (int i = 0; i < fac.mult; ++i) prod = prod * fac.f;
  out.constant = Rat(d.leading()) / Rat(prod.leading());
  out.constant.canonicalize();
  return out;
}

std::vector<RootBox> upoly_roots(const UniPoly& d, const Rat& tol) {
  if (tol <= 0) fail(errc::invalid_tolerance, "tolerance must be positive");
  if (d.degree() < 1)
    fail(errc::invalid_input, "upoly_roots requires a nonconstant polynomial");
  const double tol_d = tol.get_d();

  std::vector<RootBox> out;
  Factorization fac = upoly_factor(d);
  for (const auto& [g, mult] : fac.factors) {
    if (g.degree() == 1) {
      Rat root = Rat(-g[0]) / Rat(g[1]);
      root.canonicalize();
      RootBox box;
      box.exact_rational = true;
      box.value = root;
      box.z = std::complex<double>(root.get_d(), 0.0);
      box.radius = 0.0;
      box.mult = mult;
      out.push_back(box);
      continue;
    }
    // Durand-Kerner on the (squarefree, irreducible) factor.
    const int n = g.degree();
    std::vector<std::complex<double>> coeff(n + 1);
    for (int i = 0; i <= n; ++i) coeff[i] = g[i].get_d();
    auto eval = [&](std::complex<double> z) {
      std::complex<double> r = coeff[n];
      for (int i = n - 1; i >= 0; --i) r = r * z + coeff[i];
      return r;
    };
    double R = root_bound(g).get_d();
    std::vector<std::complex<double>> z(n);
    for (int i = 0; i < n; ++i) {
      double a = 2.0 * M_PI * i / n + 0.43;
      z[i] = std::polar(0.7 * R + 0.3, a);
    }
    auto weierstrass = [&](int i) {
      std::complex<double> denom = coeff[n];
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      return eval(z[i]) / denom;
    };
    for (int iter = 0; iter < 4000; ++iter) {
      double worst = 0;
      for (int i = 0; i < n; ++i) {
        std::complex<double> w = weierstrass(i);
        z[i] -= w;
        worst = std::max(worst, std::abs(w));
      }
      if (worst * n <= tol_d * 0.25) break;
    }
    // Certified inclusion disks at the final points: every root of g lies in
    // the union of D(z_i, n*|W_i|); a margin absorbs double rounding.
    for (int i = 0; i < n; ++i) {
      double rad = n * std::abs(weierstrass(i)) * 1.05 + 1e-290;
      if (rad > tol_d)
        fail(errc::tolerance_undecided,
             "root isolation did not reach the requested tolerance");
      RootBox box;
      box.exact_rational = false;
      box.z = z[i];
      box.radius = rad;
      box.mult = mult;
      out.push_back(box);
    }
  }
  std::sort(out.begin(), out.end(), [](const RootBox& a, const RootBox& b) {
    if (a.exact_rational != b.exact_rational) return a.exact_rational;
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  return out;
}

}  // namespace torcert
