#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "torcert/arith.hpp"
#include "torcert/error.hpp"

namespace torcert {

/// Coefficient field descriptor: p == 0 is the rationals, otherwise the prime
/// field F_p.
struct Field {
  unsigned long p = 0;

  bool is_rational() const { return p == 0; }
  unsigned long characteristic() const { return p; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{0}; }
  static Field prime(unsigned long p) {
    if (!is_prime(p)) fail(errc::invalid_input, "F(p) needs a prime modulus");
    return Field{p};
  }
  std::string name() const {
    return is_rational() ? "Q" : "F(" + std::to_string(p) + ")";
  }
};

/// Exact field element.  Either a rational (p_ == 0, stored in q_) or an
/// element of F_p (stored in v_, 0 <= v_ < p_).  Values constructed from plain
/// integers start out rational and coerce into F_p on contact, so Eigen's
/// Scalar(0)/Scalar(1) literals interoperate with prime-field matrices.
/// Elements of distinct prime fields never mix (InputMismatch).
class Coef {
 public:
  Coef() : q_(0) {}
  Coef(int n) : q_(n) {}
  Coef(long n) : q_(Int(n)) {}
  Coef(const Int& n) : q_(n) {}
  Coef(const Rat& q) : q_(q) { q_.canonicalize(); }

  static Coef zero(Field f) { return of(Rat(0), f); }
  static Coef one(Field f) { return of(Rat(1), f); }

  /// Canonical image of a rational in the field f.
  static Coef of(const Rat& x, Field f) {
    if (f.is_rational()) return Coef(x);
    Coef c;
    c.p_ = f.p;
    c.v_ = mod_of(x, f.p);
    return c;
  }

  Field field() const { return Field{p_}; }
  bool is_fp() const { return p_ != 0; }
  bool is_zero() const { return is_fp() ? v_ == 0 : q_ == 0; }
  bool is_one() const { return is_fp() ? v_ == 1 : q_ == 1; }

  const Rat& rat() const { return q_; }
  unsigned long fp_value() const { return v_; }

  Coef operator-() const {
    Coef r(*this);
    if (r.is_fp()) {
      if (r.v_ != 0) r.v_ = r.p_ - r.v_;
    } else {
      r.q_ = -r.q_;
    }
    return r;
  }

  Coef& operator+=(const Coef& o) { return apply(o, Op::add); }
  Coef& operator-=(const Coef& o) { return apply(o, Op::sub); }
  Coef& operator*=(const Coef& o) { return apply(o, Op::mul); }
  Coef& operator/=(const Coef& o) { return apply(o, Op::div); }

  friend Coef operator+(Coef a, const Coef& b) { return a += b; }
  friend Coef operator-(Coef a, const Coef& b) { return a -= b; }
  friend Coef operator*(Coef a, const Coef& b) { return a *= b; }
  friend Coef operator/(Coef a, const Coef& b) { return a /= b; }

  Coef inv() const {
    if (is_zero()) fail(errc::invalid_input, "division by zero coefficient");
    if (!is_fp()) return Coef(Rat(1) / q_);
    Coef r;
    r.p_ = p_;
    r.v_ = inv_mod(v_, p_);
    return r;
  }

  friend bool operator==(const Coef& a, const Coef& b) {
    if (a.p_ == b.p_) return a.is_fp() ? a.v_ == b.v_ : a.q_ == b.q_;
    // One side rational literal, the other F_p: compare images.
    if (a.is_fp()) return a.v_ == mod_of(b.q_, a.p_);
    if (b.is_fp()) return b.v_ == mod_of(a.q_, b.p_);
    return false;
  }
  friend bool operator!=(const Coef& a, const Coef& b) { return !(a == b); }

  /// Total order used only for deterministic pivoting and sorting.
  friend bool operator<(const Coef& a, const Coef& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    return a.is_fp() ? a.v_ < b.v_ : a.q_ < b.q_;
  }
  friend bool operator>(const Coef& a, const Coef& b) { return b < a; }
  friend bool operator<=(const Coef& a, const Coef& b) { return !(b < a); }
  friend bool operator>=(const Coef& a, const Coef& b) { return !(a < b); }

  std::string str() const {
    if (is_fp()) return std::to_string(v_);
    return to_string(q_);
  }

 private:
  enum class Op { add, sub, mul, div };

  static unsigned long mod_of(const Rat& x, unsigned long p) {
    Int den = x.get_den();
    unsigned long d = mpz_fdiv_ui(den.get_mpz_t(), p);
    if (d == 0)
      fail(errc::input_mismatch,
           "rational with denominator divisible by " + std::to_string(p));
    Int num = x.get_num();
    unsigned long n = mpz_fdiv_ui(num.get_mpz_t(), p);
    return mul_mod(n, inv_mod(d, p), p);
  }

  static unsigned long mul_mod(unsigned long a, unsigned long b,
                               unsigned long p) {
    return static_cast<unsigned long>(
        (static_cast<unsigned long long>(a) * b) % p);
  }

  static unsigned long inv_mod(unsigned long a, unsigned long p) {
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) fail(errc::invalid_input, "not invertible mod p");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<unsigned long>(t);
  }

  Coef& apply(const Coef& o, Op op) {
    if (p_ != o.p_) {
      if (p_ != 0 && o.p_ != 0)
        fail(errc::input_mismatch, "coefficients from distinct prime fields");
      if (p_ == 0) {
        // Coerce our rational into the other side's prime field.
        unsigned long v = mod_of(q_, o.p_);
        p_ = o.p_;
        v_ = v;
        q_ = 0;
        return apply(o, op);
      }
      Coef rhs = Coef::of(o.q_, Field{p_});
      return apply(rhs, op);
    }
    if (is_fp()) {
      switch (op) {
        case Op::add: v_ = (v_ + o.v_) % p_; break;
        case Op::sub: v_ = (v_ + p_ - o.v_) % p_; break;
        case Op::mul: v_ = mul_mod(v_, o.v_, p_); break;
        case Op::div: v_ = mul_mod(v_, inv_mod(o.v_, p_), p_); break;
      }
    } else {
      switch (op) {
        case Op::add: q_ += o.q_; break;
        case Op::sub: q_ -= o.q_; break;
        case Op::mul: q_ *= o.q_; break;
        case Op::div:
          if (o.q_ == 0) fail(errc::invalid_input, "division by zero");
          q_ /= o.q_;
          break;
      }
    }
    return *this;
  }

  Rat q_;
  unsigned long v_ = 0;
  unsigned long p_ = 0;
};

/// Image of c in the field f: rational literals coerce into F_p, prime-field
/// values must already match (InputMismatch otherwise).
inline Coef coerce_into(const Coef& c, Field f) {
  if (c.field() == f) return c;
  if (!c.is_fp()) return Coef::of(c.rat(), f);
  fail(errc::input_mismatch,
       "coefficient from " + c.field().name() + " used in " + f.name());
}

/// Pivot magnitude for exact elimination: any nonzero element is a valid
/// pivot, rationals are ranked by absolute value.
inline Coef abs(const Coef& c) {
  if (c.is_fp()) return c.is_zero() ? Coef(0) : Coef(1);
  return Coef(Rat(::abs(c.rat())));
}

using CMat = Eigen::Matrix<Coef, Eigen::Dynamic, Eigen::Dynamic>;
using CVec = Eigen::Matrix<Coef, Eigen::Dynamic, 1>;

}  // namespace torcert

namespace Eigen {
template <>
struct NumTraits<torcert::Coef> : GenericNumTraits<torcert::Coef> {
  typedef torcert::Coef Real;
  typedef torcert::Coef NonInteger;
  typedef torcert::Coef Nested;
  static inline Real epsilon() { return torcert::Coef(0); }
  static inline Real dummy_precision() { return torcert::Coef(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60
  };
};
}  // namespace Eigen
