#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "torcert/error.hpp"

namespace torcert {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact integer square root when n is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) fail(errc::invalid_input, "exact_sqrt of negative integer");
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
  }
  return std::nullopt;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  auto r = exact_sqrt(n);
  if (r && root) *root = *r;
  return r.has_value();
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace torcert
