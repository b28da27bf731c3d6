#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace adm {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  Rat base = e > 0 ? b : Rat(1) / b;
  unsigned long k = e > 0 ? e : -e;
  Rat r(1);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

// Arithmetic mod a prime p < 2^31; products fit in 64-bit intermediates.
namespace fp {

inline int64_t norm(int64_t v, int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}
inline int64_t add(int64_t a, int64_t b, int64_t p) { return (a + b) % p; }
inline int64_t sub(int64_t a, int64_t b, int64_t p) { return norm(a - b, p); }
inline int64_t mul(int64_t a, int64_t b, int64_t p) { return (a * b) % p; }
inline int64_t pow(int64_t a, int64_t e, int64_t p) {
  if (e < 0) throw std::invalid_argument("fp::pow: negative exponent");
  int64_t r = 1 % p;
  a = norm(a, p);
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}
inline int64_t inv(int64_t a, int64_t p) {
  a = norm(a, p);
  if (a == 0) throw std::domain_error("fp::inv: zero");
  return pow(a, p - 2, p);
}
inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
// Smallest prime >= n.
inline int64_t next_prime(int64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}
// An element of exact multiplicative order d in F_p (requires d | p-1).
inline int64_t root_of_unity(int64_t d, int64_t p) {
  if ((p - 1) % d != 0) throw std::domain_error("no d-th root of unity in F_p");
  std::vector<int64_t> pf;
  int64_t m = d;
  for (int64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      pf.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) pf.push_back(m);
  for (int64_t g = 1; g < p; ++g) {
    int64_t c = pow(g, (p - 1) / d, p);
    bool exact = true;
    for (int64_t q : pf)
      if (pow(c, d / q, p) == 1) { exact = false; break; }
    if (exact) return c;
  }
  throw std::domain_error("root_of_unity: search failed");
}

}  // namespace fp
}  // namespace adm
