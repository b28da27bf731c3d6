#pragma once

// Elements of Q(zeta_N): rational polynomials in a primitive N-th root of
// unity, reduced modulo the N-th cyclotomic polynomial. Used for character
// values and root-of-unity sums; no floating point.

#include <vector>

#include "adm/numeric.hpp"

namespace adm {

// Coefficients of the N-th cyclotomic polynomial (monic, integer).
const std::vector<Int>& cyclotomic_poly(int N);

class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rat(0)) {}
  explicit Cyc(const Rat& r, int N = 1);
  // zeta_N^k
  static Cyc root(int N, long k = 1);

  int conductor() const { return n_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational() const;  // throws if not rational

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  Cyc scaled(const Rat& r) const;
  Cyc pow(long e) const;  // e >= 0
  // Galois conjugate zeta -> zeta^k, gcd(k, N) = 1. conj() is k = -1.
  Cyc galois(long k) const;
  Cyc conj() const { return galois(-1); }

  std::string str() const;

 private:
  Cyc(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  static Cyc promote(const Cyc& x, int N);  // rewrite in Q(zeta_N), n_ | N
  int n_;                // conductor context (root order)
  std::vector<Rat> c_;   // coefficients in basis 1, z, ..., z^{deg Phi_N - 1}
};

}  // namespace adm
