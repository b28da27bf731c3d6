#pragma once

// Exact scalar type: arbitrary-precision rational, prime-field element
// (p prime < 2^31), or a quotient of one-variable-list Laurent polynomials
// over Q (used for generic parameters like q^{1/2}).
//
// Fractions are kept lazily: equality uses cross multiplication, reduction
// only strips monomial content, so no multivariate gcd is ever required.

#include <memory>
#include <ostream>

#include "adm/laurent.hpp"
#include "adm/numeric.hpp"

namespace adm {

class Scalar {
 public:
  enum class Kind : uint8_t { Rational, Prime, Fraction };

  Scalar() : kind_(Kind::Rational), q_(0) {}
  static Scalar rational(Rat q) {
    Scalar s;
    s.q_ = std::move(s.canon(q));
    return s;
  }
  static Scalar integer(long v) { return rational(Rat(v)); }
  static Scalar prime(int64_t v, int64_t p) {
    Scalar s;
    s.kind_ = Kind::Prime;
    s.p_ = p;
    s.v_ = fp::norm(v, p);
    return s;
  }
  static Scalar fraction(Laurent<Rat> num, Laurent<Rat> den);
  static Scalar poly(Laurent<Rat> num) {
    auto one = Laurent<Rat>::constant(num.vars(), Rat(1));
    return fraction(std::move(num), std::move(one));
  }

  Kind kind() const { return kind_; }
  bool is_zero() const;
  bool is_one() const;
  int64_t modulus() const { return p_; }
  int64_t residue() const { return v_; }
  const Rat& rat() const;
  const Laurent<Rat>& num() const;
  const Laurent<Rat>& den() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(long e) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  struct Frac {
    Laurent<Rat> num, den;
  };
  static Rat canon(Rat q) {
    q.canonicalize();
    return q;
  }
  void check_compat(const Scalar& o) const;
  Kind kind_;
  Rat q_;               // Rational
  int64_t v_ = 0, p_ = 0;  // Prime
  std::shared_ptr<const Frac> f_;  // Fraction (immutable)
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace adm
