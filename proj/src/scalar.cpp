#include "adm/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace adm {

namespace {

// Strip common monomial content: divide num and den by z^e where e is the
// componentwise minimum exponent across both supports, and normalize the
// den's leading coefficient to 1.
void normalize(Laurent<Rat>& num, Laurent<Rat>& den) {
  if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
  size_t nv = den.vars().size();
  if (num.is_zero()) {
    den = Laurent<Rat>::constant(den.vars(), Rat(1));
    return;
  }
  std::vector<int32_t> mn(nv, 0);
  bool first = true;
  auto scan = [&](const Laurent<Rat>& f) {
    for (auto& [e, v] : f.terms()) {
      for (size_t i = 0; i < nv; ++i)
        mn[i] = first ? e[i] : std::min(mn[i], e[i]);
      first = false;
    }
  };
  scan(num);
  scan(den);
  std::vector<int32_t> neg(nv);
  for (size_t i = 0; i < nv; ++i) neg[i] = -mn[i];
  Rat lead = den.terms().rbegin()->second;
  auto shift = Laurent<Rat>::monomial(den.vars(), neg, Rat(1) / lead);
  num = num * shift;
  den = den * shift;
}

}  // namespace

Scalar Scalar::fraction(Laurent<Rat> num, Laurent<Rat> den) {
  if (num.vars() != den.vars()) throw std::invalid_argument("Scalar: mixed variable sets");
  normalize(num, den);
  Scalar s;
  s.kind_ = Kind::Fraction;
  s.f_ = std::make_shared<const Frac>(Frac{std::move(num), std::move(den)});
  return s;
}

bool Scalar::is_zero() const {
  switch (kind_) {
    case Kind::Rational: return q_ == 0;
    case Kind::Prime: return v_ == 0;
    case Kind::Fraction: return f_->num.is_zero();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (kind_) {
    case Kind::Rational: return q_ == 1;
    case Kind::Prime: return v_ == 1 % p_;
    case Kind::Fraction: return f_->num == f_->den;
  }
  return false;
}

const Rat& Scalar::rat() const {
  if (kind_ != Kind::Rational) throw std::logic_error("Scalar: not rational");
  return q_;
}
const Laurent<Rat>& Scalar::num() const {
  if (kind_ != Kind::Fraction) throw std::logic_error("Scalar: not a fraction");
  return f_->num;
}
const Laurent<Rat>& Scalar::den() const {
  if (kind_ != Kind::Fraction) throw std::logic_error("Scalar: not a fraction");
  return f_->den;
}

void Scalar::check_compat(const Scalar& o) const {
  if (kind_ != o.kind_) throw std::invalid_argument("Scalar: mixed kinds");
  if (kind_ == Kind::Prime && p_ != o.p_) throw std::invalid_argument("Scalar: mixed moduli");
  if (kind_ == Kind::Fraction && f_->num.vars() != o.f_->num.vars())
    throw std::invalid_argument("Scalar: mixed variable sets");
}

Scalar Scalar::operator-() const {
  switch (kind_) {
    case Kind::Rational: return rational(-q_);
    case Kind::Prime: return prime(p_ - v_, p_);
    case Kind::Fraction: return fraction(-f_->num, f_->den);
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_compat(o);
  switch (kind_) {
    case Kind::Rational: return rational(q_ + o.q_);
    case Kind::Prime: return prime(fp::add(v_, o.v_, p_), p_);
    case Kind::Fraction:
      if (f_->den == o.f_->den) return fraction(f_->num + o.f_->num, f_->den);
      return fraction(f_->num * o.f_->den + o.f_->num * f_->den, f_->den * o.f_->den);
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_compat(o);
  switch (kind_) {
    case Kind::Rational: return rational(q_ * o.q_);
    case Kind::Prime: return prime(fp::mul(v_, o.v_, p_), p_);
    case Kind::Fraction: return fraction(f_->num * o.f_->num, f_->den * o.f_->den);
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  switch (kind_) {
    case Kind::Rational: return rational(Rat(1) / q_);
    case Kind::Prime: return prime(fp::inv(v_, p_), p_);
    case Kind::Fraction: return fraction(f_->den, f_->num);
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::pow(long e) const {
  Scalar b = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -e : e;
  Scalar r;
  switch (kind_) {
    case Kind::Rational: r = rational(Rat(1)); break;
    case Kind::Prime: r = prime(1, p_); break;
    case Kind::Fraction: {
      auto one = Laurent<Rat>::constant(f_->num.vars(), Rat(1));
      r = fraction(one, one);
      break;
    }
  }
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Rational: return q_ == o.q_;
    case Kind::Prime: return p_ == o.p_ && v_ == o.v_;
    case Kind::Fraction:
      return f_->num.vars() == o.f_->num.vars() &&
             f_->num * o.f_->den == o.f_->num * f_->den;
  }
  return false;
}

std::string Scalar::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Rational: os << q_; break;
    case Kind::Prime: os << v_ << " (mod " << p_ << ")"; break;
    case Kind::Fraction:
      os << "(" << f_->num.str() << ")";
      if (!(f_->den == Laurent<Rat>::constant(f_->den.vars(), Rat(1))))
        os << "/(" << f_->den.str() << ")";
      break;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace adm
