#include "adm/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace adm {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> q(num.size() - den.size() + 1, Int(0));
  for (long i = (long)q.size() - 1; i >= 0; --i) {
    Int lead = num[i + den.size() - 1];
    if (lead % den.back() != 0) throw std::logic_error("poly_div_exact: not divisible");
    q[i] = lead / den.back();
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  for (auto& x : num)
    if (x != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(int N) {
  static std::map<int, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  // z^N - 1 divided by Phi_d for all proper divisors d of N
  std::vector<Int> poly(N + 1, Int(0));
  poly[0] = -1;
  poly[N] = 1;
  for (int d = 1; d < N; ++d)
    if (N % d == 0) {
      // compute Phi_d recursively (cache fills bottom-up)
      std::vector<Int> phid;
      {
        auto jt = cache.find(d);
        if (jt != cache.end()) {
          phid = jt->second;
        } else {
          std::vector<Int> pd(d + 1, Int(0));
          pd[0] = -1;
          pd[d] = 1;
          for (int e = 1; e < d; ++e)
            if (d % e == 0) pd = poly_div_exact(std::move(pd), cache.at(e));
          cache[d] = pd;
          phid = std::move(pd);
        }
      }
      poly = poly_div_exact(std::move(poly), phid);
    }
  return cache.emplace(N, std::move(poly)).first->second;
}

Cyc::Cyc(const Rat& r, int N) : n_(N) {
  int deg = (int)cyclotomic_poly(N).size() - 1;
  c_.assign(std::max(deg, 1), Rat(0));
  c_[0] = r;
}

Cyc Cyc::root(int N, long k) {
  k %= N;
  if (k < 0) k += N;
  const auto& phi = cyclotomic_poly(N);
  int deg = (int)phi.size() - 1;
  // z^k reduced mod Phi_N
  std::vector<Rat> c(std::max(deg, 1), Rat(0));
  if (deg == 0) throw std::logic_error("cyclotomic degree 0");
  if (k < deg) {
    c[k] = 1;
    return Cyc(N, std::move(c));
  }
  // repeated reduction z^deg = -(phi[0] + ... + phi[deg-1] z^{deg-1})
  std::vector<Rat> cur(std::max(deg, 1), Rat(0));
  cur[0] = 1;
  for (long i = 0; i < k; ++i) {
    std::vector<Rat> nxt(cur.size(), Rat(0));
    Rat top = cur[deg - 1];
    for (int j = deg - 1; j > 0; --j) nxt[j] = cur[j - 1];
    nxt[0] = 0;
    if (top != 0)
      for (int j = 0; j < deg; ++j) nxt[j] -= top * Rat(phi[j]);
    cur = std::move(nxt);
  }
  return Cyc(N, std::move(cur));
}

bool Cyc::is_zero() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyc::rational() const {
  if (!is_rational()) throw std::domain_error("Cyc: not rational: " + str());
  return c_[0];
}

Cyc Cyc::promote(const Cyc& x, int N) {
  if (x.n_ == N) return x;
  if (N % x.n_ != 0) throw std::logic_error("Cyc::promote: bad conductor");
  long step = N / x.n_;
  Cyc r(Rat(0), N);
  for (size_t i = 0; i < x.c_.size(); ++i)
    if (x.c_[i] != 0) r += root(N, step * (long)i).scaled(x.c_[i]);
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  int N = (int)std::lcm((long)n_, (long)o.n_);
  Cyc a = promote(*this, N), b = promote(o, N);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
  int N = (int)std::lcm((long)n_, (long)o.n_);
  Cyc a = promote(*this, N), b = promote(o, N);
  const auto& phi = cyclotomic_poly(N);
  int deg = (int)phi.size() - 1;
  std::vector<Rat> conv(2 * deg, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  for (int k = 2 * deg - 1; k >= deg; --k) {
    Rat top = conv[k];
    if (top == 0) continue;
    conv[k] = 0;
    for (int j = 0; j < deg; ++j) conv[k - deg + j] -= top * Rat(phi[j]);
  }
  conv.resize(std::max(deg, 1));
  return Cyc(N, std::move(conv));
}

bool Cyc::operator==(const Cyc& o) const { return (*this - o).is_zero(); }

Cyc Cyc::scaled(const Rat& r) const {
  Cyc x = *this;
  for (auto& v : x.c_) v *= r;
  return x;
}

Cyc Cyc::pow(long e) const {
  if (e < 0) throw std::invalid_argument("Cyc::pow: negative exponent");
  Cyc r(Rat(1), 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    if (e >>= 1) b *= b;
  }
  return r;
}

Cyc Cyc::galois(long k) const {
  k %= n_;
  if (k < 0) k += n_;
  if (std::gcd((long)n_, k) != 1 && n_ != 1)
    throw std::invalid_argument("Cyc::galois: k not coprime to conductor");
  Cyc r(Rat(0), n_);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r += root(n_, k * (long)i).scaled(c_[i]);
  return r;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i];
    if (i > 0) os << "*z" << n_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace adm
