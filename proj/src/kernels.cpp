#include "adm/kernels.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace adm {

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), (unsigned long)n);
  return r;
}

Int multinomial(const std::vector<long>& parts) {
  long n = 0;
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    n += p;
  }
  Int r = factorial(n);
  for (long p : parts) r /= factorial(p);
  return r;
}

Int double_factorial(long n) {
  if (n == -1) return 1;
  if (n < -1) throw std::invalid_argument("double_factorial: argument < -1");
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), (unsigned long)n);
  return r;
}

Int stirling2(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
  if (k > n) return 0;
  if (n == 0) return 1;  // S(0,0) = 1
  if (k == 0) return 0;
  // S(n,k) = k S(n-1,k) + S(n-1,k-1)
  std::vector<Int> row(n + 1, Int(0));
  row[0] = 1;
  for (long i = 1; i <= n; ++i) {
    std::vector<Int> next(n + 1, Int(0));
    for (long j = 1; j <= i; ++j) next[j] = Int(j) * row[j] + row[j - 1];
    row = std::move(next);
  }
  return row[k];
}

Int involution_count(long k) {
  if (k < 0) throw std::invalid_argument("involution_count: negative");
  Int a = 1, b = 1;  // I(0), I(1)
  if (k == 0) return a;
  for (long i = 2; i <= k; ++i) {
    Int c = b + Int(i - 1) * a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

Int trinomial_coeff(long m, long j) {
  if (m < 0) throw std::invalid_argument("trinomial_coeff: negative m");
  if (j < 0 || j > 2 * m) return 0;
  // [t^j](1+t+t^2)^m = sum_i binom(m,i) binom(m-i, j-2i)
  Int s = 0;
  for (long i = 0; 2 * i <= j && i <= m; ++i) s += binomial(m, i) * binomial(m - i, j - 2 * i);
  return s;
}

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("IntPartition: nonpositive part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("IntPartition: parts not weakly decreasing");
    sum_ += parts_[i];
  }
}

std::string IntPartition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << "]";
  return os.str();
}

std::vector<IntPartition> partitions_of(int n) {
  std::vector<IntPartition> out;
  std::vector<int> cur;
  // descending recursive enumeration
  auto rec = [&](auto&& self, int rest, int maxPart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxPart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Int hook_dim(const IntPartition& shape) {
  const auto& p = shape.parts();
  if (p.empty()) return 1;
  std::vector<int> colLen(p[0], 0);
  for (int r = 0; r < (int)p.size(); ++r)
    for (int c = 0; c < p[r]; ++c) colLen[c]++;
  Int num = factorial(shape.sum());
  Int den = 1;
  for (int r = 0; r < (int)p.size(); ++r)
    for (int c = 0; c < p[r]; ++c) den *= Int(p[r] - c + colLen[c] - r - 1);
  if (num % den != 0) throw std::logic_error("hook_dim: non-integral");
  return num / den;
}

bool lagrange_inversion_check(int order, const std::vector<long>& phi) {
  if (order < 2) throw std::invalid_argument("lagrange_inversion_check: order < 2");
  int n = order;
  // Motzkin numbers by the quadratic recurrence M = 1 + x M + x^2 M^2
  std::vector<Int> mot(n + 1, Int(0));
  mot[0] = 1;
  for (int j = 1; j <= n; ++j) {
    mot[j] = mot[j - 1];
    for (int i = 0; i + 2 <= j; ++i) mot[j] += mot[i] * mot[j - 2 - i];
  }
  // power series of N = x M, truncated at degree n
  std::vector<Int> N(n + 1, Int(0));
  for (int j = 1; j <= n; ++j) N[j] = mot[j - 1];
  auto mulTrunc = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(n + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  };
  // phi(t)^e coefficient table, e = 1..n
  std::vector<Int> phiC(n + 1, Int(0));
  for (size_t i = 0; i < phi.size() && (int)i <= n; ++i) phiC[i] = phi[i];
  std::vector<Int> Nk(n + 1, Int(0)), phiN(n + 1, Int(0));
  Nk[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Nk = mulTrunc(Nk, N);  // N^k
    // phi^j computed fresh per n below; cheap at this scale
    for (int nn = k; nn <= n; ++nn) {
      std::vector<Int> ph(n + 1, Int(0));
      ph[0] = 1;
      for (int e = 0; e < nn; ++e) ph = mulTrunc(ph, phiC);
      // k/n * [t^{n-k}] phi^n must equal [x^n] N^k
      Int rhs = Int(k) * ph[nn - k];
      if (rhs % nn != 0) return false;
      if (Nk[nn] != rhs / nn) return false;
    }
  }
  return true;
}

}  // namespace adm
