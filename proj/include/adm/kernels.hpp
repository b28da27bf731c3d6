#pragma once

// Combinatorial kernels: exact binomials, multinomials, double factorials,
// Stirling numbers, involution counts, trinomial coefficients, hook lengths,
// and the coefficient-extraction identity check used for planar half-diagram
// counts. Convention: 0^0 = 1 and (-1)!! = 1.

#include <vector>

#include "adm/numeric.hpp"

namespace adm {

Int binomial(long n, long k);
Int multinomial(const std::vector<long>& parts);  // (sum parts)! / prod parts!
Int double_factorial(long n);                     // n!!, with (-1)!! = 1
Int stirling2(long n, long k);
Int factorial(long n);
Int involution_count(long k);       // I(k) = I(k-1) + (k-1) I(k-2)
Int trinomial_coeff(long m, long j);  // [t^j] (1 + t + t^2)^m

// Weakly decreasing positive parts.
class IntPartition {
 public:
  IntPartition() = default;
  explicit IntPartition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int sum() const { return sum_; }
  size_t size() const { return parts_.size(); }
  bool operator==(const IntPartition& o) const { return parts_ == o.parts_; }
  bool operator<(const IntPartition& o) const { return parts_ < o.parts_; }
  std::string str() const;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

// All partitions of n, deterministic order.
std::vector<IntPartition> partitions_of(int n);

// Number of standard Young tableaux of the given shape (hook length formula).
Int hook_dim(const IntPartition& shape);

// Checks [x^n] N(x)^k = (k/n) [t^{n-k}] phi(t)^n for 1 <= k <= n <= order,
// where N = x M(x) is built from the quadratic recurrence
// M = 1 + x M + x^2 M^2 and phi defaults to 1 + t + t^2. Passing a different
// phi (e.g. {1,1}) serves as a negative control.
bool lagrange_inversion_check(int order, const std::vector<long>& phi = {1, 1, 1});

}  // namespace adm
