#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adm/cyclotomic.hpp"
#include "adm/kernels.hpp"
#include "adm/laurent.hpp"
#include "adm/scalar.hpp"

using namespace adm;

namespace {

// brute-force count of perfect matchings of {1..n} (n even), oracle for n!!
long count_pairings(int n) {
  if (n == 0) return 1;
  if (n % 2 == 1) return 0;
  // pair element 0 with each other element
  long total = 0;
  std::vector<int> items(n);
  for (int i = 0; i < n; ++i) items[i] = i;
  std::function<long(std::vector<int>)> rec = [&](std::vector<int> rest) -> long {
    if (rest.empty()) return 1;
    long s = 0;
    for (size_t j = 1; j < rest.size(); ++j) {
      std::vector<int> next;
      for (size_t k = 1; k < rest.size(); ++k)
        if (k != j) next.push_back(rest[k]);
      s += rec(next);
    }
    return s;
  };
  total = rec(items);
  return total;
}

// brute-force count of set partitions of an n-set into k blocks
long count_partitions_into(int n, int k) {
  std::vector<int> assign(n, 0);
  long count = 0;
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (int b = 0; b <= used; ++b) {
      assign[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);
  return count;
}

// brute-force involutions in S_k
long count_involutions(int k) {
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  long count = 0;
  std::sort(perm.begin(), perm.end());
  do {
    bool inv = true;
    for (int i = 0; i < k && inv; ++i)
      if (perm[perm[i]] != i) inv = false;
    if (inv) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// count standard Young tableaux by recursive filling
long count_syt(std::vector<int> shape) {
  std::function<long(std::vector<int>&)> rec = [&](std::vector<int>& rows) -> long {
    int total = 0;
    for (int r : rows) total += r;
    if (total == 0) return 1;
    long s = 0;
    // remove a corner cell
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r] == 0) continue;
      if (r + 1 < rows.size() && rows[r + 1] == rows[r]) continue;
      rows[r]--;
      s += rec(rows);
      rows[r]++;
    }
    return s;
  };
  return rec(shape);
}

}  // namespace

TEST_CASE("binomial and multinomial") {
  CHECK(binomial(4, 1) == 4);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(multinomial({1, 1, 1}) == 6);  // binom(3;1,1,1)
  CHECK(multinomial({2, 2}) == 6);
  CHECK_THROWS(binomial(-1, 0));
}

TEST_CASE("double factorial vs pairing oracle") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(3) == 3);
  for (int n = 0; n <= 9; n += 1) {
    if (n % 2 == 1) CHECK(double_factorial(n - 1) == count_pairings(n - 1 + 1));
  }
  // (2k-1)!! = number of pairings of 2k points
  for (int k = 0; k <= 4; ++k) CHECK(double_factorial(2 * k - 1) == count_pairings(2 * k));
  CHECK_THROWS(double_factorial(-2));
}

TEST_CASE("stirling2 vs partition oracle") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == count_partitions_into(n, k));
  CHECK_THROWS(stirling2(-1, 0));
}

TEST_CASE("involution count") {
  CHECK(involution_count(0) == 1);
  CHECK(involution_count(3) == 4);
  CHECK(involution_count(6) == 76);  // brute-force count over S_6
  for (int k = 0; k <= 7; ++k) CHECK(involution_count(k) == count_involutions(k));
}

TEST_CASE("trinomial coefficients vs expansion oracle") {
  CHECK(trinomial_coeff(0, 0) == 1);
  CHECK(trinomial_coeff(3, 2) == 6);
  CHECK(trinomial_coeff(2, 4) == 1);
  CHECK(trinomial_coeff(2, 5) == 0);
  // oracle: expand (1+t+t^2)^m with Laurent arithmetic
  for (long m = 0; m <= 10; ++m) {
    auto t = Laurent<Rat>::variable({"t"}, 0);
    auto phi = Laurent<Rat>::constant({"t"}, 1) + t + t * t;
    auto yes = phi.pow(m);
    for (long j = -1; j <= 2 * m + 1; ++j)
      CHECK(Rat(trinomial_coeff(m, j)) == yes.coeff({(int32_t)j}));
  }
  // the two displayed forms agree: sum_j binom(m,j) binom(m-j, k-2j)
  for (long m = 0; m <= 10; ++m)
    for (long k = 0; k <= 2 * m; ++k) {
      Int s = 0;
      for (long j = 0; j <= m; ++j) s += binomial(m, j) * binomial(m - j, k - 2 * j);
      CHECK(trinomial_coeff(m, k) == s);
    }
}

TEST_CASE("hook dimension vs SYT oracle") {
  CHECK(hook_dim(IntPartition({5})) == 1);
  CHECK(hook_dim(IntPartition({2, 1})) == 2);  // character table of S_3
  CHECK(hook_dim(IntPartition({3, 2})) == 5);  // enumerated standard Young tableaux
  CHECK(hook_dim(IntPartition(std::vector<int>{})) == 1);
  for (int n = 1; n <= 6; ++n)
    for (auto& p : partitions_of(n)) CHECK(hook_dim(p) == count_syt(p.parts()));
}

TEST_CASE("sum of squares of hook dims is k!") {
  for (int k = 1; k <= 8; ++k) {
    Int s = 0;
    for (auto& p : partitions_of(k)) s += hook_dim(p) * hook_dim(p);
    CHECK(s == factorial(k));
  }
}

TEST_CASE("involution count equals sum of hook dims") {
  for (int k = 1; k <= 8; ++k) {
    Int s = 0;
    for (auto& p : partitions_of(k)) s += hook_dim(p);
    CHECK(s == involution_count(k));
  }
}

TEST_CASE("lagrange inversion identity") {
  CHECK(lagrange_inversion_check(2));
  CHECK(lagrange_inversion_check(12));
  CHECK_FALSE(lagrange_inversion_check(8, {1, 1}));  // perturbed phi, negative control
  CHECK_THROWS(lagrange_inversion_check(1));
}

TEST_CASE("scalar ring axioms on randomized triples") {
  std::mt19937_64 rng(20240817);
  auto randRat = [&]() {
    long n = (long)(rng() % 41) - 20;
    long d = (long)(rng() % 13) + 1;
    return Scalar::rational(Rat(n, d));
  };
  auto randFp = [&]() { return Scalar::prime((int64_t)(rng() % 97), 97); };
  auto randFrac = [&]() {
    auto v = Laurent<Rat>::variable({"s"}, 0);
    auto c = Laurent<Rat>::constant({"s"}, Rat((long)(rng() % 7) - 3));
    auto num = v.pow(rng() % 3) + c;
    auto den = v.pow(rng() % 2) + Laurent<Rat>::constant({"s"}, Rat(1 + (long)(rng() % 3)));
    return Scalar::fraction(num, den);
  };
  for (int rep = 0; rep < 1000; ++rep) {
    Scalar a, b, c;
    switch (rep % 3) {
      case 0: a = randRat(); b = randRat(); c = randRat(); break;
      case 1: a = randFp(); b = randFp(); c = randFp(); break;
      default: a = randFrac(); b = randFrac(); c = randFrac(); break;
    }
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("laurent ring axioms and coefficient extraction") {
  std::mt19937_64 rng(7);
  std::vector<std::string> vars = {"x", "y"};
  auto randPoly = [&]() {
    auto f = Laurent<Rat>::zero(vars);
    int terms = 1 + (int)(rng() % 4);
    for (int i = 0; i < terms; ++i) {
      std::vector<int32_t> e = {(int32_t)(rng() % 7) - 3, (int32_t)(rng() % 7) - 3};
      f += Laurent<Rat>::monomial(vars, e, Rat((long)(rng() % 11) - 5));
    }
    return f;
  };
  for (int rep = 0; rep < 1000; ++rep) {
    auto a = randPoly(), b = randPoly(), c = randPoly();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  auto x = Laurent<Rat>::variable(vars, 0), y = Laurent<Rat>::variable(vars, 1);
  auto f = (x + y) * (x - y);
  CHECK(f.coeff({2, 0}) == 1);
  CHECK(f.coeff({0, 2}) == -1);
  CHECK(f.coeff({1, 1}) == 0);
  CHECK_THROWS(f + Laurent<Rat>::variable({"z"}, 0));  // mixing variable sets is an error
}

TEST_CASE("cyclotomic arithmetic") {
  auto z = Cyc::root(3);
  CHECK((z * z * z) == Cyc(Rat(1)));
  CHECK((Cyc(Rat(1)) + z + z * z).is_zero());
  auto i = Cyc::root(4);
  CHECK((i * i) == Cyc(Rat(-1)));
  // mixed conductors
  CHECK((z * i).pow(12) == Cyc(Rat(1)));
  CHECK(z.conj() == z * z);
  CHECK(Cyc::root(6, 3) == Cyc(Rat(-1)));
}

TEST_CASE("prime field scalars stay reduced") {
  auto a = Scalar::prime(-3, 13);
  CHECK(a.residue() == 10);
  CHECK((a * a.inverse()).is_one());
  CHECK_THROWS(Scalar::prime(0, 13).inverse());
  CHECK_THROWS(Scalar::prime(1, 13) + Scalar::prime(1, 7));
}
