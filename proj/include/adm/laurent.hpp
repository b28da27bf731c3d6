#pragma once

// Multivariate Laurent polynomials over an exact coefficient ring K.
// The variable list is fixed per instance; combining values with different
// variable lists is an error, not an implicit union.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace adm {

template <class K>
class Laurent {
 public:
  using Exps = std::vector<int32_t>;

  Laurent() = default;
  explicit Laurent(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Laurent zero(std::vector<std::string> vars) { return Laurent(std::move(vars)); }
  static Laurent constant(std::vector<std::string> vars, K v) {
    Laurent r(std::move(vars));
    if (!(v == K(0))) r.c_[Exps(r.vars_.size(), 0)] = std::move(v);
    return r;
  }
  static Laurent monomial(std::vector<std::string> vars, Exps e, K v) {
    Laurent r(std::move(vars));
    if (e.size() != r.vars_.size()) throw std::invalid_argument("Laurent: exponent arity");
    if (!(v == K(0))) r.c_[std::move(e)] = std::move(v);
    return r;
  }
  static Laurent variable(std::vector<std::string> vars, size_t i) {
    Exps e(vars.size(), 0);
    e.at(i) = 1;
    return monomial(std::move(vars), std::move(e), K(1));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exps, K>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  size_t term_count() const { return c_.size(); }

  K coeff(const Exps& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? K(0) : it->second;
  }

  bool operator==(const Laurent& o) const { return vars_ == o.vars_ && c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent operator-() const {
    Laurent r(vars_);
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    check(o);
    for (auto& [e, v] : o.c_) {
      auto it = c_.find(e);
      if (it == c_.end()) {
        c_[e] = v;
      } else {
        it->second += v;
        if (it->second == K(0)) c_.erase(it);
      }
    }
    return *this;
  }
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
  Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }

  Laurent operator*(const Laurent& o) const {
    check(o);
    Laurent r(vars_);
    for (auto& [e1, v1] : c_)
      for (auto& [e2, v2] : o.c_) {
        K v = v1 * v2;
        if (v == K(0)) continue;
        Exps e(e1);
        for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        auto it = r.c_.find(e);
        if (it == r.c_.end()) {
          r.c_[std::move(e)] = std::move(v);
        } else {
          it->second += v;
          if (it->second == K(0)) r.c_.erase(it);
        }
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent scaled(const K& v) const {
    Laurent r(vars_);
    if (v == K(0)) return r;
    for (auto& [e, c] : c_) r.c_[e] = c * v;
    return r;
  }

  Laurent pow(unsigned long n) const {
    Laurent r = constant(vars_, K(1));
    Laurent b = *this;
    while (n) {
      if (n & 1) r *= b;
      if (n >>= 1) b *= b;
    }
    return r;
  }

  // Sum of all coefficients (evaluation at every variable = 1).
  K mass() const {
    K s(0);
    for (auto& [e, v] : c_) s += v;
    return s;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : c_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << v << ")";
      for (size_t i = 0; i < vars_.size(); ++i)
        if (e[i] != 0) os << "*" << vars_[i] << "^" << e[i];
    }
    return os.str();
  }

 private:
  void check(const Laurent& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("Laurent: mixed variable sets");
  }
  std::vector<std::string> vars_;
  std::map<Exps, K> c_;
};

}  // namespace adm
