#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "prodmat/errors.hpp"
#include "prodmat/ring.hpp"

namespace prodmat {

// Process-wide indeterminate table. Ids are append-only, so concurrent
// readers are safe once a name has been registered.
class IndetRegistry {
public:
  static IndetRegistry& instance() {
    static IndetRegistry reg;
    return reg;
  }
  int id(const std::string& name) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    int nid = static_cast<int>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, nid);
    return nid;
  }
  std::string name(int id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return names_.at(static_cast<size_t>(id));
  }
  int count() const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<int>(names_.size());
  }

private:
  IndetRegistry() = default;
  mutable std::mutex mu_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
};

// Sparse multivariate polynomial over Rational. Exponent keys are vectors
// indexed by registry id with trailing zeros trimmed, ordered lexicographically
// (a genuine monomial order on trimmed vectors, used for exact division).
class MultiPoly {
public:
  using ExpVec = std::vector<uint32_t>;
  using TermMap = std::map<ExpVec, Rational>;

  MultiPoly() = default;
  MultiPoly(long c) { add_term(ExpVec{}, Rational(c)); }
  explicit MultiPoly(Rational c) { add_term(ExpVec{}, std::move(c)); }

  static MultiPoly var(const std::string& name, uint32_t exp = 1) {
    MultiPoly p;
    if (exp == 0) return MultiPoly(1L);
    int id = IndetRegistry::instance().id(name);
    ExpVec e(static_cast<size_t>(id) + 1, 0);
    e.back() = exp;
    p.add_term(std::move(e), Rational(1L));
    return p;
  }

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
  }
  Rational constant_value() const {
    if (t_.empty()) return Rational(0L);
    if (!is_constant())
      throw calc_error(errname::domain_error, "polynomial is not constant");
    return t_.begin()->second;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : t_) {
      int s = 0;
      for (uint32_t x : e) s += static_cast<int>(x);
      if (s > d) d = s;
    }
    return d;
  }
  int max_indet_id() const {
    int m = -1;
    for (const auto& [e, c] : t_)
      if (static_cast<int>(e.size()) - 1 > m) m = static_cast<int>(e.size()) - 1;
    return m;
  }

  MultiPoly operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }
  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_) r.add_term(exp_mul(e1, e2), c1 * c2);
    return r;
  }
  MultiPoly scaled(const Rational& s) const {
    MultiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c * s);
    return r;
  }
  MultiPoly pow(int n) const {
    MultiPoly acc(1L);
    for (int i = 0; i < n; ++i) acc = acc * *this;
    return acc;
  }

  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // point[id] supplies the value of the indeterminate with that registry id.
  Rational eval(const std::vector<Rational>& point) const {
    Rational acc(0L);
    for (const auto& [e, c] : t_) {
      Rational term = c;
      for (size_t id = 0; id < e.size(); ++id) {
        if (e[id] == 0) continue;
        if (id >= point.size())
          throw calc_error(errname::domain_error, "evaluation point missing an indeterminate");
        for (uint32_t i = 0; i < e[id]; ++i) term *= point[id];
      }
      acc += term;
    }
    return acc;
  }

  friend MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw calc_error(errname::not_invertible, "division by zero polynomial");
    MultiPoly q, rem = a;
    const auto& [eb, cb] = *b.t_.rbegin();
    while (!rem.is_zero()) {
      const auto& [er, cr] = *rem.t_.rbegin();
      ExpVec eq;
      if (!exp_try_div(er, eb, eq))
        throw calc_error(errname::consistency_failure, "inexact polynomial division");
      MultiPoly t;
      t.add_term(std::move(eq), cr / cb);
      q = q + t;
      rem = rem - t * b;
    }
    return q;
  }

private:
  static ExpVec exp_mul(const ExpVec& a, const ExpVec& b) {
    ExpVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
  }
  static bool exp_try_div(const ExpVec& a, const ExpVec& b, ExpVec& out) {
    if (b.size() > a.size()) return false;
    out.assign(a.begin(), a.end());
    for (size_t i = 0; i < b.size(); ++i) {
      if (b[i] > a[i]) return false;
      out[i] = a[i] - b[i];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return true;
  }
  void add_term(ExpVec e, Rational c) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto it = t_.find(e);
    if (it == t_.end()) {
      if (!c.is_zero()) t_.emplace(std::move(e), std::move(c));
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }

  TermMap t_;
};

inline std::optional<MultiPoly> try_inv(const MultiPoly& p) {
  if (!p.is_constant() || p.is_zero()) return std::nullopt;
  return MultiPoly(Rational(1L) / p.constant_value());
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (size_t id = 0; id < e.size(); ++id) {
      if (e[id] == 0) continue;
      os << "*" << IndetRegistry::instance().name(static_cast<int>(id));
      if (e[id] > 1) os << "^" << e[id];
    }
  }
  return os;
}

}  // namespace prodmat
