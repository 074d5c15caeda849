// Copyright 2026 The qgauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

namespace qgauss {

namespace text {

// Parenthesize when a coefficient would not bind as a single factor.
inline bool needs_parens(const std::string& s) {
  if (s.find(' ') != std::string::npos || s.find('(') != std::string::npos) return true;
  if (s.find('/') == std::string::npos) return false;
  for (char c : s)
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
  return false;
}

inline std::string wrap(const std::string& s) { return needs_parens(s) ? "(" + s + ")" : s; }

}  // namespace text

// Dense univariate polynomial over a field F, coefficients stored low to high.
// The zero polynomial has no coefficients; otherwise the top one is nonzero.
template <class F>
class Polynomial {
 public:
  using Field = F;

  Polynomial() = default;
  explicit Polynomial(F c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<F> c) : c_(std::move(c)) { trim(); }

  static Polynomial monomial(F c, std::size_t k) {
    if (c.is_zero()) return {};
    Polynomial p;
    p.c_.assign(k + 1, F{});
    p.c_[k] = std::move(c);
    return p;
  }
  static Polynomial x() { return monomial(F{1}, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  const F& operator[](std::size_t k) const {
    static const F zero{};
    return k < c_.size() ? c_[k] : zero;
  }
  const F& leading() const { return c_.back(); }
  const std::vector<F>& coefficients() const { return c_; }

  // Lowest k with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return k;
    return 0;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const F& s) const {
    if (s.is_zero()) return {};
    Polynomial r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  // Multiply by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Polynomial r;
    r.c_.assign(k, F{});
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  Polynomial monic() const {
    if (is_zero() || leading().is_one()) return *this;
    F inv = F{1} / leading();
    Polynomial r = scaled(inv);
    r.c_.back() = F{1};
    return r;
  }

  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) fail(ErrorCode::degenerate_scalar, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<F> rem = a.c_;
    std::vector<F> quo(a.c_.size() - b.c_.size() + 1);
    const bool unit = b.leading().is_one();
    F inv = unit ? F{1} : F{1} / b.leading();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
      F& top = rem[k + db];
      if (top.is_zero()) continue;
      F t = unit ? top : top * inv;
      for (std::size_t j = 0; j < db; ++j)
        if (!b.c_[j].is_zero()) rem[k + j] -= t * b.c_[j];
      top = F{};
      quo[k] = std::move(t);
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  // Quotient of a division known to be exact.
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorCode::degenerate_scalar, "inexact polynomial division");
    return q;
  }

  bool is_monomial() const { return !c_.empty() && valuation() + 1 == c_.size(); }

  friend Polynomial gcd(Polynomial a, Polynomial b) {
    // gcd with c x^k is a power of x.
    if (!a.is_zero() && !b.is_zero() && (a.is_monomial() || b.is_monomial()))
      return monomial(F{1}, std::min(a.valuation(), b.valuation()));
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Returns (g, s, t) with s*a + t*b = g, g = monic gcd.
  static std::tuple<Polynomial, Polynomial, Polynomial> ext_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0(F{1}), s1, t0, t1(F{1});
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Polynomial s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      Polynomial t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = F{1} / r0.leading();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
  }

  // Horner evaluation into another ring; lift maps coefficients into it.
  template <class T, class Lift>
  T evaluate(const T& x, Lift&& lift) const {
    T acc{};
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc = acc * x;
      if (!c_[k].is_zero()) acc = acc + lift(c_[k]);
    }
    return acc;
  }
  F evaluate(const F& x) const {
    return evaluate(x, [](const F& c) { return c; });
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const F& c = c_[k];
      if (c.is_zero()) continue;
      std::string mono;
      if (k >= 1) mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
      std::string cs = to_string_of(c);
      std::string term;
      if (mono.empty()) {
        term = text::wrap(cs);
      } else if (cs == "1") {
        term = mono;
      } else if (cs == "-1") {
        term = "-" + mono;
      } else {
        term = text::wrap(cs) + "*" + mono;
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 private:
  static std::string to_string_of(const F& c) {
    using std::to_string;
    return to_string(c);
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

}  // namespace qgauss
