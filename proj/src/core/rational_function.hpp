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

#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"
#include "polynomial.hpp"

namespace qgauss {

// Canonical quotient num/den of polynomials over F in the variable named by
// Var::name: gcd(num, den) = 1, den monic, and den = 1 when num = 0. Because
// the form is canonical, structural equality is value equality.
template <class F, class Var>
class RationalFunction {
 public:
  using Field = F;
  using Poly = Polynomial<F>;
  using Variable = Var;

  RationalFunction() : den_(F{1}) {}
  RationalFunction(long v) : num_(F{v}), den_(F{1}) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(F c) : num_(std::move(c)), den_(F{1}) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(F{1}) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction variable() { return RationalFunction(Poly::x()); }
  static std::string_view name() { return Var::name; }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_one(); }
  bool is_constant() const { return den_.is_constant() && num_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  const F& constant_value() const { return num_[0]; }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_constant()) return raw(a.num_ + b.num_, a.den_);
      return RationalFunction(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_constant()) return raw(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_constant()) return raw(a.num_ + b.num_ * a.den_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    if (g.is_constant()) return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly bd = Poly::exact_div(b.den_, g);
    Poly ad = Poly::exact_div(a.den_, g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_constant() && b.den_.is_constant()) return raw(a.num_ * b.num_, a.den_);
    if (a.is_constant()) return raw(b.num_.scaled(a.num_[0]), b.den_);
    if (b.is_constant()) return raw(a.num_.scaled(b.num_[0]), a.den_);
    // Cross-cancel before multiplying so no full gcd of the product is needed.
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly an = g1.is_constant() ? a.num_ : Poly::exact_div(a.num_, g1);
    Poly bd = g1.is_constant() ? b.den_ : Poly::exact_div(b.den_, g1);
    Poly bn = g2.is_constant() ? b.num_ : Poly::exact_div(b.num_, g2);
    Poly ad = g2.is_constant() ? a.den_ : Poly::exact_div(a.den_, g2);
    return raw(an * bn, ad * bd);
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  RationalFunction inverse() const {
    if (is_zero()) fail(ErrorCode::degenerate_scalar, "division by zero rational function");
    RationalFunction r;
    F lc = num_.leading();
    if (lc.is_one()) {
      r.num_ = den_;
      r.den_ = num_;
    } else {
      F inv = F{1} / lc;
      r.num_ = den_.scaled(inv);
      r.den_ = num_.scaled(inv);
    }
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Composition f(value); lift embeds coefficients into the target ring T.
  template <class T, class Lift>
  T substitute(const T& value, Lift&& lift) const {
    T d = den_.evaluate(value, lift);
    if (d.is_zero()) fail(ErrorCode::degenerate_scalar, "substitution makes the denominator vanish");
    return num_.evaluate(value, lift) / d;
  }

  // Evaluation at a point of the coefficient field.
  F evaluate(const F& x) const {
    F d = den_.evaluate(x);
    if (d.is_zero()) fail(ErrorCode::degenerate_scalar, "evaluation at a pole");
    return num_.evaluate(x) / d;
  }

  std::string to_string() const {
    std::string n = num_.to_string(Var::name);
    if (den_.is_one()) return n;
    return text::wrap(n) + "/" + text::wrap(den_.to_string(Var::name));
  }

 private:
  // Build from parts already known to be coprime with den monic up to a
  // constant factor.
  static RationalFunction raw(Poly num, Poly den) {
    RationalFunction r;
    if (num.is_zero()) return r;
    if (!den.leading().is_one()) {
      F inv = F{1} / den.leading();
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    if (den_.is_zero()) fail(ErrorCode::degenerate_scalar, "zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(F{1});
      return;
    }
    if (!den_.is_constant() && !num_.is_constant()) {
      Poly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
      }
    }
    if (!den_.leading().is_one()) {
      F inv = F{1} / den_.leading();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

template <class F, class Var>
std::string to_string(const RationalFunction<F, Var>& r) {
  return r.to_string();
}

}  // namespace qgauss
