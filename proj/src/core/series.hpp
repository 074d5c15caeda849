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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"

namespace qgauss {

// Exponent bound used for "unbounded" in window arithmetic.
inline constexpr std::int64_t kUnbounded = std::int64_t{1} << 40;

// Truncated Laurent series. Coefficients for exponents in [lo, hi] are exact.
// zero_below / zero_above assert that every coefficient outside the window on
// that side is exactly zero; without the flag those coefficients are unknown.
template <class C>
class TruncSeries {
 public:
  using Coefficient = C;

  TruncSeries() = default;
  TruncSeries(int lo, int hi, bool zero_below, bool zero_above, C zero = C{})
      : lo_(lo), hi_(hi), zero_below_(zero_below), zero_above_(zero_above), zero_(std::move(zero)) {
    if (lo > hi) fail(ErrorCode::window_underflow, "empty series window");
    c_.assign(static_cast<std::size_t>(hi - lo + 1), zero_);
  }

  // Finite sum sum_k c_k x^k, exact everywhere.
  static TruncSeries laurent_polynomial(int lo, std::vector<C> coeffs, C zero = C{}) {
    TruncSeries s(lo, lo + static_cast<int>(coeffs.size()) - 1, true, true, std::move(zero));
    s.c_ = std::move(coeffs);
    return s;
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool zero_below() const { return zero_below_; }
  bool zero_above() const { return zero_above_; }
  const C& zero() const { return zero_; }

  bool in_window(int k) const { return k >= lo_ && k <= hi_; }
  const C& operator[](int k) const { return c_[static_cast<std::size_t>(k - lo_)]; }
  C& operator[](int k) { return c_[static_cast<std::size_t>(k - lo_)]; }

  // Coefficient if it is determined (in window or in a zero region), else null.
  const C* known(int k) const {
    if (in_window(k)) return &(*this)[k];
    if ((k < lo_ && zero_below_) || (k > hi_ && zero_above_)) return &zero_;
    return nullptr;
  }

  // Range where coefficients may be nonzero; kUnbounded marks an open side.
  std::int64_t support_lo() const { return zero_below_ ? lo_ : -kUnbounded; }
  std::int64_t support_hi() const { return zero_above_ ? hi_ : kUnbounded; }

  // Same flags and window, coefficients transformed.
  template <class Fn>
  auto map(Fn&& fn) const -> TruncSeries<decltype(fn(std::declval<const C&>()))> {
    using D = decltype(fn(std::declval<const C&>()));
    TruncSeries<D> r(lo_, hi_, zero_below_, zero_above_, fn(zero_));
    for (int k = lo_; k <= hi_; ++k) r[k] = fn((*this)[k]);
    return r;
  }

  // Narrow the window; the narrowed side loses its zero flag unless the
  // dropped coefficients are all zero and the side was already closed.
  TruncSeries restrict(int lo, int hi) const {
    if (lo < lo_ && !zero_below_) fail(ErrorCode::window_underflow, "restrict below known window");
    if (hi > hi_ && !zero_above_) fail(ErrorCode::window_underflow, "restrict above known window");
    bool zb = zero_below_ && lo <= lo_;
    bool za = zero_above_ && hi >= hi_;
    TruncSeries r(lo, hi, zb, za, zero_);
    for (int k = lo; k <= hi; ++k) r[k] = *known(k);
    return r;
  }

 private:
  int lo_ = 0;
  int hi_ = 0;
  bool zero_below_ = true;
  bool zero_above_ = true;
  C zero_{};
  std::vector<C> c_{C{}};
};

namespace detail {

inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kUnbounded || b >= kUnbounded) return kUnbounded;
  if (a <= -kUnbounded || b <= -kUnbounded) return -kUnbounded;
  return a + b;
}

struct ProductWindow {
  std::int64_t lo, hi;
  bool zero_below, zero_above;
};

// Largest window on which every contribution to a product is determined.
// A coefficient k is exact unless some unknown coefficient of one factor can
// pair with a possibly nonzero coefficient of the other.
template <class A, class B>
ProductWindow product_window(const TruncSeries<A>& a, const TruncSeries<B>& b) {
  std::int64_t plo = sat_add(a.support_lo(), b.support_lo());
  std::int64_t phi = sat_add(a.support_hi(), b.support_hi());
  std::int64_t elo = -kUnbounded, ehi = kUnbounded;
  auto limit = [&](int xlo, int xhi, bool xzb, bool xza, std::int64_t ylo, std::int64_t yhi) {
    if (!xzb) elo = std::max(elo, sat_add(xlo, yhi));
    if (!xza) ehi = std::min(ehi, sat_add(xhi, ylo));
  };
  limit(a.lo(), a.hi(), a.zero_below(), a.zero_above(), b.support_lo(), b.support_hi());
  limit(b.lo(), b.hi(), b.zero_below(), b.zero_above(), a.support_lo(), a.support_hi());
  ProductWindow w{std::max(plo, elo), std::min(phi, ehi), elo <= plo, ehi >= phi};
  if (w.lo > w.hi || w.lo <= -kUnbounded || w.hi >= kUnbounded)
    fail(ErrorCode::window_underflow, "product has no determined coefficients");
  return w;
}

}  // namespace detail

// Cauchy product with a caller-supplied coefficient product op(a_i, b_j).
template <class A, class B, class Op>
auto multiply(const TruncSeries<A>& a, const TruncSeries<B>& b, Op&& op)
    -> TruncSeries<decltype(op(std::declval<const A&>(), std::declval<const B&>()))> {
  using R = decltype(op(std::declval<const A&>(), std::declval<const B&>()));
  auto w = detail::product_window(a, b);
  TruncSeries<R> r(static_cast<int>(w.lo), static_cast<int>(w.hi), w.zero_below, w.zero_above,
                   op(a.zero(), b.zero()));
  for (int k = r.lo(); k <= r.hi(); ++k) {
    R acc = r.zero();
    int ilo = std::max(a.lo(), k - b.hi());
    int ihi = std::min(a.hi(), k - b.lo());
    for (int i = ilo; i <= ihi; ++i) acc += op(a[i], b[k - i]);
    r[k] = std::move(acc);
  }
  return r;
}

template <class C>
TruncSeries<C> operator*(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  return multiply(a, b, [](const C& x, const C& y) { return x * y; });
}

// Coefficientwise a + sign*b, exact where both inputs are determined.
template <class C>
TruncSeries<C> add_scaled(const TruncSeries<C>& a, const TruncSeries<C>& b, int sign) {
  std::int64_t klo = std::max(a.zero_below() ? -kUnbounded : a.lo(), b.zero_below() ? -kUnbounded : b.lo());
  std::int64_t khi = std::min(a.zero_above() ? kUnbounded : a.hi(), b.zero_above() ? kUnbounded : b.hi());
  bool zb = klo <= -kUnbounded, za = khi >= kUnbounded;
  int lo = zb ? std::min(a.lo(), b.lo()) : static_cast<int>(klo);
  int hi = za ? std::max(a.hi(), b.hi()) : static_cast<int>(khi);
  if (lo > hi) fail(ErrorCode::window_underflow, "sum has no determined coefficients");
  TruncSeries<C> r(lo, hi, zb, za, a.zero());
  for (int k = lo; k <= hi; ++k) {
    if (sign > 0) r[k] = *a.known(k) + *b.known(k);
    else r[k] = *a.known(k) - *b.known(k);
  }
  return r;
}

template <class C>
TruncSeries<C> operator+(const TruncSeries<C>& a, const TruncSeries<C>& b) { return add_scaled(a, b, 1); }
template <class C>
TruncSeries<C> operator-(const TruncSeries<C>& a, const TruncSeries<C>& b) { return add_scaled(a, b, -1); }

enum class Direction { around_zero, around_infinity };

inline const char* direction_name(Direction d) {
  return d == Direction::around_zero ? "around_zero" : "around_infinity";
}

enum class Regularity { laurent, power_series };

namespace detail {

// Coefficients c_0..c_{count-1} of n(x)/d(x) at x = 0, d(0) != 0.
template <class F>
std::vector<F> taylor(const std::vector<F>& n, const std::vector<F>& d, std::size_t count) {
  std::vector<F> c(count);
  F inv = F{1} / d[0];
  for (std::size_t k = 0; k < count; ++k) {
    F acc = k < n.size() ? n[k] : F{};
    for (std::size_t j = 1; j <= k && j < d.size(); ++j)
      if (!d[j].is_zero() && !c[k - j].is_zero()) acc -= d[j] * c[k - j];
    c[k] = acc.is_zero() ? F{} : acc * inv;
  }
  return c;
}

}  // namespace detail

// Laurent expansion of a rational function f in its variable, exact on
// [lo, hi]. With Regularity::power_series a pole at the expansion point is an
// error.
template <class RF>
TruncSeries<typename RF::Field> expand(const RF& f, Direction dir, int lo, int hi,
                                       Regularity reg = Regularity::laurent) {
  using F = typename RF::Field;
  if (lo > hi) fail(ErrorCode::window_underflow, "empty expansion window");
  if (f.is_zero()) return TruncSeries<F>(lo, hi, true, true);
  std::vector<F> n = f.num().coefficients(), d = f.den().coefficients();
  // Leading exponent and the power series part, in x = z or x = 1/z.
  int lead;
  if (dir == Direction::around_zero) {
    std::size_t u = f.num().valuation(), v = f.den().valuation();
    n.erase(n.begin(), n.begin() + static_cast<long>(u));
    d.erase(d.begin(), d.begin() + static_cast<long>(v));
    lead = static_cast<int>(u) - static_cast<int>(v);
  } else {
    std::reverse(n.begin(), n.end());
    std::reverse(d.begin(), d.end());
    while (d.back().is_zero()) d.pop_back();
    while (n.back().is_zero()) n.pop_back();
    lead = f.num().degree() - f.den().degree();
    // In x = 1/z, leading exponent in x is -lead; strip leading zeros of n.
    std::size_t u = 0;
    while (n[u].is_zero()) ++u;
    n.erase(n.begin(), n.begin() + static_cast<long>(u));
    lead -= static_cast<int>(u);
  }
  if (reg == Regularity::power_series) {
    bool pole = dir == Direction::around_zero ? lead < 0 : lead > 0;
    if (pole) fail(ErrorCode::pole_at_expansion_point, "rational function has a pole at the expansion point");
  }
  // Polynomial in x after normalization means finitely many terms.
  bool finite = d.size() == 1;
  if (dir == Direction::around_zero) {
    int top = hi - lead;
    std::vector<F> c = top >= 0 ? detail::taylor(n, d, static_cast<std::size_t>(top) + 1) : std::vector<F>{};
    bool zb = lo <= lead;
    bool za = finite && hi >= lead + static_cast<int>(n.size()) - 1;
    TruncSeries<F> r(lo, hi, zb, za);
    for (int k = lo; k <= hi; ++k) {
      int idx = k - lead;
      if (idx >= 0) r[k] = c[static_cast<std::size_t>(idx)];
    }
    return r;
  }
  // around infinity: coefficient of z^k is the x-coefficient at -k.
  int top = lead - lo;
  std::vector<F> c = top >= 0 ? detail::taylor(n, d, static_cast<std::size_t>(top) + 1) : std::vector<F>{};
  bool za = hi >= lead;
  bool zb = finite && lo <= lead - (static_cast<int>(n.size()) - 1);
  TruncSeries<F> r(lo, hi, zb, za);
  for (int k = lo; k <= hi; ++k) {
    int idx = lead - k;
    if (idx >= 0) r[k] = c[static_cast<std::size_t>(idx)];
  }
  return r;
}

// Expansion around infinity minus expansion around zero, on [lo, hi].
template <class RF>
TruncSeries<typename RF::Field> expansion_difference(const RF& f, int lo, int hi) {
  auto inf = expand(f, Direction::around_infinity, lo, hi);
  auto zero = expand(f, Direction::around_zero, lo, hi);
  TruncSeries<typename RF::Field> r(lo, hi, false, false);
  for (int k = lo; k <= hi; ++k) r[k] = inf[k] - zero[k];
  return r;
}

}  // namespace qgauss
