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
#include <climits>
#include <cstdlib>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "series.hpp"

namespace qgauss {

// Rectangle of exponent pairs (z exponent, w exponent), bounds inclusive.
struct Rect {
  int zlo = 0, zhi = -1, wlo = 0, whi = -1;

  bool empty() const { return zlo > zhi || wlo > whi; }
  bool contains(int i, int j) const { return i >= zlo && i <= zhi && j >= wlo && j <= whi; }
  static Rect square(int lo, int hi) { return {lo, hi, lo, hi}; }
};

// Two-variable truncated series. Determined coefficients are those stored
// explicitly plus those in a declared zero half-plane (z exponent below zmin,
// above zmax, and likewise for w). Everything else is unknown.
template <class C>
class BiSeries {
 public:
  using Key = std::pair<int, int>;

  BiSeries() = default;
  explicit BiSeries(C zero) : zero_(std::move(zero)) {}

  std::optional<int> zmin, zmax, wmin, wmax;

  const C& zero() const { return zero_; }
  const std::map<Key, C>& points() const { return pts_; }
  void set(int i, int j, C v) { pts_.insert_or_assign(Key{i, j}, std::move(v)); }

  bool in_zero_region(int i, int j) const {
    return (zmin && i < *zmin) || (zmax && i > *zmax) || (wmin && j < *wmin) || (wmax && j > *wmax);
  }

  const C* known(int i, int j) const {
    if (in_zero_region(i, j)) return &zero_;
    auto it = pts_.find(Key{i, j});
    return it == pts_.end() ? nullptr : &it->second;
  }

  // Bounding box of explicitly stored points.
  Rect box() const {
    if (pts_.empty()) return {};
    Rect r{INT_MAX, INT_MIN, INT_MAX, INT_MIN};
    for (const auto& [k, v] : pts_) {
      r.zlo = std::min(r.zlo, k.first);
      r.zhi = std::max(r.zhi, k.first);
      r.wlo = std::min(r.wlo, k.second);
      r.whi = std::max(r.whi, k.second);
    }
    return r;
  }

  template <class Fn>
  BiSeries map(Fn&& fn) const {
    BiSeries r(fn(zero_));
    r.zmin = zmin, r.zmax = zmax, r.wmin = wmin, r.wmax = wmax;
    for (const auto& [k, v] : pts_) r.pts_.emplace(k, fn(v));
    return r;
  }

 private:
  std::map<Key, C> pts_;
  C zero_{};
};

namespace detail {

inline std::optional<int> min_opt(std::optional<int> a, std::optional<int> b) {
  if (a && b) return std::min(*a, *b);
  return std::nullopt;
}
inline std::optional<int> max_opt(std::optional<int> a, std::optional<int> b) {
  if (a && b) return std::max(*a, *b);
  return std::nullopt;
}
inline std::optional<int> add_opt(std::optional<int> a, int d) {
  if (a) return *a + d;
  return std::nullopt;
}

}  // namespace detail

// a(z) b(w) with coefficient product op(a_i, b_j). The op decides the operator
// ordering, so this also builds b(w) a(z).
template <class A, class B, class Op>
auto outer(const TruncSeries<A>& a, const TruncSeries<B>& b, Op&& op)
    -> BiSeries<decltype(op(std::declval<const A&>(), std::declval<const B&>()))> {
  using R = decltype(op(std::declval<const A&>(), std::declval<const B&>()));
  BiSeries<R> r(op(a.zero(), b.zero()));
  if (a.zero_below()) r.zmin = a.lo();
  if (a.zero_above()) r.zmax = a.hi();
  if (b.zero_below()) r.wmin = b.lo();
  if (b.zero_above()) r.wmax = b.hi();
  for (int i = a.lo(); i <= a.hi(); ++i)
    for (int j = b.lo(); j <= b.hi(); ++j) r.set(i, j, op(a[i], b[j]));
  return r;
}

// x + sign*y where both are determined.
template <class C>
BiSeries<C> add_scaled(const BiSeries<C>& x, const BiSeries<C>& y, int sign) {
  BiSeries<C> r(x.zero());
  r.zmin = detail::min_opt(x.zmin, y.zmin);
  r.zmax = detail::max_opt(x.zmax, y.zmax);
  r.wmin = detail::min_opt(x.wmin, y.wmin);
  r.wmax = detail::max_opt(x.wmax, y.wmax);
  auto visit = [&](const BiSeries<C>& s) {
    for (const auto& [k, v] : s.points()) {
      if (r.known(k.first, k.second)) continue;
      const C* a = x.known(k.first, k.second);
      const C* b = y.known(k.first, k.second);
      if (!a || !b) continue;
      r.set(k.first, k.second, sign > 0 ? *a + *b : *a - *b);
    }
  };
  visit(x);
  visit(y);
  return r;
}

template <class C>
BiSeries<C> operator+(const BiSeries<C>& x, const BiSeries<C>& y) { return add_scaled(x, y, 1); }
template <class C>
BiSeries<C> operator-(const BiSeries<C>& x, const BiSeries<C>& y) { return add_scaled(x, y, -1); }

// One monomial c z^s w^t of a polynomial multiplier.
template <class S>
struct Monomial2 {
  S coeff;
  int zexp;
  int wexp;
};

// sum_m c_m z^{s_m} w^{t_m} X, computed as op(c_m, X_{i-s, j-t}).
template <class C, class S, class Op>
BiSeries<C> poly_mul(const std::vector<Monomial2<S>>& poly, const BiSeries<C>& x, Op&& op) {
  BiSeries<C> r(poly.empty() ? x.zero() : op(poly.front().coeff, x.zero()));
  if (poly.empty()) {
    r.zmin = r.wmin = 0;
    r.zmax = r.wmax = -1;
    return r;
  }
  int smin = INT_MAX, smax = INT_MIN, tmin = INT_MAX, tmax = INT_MIN;
  for (const auto& m : poly) {
    smin = std::min(smin, m.zexp), smax = std::max(smax, m.zexp);
    tmin = std::min(tmin, m.wexp), tmax = std::max(tmax, m.wexp);
  }
  r.zmin = detail::add_opt(x.zmin, smin);
  r.zmax = detail::add_opt(x.zmax, smax);
  r.wmin = detail::add_opt(x.wmin, tmin);
  r.wmax = detail::add_opt(x.wmax, tmax);
  // Every point of the grown box, so that gaps between shifted copies of x
  // (zero in x's closed region) are filled in.
  Rect b = x.box();
  if (b.empty()) return r;
  for (int i = b.zlo + smin; i <= b.zhi + smax; ++i)
    for (int j = b.wlo + tmin; j <= b.whi + tmax; ++j) {
      if (r.in_zero_region(i, j)) continue;
      C acc = r.zero();
      bool ok = true;
      for (const auto& n : poly) {
        const C* xv = x.known(i - n.zexp, j - n.wexp);
        if (!xv) {
          ok = false;
          break;
        }
        acc += op(n.coeff, *xv);
      }
      if (ok) r.set(i, j, std::move(acc));
    }
  return r;
}

// h(z/w) X with h expanded as a series in u = z/w in the given direction.
// Each result coefficient is a finite sum only when X vanishes on the side the
// expansion runs towards; otherwise the point is left undetermined.
template <class C, class RF, class Op>
BiSeries<C> ratio_mul(const RF& h, Direction dir, const BiSeries<C>& x, Op&& op) {
  BiSeries<C> r(x.zero());
  Rect b = x.box();
  if (b.empty()) return r;
  // Exponent range of u needed: a term u^k maps X_{i-k, j+k} to (i, j).
  auto k_range = [&](int i, int j) -> std::optional<std::pair<int, int>> {
    // Returns [kmin, kmax] over which X_{i-k,j+k} may be nonzero.
    std::int64_t lo = -kUnbounded, hi = kUnbounded;
    if (x.zmin) hi = std::min<std::int64_t>(hi, i - *x.zmin);
    if (x.zmax) lo = std::max<std::int64_t>(lo, i - *x.zmax);
    if (x.wmax) hi = std::min<std::int64_t>(hi, *x.wmax - j);
    if (x.wmin) lo = std::max<std::int64_t>(lo, *x.wmin - j);
    return std::make_pair(static_cast<int>(std::max<std::int64_t>(lo, INT_MIN / 4)),
                          static_cast<int>(std::min<std::int64_t>(hi, INT_MAX / 4)));
  };
  // Find how far the expansion must go.
  int need_lo = INT_MAX, need_hi = INT_MIN;
  for (int i = b.zlo; i <= b.zhi; ++i)
    for (int j = b.wlo; j <= b.whi; ++j) {
      auto kr = k_range(i, j);
      if (dir == Direction::around_zero && kr->second < INT_MAX / 4) need_hi = std::max(need_hi, kr->second);
      if (dir == Direction::around_infinity && kr->first > INT_MIN / 4) need_lo = std::min(need_lo, kr->first);
    }
  if (dir == Direction::around_zero ? need_hi == INT_MIN : need_lo == INT_MAX) return r;
  // Leading exponent of h in this direction bounds the other end.
  int lead;
  if (dir == Direction::around_zero) {
    lead = static_cast<int>(h.num().valuation()) - static_cast<int>(h.den().valuation());
    if (need_hi < lead) need_hi = lead;
    need_lo = lead;
  } else {
    lead = h.num().degree() - h.den().degree();
    if (need_lo > lead) need_lo = lead;
    need_hi = lead;
  }
  auto hs = expand(h, dir, need_lo, need_hi);
  for (int i = b.zlo; i <= b.zhi; ++i)
    for (int j = b.wlo; j <= b.whi; ++j) {
      auto kr = k_range(i, j);
      int klo = std::max(kr->first, need_lo), khi = std::min(kr->second, need_hi);
      if (dir == Direction::around_zero && kr->second >= INT_MAX / 4) continue;
      if (dir == Direction::around_infinity && kr->first <= INT_MIN / 4) continue;
      C acc = x.zero();
      bool ok = true;
      for (int k = klo; k <= khi && ok; ++k) {
        const auto& hk = hs[k];
        if (hk.is_zero()) continue;
        const C* xv = x.known(i - k, j + k);
        if (!xv) ok = false;
        else acc += op(hk, *xv);
      }
      if (ok) r.set(i, j, std::move(acc));
    }
  return r;
}

enum class Side { left, right };
enum class Axis { z, w };

// Multiply by a one-variable series in z or w, on the left (op(y_t, X)) or
// right (op(X, y_t)).
template <class C, class Y, class Op>
BiSeries<C> series_mul(const BiSeries<C>& x, const TruncSeries<Y>& y, Axis axis, Side side, Op&& op) {
  // The product may change shape, so take the zero from the product itself.
  BiSeries<C> r(side == Side::left ? op(y.zero(), x.zero()) : op(x.zero(), y.zero()));
  Rect b = x.box();
  if (axis == Axis::z) {
    r.wmin = x.wmin, r.wmax = x.wmax;
    if (x.zmin && y.zero_below()) r.zmin = *x.zmin + y.lo();
    if (x.zmax && y.zero_above()) r.zmax = *x.zmax + y.hi();
  } else {
    r.zmin = x.zmin, r.zmax = x.zmax;
    if (x.wmin && y.zero_below()) r.wmin = *x.wmin + y.lo();
    if (x.wmax && y.zero_above()) r.wmax = *x.wmax + y.hi();
  }
  if (b.empty()) return r;
  // Candidate points: the box grown by the series window.
  Rect c = b;
  if (axis == Axis::z) c.zlo += y.lo(), c.zhi += y.hi();
  else c.wlo += y.lo(), c.whi += y.hi();
  for (int i = c.zlo; i <= c.zhi; ++i)
    for (int j = c.wlo; j <= c.whi; ++j) {
      if (r.known(i, j)) continue;
      int pos = axis == Axis::z ? i : j;
      std::optional<int> xlo = axis == Axis::z ? x.zmin : x.wmin;
      std::optional<int> xhi = axis == Axis::z ? x.zmax : x.wmax;
      std::int64_t tlo = y.support_lo(), thi = y.support_hi();
      if (xhi) tlo = std::max<std::int64_t>(tlo, pos - *xhi);
      if (xlo) thi = std::min<std::int64_t>(thi, pos - *xlo);
      if (tlo <= -kUnbounded || thi >= kUnbounded) continue;
      C acc = r.zero();
      bool ok = true;
      for (int t = static_cast<int>(tlo); t <= static_cast<int>(thi) && ok; ++t) {
        const C* xv = axis == Axis::z ? x.known(i - t, j) : x.known(i, j - t);
        if (!xv) {
          ok = false;
          break;
        }
        const Y* yv = y.known(t);
        if (!yv) {
          ok = false;
          break;
        }
        acc += side == Side::left ? op(*yv, *xv) : op(*xv, *yv);
      }
      if (ok) r.set(i, j, std::move(acc));
    }
  return r;
}

// Formal delta combination sum_t delta(w / (z s_t)) X_t(w).
template <class C, class S>
struct DeltaComb {
  struct Term {
    S shift;
    TruncSeries<C> profile;
  };
  std::vector<Term> terms;

  void add_term(const S& shift, const TruncSeries<C>& profile) {
    if (shift.is_zero()) fail(ErrorCode::degenerate_scalar, "delta shift must be nonzero");
    for (auto& t : terms)
      if (t.shift == shift) {
        t.profile = t.profile + profile;
        return;
      }
    terms.push_back({shift, profile});
  }
};

// Coefficient (a, b) of delta(w/(z s)) X(w) is s^a X_{a+b}. Unless strict,
// points whose profile exponent is undetermined are left out.
template <class C, class S, class Op>
BiSeries<C> delta_pair(const DeltaComb<C, S>& d, const Rect& rect, C zero, Op&& scale, bool strict = true) {
  BiSeries<C> r(zero);
  for (int a = rect.zlo; a <= rect.zhi; ++a)
    for (int b = rect.wlo; b <= rect.whi; ++b) {
      C acc = zero;
      bool ok = true;
      for (const auto& t : d.terms) {
        const C* x = t.profile.known(a + b);
        if (!x && !strict) {
          ok = false;
          break;
        }
        if (!x) fail(ErrorCode::window_underflow, "delta profile does not cover exponent " + std::to_string(a + b));
        S p = S(1);
        S base = a >= 0 ? t.shift : S(1) / t.shift;
        for (int e = 0; e < std::abs(a); ++e) p = p * base;
        acc += scale(p, *x);
      }
      if (ok) r.set(a, b, std::move(acc));
    }
  return r;
}

template <class D>
struct CompareResult {
  bool equal = true;
  long compared = 0;
  Rect window;  // bounding box of compared points
  int i = 0, j = 0;  // first mismatch, in (z, w) exponent order
  std::optional<D> detail;
};

// Compare on the points of rect determined in both. diff(lhs, rhs) returns an
// empty optional when the coefficients agree.
template <class C, class Diff>
auto compare(const BiSeries<C>& lhs, const BiSeries<C>& rhs, const Rect& rect, Diff&& diff)
    -> CompareResult<typename decltype(diff(std::declval<const C&>(), std::declval<const C&>()))::value_type> {
  using D = typename decltype(diff(std::declval<const C&>(), std::declval<const C&>()))::value_type;
  CompareResult<D> res;
  res.window = {INT_MAX, INT_MIN, INT_MAX, INT_MIN};
  for (int i = rect.zlo; i <= rect.zhi; ++i)
    for (int j = rect.wlo; j <= rect.whi; ++j) {
      const C* a = lhs.known(i, j);
      const C* b = rhs.known(i, j);
      if (!a || !b) continue;
      ++res.compared;
      res.window.zlo = std::min(res.window.zlo, i), res.window.zhi = std::max(res.window.zhi, i);
      res.window.wlo = std::min(res.window.wlo, j), res.window.whi = std::max(res.window.whi, j);
      if (!res.equal) continue;
      auto d = diff(*a, *b);
      if (d) {
        res.equal = false;
        res.i = i, res.j = j;
        res.detail = std::move(d);
      }
    }
  if (res.compared == 0) fail(ErrorCode::window_underflow, "no coefficients determined on both sides");
  return res;
}

}  // namespace qgauss
