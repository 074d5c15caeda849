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

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "rational_function.hpp"
#include "series.hpp"

namespace qgauss {

namespace detail {

template <class T>
struct is_rational_function : std::false_type {};
template <class F, class V>
struct is_rational_function<RationalFunction<F, V>> : std::true_type {};

// Fraction-free Gauss-Jordan over the polynomial ring of a rational function
// field. Rows are first cleared of denominators; every later division by the
// previous pivot is exact, so entries stay polynomial and small.
template <class RF>
Mat<RF> bareiss_inverse(const Mat<RF>& m) {
  using Poly = typename RF::Poly;
  using F = typename RF::Field;
  const int n = m.rows();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(2 * n));
  std::vector<Poly> row_scale(n);
  for (int i = 0; i < n; ++i) {
    Poly l(F{1});
    for (int j = 0; j < n; ++j) {
      const Poly& d = m(i, j).den();
      if (d.is_constant()) continue;
      Poly g = gcd(l, d);
      l = l * Poly::exact_div(d, g);
    }
    row_scale[i] = l;
    for (int j = 0; j < n; ++j) {
      const RF& x = m(i, j);
      if (x.is_zero()) continue;
      a[i][j] = x.num() * Poly::exact_div(l, x.den());
    }
    a[i][n + i] = Poly(F{1});
  }
  Poly prev(F{1});
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a[i][k].is_zero() && (piv < 0 || a[i][k].degree() < a[piv][k].degree())) piv = i;
    if (piv < 0) fail(ErrorCode::singular_matrix, "matrix is singular");
    std::swap(a[k], a[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const Poly f = a[i][k];
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        Poly v = a[k][k] * a[i][j];
        if (!f.is_zero() && !a[k][j].is_zero()) v -= f * a[k][j];
        a[i][j] = prev.is_one() ? v : Poly::exact_div(v, prev);
      }
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  // Every diagonal entry now equals the last pivot (the determinant up to sign).
  Mat<RF> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a[i][n + j].is_zero()) continue;
      inv(i, j) = RF(a[i][n + j] * row_scale[j], a[i][i]);
    }
  return inv;
}

template <class C>
Mat<C> gauss_jordan_inverse(const Mat<C>& m) {
  const int n = m.rows();
  Mat<C> a = m, inv = Mat<C>::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) fail(ErrorCode::singular_matrix, "matrix is singular");
    for (int j = 0; j < n; ++j) {
      std::swap(a(k, j), a(piv, j));
      std::swap(inv(k, j), inv(piv, j));
    }
    C p = C(1) / a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) = a(k, j) * p;
      inv(k, j) = inv(k, j) * p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      C f = a(i, k);
      for (int j = 0; j < n; ++j) {
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
        if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace detail

// Exact inverse over a field; the result is re-checked by multiplication.
template <class C>
Mat<C> exact_inverse(const Mat<C>& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::shape_error, "inverse of non-square " + m.shape());
  Mat<C> inv;
  if constexpr (detail::is_rational_function<C>::value) {
    inv = detail::bareiss_inverse(m);
  } else {
    inv = detail::gauss_jordan_inverse(m);
  }
  if (!(m * inv == Mat<C>::identity(m.rows())))
    fail(ErrorCode::singular_matrix, "inverse failed its self-check");
  return inv;
}

// Inverse of a one-sided matrix series. Around zero the lowest coefficient
// must be invertible and the recursion runs upwards; around infinity the
// highest one and the recursion runs downwards. The result has as many
// determined terms as the input.
template <class C>
TruncSeries<Mat<C>> series_inverse(const TruncSeries<Mat<C>>& m, std::optional<Direction> dir = std::nullopt) {
  Direction d;
  if (dir) d = *dir;
  else if (m.zero_below()) d = Direction::around_zero;
  else if (m.zero_above()) d = Direction::around_infinity;
  else fail(ErrorCode::window_underflow, "series inverse needs a one-sided series");
  if (d == Direction::around_zero && !m.zero_below()) fail(ErrorCode::window_underflow, "not a series around zero");
  if (d == Direction::around_infinity && !m.zero_above()) fail(ErrorCode::window_underflow, "not a series around infinity");
  const int len = m.hi() - m.lo();
  const int lead = d == Direction::around_zero ? m.lo() : m.hi();
  const int step = d == Direction::around_zero ? 1 : -1;
  const Mat<C>& m0 = m[lead];
  if (m0.rows() != m0.cols()) fail(ErrorCode::shape_error, "series inverse of non-square coefficients");
  Mat<C> x0;
  try {
    x0 = exact_inverse(m0);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::singular_matrix) throw;
    fail(ErrorCode::singular_leading_term, "leading coefficient is not invertible");
  }
  // m = x^lead (m_0 + m_1 t + ...), t = z^step; inverse = x^{-lead} sum x_k t^k.
  std::vector<Mat<C>> x;
  x.push_back(x0);
  for (int k = 1; k <= len; ++k) {
    Mat<C> acc(m0.rows(), m0.cols());
    for (int j = 1; j <= k; ++j) {
      const Mat<C>& mj = m[lead + step * j];
      if (mj.is_zero() || x[k - j].is_zero()) continue;
      acc += mj * x[k - j];
    }
    x.push_back(acc.is_zero() ? acc : -(x0 * acc));
  }
  int lo = d == Direction::around_zero ? -lead : -lead - len;
  int hi = d == Direction::around_zero ? -lead + len : -lead;
  bool closed = m.zero_below() && m.zero_above() && len == 0;
  TruncSeries<Mat<C>> r(lo, hi, d == Direction::around_zero || closed, d == Direction::around_infinity || closed,
                        Mat<C>(m0.rows(), m0.cols()));
  for (int k = 0; k <= len; ++k) r[-lead + step * k] = x[k];
  return r;
}

}  // namespace qgauss
