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

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace qgauss {

// Dense row-major matrix over a ring C. Products skip zero entries, which is
// what keeps operator matrices built from E_ij tensors cheap.
template <class C>
class Mat {
 public:
  using Entry = C;

  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) fail(ErrorCode::shape_error, "negative matrix dimension");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = C(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  C& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const C& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat& operator+=(const Mat& o) {
    check_same(o);
    for (std::size_t k = 0; k < e_.size(); ++k)
      if (!o.e_[k].is_zero()) e_[k] += o.e_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same(o);
    for (std::size_t k = 0; k < e_.size(); ++k)
      if (!o.e_[k].is_zero()) e_[k] -= o.e_[k];
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) {
    for (auto& x : a.e_)
      if (!x.is_zero()) x = -x;
    return a;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      fail(ErrorCode::shape_error, "product of " + a.shape() + " and " + b.shape());
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const C& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const C& y = b(k, j);
          if (!y.is_zero()) r(i, j) += x * y;
        }
      }
    return r;
  }

  Mat scaled(const C& s) const {
    Mat r(rows_, cols_);
    if (s.is_zero()) return r;
    for (std::size_t k = 0; k < e_.size(); ++k)
      if (!e_[k].is_zero()) r.e_[k] = s * e_[k];
    return r;
  }

  Mat block(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::shape_error, "block out of range");
    Mat r(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }
  void set_block(int r0, int c0, const Mat& b) {
    if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(ErrorCode::shape_error, "block out of range");
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  template <class Fn>
  auto map(Fn&& fn) const -> Mat<decltype(fn(std::declval<const C&>()))> {
    Mat<decltype(fn(std::declval<const C&>()))> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::shape_error, "shape " + shape() + " vs " + o.shape());
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<C> e_;
};

template <class C>
Mat<C> kron(const Mat<C>& a, const Mat<C>& b) {
  Mat<C> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

// Unit matrix E_ij of size rows x cols.
template <class C>
Mat<C> unit(int rows, int cols, int i, int j) {
  Mat<C> m(rows, cols);
  m(i, j) = C(1);
  return m;
}

// Swap of two tensor factors: e_i (x) e_j -> e_j (x) e_i.
template <class C>
Mat<C> permutation(int d1, int d2) {
  Mat<C> p(d1 * d2, d1 * d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) p(j * d1 + i, i * d2 + j) = C(1);
  return p;
}

// Tensor factors of a space; leg 0 is the most significant index.
struct LegSpace {
  std::vector<int> out_dims;
  std::vector<int> in_dims;

  static LegSpace square(std::vector<int> dims) { return {dims, dims}; }
  int out_size() const { return std::accumulate(out_dims.begin(), out_dims.end(), 1, std::multiplies<>()); }
  int in_size() const { return std::accumulate(in_dims.begin(), in_dims.end(), 1, std::multiplies<>()); }
};

// Place op on the listed legs (in that order), identity on the others. Legs
// not listed must have equal in and out dimension.
template <class C>
Mat<C> embed(const Mat<C>& op, const LegSpace& space, const std::vector<int>& legs) {
  const int nlegs = static_cast<int>(space.out_dims.size());
  if (space.in_dims.size() != space.out_dims.size()) fail(ErrorCode::shape_error, "leg space rank mismatch");
  std::vector<bool> chosen(nlegs, false);
  int op_out = 1, op_in = 1;
  for (int l : legs) {
    if (l < 0 || l >= nlegs || chosen[l]) fail(ErrorCode::shape_error, "invalid leg list");
    chosen[l] = true;
    op_out *= space.out_dims[l];
    op_in *= space.in_dims[l];
  }
  if (op.rows() != op_out || op.cols() != op_in)
    fail(ErrorCode::shape_error, "operator " + op.shape() + " does not match chosen legs");
  std::vector<int> others;
  for (int l = 0; l < nlegs; ++l)
    if (!chosen[l]) {
      if (space.in_dims[l] != space.out_dims[l]) fail(ErrorCode::shape_error, "spectator leg must be square");
      others.push_back(l);
    }
  // Strides of each leg in the global row / column index.
  std::vector<int> out_stride(nlegs, 1), in_stride(nlegs, 1);
  for (int l = nlegs - 2; l >= 0; --l) {
    out_stride[l] = out_stride[l + 1] * space.out_dims[l + 1];
    in_stride[l] = in_stride[l + 1] * space.in_dims[l + 1];
  }
  auto spread = [&](int idx, const std::vector<int>& dims, const std::vector<int>& stride) {
    int g = 0;
    for (int k = static_cast<int>(legs.size()) - 1; k >= 0; --k) {
      int d = dims[legs[k]];
      g += (idx % d) * stride[legs[k]];
      idx /= d;
    }
    return g;
  };
  int spectators = 1;
  for (int l : others) spectators *= space.out_dims[l];
  Mat<C> r(space.out_size(), space.in_size());
  for (int s = 0; s < spectators; ++s) {
    int rest = s, go = 0, gi = 0;
    for (int k = static_cast<int>(others.size()) - 1; k >= 0; --k) {
      int l = others[k];
      int v = rest % space.out_dims[l];
      rest /= space.out_dims[l];
      go += v * out_stride[l];
      gi += v * in_stride[l];
    }
    for (int i = 0; i < op.rows(); ++i)
      for (int j = 0; j < op.cols(); ++j)
        if (!op(i, j).is_zero())
          r(go + spread(i, space.out_dims, out_stride), gi + spread(j, space.in_dims, in_stride)) = op(i, j);
  }
  return r;
}

}  // namespace qgauss
