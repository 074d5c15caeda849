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
#include <optional>
#include <string>
#include <vector>

#include "biseries.hpp"
#include "inverse.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace qgauss {

// Operator matrices are flattened aux-major: row = aux_index * qdim + quantum.
using CoeffMat = Mat<Coeff>;
using MatSeries = TruncSeries<CoeffMat>;
using MatBi = BiSeries<CoeffMat>;
using RatMat = Mat<RatFuncZ>;

inline CoeffMat lift(const Mat<ScalarQ>& m) {
  return m.map([](const ScalarQ& s) { return Coeff(s); });
}

inline MatSeries mat_mul(const MatSeries& a, const MatSeries& b) {
  return multiply(a, b, [](const CoeffMat& x, const CoeffMat& y) { return x * y; });
}

// Aux block rows [r0, r0+nr), cols [c0, c0+nc) of each coefficient.
inline CoeffMat aux_block(const CoeffMat& m, int qdim, int r0, int c0, int nr, int nc) {
  return m.block(r0 * qdim, c0 * qdim, nr * qdim, nc * qdim);
}
inline MatSeries aux_block(const MatSeries& s, int qdim, int r0, int c0, int nr, int nc) {
  return s.map([&](const CoeffMat& m) { return aux_block(m, qdim, r0, c0, nr, nc); });
}
inline RatMat aux_block(const RatMat& m, int qdim, int r0, int c0, int nr, int nc) {
  return m.block(r0 * qdim, c0 * qdim, nr * qdim, nc * qdim);
}

// Identity (x) k: a quantum operator k acting blockwise on m aux copies.
template <class C>
Mat<C> blockwise(const Mat<C>& k, int m) {
  return kron(Mat<C>::identity(m), k);
}

inline std::string window_text(const MatSeries& s) {
  return "[" + std::to_string(s.lo()) + "," + std::to_string(s.hi()) + "]";
}

// Compare two series on the exponents determined in both; mismatch carries
// the exponent and entry.
inline std::optional<Mismatch> series_diff(const MatSeries& expected, const MatSeries& got, long* compared = nullptr) {
  int lo = std::min(expected.lo(), got.lo()), hi = std::max(expected.hi(), got.hi());
  long count = 0;
  std::optional<Mismatch> first;
  for (int k = lo; k <= hi; ++k) {
    const CoeffMat* a = expected.known(k);
    const CoeffMat* b = got.known(k);
    if (!a || !b) continue;
    ++count;
    if (first) continue;
    if (auto d = mat_diff(*a, *b)) {
      d->indices.insert(d->indices.begin(), {"exponent", k});
      first = std::move(d);
    }
  }
  if (compared) *compared = count;
  if (count == 0) fail(ErrorCode::window_underflow, "series share no determined exponents");
  return first;
}

// Closed series holding one constant coefficient at exponent 0.
inline MatSeries constant_series(const CoeffMat& m) { return MatSeries::laurent_polynomial(0, {m}, CoeffMat(m.rows(), m.cols())); }

// Block matrix of series. Cells may have different windows; the result keeps
// the exponents determined in every cell.
inline MatSeries assemble(const std::vector<std::vector<MatSeries>>& cells) {
  const std::size_t nr = cells.size(), nc = cells[0].size();
  bool zb = true, za = true;
  int lo_all = INT_MAX, hi_all = INT_MIN, lo_open = INT_MIN, hi_open = INT_MAX;
  std::vector<int> rows(nr), cols(nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      const MatSeries& c = cells[i][j];
      rows[i] = c.zero().rows();
      cols[j] = c.zero().cols();
      lo_all = std::min(lo_all, c.lo());
      hi_all = std::max(hi_all, c.hi());
      if (!c.zero_below()) zb = false, lo_open = std::max(lo_open, c.lo());
      if (!c.zero_above()) za = false, hi_open = std::min(hi_open, c.hi());
    }
  int lo = zb ? lo_all : lo_open, hi = za ? hi_all : hi_open;
  // A closed cell with a window beyond an open neighbour does not widen it.
  if (!zb) lo = std::max(lo, lo_open);
  if (!za) hi = std::min(hi, hi_open);
  if (lo > hi) fail(ErrorCode::window_underflow, "blocks share no determined exponents");
  int tr = 0, tc = 0;
  for (int r : rows) tr += r;
  for (int c : cols) tc += c;
  MatSeries out(lo, hi, zb, za, CoeffMat(tr, tc));
  for (int k = lo; k <= hi; ++k) {
    CoeffMat m(tr, tc);
    int r0 = 0;
    for (std::size_t i = 0; i < nr; ++i) {
      int c0 = 0;
      for (std::size_t j = 0; j < nc; ++j) {
        const CoeffMat* v = cells[i][j].known(k);
        if (!v) fail(ErrorCode::window_underflow, "block coefficient undetermined");
        m.set_block(r0, c0, *v);
        c0 += cols[j];
      }
      r0 += rows[i];
    }
    out[k] = std::move(m);
  }
  return out;
}

inline std::optional<Mismatch> mat_entry_diff(const CoeffMat& a, const CoeffMat& b) { return mat_diff(a, b); }

}  // namespace qgauss
