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
#include <vector>

#include "op_series.hpp"

namespace qgauss {

// One factor of an operator word in z and w: a series in z, a series in w, a
// polynomial in z and w with constant matrix coefficients, or a scalar
// rational function of u = z/w expanded in a given direction. Ratio factors
// act on the product of everything before them, so they go last.
struct WordFactor {
  enum class Kind { z_series, w_series, poly, ratio };
  Kind kind = Kind::poly;
  MatSeries series;
  std::vector<Monomial2<CoeffMat>> poly;
  RatFuncZ ratio;
  Direction direction = Direction::around_zero;
};

inline WordFactor in_z(MatSeries s) { return {WordFactor::Kind::z_series, std::move(s), {}, {}, Direction::around_zero}; }
inline WordFactor in_w(MatSeries s) { return {WordFactor::Kind::w_series, std::move(s), {}, {}, Direction::around_zero}; }
inline WordFactor poly_factor(std::vector<Monomial2<CoeffMat>> p) { return {WordFactor::Kind::poly, {}, std::move(p), {}, Direction::around_zero}; }
inline WordFactor ratio_factor(RatFuncZ h, Direction dir) {
  WordFactor f;
  f.kind = WordFactor::Kind::ratio;
  f.ratio = std::move(h);
  f.direction = dir;
  return f;
}

// Scalar polynomial multiple of the identity, sum_k c_k z^{s_k} w^{t_k}.
inline WordFactor scalar_poly(const std::vector<Monomial2<Coeff>>& p, int dim) {
  std::vector<Monomial2<CoeffMat>> out;
  for (const auto& m : p)
    if (!m.coeff.is_zero()) out.push_back({CoeffMat::identity(dim).scaled(m.coeff), m.zexp, m.wexp});
  return poly_factor(std::move(out));
}

// Product of the factors left to right, on every coefficient it determines.
inline MatBi evaluate_word(const std::vector<WordFactor>& word, int dim) {
  MatBi acc(CoeffMat(dim, dim));
  acc.set(0, 0, CoeffMat::identity(dim));
  acc.zmin = acc.zmax = acc.wmin = acc.wmax = 0;
  auto right = [](const CoeffMat& x, const CoeffMat& y) { return x * y; };
  for (const auto& f : word) {
    switch (f.kind) {
      case WordFactor::Kind::z_series: acc = series_mul(acc, f.series, Axis::z, Side::right, right); break;
      case WordFactor::Kind::w_series: acc = series_mul(acc, f.series, Axis::w, Side::right, right); break;
      case WordFactor::Kind::poly:
        acc = poly_mul(f.poly, acc, [](const CoeffMat& c, const CoeffMat& x) { return x * c; });
        break;
      case WordFactor::Kind::ratio:
        acc = ratio_mul(f.ratio, f.direction, acc, [](const Coeff& c, const CoeffMat& x) { return x.scaled(c); });
        break;
    }
  }
  return acc;
}

inline VerificationReport compare_bi(std::string id, std::string anchor, const MatBi& lhs, const MatBi& rhs,
                                     const Rect& rect) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = std::move(id);
  rep.paper_anchor = std::move(anchor);
  record(rep, compare(lhs, rhs, rect, [](const CoeffMat& a, const CoeffMat& b) { return mat_diff(a, b); }));
  rep.wall_time = sw.seconds();
  return rep;
}

inline VerificationReport compare_words(std::string id, std::string anchor, const std::vector<WordFactor>& lhs,
                                        const std::vector<WordFactor>& rhs, int dim, const Rect& rect) {
  Stopwatch sw;
  VerificationReport rep = compare_bi(std::move(id), std::move(anchor), evaluate_word(lhs, dim), evaluate_word(rhs, dim), rect);
  rep.wall_time = sw.seconds();
  return rep;
}

}  // namespace qgauss
