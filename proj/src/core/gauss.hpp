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

enum class Sign { plus, minus };

inline const char* sign_name(Sign s) { return s == Sign::plus ? "plus" : "minus"; }
inline Direction direction_of(Sign s) { return s == Sign::plus ? Direction::around_zero : Direction::around_infinity; }

// L = [[I, 0], [e, 1]] diag(K, k) [[I, f], [0, 1]] with the split
// C^n = C^{n-1} + C e_n. K is (n-1)x(n-1) in aux, k is 1x1, e is a row and f
// a column; all entries are quantum operators of dimension qdim.
struct GaussFactors {
  int n = 1;
  int qdim = 1;
  Sign sign = Sign::plus;
  MatSeries kk;  // K
  MatSeries k;
  MatSeries e;
  MatSeries f;

  // k + e K f, the (n, n) block of L.
  MatSeries big_d() const;
};

GaussFactors partial_decompose(const MatSeries& l, int n, int qdim, Sign sign);
MatSeries recompose(const GaussFactors& g);

struct FullGaussFactors {
  int n = 1;
  int qdim = 1;
  MatSeries lower;  // unit lower triangular in aux
  MatSeries diag;
  MatSeries upper;  // unit upper triangular in aux
};

// Iterates the partial decomposition on leading blocks.
FullGaussFactors full_decompose(const MatSeries& l, int n, int qdim, Sign sign);
// Entry-by-entry LDU recurrences; an independent route for cross-checking.
FullGaussFactors direct_ldu(const MatSeries& l, int n, int qdim, Sign sign);
MatSeries recompose(const FullGaussFactors& g);

// Solutions of K X = B and Y K = C for one-sided series by coefficient
// recursion, without forming K^{-1}.
MatSeries solve_left(const MatSeries& kk, const MatSeries& b, Sign sign);
MatSeries solve_right(const MatSeries& kk, const MatSeries& c, Sign sign);

VerificationReport verify_uniqueness(const MatSeries& l, const GaussFactors& fac);
VerificationReport check_recompose(const MatSeries& l, const GaussFactors& fac);
VerificationReport check_full(const MatSeries& l, int n, int qdim, Sign sign);
// L L^{-1} = 1 and the block formula for L^{-1} in terms of K, k, e, f.
ReportList check_antipode(const MatSeries& l, int n, int qdim, Sign sign);
// L_1(z) L_2(w) assembled block by block from the Gauss factors.
VerificationReport check_l1l2_display(const MatSeries& l, const GaussFactors& fac);

// Rational counterpart over Q(q)(a)(z).
struct RationalGauss {
  int n = 1;
  int qdim = 1;
  RatMat kk, k, e, f;
};

RationalGauss partial_decompose(const RatMat& l, int n, int qdim);

}  // namespace qgauss
