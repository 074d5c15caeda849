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

#include <array>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "report.hpp"
#include "scalar.hpp"

namespace qgauss {

enum class Convention { literal, corrected };

const char* convention_name(Convention c);

// Trigonometric R(u) on C^n (x) C^n, entries rational in the spectral ratio u.
struct RMatrix {
  int n = 1;
  Convention convention = Convention::corrected;
  ScalarQ q;
  Mat<RatFuncU> value;
};

RMatrix build_r(int n, Convention convention, const ScalarQ& q);

// R with its scalar denominator cleared and homogenized:
// R(z/w) = (sum_k num[k] z^k w^{degree-k}) / (sum_k den[k] z^k w^{degree-k}).
struct ClearedR {
  int degree = 0;
  std::vector<Mat<ScalarQ>> num;
  std::vector<ScalarQ> den;
};

ClearedR clear_denominator(const RMatrix& r);

VerificationReport check_ybe(const RMatrix& r);
VerificationReport check_unitarity(const RMatrix& r);
VerificationReport check_r_at_one(const RMatrix& r);

// Restriction to span{e_i (x) e_j : i, j < n}.
RMatrix restrict_rbar(const RMatrix& r);
VerificationReport check_restriction(const RMatrix& r);

// Splitting C^n = C^{n-1} + C e_n in both factors.
struct RBlockForm {
  RMatrix rbar;
  Mat<RatFuncU> a_block, b_block, c_block, d_block;
  // Prefactors of A, B, C, D as functions of u = z/w.
  std::array<RatFuncU, 4> prefactors;
};

RBlockForm block_form(const RMatrix& r);
Mat<RatFuncU> reassemble(const RBlockForm& b);
VerificationReport check_block_form(const RMatrix& r);

}  // namespace qgauss
