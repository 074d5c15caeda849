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
#include <string>
#include <vector>

#include "rmatrix.hpp"
#include "word.hpp"

namespace qgauss {

// Level zero evaluation data: L(z) = rho R_{aux, quantum}(z / a).
struct EvalParams {
  int n = 2;
  Coeff a = Coeff(ScalarQ(1));
  int order = 6;
};

// The two expansions of one operator matrix: plus around z = 0 on [0, N],
// minus around z = infinity on [-N, 0]. Rows are aux-major.
struct LPair {
  int n = 1;
  int qdim = 1;
  int order = 0;
  MatSeries plus;
  MatSeries minus;
  std::optional<RatMat> rational;  // the resummed object, when known
  Coeff rho = Coeff(ScalarQ(1));  // constant normalization applied to plus
  bool transposed = false;  // zero modes triangular in the transposed pattern
};

// Evaluation operator R(z/a) as a rational matrix over Q(q)(a)(z).
RatMat evaluation_matrix(const RMatrix& r, const Coeff& a);

LPair build_evaluation_pair(const EvalParams& p, const RMatrix& r);
// Expansions of a rational operator matrix, normalized on the zero modes.
LPair pair_from_rational(const RatMat& l, int n, int qdim, int order);

LPair trivial_pair(int n, int order);
LPair coproduct_pair(const LPair& first, const LPair& second);

// Rows [i, j] quantum blocks of the zero modes.
struct ZeroModePattern {
  bool literal = false;  // l+[0] lower and l-[0] upper block triangular
  bool transposed = false;
  bool diagonal_inverse = false;  // l+_ii[0] l-_ii[0] = 1 for every i
};
ZeroModePattern zero_mode_pattern(const LPair& lp);

// RLL for ++, --, +- and the zero-mode conditions. Ids are prefixed.
ReportList check_defining_relations(const LPair& lp, const RMatrix& r, const std::string& prefix = "rll");
ReportList check_inverse_relations(const LPair& lp, const RMatrix& r);
VerificationReport check_coherence(const LPair& lp, const std::string& id = "rll.coherence");
VerificationReport check_coassociativity(const LPair& a, const LPair& b, const LPair& c);
VerificationReport check_counit(const LPair& lp);

// Embeddings of an L-operator into [aux1, aux2, quantum] and of R into the
// two aux legs, with R's denominator cleared.
MatSeries leg_one(const MatSeries& l, int n, int qdim);
MatSeries leg_two(const MatSeries& l, int n, int qdim);
WordFactor cleared_r(const RMatrix& r, int qdim, bool swapped);

}  // namespace qgauss
