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

#include "gauss.hpp"
#include "loperator.hpp"

namespace qgauss {

// Currents at level zero from the partial Gauss factors of L+ and L-.
// E = e+ - e- is an aux row of length n-1, F = f+ - f- a column.
struct CurrentSet {
  int n = 2;
  int qdim = 1;
  int order = 0;
  MatSeries big_e, big_f;
  MatSeries kk_plus, kk_minus;
  MatSeries k_plus, k_minus;
};

CurrentSet extract_currents(const GaussFactors& plus, const GaussFactors& minus);

// bar E = E K- k- and bar F = (k+)^{-1} K+ F. Both products pair a two-sided
// series with a one-sided one, so they are taken from the rational factors:
// the principal part of e K k at the poles of e, turned into the difference
// of its two expansions (likewise k^{-1} K f at the poles of f).
struct ZFSet {
  MatSeries bar_e, bar_f;
};

ZFSet zf_currents(const RationalGauss& g, int order);

// Principal part of g at the roots of poles (with multiplicity taken from g).
RatFuncZ principal_part(const RatFuncZ& g, const RatFuncZ::Poly& poles);

// Difference of the expansions around zero and around infinity, entrywise.
MatSeries two_sided(const RatMat& m, int order);

ReportList check_subalgebra(const CurrentSet& cs, const RMatrix& rbar);
ReportList check_lemma(const CurrentSet& cs, const RMatrix& rbar);
ReportList check_zf(const ZFSet& zf, const CurrentSet& cs, const RMatrix& rbar);

}  // namespace qgauss
