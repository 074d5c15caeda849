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

#include <doctest.h>

#include "core/gauss.hpp"
#include "core/loperator.hpp"

using namespace qgauss;

namespace {

ScalarQ q() { return ScalarQ::variable(); }
Coeff one() { return Coeff(ScalarQ(1)); }
Coeff sym_a() { return Coeff::variable(); }

bool all_pass(const ReportList& reps, bool include_diagnostic = false) {
  bool ok = true;
  for (const auto& r : reps) {
    if (r.diagnostic && !include_diagnostic) continue;
    if (r.verdict != Verdict::pass) {
      MESSAGE("failed: " << r.check_id);
      ok = false;
    }
  }
  return ok;
}

const VerificationReport& find(const ReportList& reps, const std::string& id) {
  for (const auto& r : reps)
    if (r.check_id == id) return r;
  FAIL("missing report " << id);
  return reps.front();
}

LPair eval_pair(int n, int order, Coeff a = one()) {
  return build_evaluation_pair({n, a, order}, build_r(n, Convention::corrected, q()));
}

}  // namespace

TEST_CASE("n = 1 is scalar and trivially consistent") {
  RMatrix r = build_r(1, Convention::corrected, q());
  LPair lp = build_evaluation_pair({1, one(), 4}, r);
  CHECK(lp.plus[0] == CoeffMat::identity(1));
  CHECK(all_pass(check_defining_relations(lp, r)));
  CHECK(all_pass(check_inverse_relations(lp, r)));
}

TEST_CASE("zero modes of the n = 2 evaluation operator") {
  LPair lp = eval_pair(2, 4);
  ZeroModePattern pat = zero_mode_pattern(lp);
  CHECK(pat.literal);
  CHECK(pat.diagonal_inverse);
  CHECK_FALSE(lp.transposed);
  CHECK(lp.rho == one());
  // L+(0) = R(0): the upper family vanishes at u = 0.
  CHECK(aux_block(lp.plus[0], 2, 0, 1, 1, 1).is_zero());
  CHECK_FALSE(aux_block(lp.plus[0], 2, 1, 0, 1, 1).is_zero());
}

TEST_CASE("defining relations for n = 2, N = 6") {
  RMatrix r = build_r(2, Convention::corrected, q());
  LPair lp = build_evaluation_pair({2, one(), 6}, r);
  auto reps = check_defining_relations(lp, r);
  CHECK(all_pass(reps));
  CHECK(find(reps, "rll.plus").compared > 0);
  CHECK(find(reps, "rll.coherence").verdict == Verdict::pass);
}

TEST_CASE("a corrupted coefficient is located") {
  RMatrix r = build_r(2, Convention::corrected, q());
  LPair lp = build_evaluation_pair({2, sym_a(), 4}, r);
  lp.plus[2](1, 2) += one();
  auto reps = check_defining_relations(lp, r);
  const auto& plus = find(reps, "rll.plus");
  CHECK(plus.verdict == Verdict::fail);
  REQUIRE(plus.first_mismatch.has_value());
  CHECK(plus.first_mismatch->indices.size() == 4);
  CHECK(find(reps, "rll.minus").verdict == Verdict::pass);
  CHECK(find(reps, "rll.coherence").verdict == Verdict::fail);
}

TEST_CASE("inverse relations for n = 2") {
  RMatrix r = build_r(2, Convention::corrected, q());
  LPair lp = build_evaluation_pair({2, one(), 6}, r);
  auto reps = check_inverse_relations(lp, r);
  CHECK(all_pass(reps));
  CHECK(find(reps, "inverse.4.literal").verdict == Verdict::fail);
  CHECK(find(reps, "inverse.5.literal.plus").verdict == Verdict::fail);
  CHECK(find(reps, "inverse.5.literal.minus").verdict == Verdict::fail);
}

TEST_CASE("inverse relations for n = 3, N = 4") {
  RMatrix r = build_r(3, Convention::corrected, q());
  LPair lp = build_evaluation_pair({3, one(), 4}, r);
  CHECK(all_pass(check_inverse_relations(lp, r)));
}

TEST_CASE("coproduct of two evaluation representations") {
  RMatrix r = build_r(2, Convention::corrected, q());
  LPair a = build_evaluation_pair({2, one(), 4}, r);
  LPair b = build_evaluation_pair({2, sym_a(), 4}, r);
  LPair d = coproduct_pair(a, b);
  CHECK(d.qdim == 4);
  CHECK(all_pass(check_defining_relations(d, r, "hopf.coproduct")));
  CHECK(check_counit(a).verdict == Verdict::pass);
  CHECK_THROWS_AS(coproduct_pair(a, trivial_pair(3, 4)), Error);
}

TEST_CASE("coassociativity on three factors") {
  RMatrix r = build_r(2, Convention::corrected, q());
  LPair a = build_evaluation_pair({2, one(), 3}, r);
  LPair b = build_evaluation_pair({2, sym_a(), 3}, r);
  LPair c = build_evaluation_pair({2, Coeff(ScalarQ(BigRational(2))), 3}, r);
  CHECK(check_coassociativity(a, b, c).verdict == Verdict::pass);
}

TEST_CASE("antipode and the L1 L2 display on evaluation operators") {
  for (int n : {2, 3}) {
    LPair lp = eval_pair(n, n == 2 ? 6 : 4);
    for (Sign s : {Sign::plus, Sign::minus}) {
      const MatSeries& l = s == Sign::plus ? lp.plus : lp.minus;
      CHECK(all_pass(check_antipode(l, n, n, s)));
      GaussFactors g = partial_decompose(l, n, n, s);
      CHECK(check_recompose(l, g).verdict == Verdict::pass);
      CHECK(check_full(l, n, n, s).verdict == Verdict::pass);
      CHECK(check_l1l2_display(l, g).verdict == Verdict::pass);
    }
  }
}

TEST_CASE("invalid parameters") {
  RMatrix r = build_r(2, Convention::corrected, q());
  CHECK_THROWS_AS(build_evaluation_pair({2, Coeff(), 4}, r), Error);
  CHECK_THROWS_AS(build_evaluation_pair({2, one(), 1}, r), Error);
  CHECK_THROWS_AS(build_evaluation_pair({3, one(), 4}, r), Error);
}
