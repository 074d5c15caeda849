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

#include "core/currents.hpp"

using namespace qgauss;

namespace {

ScalarQ q() { return ScalarQ::variable(); }
Coeff one() { return Coeff(ScalarQ(1)); }

struct Model {
  RMatrix r, rbar;
  LPair lp;
  GaussFactors gp, gm;
  CurrentSet cs;
};

Model model(int n, int order, Coeff a = one()) {
  Model m;
  m.r = build_r(n, Convention::corrected, q());
  m.rbar = restrict_rbar(m.r);
  m.lp = build_evaluation_pair({n, a, order}, m.r);
  m.gp = partial_decompose(m.lp.plus, n, n, Sign::plus);
  m.gm = partial_decompose(m.lp.minus, n, n, Sign::minus);
  m.cs = extract_currents(m.gp, m.gm);
  return m;
}

const VerificationReport& find(const ReportList& reps, const std::string& id) {
  for (const auto& r : reps)
    if (r.check_id == id) return r;
  FAIL("missing report " << id);
  return reps.front();
}

bool all_pass(const ReportList& reps) {
  bool ok = true;
  for (const auto& r : reps)
    if (!r.diagnostic && r.verdict != Verdict::pass) {
      MESSAGE("failed: " << r.check_id);
      ok = false;
    }
  return ok;
}

}  // namespace

TEST_CASE("current shapes and definition") {
  Model m = model(2, 4);
  CHECK(m.cs.big_e.lo() == -4);
  CHECK(m.cs.big_e.hi() == 4);
  for (int k = -4; k <= 4; ++k) {
    const CoeffMat* p = m.gp.e.known(k);
    const CoeffMat* q = m.gm.e.known(k);
    REQUIRE(p);
    REQUIRE(q);
    CHECK(m.cs.big_e[k] == *p - *q);
  }
  Model m3 = model(3, 3);
  CHECK(m3.cs.big_e.zero().rows() == 3);
  CHECK(m3.cs.big_e.zero().cols() == 6);
  CHECK(m3.cs.big_f.zero().rows() == 6);
  CHECK(m3.cs.kk_plus.zero().rows() == 6);
}

TEST_CASE("a pole-free rational entry gives a vanishing two-sided current") {
  RatFuncZ z = RatFuncZ::variable();
  RatMat poly(1, 1);
  poly(0, 0) = z * z + RatFuncZ(one());
  CHECK(two_sided(poly, 5)[2].is_zero());
  // 1/(1 - z): expansions differ by the full delta series.
  RatMat pole(1, 1);
  pole(0, 0) = (RatFuncZ(one()) - z).inverse();
  MatSeries s = two_sided(pole, 3);
  for (int k = -3; k <= 3; ++k) CHECK(s[k](0, 0) == one());
}

TEST_CASE("principal part") {
  using PolyZ = RatFuncZ::Poly;
  RatFuncZ z = RatFuncZ::variable();
  RatFuncZ c2(Coeff(ScalarQ(BigRational(2))));
  // g = 1/((z - 1)(z - 2)) = 1/(z - 2) - 1/(z - 1).
  RatFuncZ g = ((z - RatFuncZ(one())) * (z - c2)).inverse();
  PolyZ at_one = (z - RatFuncZ(one())).num();
  CHECK(principal_part(g, at_one) == -(z - RatFuncZ(one())).inverse());
  CHECK(principal_part(z * z / (z - RatFuncZ(one())), at_one) == (z - RatFuncZ(one())).inverse());
  CHECK(principal_part(z, at_one).is_zero());
}

TEST_CASE("subalgebra relations") {
  for (int n : {2, 3}) {
    Model m = model(n, n == 2 ? 6 : 4);
    CHECK(all_pass(check_subalgebra(m.cs, m.rbar)));
  }
  Model m = model(3, 3);
  m.cs.kk_plus[1](0, 3) += one();
  CHECK(find(check_subalgebra(m.cs, m.rbar), "subalgebra.plus").verdict == Verdict::fail);
}

TEST_CASE("lemma relations for n = 2 and n = 3") {
  for (int n : {2, 3}) {
    Model m = model(n, n == 2 ? 6 : 4, Coeff::variable());
    auto reps = check_lemma(m.cs, m.rbar);
    CHECK(all_pass(reps));
    CHECK(find(reps, "lemma.k+k-.literal").verdict == Verdict::skipped);
    CHECK(find(reps, "lemma.EF").compared > 0);
  }
}

TEST_CASE("EF relation is sensitive to the currents") {
  Model m = model(2, 4);
  CurrentSet zero_e = m.cs;
  zero_e.big_e = m.cs.big_e.map([](const CoeffMat& x) { return CoeffMat(x.rows(), x.cols()); });
  CHECK(find(check_lemma(zero_e, m.rbar), "lemma.EF").verdict == Verdict::fail);
  // Plus and minus data in swapped roles cannot be inverted in their directions.
  CurrentSet swapped = m.cs;
  std::swap(swapped.k_plus, swapped.k_minus);
  std::swap(swapped.kk_plus, swapped.kk_minus);
  CHECK_THROWS(check_lemma(swapped, m.rbar));
}

TEST_CASE("single coefficient perturbations of the currents are detected") {
  Model m = model(2, 4);
  for (int k = -3; k <= 3; ++k) {
    CurrentSet c = m.cs;
    c.big_f[k](1, 0) += one();
    bool caught = false;
    for (const auto& r : check_lemma(c, m.rbar))
      if (!r.diagnostic && r.verdict == Verdict::fail) caught = true;
    CHECK_MESSAGE(caught, "F coefficient " << k);
  }
}

TEST_CASE("zf relations") {
  for (int n : {2, 3}) {
    Model m = model(n, n == 2 ? 6 : 4);
    ZFSet zf = zf_currents(partial_decompose(*m.lp.rational, n, n), m.cs.order);
    auto reps = check_zf(zf, m.cs, m.rbar);
    CHECK(all_pass(reps));
    CHECK(find(reps, "zf.E-F.plain").verdict == Verdict::fail);
    CHECK(find(reps, "zf.E-F.plain").diagnostic);
  }
}
