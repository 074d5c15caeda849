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

#include "core/serialize.hpp"

using namespace qgauss;

namespace {

ScalarQ q() { return ScalarQ::variable(); }

void same_series(const MatSeries& x, const MatSeries& y) {
  REQUIRE(x.lo() == y.lo());
  REQUIRE(x.hi() == y.hi());
  CHECK(x.zero_below() == y.zero_below());
  CHECK(x.zero_above() == y.zero_above());
  for (int k = x.lo(); k <= x.hi(); ++k) CHECK(x[k] == y[k]);
}

}  // namespace

TEST_CASE("report fields") {
  VerificationReport r;
  r.check_id = "x.y";
  r.paper_anchor = "A = B";
  r.verdict = Verdict::fail;
  r.window = Rect{0, 3, -2, 0};
  r.compared = 12;
  r.first_mismatch = Mismatch{{{"z", 1}, {"w", -1}}, "1", "2"};
  Json j = to_json(r);
  CHECK(j["check_id"] == "x.y");
  CHECK(j["verdict"] == "fail");
  CHECK(j["diagnostic"] == false);
  CHECK(j["window"]["z"] == Json::array({0, 3}));
  CHECK(j["window"]["w"] == Json::array({-2, 0}));
  CHECK(j["compared"] == 12);
  CHECK(j["first_mismatch"]["indices"][1] == Json::array({"w", -1}));
  CHECK(j["first_mismatch"]["got"] == "2");
  CHECK(j.contains("wall_time"));

  VerificationReport exact;
  exact.check_id = "e";
  Json k = to_json(exact);
  CHECK(k["window"].is_null());
  CHECK(k["first_mismatch"].is_null());
}

TEST_CASE("R-matrix export") {
  Json j = to_json(build_r(2, Convention::corrected, q()));
  CHECK(j["n"] == 2);
  CHECK(j["convention"] == "corrected");
  REQUIRE(j["entries"].size() == 4);
  CHECK(j["entries"][0].size() == 4);
}

TEST_CASE("L-operator export round trip") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    RMatrix r = build_r(n, Convention::corrected, q());
    LPair lp = build_evaluation_pair({n, Coeff::variable(), 4}, r);
    Json j = to_json(lp);
    CHECK(j["n"] == n);
    CHECK(j["order"] == 4);
    LPair back = lpair_from_json(Json::parse(j.dump()), {});
    CHECK(back.n == lp.n);
    CHECK(back.qdim == lp.qdim);
    CHECK(back.rho == lp.rho);
    CHECK(back.transposed == lp.transposed);
    same_series(lp.plus, back.plus);
    same_series(lp.minus, back.minus);
  }
}

TEST_CASE("numeric specialization on import") {
  RMatrix r = build_r(2, Convention::corrected, q());
  LPair lp = build_evaluation_pair({2, Coeff::variable(), 3}, r);
  Specialization spec;
  spec.q = BigRational(3);
  spec.a = BigRational(1, 2);
  LPair back = lpair_from_json(to_json(lp), spec);
  RMatrix r3 = build_r(2, Convention::corrected, ScalarQ(BigRational(3)));
  LPair direct = build_evaluation_pair({2, Coeff(ScalarQ(BigRational(1, 2))), 3}, r3);
  same_series(direct.plus, back.plus);
}

TEST_CASE("malformed tables are parse errors") {
  Json bad = Json::parse(R"({"n": 2, "qdim": 2, "order": 3, "plus": {"rows": 2}})");
  CHECK_THROWS_AS(lpair_from_json(bad, {}), Error);
  try {
    lpair_from_json(bad, {});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
  }
}

TEST_CASE("Gauss factors export") {
  RMatrix r = build_r(2, Convention::corrected, q());
  LPair lp = build_evaluation_pair({2, Coeff(ScalarQ(1)), 3}, r);
  Json j = to_json(partial_decompose(lp.plus, 2, 2, Sign::plus));
  CHECK(j["sign"] == "plus");
  for (const char* key : {"K", "k", "e", "f"}) CHECK(j.contains(key));
}
