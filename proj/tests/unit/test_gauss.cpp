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

#include <random>

#include "core/gauss.hpp"

using namespace qgauss;

namespace {

Coeff cst(long v) { return Coeff(ScalarQ(BigRational(v))); }

CoeffMat random_block(std::mt19937_64& rng, int r, int c) {
  std::uniform_int_distribution<long> coef(-2, 2);
  CoeffMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = cst(coef(rng));
  return m;
}

// Power series (plus) on [0, len] or around infinity (minus) on [-len, 0].
MatSeries one_sided(std::vector<CoeffMat> cs, Sign sign) {
  const int len = static_cast<int>(cs.size()) - 1;
  CoeffMat z(cs[0].rows(), cs[0].cols());
  if (sign == Sign::plus) {
    MatSeries s(0, len, true, false, z);
    for (int k = 0; k <= len; ++k) s[k] = cs[k];
    return s;
  }
  MatSeries s(-len, 0, false, true, z);
  for (int k = 0; k <= len; ++k) s[-k] = cs[k];
  return s;
}

struct Built {
  MatSeries l, lower, diag, upper;
};

// L = lower diag upper from random unit triangular factors and diagonal
// factors whose leading quantum blocks are invertible.
Built random_ldu(std::mt19937_64& rng, int n, int d, int len, Sign sign) {
  const int dim = n * d;
  std::vector<CoeffMat> lo, di, up;
  for (int k = 0; k <= len; ++k) {
    CoeffMat a(dim, dim), b(dim, dim), c(dim, dim);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i > j) a.set_block(i * d, j * d, random_block(rng, d, d));
        if (i < j) c.set_block(i * d, j * d, random_block(rng, d, d));
        if (i == j) {
          CoeffMat blk = random_block(rng, d, d);
          if (k == 0) {
            for (int r = 0; r < d; ++r)
              for (int s = 0; s < d; ++s) blk(r, s) = r == s ? cst(i + 2) : (r < s ? blk(r, s) : cst(0));
          }
          b.set_block(i * d, i * d, blk);
          if (k == 0) {
            a.set_block(i * d, i * d, CoeffMat::identity(d));
            c.set_block(i * d, i * d, CoeffMat::identity(d));
          }
        }
      }
    lo.push_back(a);
    di.push_back(b);
    up.push_back(c);
  }
  Built r;
  r.lower = one_sided(lo, sign);
  r.diag = one_sided(di, sign);
  r.upper = one_sided(up, sign);
  r.l = mat_mul(mat_mul(r.lower, r.diag), r.upper);
  return r;
}

bool agree(const MatSeries& a, const MatSeries& b) { return !series_diff(a, b).has_value(); }

}  // namespace

TEST_CASE("scalar 2x2 partial decomposition") {
  CoeffMat m(2, 2);
  m(0, 0) = cst(2);
  m(0, 1) = cst(1);
  m(1, 0) = cst(1);
  m(1, 1) = cst(1);
  MatSeries l = constant_series(m);
  GaussFactors g = partial_decompose(l, 2, 1, Sign::plus);
  const Coeff half = Coeff(ScalarQ(BigRational(1, 2)));
  CHECK(g.kk[0](0, 0) == cst(2));
  CHECK(g.f[0](0, 0) == half);
  CHECK(g.e[0](0, 0) == half);
  CHECK(g.k[0](0, 0) == half);
  CHECK(check_recompose(l, g).verdict == Verdict::pass);
  CHECK(verify_uniqueness(l, g).verdict == Verdict::pass);
}

TEST_CASE("identity decomposes trivially") {
  for (int n = 2; n <= 3; ++n) {
    MatSeries l = constant_series(CoeffMat::identity(n * 2));
    GaussFactors g = partial_decompose(l, n, 2, Sign::minus);
    CHECK(g.e[0].is_zero());
    CHECK(g.f[0].is_zero());
    CHECK(g.k[0] == CoeffMat::identity(2));
    FullGaussFactors full = full_decompose(l, n, 2, Sign::minus);
    CHECK(full.diag[0] == CoeffMat::identity(2 * n));
  }
}

TEST_CASE("full decomposition recovers the building factors") {
  std::mt19937_64 rng(7);
  for (Sign sign : {Sign::plus, Sign::minus})
    for (int n = 2; n <= 3; ++n)
      for (int d = 1; d <= 2; ++d) {
        Built b = random_ldu(rng, n, d, 3, sign);
        FullGaussFactors it = full_decompose(b.l, n, d, sign);
        FullGaussFactors dl = direct_ldu(b.l, n, d, sign);
        CHECK(agree(b.lower, it.lower));
        CHECK(agree(b.diag, it.diag));
        CHECK(agree(b.upper, it.upper));
        CHECK(agree(b.diag, dl.diag));
        CHECK(agree(b.lower, dl.lower));
        CHECK(check_full(b.l, n, d, sign).verdict == Verdict::pass);
        GaussFactors g = partial_decompose(b.l, n, d, sign);
        CHECK(check_recompose(b.l, g).verdict == Verdict::pass);
        CHECK(verify_uniqueness(b.l, g).verdict == Verdict::pass);
        CHECK(check_l1l2_display(b.l, g).verdict == Verdict::pass);
        for (const auto& r : check_antipode(b.l, n, d, sign)) CHECK_MESSAGE(r.verdict == Verdict::pass, r.check_id);
      }
}

TEST_CASE("perturbed factors are rejected") {
  std::mt19937_64 rng(11);
  Built b = random_ldu(rng, 3, 2, 3, Sign::plus);
  GaussFactors g = partial_decompose(b.l, 3, 2, Sign::plus);
  GaussFactors bad = g;
  bad.f[1](0, 0) += cst(1);
  CHECK(verify_uniqueness(b.l, bad).verdict == Verdict::fail);
  CHECK(check_recompose(b.l, bad).verdict == Verdict::fail);
  bad = g;
  bad.k[2](1, 0) += cst(1);
  auto rep = verify_uniqueness(b.l, bad);
  REQUIRE(rep.verdict == Verdict::fail);
  CHECK(rep.first_mismatch->expected.rfind("k:", 0) == 0);
}

TEST_CASE("singular leading block") {
  CoeffMat m(2, 2);
  m(0, 1) = cst(1);
  m(1, 0) = cst(1);
  CHECK_THROWS_AS(partial_decompose(constant_series(m), 2, 1, Sign::plus), Error);
  try {
    partial_decompose(constant_series(m), 2, 1, Sign::plus);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular_leading_term);
  }
  CHECK_THROWS_AS(partial_decompose(constant_series(m), 1, 2, Sign::plus), Error);
}

TEST_CASE("rational partial decomposition matches the series one") {
  // L = [[1, z], [z, 1 + 2z]] over Q(q)(a)(z).
  RatFuncZ z = RatFuncZ::variable();
  RatMat l(2, 2);
  l(0, 0) = RatFuncZ(cst(1));
  l(0, 1) = z;
  l(1, 0) = z;
  l(1, 1) = RatFuncZ(cst(1)) + z * RatFuncZ(cst(2));
  RationalGauss g = partial_decompose(l, 2, 1);
  CHECK(g.k(0, 0) == RatFuncZ(cst(1)) + z * RatFuncZ(cst(2)) - z * z);
  CHECK(g.e(0, 0) == z);
}
