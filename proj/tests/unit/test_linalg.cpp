#include <doctest.h>

#include <random>

#include "core/inverse.hpp"
#include "core/scalar.hpp"

using namespace qgauss;

namespace {

using MQ = Mat<BigRational>;
using MS = Mat<ScalarQ>;

ScalarQ q() { return ScalarQ::variable(); }

MQ random_q(std::mt19937_64& rng, int r, int c) {
  std::uniform_int_distribution<long> coef(-3, 3);
  MQ m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = BigRational(coef(rng));
  return m;
}

}  // namespace

TEST_CASE("embedding identity and permutation") {
  for (int n = 1; n <= 3; ++n) {
    auto e = embed(MQ::identity(n), LegSpace::square({n, n}), {0});
    CHECK(e == MQ::identity(n * n));
  }
  // Swap on C^2 (x) C^2: rows (1,3,2,4) of the identity, 1-based.
  auto p = embed(permutation<BigRational>(2, 2), LegSpace::square({2, 2}), {0, 1});
  int rows[4] = {0, 2, 1, 3};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(p(i, j) == (j == rows[i] ? 1 : 0));
}

TEST_CASE("embedding on disjoint legs and composition") {
  std::mt19937_64 rng(1);
  const int n = 2;
  LegSpace s = LegSpace::square({n, n, n});
  for (int t = 0; t < 5; ++t) {
    MQ a = random_q(rng, n, n), b = random_q(rng, n, n);
    CHECK(embed(kron(a, b), s, {0, 2}) == embed(a, s, {0}) * embed(b, s, {2}));
    CHECK(embed(a * b, s, {1}) == embed(a, s, {1}) * embed(b, s, {1}));
    // Reversed leg order is the swapped operator.
    CHECK(embed(kron(a, b), s, {2, 0}) == embed(a, s, {2}) * embed(b, s, {0}));
  }
}

TEST_CASE("permutation properties") {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 3; ++n) {
    MQ p = permutation<BigRational>(n, n);
    CHECK(p * p == MQ::identity(n * n));
    MQ a = random_q(rng, n, n), b = random_q(rng, n, n);
    CHECK(p * kron(a, b) * p == kron(b, a));
  }
}

TEST_CASE("rectangular embedding") {
  // A 1x2 row on the middle leg of [2, (1<-2), 2].
  MQ row(1, 2);
  row(0, 0) = BigRational(3);
  row(0, 1) = BigRational(5);
  LegSpace s{{2, 1, 2}, {2, 2, 2}};
  MQ e = embed(row, s, {1});
  CHECK(e.rows() == 4);
  CHECK(e.cols() == 8);
  MQ expect = kron(kron(MQ::identity(2), row), MQ::identity(2));
  CHECK(e == expect);
  CHECK_THROWS_AS(embed(row, LegSpace::square({2, 2}), {0}), Error);
}

TEST_CASE("exact inverse") {
  CHECK(exact_inverse(MS::identity(3)) == MS::identity(3));
  MS d(2, 2);
  d(0, 0) = q();
  d(1, 1) = q() + 1;
  MS di = exact_inverse(d);
  CHECK(di(0, 0) == q().inverse());
  CHECK(di(1, 1) == (q() + 1).inverse());
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int t = 0; t < 10; ++t) {
    MS m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = ScalarQ(coef(rng)) * q() + ScalarQ(coef(rng)) / (q() + coef(rng) + 5);
    try {
      MS inv = exact_inverse(m);
      CHECK(m * inv == MS::identity(3));
      CHECK(inv * m == MS::identity(3));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::singular_matrix);
    }
  }
  MS sing(2, 2);
  sing(0, 0) = q();
  sing(0, 1) = q();
  sing(1, 0) = ScalarQ(1);
  sing(1, 1) = ScalarQ(1);
  CHECK_THROWS_AS(exact_inverse(sing), Error);
  MQ r = random_q(rng, 3, 3);
  r(0, 0) = BigRational(7);
  r(1, 1) = BigRational(11);
  r(2, 2) = BigRational(13);
  CHECK(r * exact_inverse(r) == MQ::identity(3));
}

TEST_CASE("series inverse") {
  using S = TruncSeries<MQ>;
  S id(0, 4, true, false, MQ(2, 2));
  id[0] = MQ::identity(2);
  auto inv = series_inverse(id);
  CHECK(inv[0] == MQ::identity(2));
  for (int k = 1; k <= 4; ++k) CHECK(inv[k].is_zero());
  // (I + zA)^{-1} = I - zA + z^2 A^2 - ...
  std::mt19937_64 rng(8);
  MQ a = random_q(rng, 2, 2);
  S m(0, 4, true, true, MQ(2, 2));
  m[0] = MQ::identity(2);
  m[1] = a;
  auto mi = series_inverse(m);
  MQ pw = MQ::identity(2);
  for (int k = 0; k <= 4; ++k) {
    CHECK(mi[k] == (k % 2 ? -pw : pw));
    pw = pw * a;
  }
  auto prod = m * mi;
  for (int k = prod.lo(); k <= prod.hi(); ++k) CHECK(prod[k] == (k == 0 ? MQ::identity(2) : MQ(2, 2)));
  // around infinity: I + z^{-1} A
  S minus(-4, 0, false, true, MQ(2, 2));
  minus[0] = MQ::identity(2);
  minus[-1] = a;
  auto ni = series_inverse(minus);
  CHECK(ni.hi() == 0);
  CHECK(ni.lo() == -4);
  CHECK(ni[-2] == a * a);
  S two(-2, 2, false, false, MQ(2, 2));
  CHECK_THROWS_AS(series_inverse(two), Error);
  S sing(0, 2, true, false, MQ(2, 2));
  CHECK_THROWS_AS(series_inverse(sing), Error);
  try {
    series_inverse(sing);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular_leading_term);
  }
}
