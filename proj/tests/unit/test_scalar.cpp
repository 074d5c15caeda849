#include <doctest.h>

#include <random>
#include <vector>

#include "core/scalar.hpp"

using namespace qgauss;

namespace {

ScalarQ q() { return ScalarQ::variable(); }

// Plain integer convolution, independent of Polynomial.
std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ScalarQ from_ints(const std::vector<long>& c) {
  std::vector<BigRational> v(c.begin(), c.end());
  return ScalarQ(ScalarQ::Poly(v));
}

ScalarQ random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, 2);
  auto poly = [&] {
    std::vector<BigRational> c(deg(rng) + 1);
    for (auto& x : c) x = BigRational(coef(rng));
    return ScalarQ::Poly(c);
  };
  ScalarQ::Poly d;
  while (d.is_zero()) d = poly();
  return ScalarQ(poly(), d);
}

}  // namespace

TEST_CASE("big rational parse and canonical form") {
  CHECK(BigRational::parse("6/4") == BigRational(3, 2));
  CHECK(BigRational::parse("-2/-4").to_string() == "1/2");
  CHECK_THROWS_AS(BigRational::parse("1/0"), Error);
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), Error);
}

TEST_CASE("additive identity and self division") {
  ScalarQ x = q() - q().inverse();
  CHECK(x.to_string() == "(q^2 - 1)/q");
  CHECK(x + ScalarQ(0) == x);
  CHECK(x / x == ScalarQ(1));
}

TEST_CASE("product agrees with convolution oracle") {
  CHECK((q() - 1) * (q() + 1) == from_ints(convolve({-1, 1}, {1, 1})));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> a(1 + trial % 4), b(1 + trial % 3);
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    a.back() = a.back() ? a.back() : 1;
    b.back() = b.back() ? b.back() : 1;
    CHECK(from_ints(a) * from_ints(b) == from_ints(convolve(a, b)));
  }
}

TEST_CASE("division by zero is degenerate") {
  try {
    (void)(q() / ScalarQ(0));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_scalar);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    ScalarQ a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == ScalarQ(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == ScalarQ(1));
  }
}

TEST_CASE("canonical form is idempotent") {
  ScalarQ::Poly n(std::vector<BigRational>{BigRational(-2), BigRational(0), BigRational(2)});
  ScalarQ::Poly d(std::vector<BigRational>{BigRational(-4), BigRational(4)});
  ScalarQ x(n, d);  // 2(q^2-1) / 4(q-1) = (q+1)/2
  CHECK(x.den().is_one());
  CHECK(x == ScalarQ(x.num(), x.den()));
  CHECK(x.to_string() == "1/2*q + 1/2");
}

TEST_CASE("substitution") {
  using U = RatFuncU;
  U z = U::variable();
  ScalarQ one(1);
  auto lift = [](const ScalarQ& s) { return s; };
  CHECK(z.substitute(one, lift) == ScalarQ(1));
  U f = (z - 1) / (z * U(q().inverse()) - U(q()));
  CHECK(f.substitute(one, lift).is_zero());
  auto liftu = [](const ScalarQ& s) { return U(s); };
  CHECK((z * z).substitute(z, liftu) == z * z);
  U g = U(1) / (z - 1);
  CHECK_THROWS_AS(g.substitute(one, lift), Error);
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    ScalarQ x = random_scalar(rng);
    CHECK(parse_scalar(x.to_string()) == x);
  }
  Coeff a = Coeff::variable();
  Coeff c = (a * a - Coeff(q())) / (a + 2);
  CHECK(parse_coeff(c.to_string()) == c);
  Coeff d = Coeff(q() - q().inverse()) * a / (a - Coeff(q() * q()));
  CHECK(parse_coeff(d.to_string()) == d);
  CHECK(parse_scalar("q^-2") == (q() * q()).inverse());
  CHECK_THROWS_AS(parse_scalar("q +"), Error);
  Specialization spec{BigRational(3, 2), std::nullopt};
  CHECK(parse_scalar("q^2", spec) == ScalarQ(ScalarQ::Poly(BigRational(9, 4))));
}
