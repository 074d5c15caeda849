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

#include "rmatrix.hpp"

#include "inverse.hpp"

namespace qgauss {
namespace {

using RFz = RationalFunction<ScalarQ, VarZ>;
using RFzw = RationalFunction<RFz, VarW>;

RatFuncU lift_u(const ScalarQ& s) { return RatFuncU(s); }

template <class T, class Lift>
Mat<T> substitute(const Mat<RatFuncU>& m, const T& value, Lift lift) {
  return m.map([&](const RatFuncU& f) { return f.is_zero() ? T() : f.template substitute<T>(value, lift); });
}

int idx(int n, int i, int j) { return i * n + j; }

}  // namespace

const char* convention_name(Convention c) { return c == Convention::literal ? "literal" : "corrected"; }

RMatrix build_r(int n, Convention convention, const ScalarQ& q) {
  if (n < 1) fail(ErrorCode::shape_error, "n must be positive");
  RatFuncU u = RatFuncU::variable();
  RatFuncU qu(q), qinv(q.inverse());
  RatFuncU den = u * qinv - qu;
  RatFuncU diag = (u - RatFuncU(1)) / den;
  RatFuncU lower = (qinv - qu) / den;
  RatFuncU upper = u * (qinv - qu) / den;
  Mat<RatFuncU> m(n * n, n * n);
  for (int i = 0; i < n; ++i) m(idx(n, i, i), idx(n, i, i)) = RatFuncU(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // E_ii (x) E_jj
      m(idx(n, i, j), idx(n, i, j)) = diag;
      if (i > j) {
        // E_ij (x) E_ji, or E_ij (x) E_ij as printed in the literal reading
        if (convention == Convention::corrected) m(idx(n, i, j), idx(n, j, i)) += lower;
        else m(idx(n, i, i), idx(n, j, j)) += lower;
      } else {
        m(idx(n, i, j), idx(n, j, i)) += upper;
      }
    }
  return {n, convention, q, m};
}

ClearedR clear_denominator(const RMatrix& r) {
  using Poly = RatFuncU::Poly;
  Poly l(ScalarQ(1));
  const auto& v = r.value;
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j) {
      const Poly& d = v(i, j).den();
      if (d.is_constant()) continue;
      l = l * Poly::exact_div(d, gcd(l, d));
    }
  ClearedR c;
  int deg = l.degree();
  Mat<Poly> nums(v.rows(), v.cols());
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j) {
      if (v(i, j).is_zero()) continue;
      nums(i, j) = v(i, j).num() * Poly::exact_div(l, v(i, j).den());
      deg = std::max(deg, nums(i, j).degree());
    }
  c.degree = deg;
  c.num.assign(deg + 1, Mat<ScalarQ>(v.rows(), v.cols()));
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j)
      for (int k = 0; k <= nums(i, j).degree(); ++k) c.num[k](i, j) = nums(i, j)[k];
  c.den.assign(deg + 1, ScalarQ());
  for (int k = 0; k <= l.degree(); ++k) c.den[k] = l[k];
  return c;
}

VerificationReport check_ybe(const RMatrix& r) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "rmatrix.ybe";
  rep.paper_anchor = "R12(z) R13(zw) R23(w) = R23(w) R13(zw) R12(z)";
  rep.note = std::string("convention ") + convention_name(r.convention) + "; z, w independent formal variables";
  auto lift = [](const ScalarQ& s) { return RFzw(RFz(s)); };
  RFzw z(RFz::variable()), w = RFzw::variable();
  const int n = r.n;
  LegSpace s = LegSpace::square({n, n, n});
  auto r12 = embed(substitute(r.value, z, lift), s, {0, 1});
  auto r13 = embed(substitute(r.value, z * w, lift), s, {0, 2});
  auto r23 = embed(substitute(r.value, w, lift), s, {1, 2});
  auto lhs = r12 * r13 * r23;
  auto rhs = r23 * r13 * r12;
  rep.first_mismatch = mat_diff(lhs, rhs);
  rep.verdict = rep.first_mismatch ? Verdict::fail : Verdict::pass;
  rep.diagnostic = r.convention == Convention::literal;
  rep.wall_time = sw.seconds();
  return rep;
}

VerificationReport check_unitarity(const RMatrix& r) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "rmatrix.unitarity";
  rep.paper_anchor = "(P R(u) P)^{-1} = R(1/u)";
  rep.note = std::string("convention ") + convention_name(r.convention);
  const int n = r.n;
  auto p = permutation<RatFuncU>(n, n);
  auto r21inv = exact_inverse(p * r.value * p);
  RatFuncU u = RatFuncU::variable();
  auto rinv_arg = substitute(r.value, RatFuncU(1) / u, lift_u);
  rep.first_mismatch = mat_diff(rinv_arg, r21inv);
  rep.verdict = rep.first_mismatch ? Verdict::fail : Verdict::pass;
  rep.diagnostic = r.convention == Convention::literal;
  rep.wall_time = sw.seconds();
  return rep;
}

VerificationReport check_r_at_one(const RMatrix& r) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "rmatrix.r-at-one";
  rep.paper_anchor = "R(1) = P";
  auto at_one = r.value.map([](const RatFuncU& f) { return f.evaluate(ScalarQ(1)); });
  rep.first_mismatch = mat_diff(permutation<ScalarQ>(r.n, r.n), at_one);
  rep.verdict = rep.first_mismatch ? Verdict::fail : Verdict::pass;
  rep.diagnostic = r.convention == Convention::literal;
  rep.wall_time = sw.seconds();
  return rep;
}

RMatrix restrict_rbar(const RMatrix& r) {
  if (r.n < 2) fail(ErrorCode::shape_error, "restriction needs n >= 2");
  const int n = r.n, m = n - 1;
  Mat<RatFuncU> v(m * m, m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) v(idx(m, a, b), idx(m, c, d)) = r.value(idx(n, a, b), idx(n, c, d));
  return {m, r.convention, r.q, v};
}

VerificationReport check_restriction(const RMatrix& r) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "rmatrix.restriction";
  rep.paper_anchor = "R restricted to C^{n-1} (x) C^{n-1} equals the gl(n-1) R-matrix";
  rep.first_mismatch = mat_diff(build_r(r.n - 1, r.convention, r.q).value, restrict_rbar(r).value);
  rep.verdict = rep.first_mismatch ? Verdict::fail : Verdict::pass;
  rep.wall_time = sw.seconds();
  return rep;
}

RBlockForm block_form(const RMatrix& r) {
  if (r.n < 2) fail(ErrorCode::shape_error, "block form needs n >= 2");
  const int n = r.n, last = n - 1;
  RBlockForm b;
  b.rbar = restrict_rbar(r);
  const int dim = n * n;
  b.a_block = b.b_block = b.c_block = b.d_block = Mat<RatFuncU>(dim, dim);
  for (int i = 0; i < last; ++i) {
    b.a_block(idx(n, i, last), idx(n, i, last)) = RatFuncU(1);     // E_ii (x) E_nn
    b.b_block(idx(n, i, last), idx(n, last, i)) = RatFuncU(1);     // E_in (x) E_ni
    b.c_block(idx(n, last, i), idx(n, i, last)) = RatFuncU(1);     // E_ni (x) E_in
    b.d_block(idx(n, last, i), idx(n, last, i)) = RatFuncU(1);     // E_nn (x) E_ii
  }
  RatFuncU u = RatFuncU::variable();
  RatFuncU q(r.q), qinv(r.q.inverse());
  RatFuncU den = u * qinv - q;
  b.prefactors = {(u - RatFuncU(1)) / den, -u * (q - qinv) / den, -(q - qinv) / den, (u - RatFuncU(1)) / den};
  return b;
}

Mat<RatFuncU> reassemble(const RBlockForm& b) {
  const int m = b.rbar.n, n = m + 1;
  Mat<RatFuncU> v = b.a_block.scaled(b.prefactors[0]) + b.b_block.scaled(b.prefactors[1]) +
                    b.c_block.scaled(b.prefactors[2]) + b.d_block.scaled(b.prefactors[3]);
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c)
      for (int d = 0; d < m; ++d)
        for (int e = 0; e < m; ++e) v(idx(n, a, c), idx(n, d, e)) = b.rbar.value(idx(m, a, c), idx(m, d, e));
  v(idx(n, m, m), idx(n, m, m)) = RatFuncU(1);
  return v;
}

VerificationReport check_block_form(const RMatrix& r) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "rmatrix.block-form";
  rep.paper_anchor =
      "R(z/w) = Rbar(z/w) + (z-w)/(zq^-1-wq) (A + D) - z(q-q^-1)/(zq^-1-wq) B - w(q-q^-1)/(zq^-1-wq) C + E_nn(x)E_nn";
  rep.note = std::string("convention ") + convention_name(r.convention);
  rep.first_mismatch = mat_diff(r.value, reassemble(block_form(r)));
  rep.verdict = rep.first_mismatch ? Verdict::fail : Verdict::pass;
  rep.diagnostic = r.convention == Convention::literal;
  rep.wall_time = sw.seconds();
  return rep;
}

}  // namespace qgauss
