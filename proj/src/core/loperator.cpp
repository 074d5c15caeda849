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

#include "loperator.hpp"

#include "inverse.hpp"

namespace qgauss {
namespace {

using PolyZ = RatFuncZ::Poly;

MatSeries embed_series(const MatSeries& s, const LegSpace& space, const std::vector<int>& legs) {
  return s.map([&](const CoeffMat& m) { return embed(m, space, legs); });
}

MatSeries expand_matrix(const RatMat& l, Direction dir, int lo, int hi) {
  MatSeries out(lo, hi, dir == Direction::around_zero, dir == Direction::around_infinity,
                CoeffMat(l.rows(), l.cols()));
  for (int k = lo; k <= hi; ++k) out[k] = CoeffMat(l.rows(), l.cols());
  for (int i = 0; i < l.rows(); ++i)
    for (int j = 0; j < l.cols(); ++j) {
      if (l(i, j).is_zero()) continue;
      auto s = expand(l(i, j), dir, lo, hi, Regularity::power_series);
      for (int k = lo; k <= hi; ++k) out[k](i, j) = s[k];
    }
  return out;
}

CoeffMat quantum_block(const CoeffMat& m, int qdim, int i, int j) { return aux_block(m, qdim, i, j, 1, 1); }

bool scalar_multiple(const CoeffMat& m, Coeff* c) {
  *c = m(0, 0);
  return m == CoeffMat::identity(m.rows()).scaled(*c);
}

VerificationReport exact_report(std::string id, std::string anchor, std::optional<Mismatch> mm, long compared,
                                const Stopwatch& sw, std::string note = {}) {
  VerificationReport r;
  r.check_id = std::move(id);
  r.paper_anchor = std::move(anchor);
  r.first_mismatch = std::move(mm);
  r.verdict = r.first_mismatch ? Verdict::fail : Verdict::pass;
  r.compared = compared;
  r.note = std::move(note);
  r.wall_time = sw.seconds();
  return r;
}

std::optional<Mismatch> pair_diff(const LPair& x, const LPair& y, long* compared) {
  long c1 = 0, c2 = 0;
  auto mm = series_diff(x.plus, y.plus, &c1);
  if (mm) mm->indices.insert(mm->indices.begin(), {"plus", 1});
  if (!mm) {
    mm = series_diff(x.minus, y.minus, &c2);
    if (mm) mm->indices.insert(mm->indices.begin(), {"minus", 1});
  }
  *compared = c1 + c2;
  return mm;
}

}  // namespace

RatMat evaluation_matrix(const RMatrix& r, const Coeff& a) {
  if (a.is_zero()) fail(ErrorCode::invalid_config, "evaluation point must be nonzero");
  RatFuncZ u = RatFuncZ::variable() * lift_z(a.inverse());
  auto lift = [](const ScalarQ& s) { return lift_z(s); };
  return r.value.map([&](const RatFuncU& f) { return f.is_zero() ? RatFuncZ() : f.substitute<RatFuncZ>(u, lift); });
}

LPair pair_from_rational(const RatMat& l, int n, int qdim, int order) {
  if (order < 0) fail(ErrorCode::invalid_config, "truncation order must be nonnegative");
  if (l.rows() != n * qdim || l.cols() != n * qdim) fail(ErrorCode::shape_error, "operator matrix does not match n");
  LPair lp;
  lp.n = n;
  lp.qdim = qdim;
  lp.order = order;
  lp.plus = expand_matrix(l, Direction::around_zero, 0, order);
  lp.minus = expand_matrix(l, Direction::around_infinity, -order, 0);
  lp.rational = l;
  // Fix a constant normalization from the last diagonal zero-mode product.
  CoeffMat prod = quantum_block(lp.plus[0], qdim, n - 1, n - 1) * quantum_block(lp.minus[0], qdim, n - 1, n - 1);
  Coeff c;
  if (!scalar_multiple(prod, &c) || c.is_zero())
    fail(ErrorCode::normalization_failure, "diagonal zero-mode product is not a nonzero scalar");
  if (!(c == Coeff(ScalarQ(1)))) {
    lp.rho = c.inverse();
    lp.plus = lp.plus.map([&](const CoeffMat& m) { return m.scaled(lp.rho); });
    lp.rational.reset();
  }
  ZeroModePattern pat = zero_mode_pattern(lp);
  if (!pat.diagonal_inverse)
    fail(ErrorCode::normalization_failure, "no scalar normalization makes every diagonal zero-mode product 1");
  lp.transposed = !pat.literal && pat.transposed;
  return lp;
}

LPair build_evaluation_pair(const EvalParams& p, const RMatrix& r) {
  if (p.n != r.n) fail(ErrorCode::shape_error, "evaluation size does not match the R-matrix");
  if (p.order < 2) fail(ErrorCode::invalid_config, "truncation order must be at least 2");
  return pair_from_rational(evaluation_matrix(r, p.a), r.n, r.n, p.order);
}

LPair trivial_pair(int n, int order) {
  RatMat id = RatMat::identity(n);
  return pair_from_rational(id, n, 1, order);
}

LPair coproduct_pair(const LPair& first, const LPair& second) {
  if (first.n != second.n) fail(ErrorCode::shape_error, "coproduct needs equal n");
  const int n = first.n, d1 = first.qdim, d2 = second.qdim;
  LegSpace s = LegSpace::square({n, d1, d2});
  LPair out;
  out.n = n;
  out.qdim = d1 * d2;
  out.order = std::min(first.order, second.order);
  out.plus = mat_mul(embed_series(first.plus, s, {0, 1}), embed_series(second.plus, s, {0, 2}));
  out.minus = mat_mul(embed_series(first.minus, s, {0, 1}), embed_series(second.minus, s, {0, 2}));
  out.rho = first.rho * second.rho;
  if (first.rational && second.rational)
    out.rational = embed(*first.rational, s, {0, 1}) * embed(*second.rational, s, {0, 2});
  ZeroModePattern pat = zero_mode_pattern(out);
  out.transposed = !pat.literal && pat.transposed;
  return out;
}

ZeroModePattern zero_mode_pattern(const LPair& lp) {
  const CoeffMat* p0 = lp.plus.known(0);
  const CoeffMat* m0 = lp.minus.known(0);
  if (!p0 || !m0) fail(ErrorCode::window_underflow, "zero modes not determined");
  ZeroModePattern pat;
  pat.literal = pat.transposed = pat.diagonal_inverse = true;
  const int d = lp.qdim;
  for (int i = 0; i < lp.n; ++i)
    for (int j = 0; j < lp.n; ++j) {
      bool pz = quantum_block(*p0, d, i, j).is_zero(), mz = quantum_block(*m0, d, i, j).is_zero();
      if (j > i && !(pz && quantum_block(*m0, d, j, i).is_zero())) pat.literal = false;
      if (j > i && !(quantum_block(*p0, d, j, i).is_zero() && mz)) pat.transposed = false;
    }
  for (int i = 0; i < lp.n; ++i)
    if (!(quantum_block(*p0, d, i, i) * quantum_block(*m0, d, i, i) == CoeffMat::identity(d)))
      pat.diagonal_inverse = false;
  return pat;
}

MatSeries leg_one(const MatSeries& l, int n, int qdim) {
  return embed_series(l, LegSpace::square({n, n, qdim}), {0, 2});
}
MatSeries leg_two(const MatSeries& l, int n, int qdim) {
  return embed_series(l, LegSpace::square({n, n, qdim}), {1, 2});
}

WordFactor cleared_r(const RMatrix& r, int qdim, bool swapped) {
  ClearedR c = clear_denominator(r);
  LegSpace s = LegSpace::square({r.n, r.n, qdim});
  std::vector<Monomial2<CoeffMat>> poly;
  for (int k = 0; k <= c.degree; ++k) {
    if (c.num[k].is_zero()) continue;
    poly.push_back({embed(lift(c.num[k]), s, swapped ? std::vector<int>{1, 0} : std::vector<int>{0, 1}), k,
                    c.degree - k});
  }
  return poly_factor(std::move(poly));
}

ReportList check_defining_relations(const LPair& lp, const RMatrix& r, const std::string& prefix) {
  if (lp.n != r.n) fail(ErrorCode::shape_error, "L-operator and R-matrix sizes differ");
  const int n = lp.n, d = lp.qdim, dim = n * n * d;
  const Rect rect = Rect::square(-lp.order, lp.order);
  WordFactor rr = cleared_r(r, d, false);
  auto l1 = [&](const MatSeries& s) { return in_z(leg_one(s, n, d)); };
  auto l2 = [&](const MatSeries& s) { return in_w(leg_two(s, n, d)); };
  ReportList out;
  out.push_back(compare_words(prefix + ".plus", "R(z/w) L+_1(z) L+_2(w) = L+_2(w) L+_1(z) R(z/w)",
                              {rr, l1(lp.plus), l2(lp.plus)}, {l2(lp.plus), l1(lp.plus), rr}, dim, rect));
  out.push_back(compare_words(prefix + ".minus", "R(z/w) L-_1(z) L-_2(w) = L-_2(w) L-_1(z) R(z/w)",
                              {rr, l1(lp.minus), l2(lp.minus)}, {l2(lp.minus), l1(lp.minus), rr}, dim, rect));
  out.push_back(compare_words(prefix + ".mixed", "R(z/w) L+_1(z) L-_2(w) = L-_2(w) L+_1(z) R(z/w) at c = 0",
                              {rr, l1(lp.plus), l2(lp.minus)}, {l2(lp.minus), l1(lp.plus), rr}, dim, rect));
  for (auto& rep : out) rep.note = "denominator of R cleared; c = 0";
  {
    Stopwatch sw;
    ZeroModePattern pat = zero_mode_pattern(lp);
    std::optional<Mismatch> mm;
    if (!pat.diagonal_inverse) mm = Mismatch{{}, "l+_ii[0] l-_ii[0] = 1", "violated"};
    else if (!pat.literal && !pat.transposed) mm = Mismatch{{}, "opposite triangular zero modes", "neither pattern"};
    std::string note = pat.literal ? "l+[0] lower, l-[0] upper block triangular"
                                   : (pat.transposed ? "triangular in the transposed pattern" : "not triangular");
    out.push_back(exact_report(prefix + ".zero-modes",
                               "l+_ij[0] = l-_ji[0] = 0 for j > i; l+_ii[0] l-_ii[0] = 1", mm, n * n, sw, note));
  }
  if (lp.rational) out.push_back(check_coherence(lp, prefix + ".coherence"));
  return out;
}

ReportList check_inverse_relations(const LPair& lp, const RMatrix& r) {
  if (lp.n != r.n) fail(ErrorCode::shape_error, "L-operator and R-matrix sizes differ");
  const int n = lp.n, d = lp.qdim, dim = n * n * d;
  const Rect rect = Rect::square(-lp.order, lp.order);
  WordFactor r21 = cleared_r(r, d, true), r12 = cleared_r(r, d, false);
  const MatSeries* series[2] = {&lp.plus, &lp.minus};
  MatSeries inv[2] = {series_inverse(lp.plus, Direction::around_zero),
                      series_inverse(lp.minus, Direction::around_infinity)};
  // Leg 1 carries w, leg 2 carries z throughout.
  auto l1 = [&](int s) { return in_w(leg_one(*series[s], n, d)); };
  auto l2 = [&](int s) { return in_z(leg_two(*series[s], n, d)); };
  auto l1i = [&](int s) { return in_w(leg_one(inv[s], n, d)); };
  auto l2i = [&](int s) { return in_z(leg_two(inv[s], n, d)); };
  const int P = 0, M = 1;
  const char* sgn[2] = {"plus", "minus"};
  const char* pm[2] = {"+", "-"};
  ReportList out;
  for (int s : {P, M}) {
    std::string t = pm[s];
    out.push_back(compare_words(std::string("inverse.1.") + sgn[s],
                                "L" + t + "_1(w)^-1 R21(z/w) L" + t + "_2(z) = L" + t + "_2(z) R21(z/w) L" + t + "_1(w)^-1",
                                {l1i(s), r21, l2(s)}, {l2(s), r21, l1i(s)}, dim, rect));
  }
  out.push_back(compare_words("inverse.2", "L-_1(w)^-1 R21(z/w) L+_2(z) = L+_2(z) R21(z/w) L-_1(w)^-1",
                              {l1i(M), r21, l2(P)}, {l2(P), r21, l1i(M)}, dim, rect));
  out.push_back(compare_words("inverse.3", "R21(z/w) L-_2(z) L+_1(w) = L+_1(w) L-_2(z) R21(z/w)",
                              {r21, l2(M), l1(P)}, {l1(P), l2(M), r21}, dim, rect));
  out.push_back(compare_words("inverse.4", "L+_1(w)^-1 R21(z/w) L-_2(z) = L-_2(z) R21(z/w) L+_1(w)^-1",
                              {l1i(P), r21, l2(M)}, {l2(M), r21, l1i(P)}, dim, rect));
  {
    auto rep = compare_words("inverse.4.literal", "L+_1(w)^-1 R21(z/w) L-_2(z) = L-_2(z) R21(z/w) L+_1(w)",
                             {l1i(P), r21, l2(M)}, {l2(M), r21, l1(P)}, dim, rect);
    rep.diagnostic = true;
    rep.note = "uninverted factor on the right; kept for reference";
    out.push_back(rep);
  }
  for (int s : {P, M}) {
    std::string t = pm[s];
    out.push_back(compare_words(std::string("inverse.5.") + sgn[s],
                                "L" + t + "_2(z)^-1 L" + t + "_1(w)^-1 R21(z/w) = R21(z/w) L" + t + "_1(w)^-1 L" + t +
                                    "_2(z)^-1",
                                {l2i(s), l1i(s), r21}, {r21, l1i(s), l2i(s)}, dim, rect));
    auto rep = compare_words(std::string("inverse.5.literal.") + sgn[s],
                             "L" + t + "_2(z)^-1 L" + t + "_1(w)^-1 R(z/w) = R21(z/w) L" + t + "_1(w)^-1 L" + t +
                                 "_2(z)^-1",
                             {l2i(s), l1i(s), r12}, {r21, l1i(s), l2i(s)}, dim, rect);
    rep.diagnostic = true;
    rep.note = "R12 on the left; kept for reference";
    out.push_back(rep);
  }
  out.push_back(compare_words("inverse.6", "L+_2(z)^-1 L-_1(w)^-1 R21(z/w) = R21(z/w) L-_1(w)^-1 L+_2(z)^-1",
                              {l2i(P), l1i(M), r21}, {r21, l1i(M), l2i(P)}, dim, rect));
  for (auto& rep : out)
    if (rep.note.empty()) rep.note = "denominator of R cleared; c = 0";
  return out;
}

VerificationReport check_coherence(const LPair& lp, const std::string& id) {
  Stopwatch sw;
  if (!lp.rational) fail(ErrorCode::invalid_config, "no rational object attached");
  const RatMat& l = *lp.rational;
  PolyZ den(Coeff(ScalarQ(1)));
  for (int i = 0; i < l.rows(); ++i)
    for (int j = 0; j < l.cols(); ++j) {
      const PolyZ& d = l(i, j).den();
      if (!d.is_constant()) den = den * PolyZ::exact_div(d, gcd(den, d));
    }
  int top = den.degree();
  std::vector<PolyZ> nums(static_cast<std::size_t>(l.rows()) * l.cols());
  for (int i = 0; i < l.rows(); ++i)
    for (int j = 0; j < l.cols(); ++j) {
      if (l(i, j).is_zero()) continue;
      PolyZ& p = nums[static_cast<std::size_t>(i) * l.cols() + j];
      p = l(i, j).num() * PolyZ::exact_div(den, l(i, j).den());
      top = std::max(top, p.degree());
    }
  const int dim = l.rows();
  std::vector<CoeffMat> num_c(top + 1, CoeffMat(dim, dim)), den_c(top + 1, CoeffMat(dim, dim));
  for (int k = 0; k <= top; ++k) {
    den_c[k] = CoeffMat::identity(dim).scaled(den[k]);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) num_c[k](i, j) = nums[static_cast<std::size_t>(i) * dim + j][k] * lp.rho;
  }
  CoeffMat zero(dim, dim);
  MatSeries dser = MatSeries::laurent_polynomial(0, den_c, zero);
  MatSeries nser = MatSeries::laurent_polynomial(0, num_c, zero);
  long c1 = 0, c2 = 0;
  auto mm = series_diff(nser, mat_mul(dser, lp.plus), &c1);
  if (mm) mm->indices.insert(mm->indices.begin(), {"plus", 1});
  // minus carries no rho.
  MatSeries nser_m = lp.rho == Coeff(ScalarQ(1)) ? nser : nser.map([&](const CoeffMat& m) { return m.scaled(lp.rho.inverse()); });
  if (!mm) {
    mm = series_diff(nser_m, mat_mul(dser, lp.minus), &c2);
    if (mm) mm->indices.insert(mm->indices.begin(), {"minus", 1});
  }
  return exact_report(id, "den(z) L+(z) and den(z) L-(z) equal the same polynomial numerator", mm, c1 + c2, sw,
                      "den degree " + std::to_string(den.degree()));
}

VerificationReport check_coassociativity(const LPair& a, const LPair& b, const LPair& c) {
  Stopwatch sw;
  LPair left = coproduct_pair(coproduct_pair(a, b), c);
  LPair right = coproduct_pair(a, coproduct_pair(b, c));
  long compared = 0;
  auto mm = pair_diff(left, right, &compared);
  return exact_report("hopf.coassociativity", "(Delta (x) id) Delta L = (id (x) Delta) Delta L", mm, compared, sw);
}

VerificationReport check_counit(const LPair& lp) {
  Stopwatch sw;
  LPair d = coproduct_pair(lp, trivial_pair(lp.n, lp.order));
  long compared = 0;
  auto mm = pair_diff(lp, d, &compared);
  return exact_report("hopf.trivial-factor", "Delta L with the trivial one-dimensional factor reproduces L", mm,
                      compared, sw);
}

}  // namespace qgauss
