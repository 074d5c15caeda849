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

#include "gauss.hpp"

namespace qgauss {
namespace {

MatSeries zero_series(int rows, int cols) { return constant_series(CoeffMat(rows, cols)); }
MatSeries identity_series(int dim) { return constant_series(CoeffMat::identity(dim)); }

MatSeries inverse_of(const MatSeries& s, Sign sign, const std::string& what) {
  try {
    return series_inverse(s, direction_of(sign));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::singular_leading_term || e.code() == ErrorCode::singular_matrix)
      fail(ErrorCode::singular_leading_term, what + " has a non-invertible leading coefficient");
    throw;
  }
}

MatSeries neg(const MatSeries& s) {
  return s.map([](const CoeffMat& m) { return -m; });
}

VerificationReport make_report(std::string id, std::string anchor, const std::optional<Mismatch>& mm, long compared,
                               const Stopwatch& sw, std::string note = {}) {
  VerificationReport r;
  r.check_id = std::move(id);
  r.paper_anchor = std::move(anchor);
  r.first_mismatch = mm;
  r.compared = compared;
  r.verdict = mm ? Verdict::fail : Verdict::pass;
  r.note = std::move(note);
  r.wall_time = sw.seconds();
  return r;
}

// Recursion for K X = B (left) or Y K = C (right), one coefficient at a time.
MatSeries solve(const MatSeries& kk, const MatSeries& b, Sign sign, bool left) {
  const int step = sign == Sign::plus ? 1 : -1;
  const int klead = sign == Sign::plus ? kk.lo() : kk.hi();
  const int blead = sign == Sign::plus ? b.lo() : b.hi();
  bool one_sided = sign == Sign::plus ? (kk.zero_below() && b.zero_below()) : (kk.zero_above() && b.zero_above());
  if (!one_sided) fail(ErrorCode::window_underflow, "solve needs series expanded in the same direction");
  CoeffMat k0inv;
  try {
    k0inv = exact_inverse(kk[klead]);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::singular_matrix) throw;
    fail(ErrorCode::singular_leading_term, "leading block is not invertible");
  }
  const int cap = std::max(kk.hi() - kk.lo(), b.hi() - b.lo());
  std::vector<CoeffMat> x;
  for (int t = 0; t <= cap; ++t) {
    const CoeffMat* bt = b.known(blead + step * t);
    if (!bt) break;
    CoeffMat acc = *bt;
    bool ok = true;
    for (int j = 1; j <= t; ++j) {
      const CoeffMat* kj = kk.known(klead + step * j);
      if (!kj) {
        ok = false;
        break;
      }
      if (kj->is_zero() || x[t - j].is_zero()) continue;
      acc -= left ? (*kj) * x[t - j] : x[t - j] * (*kj);
    }
    if (!ok) break;
    x.push_back(left ? k0inv * acc : acc * k0inv);
  }
  if (x.empty()) fail(ErrorCode::window_underflow, "no determined coefficients in solve");
  const int len = static_cast<int>(x.size()) - 1;
  const int base = blead - klead;
  int lo = sign == Sign::plus ? base : base - len;
  int hi = sign == Sign::plus ? base + len : base;
  MatSeries r(lo, hi, sign == Sign::plus, sign == Sign::minus, CoeffMat(x[0].rows(), x[0].cols()));
  for (int t = 0; t <= len; ++t) r[base + step * t] = x[t];
  return r;
}

}  // namespace

MatSeries GaussFactors::big_d() const { return k + mat_mul(mat_mul(e, kk), f); }

GaussFactors partial_decompose(const MatSeries& l, int n, int qdim, Sign sign) {
  if (n < 2) fail(ErrorCode::shape_error, "partial decomposition needs n >= 2");
  if (l.zero().rows() != n * qdim || l.zero().cols() != n * qdim)
    fail(ErrorCode::shape_error, "operator matrix does not match n and quantum dimension");
  const int m = n - 1;
  GaussFactors g;
  g.n = n;
  g.qdim = qdim;
  g.sign = sign;
  g.kk = aux_block(l, qdim, 0, 0, m, m);
  MatSeries b = aux_block(l, qdim, 0, m, m, 1);
  MatSeries c = aux_block(l, qdim, m, 0, 1, m);
  MatSeries d = aux_block(l, qdim, m, m, 1, 1);
  MatSeries kinv = inverse_of(g.kk, sign, "leading principal block of size " + std::to_string(m));
  g.f = mat_mul(kinv, b);
  g.e = mat_mul(c, kinv);
  g.k = d - mat_mul(g.e, b);
  return g;
}

MatSeries recompose(const GaussFactors& g) {
  MatSeries kf = mat_mul(g.kk, g.f);
  MatSeries ek = mat_mul(g.e, g.kk);
  return assemble({{g.kk, kf}, {ek, g.big_d()}});
}

FullGaussFactors full_decompose(const MatSeries& l, int n, int qdim, Sign sign) {
  FullGaussFactors r;
  r.n = n;
  r.qdim = qdim;
  if (n == 1) {
    r.lower = identity_series(qdim);
    r.diag = l;
    r.upper = identity_series(qdim);
    return r;
  }
  GaussFactors g = partial_decompose(l, n, qdim, sign);
  FullGaussFactors sub = full_decompose(g.kk, n - 1, qdim, sign);
  const int top = (n - 1) * qdim;
  r.lower = assemble({{sub.lower, zero_series(top, qdim)}, {mat_mul(g.e, sub.lower), identity_series(qdim)}});
  r.diag = assemble({{sub.diag, zero_series(top, qdim)}, {zero_series(qdim, top), g.k}});
  r.upper = assemble({{sub.upper, mat_mul(sub.upper, g.f)}, {zero_series(qdim, top), identity_series(qdim)}});
  return r;
}

FullGaussFactors direct_ldu(const MatSeries& l, int n, int qdim, Sign sign) {
  auto entry = [&](int i, int j) { return aux_block(l, qdim, i, j, 1, 1); };
  std::vector<std::vector<MatSeries>> e(n, std::vector<MatSeries>(n)), f(n, std::vector<MatSeries>(n));
  std::vector<MatSeries> k(n), kinv(n);
  // sum_{t < lim} e_it k_t f_tj
  auto partial_sum = [&](int i, int j, int lim, MatSeries acc) {
    for (int t = 0; t < lim; ++t) acc = acc - mat_mul(mat_mul(e[i][t], k[t]), f[t][j]);
    return acc;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) e[i][j] = mat_mul(partial_sum(i, j, j, entry(i, j)), kinv[j]);
    k[i] = partial_sum(i, i, i, entry(i, i));
    kinv[i] = inverse_of(k[i], sign, "diagonal factor " + std::to_string(i + 1));
    for (int j = i + 1; j < n; ++j) f[i][j] = mat_mul(kinv[i], partial_sum(i, j, i, entry(i, j)));
  }
  std::vector<std::vector<MatSeries>> lo(n, std::vector<MatSeries>(n)), di(n, std::vector<MatSeries>(n)),
      up(n, std::vector<MatSeries>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MatSeries z = zero_series(qdim, qdim), id = identity_series(qdim);
      lo[i][j] = i == j ? id : (i > j ? e[i][j] : z);
      up[i][j] = i == j ? id : (i < j ? f[i][j] : z);
      di[i][j] = i == j ? k[i] : z;
    }
  FullGaussFactors r;
  r.n = n;
  r.qdim = qdim;
  r.lower = assemble(lo);
  r.diag = assemble(di);
  r.upper = assemble(up);
  return r;
}

MatSeries recompose(const FullGaussFactors& g) { return mat_mul(mat_mul(g.lower, g.diag), g.upper); }

MatSeries solve_left(const MatSeries& kk, const MatSeries& b, Sign sign) { return solve(kk, b, sign, true); }
MatSeries solve_right(const MatSeries& kk, const MatSeries& c, Sign sign) { return solve(kk, c, sign, false); }

VerificationReport verify_uniqueness(const MatSeries& l, const GaussFactors& fac) {
  Stopwatch sw;
  const int n = fac.n, d = fac.qdim, m = n - 1;
  std::string id = std::string("gauss.uniqueness.") + sign_name(fac.sign);
  std::string anchor = "K, e, f, k are determined by L: K = A, K f = B, e K = C, k = D - e K f";
  MatSeries kk = aux_block(l, d, 0, 0, m, m);
  MatSeries f = solve_left(kk, aux_block(l, d, 0, m, m, 1), fac.sign);
  MatSeries e = solve_right(kk, aux_block(l, d, m, 0, 1, m), fac.sign);
  MatSeries k = aux_block(l, d, m, m, 1, 1) - mat_mul(mat_mul(e, kk), f);
  long total = 0;
  std::optional<Mismatch> first;
  const std::pair<const char*, std::pair<const MatSeries*, const MatSeries*>> parts[] = {
      {"K", {&kk, &fac.kk}}, {"f", {&f, &fac.f}}, {"e", {&e, &fac.e}}, {"k", {&k, &fac.k}}};
  for (const auto& [name, pr] : parts) {
    if (pr.first->zero().rows() != pr.second->zero().rows() || pr.first->zero().cols() != pr.second->zero().cols()) {
      first = Mismatch{{}, std::string(name) + " of shape " + pr.first->zero().shape(),
                       "shape " + pr.second->zero().shape()};
      break;
    }
    long c = 0;
    auto mm = series_diff(*pr.first, *pr.second, &c);
    total += c;
    if (mm && !first) {
      mm->expected = std::string(name) + ": " + mm->expected;
      first = mm;
    }
  }
  return make_report(id, anchor, first, total, sw);
}

VerificationReport check_recompose(const MatSeries& l, const GaussFactors& fac) {
  Stopwatch sw;
  long c = 0;
  auto mm = series_diff(l, recompose(fac), &c);
  return make_report(std::string("gauss.partial.") + sign_name(fac.sign),
                     "L = [[I,0],[e,1]] diag(K,k) [[I,f],[0,1]] = [[K, K f], [e K, k + e K f]]", mm, c, sw,
                     "window " + window_text(l));
}

VerificationReport check_full(const MatSeries& l, int n, int qdim, Sign sign) {
  Stopwatch sw;
  std::string id = std::string("gauss.full.") + sign_name(sign);
  std::string anchor = "L = (unit lower) diag(k_1..k_n) (unit upper), unique";
  FullGaussFactors it = full_decompose(l, n, qdim, sign);
  FullGaussFactors dl = direct_ldu(l, n, qdim, sign);
  long c = 0, c2 = 0;
  auto mm = series_diff(l, recompose(it), &c);
  if (mm) mm->expected = "recomposition: " + mm->expected;
  if (!mm) {
    const std::pair<const char*, std::pair<const MatSeries*, const MatSeries*>> parts[] = {
        {"lower", {&it.lower, &dl.lower}}, {"diag", {&it.diag, &dl.diag}}, {"upper", {&it.upper, &dl.upper}}};
    for (const auto& [name, pr] : parts) {
      mm = series_diff(*pr.first, *pr.second, &c2);
      c += c2;
      if (mm) {
        mm->expected = std::string("iterated ") + name + ": " + mm->expected;
        mm->got = "direct: " + mm->got;
        break;
      }
    }
  }
  // Unit diagonal and triangular shape.
  if (!mm) {
    for (int k = it.lower.lo(); k <= it.lower.hi() && !mm; ++k)
      for (int i = 0; i < n && !mm; ++i)
        for (int j = 0; j < n && !mm; ++j) {
          CoeffMat lb = aux_block(it.lower[k], qdim, i, j, 1, 1);
          CoeffMat ub = aux_block(it.upper[k], qdim, i, j, 1, 1);
          CoeffMat want = (i == j && k == 0) ? CoeffMat::identity(qdim) : CoeffMat(qdim, qdim);
          if ((i <= j && !(lb == want)) || (i >= j && !(ub == want)))
            mm = Mismatch{{{"exponent", k}, {"aux_row", i + 1}, {"aux_col", j + 1}}, "unit triangular", "violated"};
        }
  }
  return make_report(id, anchor, mm, c, sw, "iterated partial and direct LDU compared");
}

ReportList check_antipode(const MatSeries& l, int n, int qdim, Sign sign) {
  ReportList out;
  Stopwatch sw;
  MatSeries linv = series_inverse(l, direction_of(sign));
  long c = 0;
  auto mm = series_diff(identity_series(n * qdim), mat_mul(l, linv), &c);
  out.push_back(make_report(std::string("hopf.antipode.inverse.") + sign_name(sign), "S(L(z)) = L(z)^{-1}: L L^{-1} = 1",
                            mm, c, sw));
  if (n >= 2) {
    Stopwatch sw2;
    GaussFactors g = partial_decompose(l, n, qdim, sign);
    MatSeries kinv = inverse_of(g.kk, sign, "K");
    MatSeries kscal_inv = inverse_of(g.k, sign, "k");
    MatSeries fk = mat_mul(g.f, kscal_inv);
    MatSeries tl = kinv + mat_mul(fk, g.e);
    MatSeries block = assemble({{tl, neg(fk)}, {neg(mat_mul(kscal_inv, g.e)), kscal_inv}});
    long c2 = 0;
    auto mm2 = series_diff(linv, block, &c2);
    out.push_back(make_report(std::string("hopf.antipode.block-formula.") + sign_name(sign),
                              "L^{-1} = [[K^{-1} + f k^{-1} e, -f k^{-1}], [-k^{-1} e, k^{-1}]]", mm2, c2, sw2));
  }
  return out;
}

VerificationReport check_l1l2_display(const MatSeries& l, const GaussFactors& fac) {
  Stopwatch sw;
  const int n = fac.n, d = fac.qdim, m = n - 1;
  const int sz[2] = {m, 1}, off[2] = {0, m};
  // Blocks of L(z) in terms of the factors: tt = K, tb = K f, bt = e K, bb = D.
  MatSeries blk[2][2] = {{fac.kk, mat_mul(fac.kk, fac.f)}, {mat_mul(fac.e, fac.kk), fac.big_d()}};
  LegSpace full = LegSpace::square({n, n, d});
  auto l1 = l.map([&](const CoeffMat& x) { return embed(x, full, {0, 2}); });
  auto l2 = l.map([&](const CoeffMat& x) { return embed(x, full, {1, 2}); });
  MatBi direct = outer(l1, l2, [](const CoeffMat& a, const CoeffMat& b) { return a * b; });
  struct Piece {
    int x1, y1, x2, y2;
    MatBi value;
  };
  std::vector<Piece> pieces;
  for (int x1 = 0; x1 < 2; ++x1)
    for (int y1 = 0; y1 < 2; ++y1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int y2 = 0; y2 < 2; ++y2) {
          // L(w)_{x2 y2} on leg 2 first, then L(z)_{x1 y1} on leg 1; both act on the quantum leg.
          LegSpace s1{{sz[x1], sz[x2], d}, {sz[y1], sz[x2], d}};
          LegSpace s2{{sz[y1], sz[x2], d}, {sz[y1], sz[y2], d}};
          auto a = blk[x1][y1].map([&](const CoeffMat& x) { return embed(x, s1, {0, 2}); });
          auto b = blk[x2][y2].map([&](const CoeffMat& x) { return embed(x, s2, {1, 2}); });
          pieces.push_back({x1, y1, x2, y2, outer(a, b, [](const CoeffMat& p, const CoeffMat& r) { return p * r; })});
        }
  MatBi assembled(direct.zero());
  Rect box = direct.box();
  for (int i = box.zlo; i <= box.zhi; ++i)
    for (int j = box.wlo; j <= box.whi; ++j) {
      CoeffMat mtx(n * n * d, n * n * d);
      bool ok = true;
      for (const auto& p : pieces) {
        const CoeffMat* v = p.value.known(i, j);
        if (!v) {
          ok = false;
          break;
        }
        for (int r = 0; r < v->rows(); ++r)
          for (int c = 0; c < v->cols(); ++c) {
            if ((*v)(r, c).is_zero()) continue;
            int ra1 = r / (sz[p.x2] * d), ra2 = (r / d) % sz[p.x2], rq = r % d;
            int ca1 = c / (sz[p.y2] * d), ca2 = (c / d) % sz[p.y2], cq = c % d;
            int gr = ((off[p.x1] + ra1) * n + off[p.x2] + ra2) * d + rq;
            int gc = ((off[p.y1] + ca1) * n + off[p.y2] + ca2) * d + cq;
            mtx(gr, gc) = (*v)(r, c);
          }
      }
      if (ok) assembled.set(i, j, std::move(mtx));
    }
  VerificationReport rep;
  rep.check_id = std::string("gauss.l1l2-display.") + sign_name(fac.sign);
  rep.paper_anchor = "L1(z) L2(w) block by block in terms of K, K f, e K and D = k + e K f";
  record(rep, compare(direct, assembled, box, [](const CoeffMat& a, const CoeffMat& b) { return mat_diff(a, b); }));
  rep.wall_time = sw.seconds();
  return rep;
}

RationalGauss partial_decompose(const RatMat& l, int n, int qdim) {
  if (n < 2) fail(ErrorCode::shape_error, "partial decomposition needs n >= 2");
  const int m = n - 1;
  RationalGauss g;
  g.n = n;
  g.qdim = qdim;
  g.kk = aux_block(l, qdim, 0, 0, m, m);
  RatMat kinv = exact_inverse(g.kk);
  RatMat b = aux_block(l, qdim, 0, m, m, 1);
  g.f = kinv * b;
  g.e = aux_block(l, qdim, m, 0, 1, m) * kinv;
  g.k = aux_block(l, qdim, m, m, 1, 1) - g.e * b;
  return g;
}

}  // namespace qgauss
