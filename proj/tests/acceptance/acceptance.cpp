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

// Acceptance suite: one pass/fail line per criterion. Limits are pinned below.

#include <sys/wait.h>

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>

#include "core/currents.hpp"
#include "core/gauss.hpp"
#include "core/loperator.hpp"
#include "core/rmatrix.hpp"

#ifndef QGAUSS_CLI_PATH
#error "QGAUSS_CLI_PATH must name the command-line binary"
#endif

using namespace qgauss;

namespace {

constexpr double ybe_limit_s = 30.0;
constexpr double unitarity_limit_s = 30.0;
constexpr double rll_limit_s = 120.0;
constexpr int mutation_samples = 24;  // at least 20 required
constexpr double mutation_detection_required = 1.0;
constexpr unsigned mutation_seed = 20261019;

ScalarQ q() { return ScalarQ::variable(); }
Coeff sym_a() { return Coeff::variable(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
};

// Counts non-diagnostic failures and skips; diagnostics are listed in the detail line.
void absorb(Outcome& o, const ReportList& reps, const std::string& tag) {
  for (const auto& r : reps) {
    if (r.diagnostic) continue;
    if (r.verdict != Verdict::pass) {
      o.ok = false;
      o.detail << " " << tag << ":" << r.check_id << "=" << verdict_name(r.verdict);
    }
  }
}

void absorb(Outcome& o, const VerificationReport& r, const std::string& tag) { absorb(o, ReportList{r}, tag); }

void timed(Outcome& o, const std::string& tag, double limit, const std::function<ReportList()>& body) {
  Stopwatch sw;
  ReportList reps = body();
  double t = sw.seconds();
  absorb(o, reps, tag);
  o.detail << " " << tag << "=" << std::fixed;
  o.detail.precision(2);
  o.detail << t << "s";
  if (limit > 0 && t >= limit) {
    o.ok = false;
    o.detail << "(over " << limit << "s)";
  }
}

struct Model {
  RMatrix r, rbar;
  LPair lp;
  GaussFactors gp, gm;
  CurrentSet cs;
};

Model model(int n, int order) {
  Model m;
  m.r = build_r(n, Convention::corrected, q());
  m.rbar = restrict_rbar(m.r);
  m.lp = build_evaluation_pair({n, sym_a(), order}, m.r);
  m.gp = partial_decompose(m.lp.plus, n, n, Sign::plus);
  m.gm = partial_decompose(m.lp.minus, n, n, Sign::minus);
  m.cs = extract_currents(m.gp, m.gm);
  return m;
}

const std::pair<int, int> cases[] = {{2, 6}, {3, 4}};

Outcome c1_ybe() {
  Outcome o;
  for (int n : {1, 2, 3})
    timed(o, "n" + std::to_string(n), ybe_limit_s,
          [&] { return ReportList{check_ybe(build_r(n, Convention::corrected, q()))}; });
  VerificationReport lit = check_ybe(build_r(2, Convention::literal, q()));
  o.detail << " | diagnostic: literal n2 " << verdict_name(lit.verdict);
  return o;
}

Outcome c2_unitarity() {
  Outcome o;
  for (int n : {1, 2, 3})
    timed(o, "n" + std::to_string(n), unitarity_limit_s,
          [&] { return ReportList{check_unitarity(build_r(n, Convention::corrected, q()))}; });
  return o;
}

Outcome c3_r_at_one() {
  Outcome o;
  for (int n : {1, 2, 3, 4}) absorb(o, check_r_at_one(build_r(n, Convention::corrected, q())), "n" + std::to_string(n));
  o.detail << " n=1..4 exact";
  return o;
}

Outcome c4_rll() {
  Outcome o;
  for (auto [n, N] : cases) {
    RMatrix r = build_r(n, Convention::corrected, q());
    timed(o, "n" + std::to_string(n) + "N" + std::to_string(N), rll_limit_s, [&] {
      LPair lp = build_evaluation_pair({n, sym_a(), N}, r);
      return check_defining_relations(lp, r);
    });
  }
  return o;
}

Outcome c5_inverse() {
  Outcome o;
  for (auto [n, N] : cases) {
    RMatrix r = build_r(n, Convention::corrected, q());
    timed(o, "n" + std::to_string(n) + "N" + std::to_string(N), rll_limit_s, [&] {
      LPair lp = build_evaluation_pair({n, sym_a(), N}, r);
      ReportList reps = check_inverse_relations(lp, r);
      std::set<std::string> families;
      for (const auto& rep : reps)
        if (!rep.diagnostic) families.insert(rep.check_id.substr(0, rep.check_id.find('.', 8)));
      if (families.size() != 6) {
        o.ok = false;
        o.detail << " families=" << families.size();
      }
      return reps;
    });
  }
  return o;
}

Outcome c6_gauss() {
  Outcome o;
  for (auto [n, N] : cases) {
    Model m = model(n, N);
    const std::string tag = "n" + std::to_string(n);
    absorb(o, check_block_form(m.r), tag);
    for (Sign s : {Sign::plus, Sign::minus}) {
      const MatSeries& l = s == Sign::plus ? m.lp.plus : m.lp.minus;
      const GaussFactors& g = s == Sign::plus ? m.gp : m.gm;
      absorb(o, ReportList{check_recompose(l, g), verify_uniqueness(l, g), check_full(l, n, n, s), check_l1l2_display(l, g)},
             tag);
      absorb(o, check_antipode(l, n, n, s), tag);
    }
  }
  o.detail << " partial, full, uniqueness, inverse block formula for n=2,3";
  return o;
}

Outcome c7_subalgebra() {
  Outcome o;
  for (auto [n, N] : cases) {
    Model m = model(n, N);
    absorb(o, check_subalgebra(m.cs, m.rbar), "n" + std::to_string(n));
  }
  o.detail << " K+- satisfy the restricted RLL relations for n=2,3";
  return o;
}

Outcome c8_lemma() {
  Outcome o;
  const std::set<std::string> named = {"k-k", "k+k-", "dressed", "K-E", "K-F", "k-E", "k-F", "E-E", "F-F", "EF"};
  for (auto [n, N] : cases) {
    Model m = model(n, N);
    ReportList reps = check_lemma(m.cs, m.rbar);
    absorb(o, reps, "n" + std::to_string(n));
    std::set<std::string> seen;
    for (const auto& r : reps) {
      if (r.diagnostic) continue;
      std::string family = r.check_id.substr(6);
      family = family.substr(0, family.find('.'));
      if (named.count(family)) seen.insert(family);
    }
    o.detail << " n" << n << ":" << seen.size() << "/10";
    if (seen.size() != named.size()) o.ok = false;
  }
  return o;
}

Outcome c9_zf() {
  Outcome o;
  for (auto [n, N] : cases) {
    Model m = model(n, N);
    ZFSet zf = zf_currents(partial_decompose(*m.lp.rational, n, n), m.cs.order);
    absorb(o, check_zf(zf, m.cs, m.rbar), "n" + std::to_string(n));
  }
  o.detail << " exchange relations and weighted displays for n=2,3";
  return o;
}

Outcome c10_hopf() {
  Outcome o;
  const int n = 2;
  RMatrix r = build_r(n, Convention::corrected, q());
  LPair one4 = build_evaluation_pair({n, Coeff(ScalarQ(1)), 4}, r);
  LPair sym4 = build_evaluation_pair({n, sym_a(), 4}, r);
  absorb(o, check_defining_relations(coproduct_pair(one4, sym4), r, "hopf.coproduct"), "coproduct");
  absorb(o, check_counit(sym4), "counit");
  LPair a1 = build_evaluation_pair({n, Coeff(ScalarQ(1)), 3}, r);
  LPair a2 = build_evaluation_pair({n, sym_a(), 3}, r);
  LPair a3 = build_evaluation_pair({n, Coeff(ScalarQ(BigRational(2))), 3}, r);
  absorb(o, check_coassociativity(a1, a2, a3), "coassoc");
  for (Sign s : {Sign::plus, Sign::minus}) absorb(o, check_antipode(s == Sign::plus ? sym4.plus : sym4.minus, n, n, s), "antipode");
  o.detail << " coproduct RLL N=4, coassociativity N=3, antipode";
  return o;
}

Outcome c11_mutations() {
  Outcome o;
  const int n = 2, N = 4;
  RMatrix r = build_r(n, Convention::corrected, q());
  LPair base = build_evaluation_pair({n, sym_a(), N}, r);
  base.rational.reset();  // detection must come from the relations, not the closed form
  const int dim = base.plus[0].rows();
  std::mt19937 rng(mutation_seed);
  std::uniform_int_distribution<int> exp(0, N), idx(0, dim - 1);
  int detected = 0;
  for (int s = 0; s < mutation_samples; ++s) {
    LPair lp = base;
    int k = exp(rng), i = idx(rng), j = idx(rng);
    lp.plus[k](i, j) += Coeff(ScalarQ(1));
    Outcome probe;
    absorb(probe, check_defining_relations(lp, r), "");
    absorb(probe, check_inverse_relations(lp, r), "");
    if (!probe.ok) ++detected;
    else o.detail << " missed(k=" << k << ",i=" << i + 1 << ",j=" << j + 1 << ")";
  }
  double rate = static_cast<double>(detected) / mutation_samples;
  o.ok = mutation_samples >= 20 && rate >= mutation_detection_required;
  o.detail << " detected " << detected << "/" << mutation_samples;
  return o;
}

std::string run_cli(const std::string& args, int& status) {
  std::string cmd = std::string(QGAUSS_CLI_PATH) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  for (size_t got; (got = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, got);
  int rc = pclose(p);
  status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

Outcome c12_determinism() {
  Outcome o;
  const std::string args = "check all --n 2 --order 6 --format json";
  int s1 = 0, s2 = 0;
  std::string a = run_cli(args, s1), b = run_cli(args, s2);
  const std::regex timing("\"wall_time\": [-+0-9.eE]+");
  a = std::regex_replace(a, timing, "\"wall_time\": 0");
  b = std::regex_replace(b, timing, "\"wall_time\": 0");
  o.ok = s1 == 0 && s2 == 0 && !a.empty() && a == b;
  o.detail << " exit " << s1 << "/" << s2 << ", " << a.size() << " bytes, " << (a == b ? "identical" : "different");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"YBE n=1,2,3", c1_ybe},
      {"unitarity n=1,2,3", c2_unitarity},
      {"R(1) = P", c3_r_at_one},
      {"RLL relations", c4_rll},
      {"inverse relations", c5_inverse},
      {"Gauss decompositions", c6_gauss},
      {"subalgebra", c7_subalgebra},
      {"current relations", c8_lemma},
      {"ZF relations", c9_zf},
      {"Hopf structure", c10_hopf},
      {"mutation sensitivity", c11_mutations},
      {"determinism", c12_determinism},
  };
  int failures = 0, id = 0;
  for (const auto& [name, run] : criteria) {
    ++id;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " exception: " << e.what();
    }
    failures += !o.ok;
    std::cout << "criterion " << id << (id < 10 ? "  " : " ") << (o.ok ? "PASS" : "FAIL") << "  " << name << ":"
              << o.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
