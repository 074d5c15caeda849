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

#include "engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <thread>

#include "currents.hpp"
#include "gauss.hpp"
#include "loperator.hpp"

namespace qgauss {
namespace {

using Task = std::function<ReportList()>;

VerificationReport skipped(const std::string& id, const std::string& why) {
  VerificationReport r;
  r.check_id = id;
  r.verdict = Verdict::skipped;
  r.note = why;
  return r;
}

// Shared immutable inputs, built once before the checks are dispatched.
struct Context {
  RMatrix r;
  std::optional<LPair> lp;
  std::optional<GaussFactors> gp, gm;
  std::optional<CurrentSet> cs;
  std::optional<RMatrix> rbar;
};

bool needs(const std::vector<std::string>& s, std::initializer_list<const char*> names) {
  for (const char* n : names)
    if (std::find(s.begin(), s.end(), n) != s.end()) return true;
  return false;
}

void run_pool(const std::vector<Task>& tasks, std::vector<ReportList>& results, int workers) {
  results.assign(tasks.size(), {});
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int count = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  // Deterministic: the first failing task in submission order wins.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ybe",      "unitarity", "rll",   "inverse", "gauss",
                                                 "subalgebra", "lemma",   "zf",    "hopf"};
  return names;
}

void validate(const RunConfig& cfg) {
  if (cfg.n < 1) fail(ErrorCode::invalid_config, "n must be at least 1");
  if (cfg.order < 2) fail(ErrorCode::invalid_config, "order must be at least 2");
  if (!cfg.spec.q && cfg.n > cfg.symbolic_cap)
    fail(ErrorCode::invalid_config, "n = " + std::to_string(cfg.n) + " exceeds the symbolic cap " +
                                        std::to_string(cfg.symbolic_cap));
  if (cfg.spec.q && (cfg.spec.q->is_zero() || *cfg.spec.q == BigRational(1) || *cfg.spec.q == BigRational(-1)))
    fail(ErrorCode::invalid_config, "q must not be 0 or +-1");
  if (cfg.spec.a && cfg.spec.a->is_zero()) fail(ErrorCode::invalid_config, "a must be nonzero");
  if (cfg.suites.empty()) fail(ErrorCode::invalid_config, "no suite selected");
  for (const auto& s : cfg.suites)
    if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      fail(ErrorCode::invalid_config, "unknown suite '" + s + "'");
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QGAUSS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

RunResult run_checks(const RunConfig& cfg) {
  validate(cfg);
  std::vector<std::string> suites;
  for (const auto& s : cfg.suites) {
    if (s == "all") suites = suite_names();
    else if (std::find(suites.begin(), suites.end(), s) == suites.end()) suites.push_back(s);
  }
  const int n = cfg.n, N = cfg.order;
  const ScalarQ q = cfg.spec.q_value();
  Context ctx;
  ctx.r = build_r(n, cfg.convention, q);
  if (needs(suites, {"rll", "inverse", "gauss", "subalgebra", "lemma", "zf", "hopf"}))
    ctx.lp = build_evaluation_pair({n, cfg.spec.a_value(), N}, ctx.r);
  const bool split = n >= 2;
  if (split && needs(suites, {"gauss", "subalgebra", "lemma", "zf"})) {
    ctx.gp = partial_decompose(ctx.lp->plus, n, n, Sign::plus);
    ctx.gm = partial_decompose(ctx.lp->minus, n, n, Sign::minus);
    ctx.cs = extract_currents(*ctx.gp, *ctx.gm);
    ctx.rbar = restrict_rbar(ctx.r);
  }
  const Context& c = ctx;
  const std::string small = "needs n >= 2";

  std::vector<Task> tasks;
  for (const auto& s : suites) {
    if (s == "ybe") {
      tasks.push_back([&] { return ReportList{check_ybe(c.r)}; });
    } else if (s == "unitarity") {
      tasks.push_back([&] { return ReportList{check_unitarity(c.r), check_r_at_one(c.r)}; });
      tasks.push_back([&, small] {
        if (n < 2) return ReportList{skipped("rmatrix.restriction", small), skipped("rmatrix.block-form", small)};
        return ReportList{check_restriction(c.r), check_block_form(c.r)};
      });
    } else if (s == "rll") {
      tasks.push_back([&] { return check_defining_relations(*c.lp, c.r); });
    } else if (s == "inverse") {
      tasks.push_back([&] { return check_inverse_relations(*c.lp, c.r); });
    } else if (s == "gauss") {
      if (!split) {
        tasks.push_back([small] { return ReportList{skipped("gauss", small)}; });
        continue;
      }
      for (Sign sign : {Sign::plus, Sign::minus})
        tasks.push_back([&, sign] {
          const MatSeries& l = sign == Sign::plus ? c.lp->plus : c.lp->minus;
          const GaussFactors& g = sign == Sign::plus ? *c.gp : *c.gm;
          return ReportList{check_recompose(l, g), verify_uniqueness(l, g), check_full(l, n, n, sign),
                            check_l1l2_display(l, g)};
        });
    } else if (s == "subalgebra") {
      if (!split) tasks.push_back([small] { return ReportList{skipped("subalgebra", small)}; });
      else tasks.push_back([&] { return check_subalgebra(*c.cs, *c.rbar); });
    } else if (s == "lemma") {
      if (!split) tasks.push_back([small] { return ReportList{skipped("lemma", small)}; });
      else tasks.push_back([&] { return check_lemma(*c.cs, *c.rbar); });
    } else if (s == "zf") {
      if (!split) {
        tasks.push_back([small] { return ReportList{skipped("zf", small)}; });
        continue;
      }
      tasks.push_back([&] {
        if (!c.lp->rational) fail(ErrorCode::invalid_config, "zf checks need the rational L-operator");
        ZFSet zf = zf_currents(partial_decompose(*c.lp->rational, n, n), c.cs->order);
        return check_zf(zf, *c.cs, *c.rbar);
      });
    } else if (s == "hopf") {
      for (Sign sign : {Sign::plus, Sign::minus})
        tasks.push_back([&, sign] {
          return check_antipode(sign == Sign::plus ? c.lp->plus : c.lp->minus, n, n, sign);
        });
      tasks.push_back([&] {
        // Second evaluation point: the run's a against a = 1.
        const int ord = std::min(N, 4);
        LPair one = build_evaluation_pair({n, Coeff(ScalarQ(1)), ord}, c.r);
        LPair other = build_evaluation_pair({n, cfg.spec.a_value(), ord}, c.r);
        ReportList out = check_defining_relations(coproduct_pair(one, other), c.r, "hopf.coproduct");
        out.push_back(check_counit(other));
        return out;
      });
      tasks.push_back([&] {
        const int ord = std::min(N, 3);
        LPair a1 = build_evaluation_pair({n, Coeff(ScalarQ(1)), ord}, c.r);
        LPair a2 = build_evaluation_pair({n, cfg.spec.a_value(), ord}, c.r);
        LPair a3 = build_evaluation_pair({n, Coeff(ScalarQ(BigRational(2))), ord}, c.r);
        return ReportList{check_coassociativity(a1, a2, a3)};
      });
    }
  }

  std::vector<ReportList> results;
  run_pool(tasks, results, worker_count(cfg.threads));
  RunResult out;
  for (auto& r : results) out.reports.insert(out.reports.end(), r.begin(), r.end());
  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const VerificationReport& x, const VerificationReport& y) { return x.check_id < y.check_id; });
  // Under the literal convention every verdict counts, diagnostics included.
  const bool literal = cfg.convention == Convention::literal;
  for (const auto& r : out.reports)
    if (r.verdict == Verdict::fail && (!r.diagnostic || literal)) out.passed = false;
  return out;
}

}  // namespace qgauss
