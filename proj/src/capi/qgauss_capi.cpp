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

#include "qgauss/qgauss.h"

#include <charconv>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "core/engine.hpp"
#include "core/serialize.hpp"

using namespace qgauss;

struct qgauss_config {
  RunConfig run;
};

struct qgauss_result {
  RunConfig run;
  RunResult result;
  double wall_time = 0.0;
};

namespace {

thread_local std::string last_error;

qgauss_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::degenerate_scalar: return QGAUSS_E_DEGENERATE_SCALAR;
    case ErrorCode::pole_at_expansion_point: return QGAUSS_E_POLE;
    case ErrorCode::window_underflow: return QGAUSS_E_WINDOW;
    case ErrorCode::shape_error: return QGAUSS_E_SHAPE;
    case ErrorCode::singular_matrix: return QGAUSS_E_SINGULAR;
    case ErrorCode::singular_leading_term: return QGAUSS_E_SINGULAR_LEADING_TERM;
    case ErrorCode::normalization_failure: return QGAUSS_E_NORMALIZATION;
    case ErrorCode::parse_error: return QGAUSS_E_PARSE;
    case ErrorCode::invalid_config: return QGAUSS_E_INVALID_CONFIG;
  }
  return QGAUSS_E_INTERNAL;
}

template <class F>
qgauss_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return QGAUSS_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown exception";
  }
  return QGAUSS_E_INTERNAL;
}

qgauss_status bad_argument(const char* what) {
  last_error = what;
  return QGAUSS_E_INVALID_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, s.find_last_not_of(ws) - b + 1));
}

int parse_int(const std::string& key, const std::string& v) {
  int out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    fail(ErrorCode::invalid_config, key + " expects an integer, got '" + v + "'");
  return out;
}

std::optional<BigRational> parse_value(const std::string& key, const std::string& v) {
  if (v == "symbolic") return std::nullopt;
  try {
    return BigRational::parse(v);
  } catch (const Error&) {
    fail(ErrorCode::invalid_config, key + " expects 'symbolic' or a rational, got '" + v + "'");
  }
}

void set_key(RunConfig& c, const std::string& key, const std::string& v) {
  if (key == "n") c.n = parse_int(key, v);
  else if (key == "order") c.order = parse_int(key, v);
  else if (key == "threads") c.threads = parse_int(key, v);
  else if (key == "symbolic_cap") c.symbolic_cap = parse_int(key, v);
  else if (key == "q") c.spec.q = parse_value(key, v);
  else if (key == "a") c.spec.a = parse_value(key, v);
  else if (key == "convention") {
    if (v == "literal") c.convention = Convention::literal;
    else if (v == "corrected") c.convention = Convention::corrected;
    else fail(ErrorCode::invalid_config, "convention must be literal or corrected");
  } else if (key == "suites") {
    c.suites.clear();
    std::stringstream ss(v);
    for (std::string item; std::getline(ss, item, ',');)
      if (auto t = trim(item); !t.empty()) c.suites.push_back(t);
  } else {
    fail(ErrorCode::invalid_config, "unknown configuration key '" + key + "'");
  }
}

Json config_json(const RunConfig& c) {
  Json j;
  j["n"] = c.n;
  j["order"] = c.order;
  j["convention"] = convention_name(c.convention);
  j["q"] = c.spec.q_text();
  j["a"] = c.spec.a_text();
  j["suites"] = c.suites;
  return j;
}

RMatrix r_of(const RunConfig& c) { return build_r(c.n, c.convention, c.spec.q_value()); }

LPair pair_of(const RunConfig& c) {
  return build_evaluation_pair({c.n, c.spec.a_value(), c.order}, r_of(c));
}

void check_shape_only(const RunConfig& c) {
  RunConfig probe = c;
  if (probe.suites.empty()) probe.suites = {"all"};
  validate(probe);
}

}  // namespace

extern "C" {

const char* qgauss_version(void) { return "1.0.0"; }

const char* qgauss_last_error(void) { return last_error.c_str(); }

qgauss_status qgauss_config_create(qgauss_config** out) {
  if (!out) return bad_argument("null output pointer");
  return guarded([&] { *out = new qgauss_config{}; });
}

void qgauss_config_destroy(qgauss_config* cfg) { delete cfg; }

qgauss_status qgauss_config_set(qgauss_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return bad_argument("null argument");
  return guarded([&] { set_key(cfg->run, trim(key), trim(value)); });
}

qgauss_status qgauss_config_load(qgauss_config* cfg, const char* text) {
  if (!cfg || !text) return bad_argument("null argument");
  return guarded([&] {
    std::stringstream ss(text);
    int line_no = 0;
    for (std::string line; std::getline(ss, line);) {
      ++line_no;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      auto eq = t.find('=');
      if (eq == std::string::npos)
        fail(ErrorCode::invalid_config, "line " + std::to_string(line_no) + ": expected key=value");
      set_key(cfg->run, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
  });
}

qgauss_status qgauss_run(const qgauss_config* cfg, qgauss_result** out) {
  if (!cfg || !out) return bad_argument("null argument");
  return guarded([&] {
    Stopwatch sw;
    auto res = std::make_unique<qgauss_result>();
    res->run = cfg->run;
    res->result = run_checks(cfg->run);
    res->wall_time = sw.seconds();
    *out = res.release();
  });
}

void qgauss_result_destroy(qgauss_result* res) { delete res; }

int qgauss_result_passed(const qgauss_result* res) { return res && res->result.passed ? 1 : 0; }

size_t qgauss_result_count(const qgauss_result* res) { return res ? res->result.reports.size() : 0; }

qgauss_status qgauss_result_render(const qgauss_result* res, qgauss_format format, char** out) {
  if (!res || !out) return bad_argument("null argument");
  return guarded([&] {
    const ReportList& reps = res->result.reports;
    if (format == QGAUSS_FORMAT_JSON) {
      Json j;
      j["config"] = config_json(res->run);
      j["passed"] = res->result.passed;
      j["reports"] = to_json(reps);
      j["wall_time"] = res->wall_time;
      *out = duplicate(j.dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    int pass = 0, failed = 0, skip = 0;
    for (const auto& r : reps) {
      os << report_text(r) << "\n";
      (r.verdict == Verdict::pass ? pass : r.verdict == Verdict::fail ? failed : skip)++;
    }
    os << reps.size() << " checks: " << pass << " pass, " << failed << " fail, " << skip << " skipped; "
       << (res->result.passed ? "PASS" : "FAIL") << "\n";
    *out = duplicate(os.str());
  });
}

qgauss_status qgauss_build_r(const qgauss_config* cfg, qgauss_format format, char** out) {
  if (!cfg || !out) return bad_argument("null argument");
  return guarded([&] {
    check_shape_only(cfg->run);
    RMatrix r = r_of(cfg->run);
    if (format == QGAUSS_FORMAT_JSON) {
      *out = duplicate(to_json(r).dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    os << "R(u), n = " << r.n << ", convention " << convention_name(r.convention) << ", q = "
       << cfg->run.spec.q_text() << "\n";
    for (int i = 0; i < r.value.rows(); ++i)
      for (int j = 0; j < r.value.cols(); ++j)
        if (!r.value(i, j).is_zero()) os << "  (" << i + 1 << ", " << j + 1 << ")  " << to_string(r.value(i, j)) << "\n";
    *out = duplicate(os.str());
  });
}

qgauss_status qgauss_export(const qgauss_config* cfg, char** out) {
  if (!cfg || !out) return bad_argument("null argument");
  return guarded([&] {
    check_shape_only(cfg->run);
    Json j;
    j["config"] = config_json(cfg->run);
    j["l_operator"] = to_json(pair_of(cfg->run));
    *out = duplicate(j.dump(2) + "\n");
  });
}

qgauss_status qgauss_decompose(const qgauss_config* cfg, char** out) {
  if (!cfg || !out) return bad_argument("null argument");
  return guarded([&] {
    check_shape_only(cfg->run);
    const int n = cfg->run.n;
    if (n < 2) fail(ErrorCode::invalid_config, "decompose needs n >= 2");
    LPair lp = pair_of(cfg->run);
    Json j;
    j["config"] = config_json(cfg->run);
    j["plus"] = to_json(partial_decompose(lp.plus, n, n, Sign::plus));
    j["minus"] = to_json(partial_decompose(lp.minus, n, n, Sign::minus));
    *out = duplicate(j.dump(2) + "\n");
  });
}

void qgauss_string_free(char* s) { delete[] s; }

}  // extern "C"
