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

// Command-line front end; talks to the engine only through the C interface.

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "qgauss/qgauss.h"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

int exit_for(qgauss_status s) {
  switch (s) {
    case QGAUSS_OK: return exit_pass;
    case QGAUSS_E_INVALID_ARGUMENT:
    case QGAUSS_E_INVALID_CONFIG:
    case QGAUSS_E_PARSE: return exit_usage;
    default: return exit_internal;
  }
}

int report_error(qgauss_status s) {
  std::cerr << "qgauss: " << qgauss_last_error() << "\n";
  return exit_for(s);
}

struct Owned {
  char* s = nullptr;
  ~Owned() { qgauss_string_free(s); }
};

// Write via a temporary in the target directory, then rename into place.
bool write_atomically(const std::string& path, const std::string& body) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << body;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return false;
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

struct Options {
  std::optional<std::string> n, order, convention, q, a, config;
  std::string format = "text";
  std::string output;
  std::string suite;
};

int emit(const Options& o, const std::string& body) {
  if (o.output.empty()) {
    std::cout << body << std::flush;
    return exit_pass;
  }
  if (!write_atomically(o.output, body)) {
    std::cerr << "qgauss: cannot write " << o.output << "\n";
    return exit_usage;
  }
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for the trigonometric R-matrix, its L-operators and their Gauss decompositions"};
  app.set_version_flag("--version", qgauss_version());
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--n", o.n, "Rank n (matrices are n x n)");
  app.add_option("--order", o.order, "Series truncation order N (default 8)");
  app.add_option("--convention", o.convention, "literal or corrected (default corrected)");
  app.add_option("--q", o.q, "symbolic or a rational value (default symbolic)");
  app.add_option("--a", o.a, "Evaluation point: symbolic or a rational value (default symbolic)");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", o.output, "Write the result to this path atomically");
  app.add_option("--config", o.config, "File of key=value lines; flags take precedence");

  auto* build_r = app.add_subcommand("build-r", "Print the R-matrix");
  auto* check = app.add_subcommand("check", "Run verification suites");
  check->add_option("suite", o.suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"ybe", "unitarity", "rll", "inverse", "gauss", "subalgebra", "lemma", "zf", "hopf", "all"}));
  auto* decompose = app.add_subcommand("decompose", "Export the Gauss factors of L+ and L- as JSON");
  auto* export_cmd = app.add_subcommand("export", "Export the L-operator coefficient tables as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  qgauss_config* raw = nullptr;
  if (qgauss_status s = qgauss_config_create(&raw); s != QGAUSS_OK) return report_error(s);
  std::unique_ptr<qgauss_config, decltype(&qgauss_config_destroy)> cfg(raw, qgauss_config_destroy);

  if (o.config) {
    std::ifstream in(*o.config);
    if (!in) {
      std::cerr << "qgauss: cannot read config " << *o.config << "\n";
      return exit_usage;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    if (qgauss_status s = qgauss_config_load(cfg.get(), ss.str().c_str()); s != QGAUSS_OK) return report_error(s);
  }
  const std::pair<const char*, const std::optional<std::string>*> flags[] = {
      {"n", &o.n}, {"order", &o.order}, {"convention", &o.convention}, {"q", &o.q}, {"a", &o.a}};
  for (const auto& [key, value] : flags)
    if (*value)
      if (qgauss_status s = qgauss_config_set(cfg.get(), key, (*value)->c_str()); s != QGAUSS_OK)
        return report_error(s);

  const qgauss_format fmt = o.format == "json" ? QGAUSS_FORMAT_JSON : QGAUSS_FORMAT_TEXT;
  Owned text;

  if (*check) {
    if (qgauss_status s = qgauss_config_set(cfg.get(), "suites", o.suite.c_str()); s != QGAUSS_OK)
      return report_error(s);
    qgauss_result* res = nullptr;
    if (qgauss_status s = qgauss_run(cfg.get(), &res); s != QGAUSS_OK) return report_error(s);
    std::unique_ptr<qgauss_result, decltype(&qgauss_result_destroy)> owned(res, qgauss_result_destroy);
    if (qgauss_status s = qgauss_result_render(res, fmt, &text.s); s != QGAUSS_OK) return report_error(s);
    if (int code = emit(o, text.s); code != exit_pass) return code;
    return qgauss_result_passed(res) ? exit_pass : exit_fail;
  }

  qgauss_status s = QGAUSS_OK;
  if (*build_r) s = qgauss_build_r(cfg.get(), fmt, &text.s);
  else if (*decompose) s = qgauss_decompose(cfg.get(), &text.s);
  else if (*export_cmd) s = qgauss_export(cfg.get(), &text.s);
  if (s != QGAUSS_OK) return report_error(s);
  return emit(o, text.s);
}
