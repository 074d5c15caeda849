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
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qgauss/qgauss.h"

namespace {

struct Text {
  char* s = nullptr;
  ~Text() { qgauss_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Config {
  qgauss_config* c = nullptr;
  Config() { REQUIRE(qgauss_config_create(&c) == QGAUSS_OK); }
  ~Config() { qgauss_config_destroy(c); }
};

int cli(const std::string& args, std::string* out = nullptr) {
  std::string cmd = std::string(QGAUSS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string text;
  char buf[4096];
  for (size_t got; (got = fread(buf, 1, sizeof buf, p)) > 0;) text.append(buf, got);
  int rc = pclose(p);
  if (out) *out = text;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("config keys") {
  Config cfg;
  CHECK(qgauss_config_set(cfg.c, "n", "3") == QGAUSS_OK);
  CHECK(qgauss_config_set(cfg.c, "q", "3/2") == QGAUSS_OK);
  CHECK(qgauss_config_set(cfg.c, "a", "symbolic") == QGAUSS_OK);
  CHECK(qgauss_config_set(cfg.c, "n", "three") == QGAUSS_E_INVALID_CONFIG);
  CHECK(std::string(qgauss_last_error()).find("integer") != std::string::npos);
  CHECK(qgauss_config_set(cfg.c, "colour", "red") == QGAUSS_E_INVALID_CONFIG);
  CHECK(qgauss_config_set(cfg.c, "convention", "other") == QGAUSS_E_INVALID_CONFIG);
  CHECK(qgauss_config_set(nullptr, "n", "2") == QGAUSS_E_INVALID_ARGUMENT);
  CHECK(qgauss_config_load(cfg.c, "# comment\n\nn = 2\norder=4\n") == QGAUSS_OK);
  CHECK(qgauss_config_load(cfg.c, "n 2\n") == QGAUSS_E_INVALID_CONFIG);
}

TEST_CASE("run and render") {
  Config cfg;
  qgauss_config_load(cfg.c, "n=2\norder=4\nsuites=ybe,unitarity\n");
  qgauss_result* res = nullptr;
  REQUIRE(qgauss_run(cfg.c, &res) == QGAUSS_OK);
  CHECK(qgauss_result_passed(res) == 1);
  CHECK(qgauss_result_count(res) == 5);
  Text json, text;
  REQUIRE(qgauss_result_render(res, QGAUSS_FORMAT_JSON, &json.s) == QGAUSS_OK);
  CHECK(json.str().find("\"check_id\": \"rmatrix.ybe\"") != std::string::npos);
  REQUIRE(qgauss_result_render(res, QGAUSS_FORMAT_TEXT, &text.s) == QGAUSS_OK);
  CHECK(text.str().find("PASS") != std::string::npos);
  qgauss_result_destroy(res);

  qgauss_config_set(cfg.c, "n", "7");
  res = nullptr;
  CHECK(qgauss_run(cfg.c, &res) == QGAUSS_E_INVALID_CONFIG);
  CHECK(res == nullptr);
}

TEST_CASE("objects") {
  Config cfg;
  qgauss_config_load(cfg.c, "n=2\norder=3\n");
  Text r, lp, g;
  REQUIRE(qgauss_build_r(cfg.c, QGAUSS_FORMAT_JSON, &r.s) == QGAUSS_OK);
  CHECK(r.str().find("\"entries\"") != std::string::npos);
  REQUIRE(qgauss_export(cfg.c, &lp.s) == QGAUSS_OK);
  CHECK(lp.str().find("\"plus\"") != std::string::npos);
  REQUIRE(qgauss_decompose(cfg.c, &g.s) == QGAUSS_OK);
  CHECK(g.str().find("\"minus\"") != std::string::npos);
  qgauss_config_set(cfg.c, "n", "1");
  Text none;
  CHECK(qgauss_decompose(cfg.c, &none.s) == QGAUSS_E_INVALID_CONFIG);
}

TEST_CASE("command-line exit codes") {
  CHECK(cli("check ybe --n 2 --convention corrected") == 0);
  std::string out;
  CHECK(cli("check ybe --n 2 --convention literal", &out) == 1);
  CHECK(out.find("[diagnostic]") != std::string::npos);
  CHECK(cli("check ybe --n 0") == 2);
  CHECK(cli("check nothing") == 2);
  CHECK(cli("check ybe --q 1") == 2);
  CHECK(cli("check ybe --config /nonexistent/file") == 2);
  CHECK(cli("--help") == 0);
}

TEST_CASE("config file, flag precedence and atomic output") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("qgauss_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::path conf = dir / "run.conf";
  std::ofstream(conf) << "n = 3\nconvention = literal\n";
  fs::path out = dir / "report.json";
  // The file says literal; the flag wins.
  CHECK(cli("check ybe --config " + conf.string() + " --convention corrected --format json --output " + out.string()) == 0);
  std::ifstream in(out);
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(body.find("\"n\": 3") != std::string::npos);
  CHECK(body.find("\"convention\": \"corrected\"") != std::string::npos);
  int files = 0;
  for (auto& e : fs::directory_iterator(dir)) files += e.is_regular_file();
  CHECK(files == 2);  // no temporary left behind
  CHECK(cli("check ybe --config " + conf.string()) == 1);
  fs::remove_all(dir);
}
