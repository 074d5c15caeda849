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

#pragma once

#include <string>
#include <vector>

#include "report.hpp"
#include "rmatrix.hpp"
#include "scalar.hpp"

namespace qgauss {

struct RunConfig {
  int n = 2;
  int order = 8;
  Convention convention = Convention::corrected;
  Specialization spec;  // q and a symbolic unless set
  std::vector<std::string> suites;
  int symbolic_cap = 4;  // largest n allowed with symbolic q
  int threads = 0;  // 0: QGAUSS_THREADS or the hardware count
};

const std::vector<std::string>& suite_names();

// Throws Error(invalid_config) on an unusable configuration.
void validate(const RunConfig& cfg);

struct RunResult {
  ReportList reports;  // sorted by check_id
  bool passed = true;
};

// Runs the selected suites ("all" expands to every suite) on a worker pool.
RunResult run_checks(const RunConfig& cfg);

// Worker count: explicit value, else QGAUSS_THREADS, else the hardware count.
int worker_count(int requested);

}  // namespace qgauss
