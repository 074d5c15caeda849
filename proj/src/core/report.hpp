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

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biseries.hpp"
#include "matrix.hpp"

namespace qgauss {

enum class Verdict { pass, fail, skipped };

const char* verdict_name(Verdict v);

struct Mismatch {
  std::vector<std::pair<std::string, int>> indices;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string check_id;
  std::string paper_anchor;  // the relation checked, stated in plain notation
  Verdict verdict = Verdict::pass;
  // Compared region; absent for exact (non-series) comparisons.
  std::optional<Rect> window;
  long compared = 0;
  std::optional<Mismatch> first_mismatch;
  std::string note;
  bool diagnostic = false;  // informational; excluded from the exit status
  double wall_time = 0.0;
};

using ReportList = std::vector<VerificationReport>;

// Entry-level difference of two matrices; empty when equal.
template <class C>
std::optional<Mismatch> mat_diff(const Mat<C>& expected, const Mat<C>& got) {
  if (expected.rows() != got.rows() || expected.cols() != got.cols())
    return Mismatch{{}, "shape " + expected.shape(), "shape " + got.shape()};
  for (int i = 0; i < expected.rows(); ++i)
    for (int j = 0; j < expected.cols(); ++j)
      if (!(expected(i, j) == got(i, j))) {
        using std::to_string;
        return Mismatch{{{"row", i + 1}, {"col", j + 1}}, to_string(expected(i, j)), to_string(got(i, j))};
      }
  return std::nullopt;
}

// Fill a report from a bi-series comparison.
template <class D>
void record(VerificationReport& rep, const CompareResult<D>& res) {
  rep.window = res.window;
  rep.compared = res.compared;
  rep.verdict = res.equal ? Verdict::pass : Verdict::fail;
  if (!res.equal) {
    Mismatch m = *res.detail;
    m.indices.insert(m.indices.begin(), {{"z", res.i}, {"w", res.j}});
    rep.first_mismatch = std::move(m);
  }
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string report_text(const VerificationReport& r);

}  // namespace qgauss
