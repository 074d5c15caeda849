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

#include "report.hpp"

#include <cstdio>

namespace qgauss {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

std::string report_text(const VerificationReport& r) {
  std::string out = std::string(verdict_name(r.verdict)) + "  " + r.check_id;
  if (r.diagnostic) out += "  [diagnostic]";
  if (r.window) {
    const Rect& w = *r.window;
    out += "  window z[" + std::to_string(w.zlo) + "," + std::to_string(w.zhi) + "] w[" + std::to_string(w.wlo) +
           "," + std::to_string(w.whi) + "] (" + std::to_string(r.compared) + " points)";
  }
  char t[32];
  std::snprintf(t, sizeof t, "  %.3fs", r.wall_time);
  out += t;
  if (!r.note.empty()) out += "\n      " + r.note;
  if (r.first_mismatch) {
    out += "\n      first mismatch at";
    for (const auto& [k, v] : r.first_mismatch->indices) out += " " + k + "=" + std::to_string(v);
    out += "\n        expected: " + r.first_mismatch->expected + "\n        got:      " + r.first_mismatch->got;
  }
  return out;
}

}  // namespace qgauss
