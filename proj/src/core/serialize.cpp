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

#include "serialize.hpp"

namespace qgauss {
namespace {

Json window_json(const Rect& w) { return Json{{"z", {w.zlo, w.zhi}}, {"w", {w.wlo, w.whi}}}; }

Json block_json(const CoeffMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const VerificationReport& r) {
  Json j;
  j["check_id"] = r.check_id;
  j["paper_anchor"] = r.paper_anchor;
  j["verdict"] = verdict_name(r.verdict);
  j["diagnostic"] = r.diagnostic;
  j["window"] = r.window ? window_json(*r.window) : Json(nullptr);
  j["compared"] = r.compared;
  if (r.first_mismatch) {
    Json idx = Json::array();
    for (const auto& [k, v] : r.first_mismatch->indices) idx.push_back({k, v});
    j["first_mismatch"] = {{"indices", idx}, {"expected", r.first_mismatch->expected}, {"got", r.first_mismatch->got}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["note"] = r.note;
  j["wall_time"] = r.wall_time;
  return j;
}

Json to_json(const ReportList& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

Json to_json(const RMatrix& r) {
  Json entries = Json::array();
  for (int i = 0; i < r.value.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < r.value.cols(); ++j) row.push_back(to_string(r.value(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"n", r.n}, {"convention", convention_name(r.convention)}, {"q", to_string(r.q)}, {"entries", entries}};
}

Json series_table(const MatSeries& s, int qdim) {
  const int rn = s.zero().rows() / qdim, cn = s.zero().cols() / qdim;
  Json entries = Json::array();
  for (int i = 0; i < rn; ++i)
    for (int j = 0; j < cn; ++j)
      for (int k = s.lo(); k <= s.hi(); ++k) {
        CoeffMat b = aux_block(s[k], qdim, i, j, 1, 1);
        if (b.is_zero()) continue;
        entries.push_back({{"i", i + 1}, {"j", j + 1}, {"exponent", k}, {"entry", block_json(b)}});
      }
  return Json{{"rows", rn},
              {"cols", cn},
              {"qdim", qdim},
              {"window", {s.lo(), s.hi()}},
              {"zero_below", s.zero_below()},
              {"zero_above", s.zero_above()},
              {"entries", entries}};
}

MatSeries series_from_table(const Json& t, int qdim, const Specialization& spec) {
  try {
    const int rn = t.at("rows").get<int>(), cn = t.at("cols").get<int>();
    if (t.at("qdim").get<int>() != qdim) fail(ErrorCode::shape_error, "table quantum dimension mismatch");
    const int lo = t.at("window").at(0).get<int>(), hi = t.at("window").at(1).get<int>();
    if (lo > hi) fail(ErrorCode::parse_error, "empty window in table");
    CoeffMat zero(rn * qdim, cn * qdim);
    MatSeries s(lo, hi, t.at("zero_below").get<bool>(), t.at("zero_above").get<bool>(), zero);
    for (int k = lo; k <= hi; ++k) s[k] = zero;
    for (const auto& e : t.at("entries")) {
      const int i = e.at("i").get<int>() - 1, j = e.at("j").get<int>() - 1, k = e.at("exponent").get<int>();
      if (i < 0 || i >= rn || j < 0 || j >= cn || k < lo || k > hi)
        fail(ErrorCode::parse_error, "table index out of range");
      const Json& b = e.at("entry");
      if (static_cast<int>(b.size()) != qdim) fail(ErrorCode::parse_error, "quantum block has the wrong size");
      for (int r = 0; r < qdim; ++r) {
        if (static_cast<int>(b.at(r).size()) != qdim) fail(ErrorCode::parse_error, "quantum block has the wrong size");
        for (int c = 0; c < qdim; ++c)
          s[k](i * qdim + r, j * qdim + c) = parse_coeff(b.at(r).at(c).get<std::string>(), spec);
      }
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("malformed coefficient table: ") + e.what());
  }
}

Json to_json(const LPair& lp) {
  return Json{{"n", lp.n},
              {"qdim", lp.qdim},
              {"order", lp.order},
              {"rho", to_string(lp.rho)},
              {"transposed", lp.transposed},
              {"plus", series_table(lp.plus, lp.qdim)},
              {"minus", series_table(lp.minus, lp.qdim)}};
}

LPair lpair_from_json(const Json& j, const Specialization& spec) {
  try {
    LPair lp;
    lp.n = j.at("n").get<int>();
    lp.qdim = j.at("qdim").get<int>();
    lp.order = j.at("order").get<int>();
    if (lp.n < 1 || lp.qdim < 1) fail(ErrorCode::parse_error, "bad dimensions");
    lp.rho = parse_coeff(j.at("rho").get<std::string>(), spec);
    lp.transposed = j.at("transposed").get<bool>();
    lp.plus = series_from_table(j.at("plus"), lp.qdim, spec);
    lp.minus = series_from_table(j.at("minus"), lp.qdim, spec);
    if (lp.plus.zero().rows() != lp.n * lp.qdim || lp.minus.zero().rows() != lp.n * lp.qdim)
      fail(ErrorCode::shape_error, "table size does not match n");
    return lp;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("malformed L-operator document: ") + e.what());
  }
}

Json to_json(const GaussFactors& g) {
  return Json{{"n", g.n},
              {"qdim", g.qdim},
              {"sign", sign_name(g.sign)},
              {"K", series_table(g.kk, g.qdim)},
              {"k", series_table(g.k, g.qdim)},
              {"e", series_table(g.e, g.qdim)},
              {"f", series_table(g.f, g.qdim)}};
}

}  // namespace qgauss
