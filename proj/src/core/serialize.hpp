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

#include <json.hpp>

#include "gauss.hpp"
#include "loperator.hpp"
#include "report.hpp"
#include "rmatrix.hpp"

namespace qgauss {

using Json = nlohmann::ordered_json;

Json to_json(const VerificationReport& r);
Json to_json(const ReportList& reports);

// {n, convention, q, entries}: entries as canonical "num/den" strings.
Json to_json(const RMatrix& r);

// Coefficient tables keyed by (i, j, exponent), 1-based aux indices; each entry
// is the quantum block as a matrix of canonical strings.
Json series_table(const MatSeries& s, int qdim);
MatSeries series_from_table(const Json& table, int qdim, const Specialization& spec);

Json to_json(const LPair& lp);
LPair lpair_from_json(const Json& j, const Specialization& spec);

Json to_json(const GaussFactors& g);

}  // namespace qgauss
