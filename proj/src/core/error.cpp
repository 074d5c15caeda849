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

#include "error.hpp"

namespace qgauss {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::degenerate_scalar: return "DegenerateScalar";
    case ErrorCode::pole_at_expansion_point: return "PoleAtExpansionPoint";
    case ErrorCode::window_underflow: return "WindowUnderflow";
    case ErrorCode::shape_error: return "ShapeError";
    case ErrorCode::singular_matrix: return "SingularMatrix";
    case ErrorCode::singular_leading_term: return "SingularLeadingTerm";
    case ErrorCode::normalization_failure: return "NormalizationFailure";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_config: return "InvalidConfig";
  }
  return "Error";
}

}  // namespace qgauss
