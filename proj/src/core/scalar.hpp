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

#include <optional>
#include <string>
#include <string_view>

#include "big_rational.hpp"
#include "rational_function.hpp"

namespace qgauss {

struct VarQ { static constexpr std::string_view name = "q"; };
struct VarA { static constexpr std::string_view name = "a"; };
struct VarZ { static constexpr std::string_view name = "z"; };
struct VarW { static constexpr std::string_view name = "w"; };
struct VarU { static constexpr std::string_view name = "u"; };

// Q(q): the ground field.
using ScalarQ = RationalFunction<BigRational, VarQ>;
// Rational functions of the spectral ratio over Q(q); entries of R(u).
using RatFuncU = RationalFunction<ScalarQ, VarU>;
// Q(q)(a): coefficients of L-operator modes. Numeric a is a constant here.
using Coeff = RationalFunction<ScalarQ, VarA>;
// Rational operators in the spectral variable z over Q(q)(a).
using RatFuncZ = RationalFunction<Coeff, VarZ>;

inline Coeff lift_coeff(const ScalarQ& s) { return Coeff(s); }
inline RatFuncZ lift_z(const Coeff& c) { return RatFuncZ(c); }
inline RatFuncZ lift_z(const ScalarQ& s) { return RatFuncZ(Coeff(s)); }

// How q and a enter a run: symbolic, or specialized to rationals.
struct Specialization {
  std::optional<BigRational> q;
  std::optional<BigRational> a;

  ScalarQ q_value() const { return q ? ScalarQ(ScalarQ::Poly(*q)) : ScalarQ::variable(); }
  Coeff a_value() const {
    return a ? Coeff(ScalarQ(ScalarQ::Poly(*a))) : Coeff::variable();
  }
  std::string q_text() const { return q ? q->to_string() : "q"; }
  std::string a_text() const { return a ? a->to_string() : "a"; }
};

// Parse arithmetic text (numbers, q, a, z, w, + - * / ^ and parentheses)
// into the given field.
ScalarQ parse_scalar(std::string_view text, const Specialization& spec = {});
Coeff parse_coeff(std::string_view text, const Specialization& spec = {});

}  // namespace qgauss
