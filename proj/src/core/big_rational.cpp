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

#include "big_rational.hpp"

#include <cctype>

#include "error.hpp"

namespace qgauss {

BigRational::BigRational(long num, long den) {
  if (den == 0) fail(ErrorCode::degenerate_scalar, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) fail(ErrorCode::degenerate_scalar, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

BigRational BigRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorCode::parse_error, "empty rational");
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den)) fail(ErrorCode::parse_error, "not a rational: " + std::string(text));
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorCode::degenerate_scalar, "zero denominator in " + std::string(text));
  mpq_class v(n, d);
  v.canonicalize();
  return BigRational(v);
}

}  // namespace qgauss
