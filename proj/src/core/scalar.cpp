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

#include "scalar.hpp"

#include <cctype>
#include <map>
#include <type_traits>

#include "error.hpp"

namespace qgauss {
namespace {

template <class T>
class Parser {
 public:
  Parser(std::string_view s, std::map<std::string, T> symbols) : s_(s), symbols_(std::move(symbols)) {}

  T run() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) error("trailing input");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse_error, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  T term() {
    T v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        T d = unary();
        if (d.is_zero()) error("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  T unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  T power() {
    T base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    T r(1);
    for (long i = 0; i < e; ++i) r = r * base;
    if (neg) {
      if (r.is_zero()) error("zero to a negative power");
      r = T(1) / r;
    }
    return r;
  }
  T atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      BigRational v = BigRational::parse(s_.substr(start, pos_ - start));
      if constexpr (std::is_same_v<T, ScalarQ>) {
        return ScalarQ(ScalarQ::Poly(v));
      } else {
        return T(ScalarQ(ScalarQ::Poly(v)));
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = symbols_.find(name);
      if (it == symbols_.end()) error("unknown symbol '" + name + "'");
      return it->second;
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::string, T> symbols_;
};

}  // namespace

ScalarQ parse_scalar(std::string_view text, const Specialization& spec) {
  return Parser<ScalarQ>(text, {{"q", spec.q_value()}}).run();
}

Coeff parse_coeff(std::string_view text, const Specialization& spec) {
  return Parser<Coeff>(text, {{"q", Coeff(spec.q_value())}, {"a", spec.a_value()}}).run();
}

}  // namespace qgauss
