// Copyright 2026 The Confix Authors
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

#include "confix/localization/scores.hpp"

#include <regex>
#include <stdexcept>

#include "confix/syntax/subexpr.hpp"

namespace confix {

namespace {

// cpp_int reads a leading 0 as an octal prefix.
boost::multiprecision::cpp_int decimal(const std::string& digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string::npos ? boost::multiprecision::cpp_int(0)
                                    : boost::multiprecision::cpp_int(digits.substr(first));
}

Rational power(const Rational& base, int exponent) {
  Rational r{1};
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  static const std::regex kFraction(R"(^\s*(-?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex kDecimal(R"(^\s*(-?)(\d*)(?:\.(\d*))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, kFraction)) {
    const Rational den{decimal(m[2].str())};
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    const std::string num = m[1].str();
    const Rational r = Rational{decimal(num[0] == '-' ? num.substr(1) : num)} / den;
    return num[0] == '-' ? Rational{-r} : r;
  }
  if (std::regex_match(text, m, kDecimal) && (m[2].length() > 0 || m[3].length() > 0)) {
    const std::string whole = m[2].length() > 0 ? m[2].str() : "0";
    const std::string frac = m[3].str();
    const boost::multiprecision::cpp_int num = decimal(whole + frac);
    boost::multiprecision::cpp_int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r{num, den};
    return m[1].length() > 0 ? Rational{-r} : r;
  }
  throw std::invalid_argument("not a number: '" + text + "'");
}

std::string format_decimal(const Rational& value, int digits) {
  // Round half away from zero at `digits` places, exactly.
  boost::multiprecision::cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = abs(value) * scale;
  boost::multiprecision::cpp_int n = numerator(scaled) / denominator(scaled);
  if ((scaled - Rational{n}) * 2 >= 1) ++n;
  std::string s = n.str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (value < 0 && n != 0) s.insert(0, "-");
  return s;
}

std::string ScoreConfig::validate() const {
  if (alpha <= 0 || alpha >= 1) return "alpha must lie in (0, 1)";
  if (beta <= 0 || beta >= 1) return "beta must lie in (0, 1)";
  if (gamma < 0) return "gamma must be non-negative";
  return {};
}

Rational dynamic_score(int passing, int failing, const ScoreConfig& c) {
  const Rational& a = c.alpha;
  return c.gamma + a / (1 - a) * (1 - c.beta + c.beta * power(a, passing) - power(a, failing));
}

Rational dynamic_score_series(int passing, int failing, const ScoreConfig& c) {
  Rational fail_sum{0};
  Rational pass_sum{0};
  Rational term = c.alpha;
  for (int i = 1; i <= std::max(passing, failing); ++i) {
    if (i <= failing) fail_sum += term;
    if (i <= passing) pass_sum += term;
    term *= c.alpha;
  }
  return c.gamma + fail_sum - c.beta * pass_sum;
}

Rational fixme_score(const Rational& edep, const Rational& cdep, const Rational& dyn) {
  if (edep == 0 || cdep == 0 || dyn == 0) return Rational{0};
  return Rational{3} / (1 / edep + 1 / cdep + 1 / dyn);
}

Rational control_dependence(const ControlFlowGraph& cfg, int l, int j) {
  const auto dist = cfg.distances_to(j);
  if (l < 1 || l >= static_cast<int>(dist.size()) || !dist[l]) return Rational{0};
  int max = 0;
  for (const auto& d : dist) {
    if (d) max = std::max(max, *d);
  }
  if (max == 0) return Rational{l == j ? 1 : 0};
  return 1 - Rational{*dist[l], max};
}

int expression_proximity(const ExprPtr& a, const ExprPtr& b) {
  const ExprSet sa = sub_of_expression(a);
  const ExprSet sb = sub_of_expression(b);
  int n = 0;
  for (const ExprPtr& e : sa) n += sb.count(e) > 0;
  return n;
}

}  // namespace confix
