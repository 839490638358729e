// Copyright 2026 The cheaptalk Authors.
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

#include "cheaptalk/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cheaptalk {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat parse_decimal(const std::string& s) {
  const std::size_t dot = s.find('.');
  std::string head = s.substr(0, dot);
  std::string tail = s.substr(dot + 1);
  if (tail.empty() || !is_integer_literal(tail) || tail[0] == '-' || tail[0] == '+')
    throw std::invalid_argument("malformed decimal literal: " + s);
  bool neg = !head.empty() && head[0] == '-';
  if (head == "-" || head == "+" || head.empty()) head += "0";
  if (!is_integer_literal(head))
    throw std::invalid_argument("malformed decimal literal: " + s);
  Int scale = 1;
  for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
  Int num = Int(head) * scale;
  Int frac = Int(tail);
  num += neg ? -frac : frac;
  return Rat(num, scale);
}

}  // namespace

Rat parse_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('.') != std::string::npos) return parse_decimal(s);
    const std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
      const std::string p = s.substr(0, slash);
      const std::string q = s.substr(slash + 1);
      if (!is_integer_literal(p) || !is_integer_literal(q))
        throw std::invalid_argument("malformed rational literal: " + s);
      Int den(q);
      if (den == 0) throw std::invalid_argument("zero denominator: " + s);
      return Rat(Int(p), den);
    }
    if (!is_integer_literal(s))
      throw std::invalid_argument("malformed rational literal: " + s);
    return Rat(Int(s));
  }
  throw std::invalid_argument("rational must be an integer or a string");
}

std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

nlohmann::json rational_to_json(const Rat& r) {
  if (denominator(r) == 1) {
    const Int num = numerator(r);
    // Stay a JSON number only while it fits; huge intermediates fall back
    // to the string form.
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
      return nlohmann::json(static_cast<long long>(num));
  }
  return nlohmann::json(to_string(r));
}

nlohmann::json vec_to_json(const Vec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v[i]));
  return out;
}

Vec vec_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = parse_rational(j[i]);
  return v;
}

std::string decimal_string(const Rat& r, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int scaled_num = numerator(r) * scale;
  Int den = denominator(r);
  // Round half away from zero on the scaled integer.
  Int q = scaled_num / den;
  Int rem = scaled_num % den;
  if (rem < 0) rem = -rem;
  if (2 * rem >= den) q += (scaled_num < 0) ? -1 : 1;
  bool neg = q < 0;
  if (neg) q = -q;
  std::string s = q.str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  // Trim trailing zeros but keep at least one fractional digit.
  std::size_t last = s.find_last_not_of('0');
  if (s[last] == '.') ++last;
  s.erase(last + 1);
  return neg ? "-" + s : s;
}

}  // namespace cheaptalk
