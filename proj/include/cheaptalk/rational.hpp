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

#ifndef CHEAPTALK_RATIONAL_HPP
#define CHEAPTALK_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>

#include "json.hpp"

namespace cheaptalk {

// Exact rational scalar. All beliefs and payoffs live in this type; the
// solver performs no floating-point arithmetic on core quantities.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Accepts an integer JSON number, a "p/q" string, or an exact decimal
// string such as "-0.125". Throws std::invalid_argument on anything else.
Rat parse_rational(const nlohmann::json& j);

// Canonical textual form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

// JSON form mirroring parse_rational: integer number when the denominator
// is one, "p/q" string otherwise.
nlohmann::json rational_to_json(const Rat& r);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat linf_norm(const Vec& v) {
  Rat m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, abs(v[i]));
  return m;
}

inline Rat l1_norm(const Vec& v) {
  Rat m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m += abs(v[i]);
  return m;
}

// Fixed-point decimal rendering used only by the SVG/CSV emitters, where
// exact byte-determinism matters more than exactness of the value.
std::string decimal_string(const Rat& r, int digits);

}  // namespace cheaptalk

#endif  // CHEAPTALK_RATIONAL_HPP
