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

#include "cheaptalk/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace cheaptalk {

bool IntervalSet::contains(const Rat& s) const {
  for (const auto& c : components)
    if (c.contains(s)) return true;
  return false;
}

Rat IntervalSet::min() const {
  if (components.empty()) throw std::logic_error("empty interval set");
  return components.front().lo;
}

Rat IntervalSet::max() const {
  if (components.empty()) throw std::logic_error("empty interval set");
  return components.back().hi;
}

void IntervalSet::add(Component c) {
  if (c.lo > c.hi) return;
  if (c.lo == c.hi && !(c.lo_closed && c.hi_closed)) return;  // empty
  std::vector<Component> merged;
  for (const auto& existing : components) {
    // Two components touch if their closures overlap and at least one side
    // of every shared endpoint is closed.
    bool disjoint = existing.hi < c.lo || c.hi < existing.lo ||
                    (existing.hi == c.lo && !existing.hi_closed && !c.lo_closed) ||
                    (c.hi == existing.lo && !c.hi_closed && !existing.lo_closed);
    if (disjoint) {
      merged.push_back(existing);
      continue;
    }
    if (existing.lo < c.lo) {
      c.lo = existing.lo;
      c.lo_closed = existing.lo_closed;
    } else if (existing.lo == c.lo) {
      c.lo_closed = c.lo_closed || existing.lo_closed;
    }
    if (existing.hi > c.hi) {
      c.hi = existing.hi;
      c.hi_closed = existing.hi_closed;
    } else if (existing.hi == c.hi) {
      c.hi_closed = c.hi_closed || existing.hi_closed;
    }
  }
  merged.push_back(c);
  std::sort(merged.begin(), merged.end(),
            [](const Component& a, const Component& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  components = std::move(merged);
}

nlohmann::json interval_set_to_json(const IntervalSet& s) {
  nlohmann::json points = nlohmann::json::array();
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& c : s.components) {
    if (c.is_point()) {
      points.push_back(rational_to_json(c.lo));
    } else {
      intervals.push_back({{"lo", rational_to_json(c.lo)},
                           {"lo_closed", c.lo_closed},
                           {"hi", rational_to_json(c.hi)},
                           {"hi_closed", c.hi_closed}});
    }
  }
  return {{"points", points}, {"intervals", intervals}};
}

IntervalSet interval_set_from_json(const nlohmann::json& j) {
  IntervalSet s;
  for (const auto& p : j.at("points")) s.add_point(parse_rational(p));
  for (const auto& c : j.at("intervals"))
    s.add({parse_rational(c.at("lo")), parse_rational(c.at("hi")),
           c.at("lo_closed").get<bool>(), c.at("hi_closed").get<bool>()});
  return s;
}

}  // namespace cheaptalk
