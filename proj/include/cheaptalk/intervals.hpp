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

#ifndef CHEAPTALK_INTERVALS_HPP
#define CHEAPTALK_INTERVALS_HPP

#include <vector>

#include "cheaptalk/rational.hpp"

namespace cheaptalk {

// Finite union of intervals and isolated points on the payoff axis.
// Components are kept sorted, disjoint, and maximally merged.
struct IntervalSet {
  struct Component {
    Rat lo;
    Rat hi;
    bool lo_closed = true;
    bool hi_closed = true;

    bool is_point() const { return lo == hi; }
    bool contains(const Rat& s) const {
      if (s < lo || s > hi) return false;
      if (s == lo && !lo_closed) return false;
      if (s == hi && !hi_closed) return false;
      return true;
    }
  };

  std::vector<Component> components;

  bool empty() const { return components.empty(); }
  bool contains(const Rat& s) const;
  Rat min() const;  // requires nonempty, leftmost endpoint
  Rat max() const;  // requires nonempty, rightmost endpoint

  void add_point(const Rat& s) { add({s, s, true, true}); }
  void add(Component c);  // merges with existing components

  bool operator==(const IntervalSet& other) const {
    return components == other.components;
  }
};

inline bool operator==(const IntervalSet::Component& a,
                       const IntervalSet::Component& b) {
  return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
         a.hi_closed == b.hi_closed;
}

nlohmann::json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& j);

}  // namespace cheaptalk

#endif  // CHEAPTALK_INTERVALS_HPP
