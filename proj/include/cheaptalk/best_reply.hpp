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

#ifndef CHEAPTALK_BEST_REPLY_HPP
#define CHEAPTALK_BEST_REPLY_HPP

#include <vector>

#include "cheaptalk/game.hpp"
#include "cheaptalk/intervals.hpp"

namespace cheaptalk {

// One cell of the belief-interval decomposition: a point (lo == hi) or an
// open interval (lo, hi). The receiver's optimal-action set is constant on
// the cell.
struct Cell {
  Belief lo;
  Belief hi;
  std::vector<int> optimal_actions;  // sorted action indices, nonempty

  bool is_point() const { return lo == hi; }
  // A belief inside the cell, used wherever one sample decides the cell.
  Belief representative() const { return is_point() ? lo : (lo + hi) / 2; }
  bool contains(const Belief& mu) const {
    return is_point() ? mu == lo : (lo < mu && mu < hi);
  }
};

// Exact cell decomposition of [0,1]. Cells tile the interval: point cells at
// 0 and 1, point cells at every retained interior breakpoint, open intervals
// between them.
struct BestReplyPartition {
  std::vector<Cell> cells;

  const Cell& cell_at(const Belief& mu) const;
  int cell_index_at(const Belief& mu) const;
};

struct ValueInterval {
  Rat lo;
  Rat hi;
  bool operator==(const ValueInterval&) const = default;
  bool contains(const Rat& s) const { return lo <= s && s <= hi; }
};

// Partition plus the sender value interval co v_S(A(mu)) per cell. Profiles
// can also be supplied directly ("abstract mode"), in which case the cells
// carry empty action sets.
struct ValueProfile {
  BestReplyPartition partition;
  std::vector<ValueInterval> values;

  const ValueInterval& value_at(const Belief& mu) const {
    return values[partition.cell_index_at(mu)];
  }
};

// argmax_a u_R(a,.) under belief mu; exact comparison, sorted indices.
std::vector<int> best_reply_set(const Game& g, const Belief& mu);

// Builds the cell decomposition from the rational roots in (0,1) of the
// pairwise receiver-indifference equations. Interior breakpoints whose
// action set matches both neighbors are merged away.
BestReplyPartition best_reply_partition(const Game& g);

// [min, max] of v_S over best_reply_set(g, mu). Requires transparency.
ValueInterval value_correspondence(const Game& g, const Belief& mu);

ValueProfile value_profile(const Game& g);

// --- Profile-level analysis, shared by concrete and abstract modes. ---

// Quasiconcave envelope at mu0: min of the running maxima of the value
// correspondence over [0, mu0] and [mu0, 1].
Rat envelope_at(const ValueProfile& profile, const Belief& mu0);

// All ex ante sender payoffs supported by some Bayes-plausible posterior
// distribution at prior mu0: V(mu0) plus every intersection V(mu) ∩ V(mu')
// with mu < mu0 < mu'. Closed components.
IntervalSet payoff_set(const ValueProfile& profile, const Belief& mu0);

// Leftmost belief below mu0 and rightmost belief above mu0 whose value
// interval contains s. Requires envelope_at(mu0) >= s > max V(mu0); both
// extremes exist and land on point cells by upper hemicontinuity.
struct PayoffNotAttainable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BabblingSuffices : std::runtime_error {
  using std::runtime_error::runtime_error;
};
std::pair<Belief, Belief> extreme_support(const ValueProfile& profile,
                                          const Belief& mu0, const Rat& s);

nlohmann::json value_profile_to_json(const ValueProfile& p);
ValueProfile value_profile_from_json(const nlohmann::json& j);

}  // namespace cheaptalk

#endif  // CHEAPTALK_BEST_REPLY_HPP
