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

#ifndef CHEAPTALK_ROBUSTNESS_HPP
#define CHEAPTALK_ROBUSTNESS_HPP

#include "cheaptalk/equilibrium.hpp"

namespace cheaptalk {

enum class RobustStatus { fully_robust, robust, not_robust };

// Which closed-form criterion decided the verdict. The "cond" rules apply to
// two-posterior equilibria; the attainability rules to payoff levels with
// the extreme support fixed; "sufficient" is the two-low-actions shortcut.
enum class RobustRule {
  babbling,
  cond_fully_revealing,    // support {0,1}
  cond_one_degenerate,     // one degenerate posterior, union of >= 3 actions
  cond_large_union,        // union of >= 4 actions
  attain_boundary_value,   // s attainable at a degenerate belief
  attain_disjoint_sets,    // optimal sets at the extremes are disjoint
  attain_large_set,        // >= 3 optimal actions at one extreme
  attain_sufficient,       // two low-value actions each optimal somewhere
  none,
};

std::string to_string(RobustStatus s);
std::string to_string(RobustRule r);

struct RobustnessVerdict {
  RobustStatus status = RobustStatus::not_robust;
  RobustRule rule = RobustRule::none;
  std::string notes;
};

struct UnsupportedSupportSize : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RefuterInapplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotGeneric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Classifies a one- or two-posterior equilibrium. Babbling is fully robust;
// for a payoff outside V(mu0) the verdict follows the three support-shape
// conditions; a payoff inside V(mu0) is robust by switching to the babbling
// equilibrium with the same payoff (noted).
RobustnessVerdict classify_two_posterior(const Game& g, const Equilibrium& e);

// Is payoff s attainable in a robust equilibrium, with the support fixed at
// the extreme posteriors? Requires max V(mu0) < s <= envelope.
RobustnessVerdict robust_attainable(const Game& g, const Rat& s);

// All payoffs attainable in some robust equilibrium: V(mu0) plus the robust
// part of (max V(mu0), envelope], found by exact candidate-point scan over
// the sender's action values.
IntervalSet robust_payoff_set(const Game& g);

// Same set for an abstract generic profile via the short characterization:
// s is robust iff s is in the payoff set and in V(mu0), in V(0) or V(1), or
// between the second-lowest cell value and the envelope.
IntervalSet generic_robust_set(const ValueProfile& profile, const Belief& mu0);

// Direction along which tilting the second state's sender utility breaks
// every equilibrium on the given support with a payoff away from V(mu0).
struct Refuter {
  Vec direction;
  std::vector<Rat> epsilons;  // suggested shrinking tilts, largest first
};

Refuter fully_robust_refuter(const Game& g, const Equilibrium& e);

}  // namespace cheaptalk

#endif  // CHEAPTALK_ROBUSTNESS_HPP
