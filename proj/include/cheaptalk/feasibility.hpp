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

#ifndef CHEAPTALK_FEASIBILITY_HPP
#define CHEAPTALK_FEASIBILITY_HPP

#include <optional>

#include "cheaptalk/equilibrium.hpp"

namespace cheaptalk {

enum class ConstraintKind { equality, geq, leq, none };

// Sign constraints on the sender's interim comparison u(theta) . (r - r')
// between the two posteriors mu < mu', plus an optional max-norm window
// around x_center (skipped when x_radius < 0). A state that can induce both
// posteriors forces indifference; a state that can induce only one forces a
// weak preference.
struct SignConstraintSystem {
  ConstraintKind theta1 = ConstraintKind::none;  // on u1 . x
  ConstraintKind theta2 = ConstraintKind::none;  // on u2 . x
  Vec x_center;
  Rat x_radius = -1;
};

SignConstraintSystem sign_constraints(const Belief& mu, const Belief& mup);

// One exact feasibility instance: does the perturbed game have an
// equilibrium on the fixed posterior pair with interim payoffs inside the
// target window and, optionally, mixture difference near x_center?
struct FeasibilityQuery {
  std::vector<int> actions_mu;   // receiver-optimal actions at mu
  std::vector<int> actions_mup;  // receiver-optimal actions at mu'
  int num_actions = 0;
  Vec u1;  // perturbed sender utility in the first state
  Vec u2;  // perturbed sender utility in the second state
  Belief mu;
  Belief mup;
  SignConstraintSystem signs;
  std::array<Rat, 2> target;
  Rat eps_payoff;
};

FeasibilityQuery make_query(const Game& g, const Vec& u1, const Vec& u2,
                            const Belief& mu, const Belief& mup,
                            const std::array<Rat, 2>& target,
                            const Rat& eps_payoff);

struct FeasibilityResult {
  bool feasible = false;
  Vec r;   // receiver mixture at mu, full action space
  Vec rp;  // receiver mixture at mu'
  Vec x;   // r - rp
  std::array<Rat, 2> payoffs;
  std::string certificate;  // contradictory eliminated constraint if infeasible
};

// Exact Fourier-Motzkin feasibility over (r, r') in the product of mixture
// simplices. The interim payoffs are linear under the sign constraints:
// s(theta1) = u1 . r and s(theta2) = u2 . r'.
FeasibilityResult perturbed_equilibrium_search(const FeasibilityQuery& q);

// Searches every posterior pair compatible with the cell structure of g for
// an equilibrium of the perturbed sender utility with interim payoffs in the
// target window. Returns the first support found, or nothing.
std::optional<FeasibilityResult> exhaustive_two_posterior_search(
    const Game& g, const Vec& u1, const Vec& u2,
    const std::array<Rat, 2>& target, const Rat& eps_payoff);

}  // namespace cheaptalk

#endif  // CHEAPTALK_FEASIBILITY_HPP
