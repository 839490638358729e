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

#ifndef CHEAPTALK_GEOMETRY_HPP
#define CHEAPTALK_GEOMETRY_HPP

#include "cheaptalk/feasibility.hpp"
#include "cheaptalk/robustness.hpp"

namespace cheaptalk {

struct NotInD : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AnchorMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotRobustEquilibrium : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WitnessSearchFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The mixture-difference polytope D = { r - r' : supp r in A(mu),
// supp r' in A(mu') } has linear span of dimension |A(mu) u A(mu')| - 1.
int dim_span_D(const Game& g, const Belief& mu, const Belief& mup);

// Generator matrix with one column e_a - e_a' per action pair, ordered
// lexicographically; its exact rank equals dim_span_D.
Mat difference_generators(const Game& g, const Belief& mu, const Belief& mup);

// Decomposes x in D as (r, r') = (x+ + d, x- + d) with d >= 0 supported on
// the shared actions, transporting the slack from the anchor decomposition
// of a nearby x0 so that the output moves continuously with x:
// ||r-r0||inf + ||r'-r0'||inf <= ||x+-x0+||inf + ||x--x0-||inf + 2|1.(x0+-x+)|.
// eps bounds the allowed max-norm distance of x from the anchor's x0
// (negative disables the check).
std::pair<Vec, Vec> decompose_difference(const Vec& x,
                                         const std::vector<int>& actions_mu,
                                         const std::vector<int>& actions_mup,
                                         const std::pair<Vec, Vec>& anchor,
                                         const Rat& eps);

// A certified ball of sender-utility pairs: every point of
// B(center, radius) admits an equilibrium on the witness's posterior pair
// with interim payoffs near the target and mixture difference inside
// B(x_center, x_radius).
struct PerturbationWitness {
  Vec center_u1;
  Vec center_u2;
  Rat radius;
  Vec x_center;
  Rat x_radius;
  std::string construction_case;  // open_halfspaces | one_equality_wedge |
                                  // two_equality_triple | babbling
  Vec lambda;                     // barycentric internals (may be empty)
  Rat delta;                      // interiorization shift used, 0 if unused
  Belief mu;
  Belief mup;
  std::array<Rat, 2> target;
  Rat eps_payoff;
};

// Builds and confirms a witness for a robust one- or two-posterior
// equilibrium. The radius starts at the target and halves until a
// deterministic confirmation run passes; below 2^-20 the search fails.
PerturbationWitness perturbation_witness(const Game& g, const Equilibrium& e,
                                         const Rat& target_radius_u,
                                         const Rat& target_radius_x);

// Exhaustively re-checks the witness ball: deterministic boundary points
// plus n_samples dyadic draws. Fills *failure with the first offending
// perturbation if any.
bool confirm_witness(const Game& g, const PerturbationWitness& w,
                     int n_samples, std::uint64_t seed,
                     std::string* failure = nullptr);

nlohmann::json witness_to_json(const PerturbationWitness& w);

}  // namespace cheaptalk

#endif  // CHEAPTALK_GEOMETRY_HPP
