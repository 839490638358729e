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

#ifndef CHEAPTALK_VERIFIER_HPP
#define CHEAPTALK_VERIFIER_HPP

#include "cheaptalk/geometry.hpp"

namespace cheaptalk {

enum class VerifierVerdict { consistent, refuted, inconclusive };

std::string to_string(VerifierVerdict v);

struct VerifierFailure {
  Vec u1;
  Vec u2;
  std::string reason;  // exact infeasibility certificate
};

struct VerifierReport {
  VerifierVerdict verdict = VerifierVerdict::inconclusive;
  int samples_tested = 0;
  std::vector<VerifierFailure> failures;
  Vec center_u1;
  Vec center_u2;
  std::uint64_t seed = 0;
  std::string notes;
};

nlohmann::json verifier_report_to_json(const VerifierReport& r);

// Ball test of robustness: find one utility pair near the sender's whose
// whole neighborhood keeps an equilibrium with the fixed posterior pair and
// nearby payoffs. The center comes from the constructive witness when the
// closed-form classification says robust, otherwise from a capped grid of
// candidate centers; refuted means every candidate center failed a sample.
VerifierReport monte_carlo_robustness(const Game& g, const Equilibrium& e,
                                      const Rat& eps_u, const Rat& eps_payoff,
                                      int n_samples, std::uint64_t seed);

// Ball test of full robustness: the ball is centered at the sender's own
// utility and a single exact infeasibility refutes. The known refuting tilt
// direction, when applicable, is tested first.
VerifierReport monte_carlo_full_robustness(const Game& g, const Equilibrium& e,
                                           const Rat& eps_u,
                                           const Rat& eps_payoff, int n_samples,
                                           std::uint64_t seed);

}  // namespace cheaptalk

#endif  // CHEAPTALK_VERIFIER_HPP
