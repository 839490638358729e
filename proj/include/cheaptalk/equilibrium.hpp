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

#ifndef CHEAPTALK_EQUILIBRIUM_HPP
#define CHEAPTALK_EQUILIBRIUM_HPP

#include <optional>
#include <utility>

#include "cheaptalk/best_reply.hpp"

namespace cheaptalk {

// One posterior in the support of a belief-form equilibrium: the posterior
// itself, its weight under the posterior distribution, and the receiver's
// mixed action after that posterior.
struct PosteriorAtom {
  Belief mu;
  Rat weight;
  Vec mix;
};

// Belief-form equilibrium: a Bayes-plausible posterior distribution with a
// receiver mixture per posterior, plus the sender's interim payoffs
// s*(theta) = max_k u_S(theta) . mix_k.
struct Equilibrium {
  std::vector<PosteriorAtom> support;
  std::array<Rat, 2> interim;
};

struct Outcome {
  std::vector<std::pair<Belief, Rat>> belief_distribution;
  std::array<Rat, 2> interim;
};

Outcome outcome_of(const Equilibrium& e);

// Message-form equilibrium. sender_strategy is 2 x |M| (row = state);
// beliefs[m] is the posterior the receiver holds after message m.
struct MessageEquilibrium {
  std::vector<std::string> messages;
  Mat sender_strategy;
  std::vector<Vec> receiver_strategies;
  std::vector<Belief> beliefs;
};

struct NotAnEquilibrium : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleSupport : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Verdict of the exact equilibrium check. Violations are reported as data;
// recomputed_interim is always max_k u_S(theta) . mix_k, whether or not the
// candidate passes.
struct EquilibriumCheck {
  bool ok = true;
  std::vector<std::string> violations;
  std::array<Rat, 2> recomputed_interim;
};

// Checks all three equilibrium clauses exactly: Bayes plausibility of the
// weights, receiver optimality of every mixture, and sender indifference
// across the posteriors each state can induce. Also flags a stored interim
// pair that disagrees with the recomputed one.
EquilibriumCheck check_equilibrium(const Game& g, const Equilibrium& e);

// All ex ante sender payoffs attainable in some equilibrium of g.
IntervalSet equilibrium_payoff_set(const Game& g);

Rat quasiconcave_envelope(const Game& g, const Belief& mu0);

std::pair<Belief, Belief> extreme_support(const Game& g, const Rat& s);

// Builds an equilibrium with sender payoff s. Without an explicit support it
// uses a babbling mixture when s is attainable at the prior and the extreme
// two-posterior support otherwise. With an explicit support (mu, mu'), both
// value intervals must contain s and the prior must lie strictly between.
Equilibrium construct_equilibrium(const Game& g, const Rat& s);
Equilibrium construct_equilibrium(const Game& g, const Rat& s,
                                  const std::pair<Belief, Belief>& support);

// Reduces the support to at most two posteriors, keeping the receiver
// mixtures and the interim payoffs unchanged.
Equilibrium caratheodory_reduce(const Game& g, const Equilibrium& e);

// Expands a belief-form equilibrium into message form, one message per
// posterior, with sender strategy pinned down by Bayes' rule.
MessageEquilibrium expand_to_messages(const Game& g, const Equilibrium& e);

// Collapses a message equilibrium back to its induced outcome (used to test
// that expand_to_messages round-trips).
Outcome collapse_messages(const Game& g, const MessageEquilibrium& m);

nlohmann::json equilibrium_to_json(const Equilibrium& e);
Equilibrium equilibrium_from_json(const nlohmann::json& j);
nlohmann::json message_equilibrium_to_json(const MessageEquilibrium& m);

}  // namespace cheaptalk

#endif  // CHEAPTALK_EQUILIBRIUM_HPP
