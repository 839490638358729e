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

#include "cheaptalk/equilibrium.hpp"

#include <algorithm>

namespace cheaptalk {

Outcome outcome_of(const Equilibrium& e) {
  Outcome o;
  for (const auto& atom : e.support)
    o.belief_distribution.emplace_back(atom.mu, atom.weight);
  o.interim = e.interim;
  return o;
}

EquilibriumCheck check_equilibrium(const Game& g, const Equilibrium& e) {
  EquilibriumCheck out;
  auto fail = [&](const std::string& msg) {
    out.ok = false;
    out.violations.push_back(msg);
  };

  if (e.support.empty()) {
    fail("clause 1: empty support");
    out.recomputed_interim = {Rat(0), Rat(0)};
    return out;
  }

  const int n = g.num_actions();
  Rat total = 0, mean = 0;
  for (std::size_t k = 0; k < e.support.size(); ++k) {
    const auto& atom = e.support[k];
    const std::string tag = "support[" + std::to_string(k) + "]";
    if (atom.mu < 0 || atom.mu > 1) fail("clause 1: " + tag + " belief outside [0,1]");
    if (atom.weight <= 0) fail("clause 1: " + tag + " weight not positive");
    total += atom.weight;
    mean += atom.weight * atom.mu;
    if (atom.mix.size() != n) {
      fail("clause 2: " + tag + " mixture has wrong dimension");
      continue;
    }
    Rat mass = 0;
    const std::vector<int> best = best_reply_set(g, atom.mu);
    for (int a = 0; a < n; ++a) {
      if (atom.mix[a] < 0) fail("clause 2: " + tag + " mixture has a negative entry");
      mass += atom.mix[a];
      if (atom.mix[a] > 0 &&
          !std::binary_search(best.begin(), best.end(), a))
        fail("clause 2: " + tag + " puts weight on suboptimal action " +
             g.actions[a]);
    }
    if (mass != 1) fail("clause 2: " + tag + " mixture does not sum to 1");
  }
  if (total != 1) fail("clause 1: weights sum to " + to_string(total));
  if (mean != g.prior * total)
    fail("clause 1: posterior mean " + to_string(mean) +
         " differs from the prior");

  // Recompute s*(theta) as the best sender payoff over the support, then
  // require every posterior a state can induce to attain it.
  for (int state = 0; state < 2; ++state) {
    const Vec u = g.sender_vector(state);
    Rat best = 0;
    bool have_best = false;
    for (const auto& atom : e.support) {
      if (atom.mix.size() != n) continue;
      const Rat value = u.dot(atom.mix);
      best = have_best ? std::max(best, value) : value;
      have_best = true;
    }
    if (!have_best) continue;  // dimension violations already recorded
    out.recomputed_interim[state] = best;
    for (std::size_t k = 0; k < e.support.size(); ++k) {
      const auto& atom = e.support[k];
      if (atom.mix.size() != n) continue;
      const bool state_in_support =
          state == 0 ? atom.mu < 1 : atom.mu > 0;
      if (state_in_support && u.dot(atom.mix) != best)
        fail("clause 3: state " + g.states[state] +
             " strictly prefers another posterior to support[" +
             std::to_string(k) + "]");
    }
    if (e.interim[state] != best)
      fail("interim payoff for state " + g.states[state] + " stored as " +
           to_string(e.interim[state]) + ", recomputed " + to_string(best));
  }
  return out;
}

IntervalSet equilibrium_payoff_set(const Game& g) {
  return payoff_set(value_profile(g), g.prior);
}

Rat quasiconcave_envelope(const Game& g, const Belief& mu0) {
  if (mu0 <= 0 || mu0 >= 1)
    throw std::invalid_argument("envelope requires an interior prior");
  return envelope_at(value_profile(g), mu0);
}

std::pair<Belief, Belief> extreme_support(const Game& g, const Rat& s) {
  return extreme_support(value_profile(g), g.prior, s);
}

namespace {

// Lexicographically-first mixture over the optimal actions with sender
// payoff s: a single action if s is one of its values, otherwise the first
// action pair whose values bracket s.
Vec mixture_for_payoff(const Game& g, const std::vector<int>& actions,
                       const Rat& s) {
  const Vec v = g.sender_values();
  Vec mix = Vec::Zero(g.num_actions());
  for (int a : actions) {
    if (v[a] == s) {
      mix[a] = 1;
      return mix;
    }
  }
  for (std::size_t i = 0; i < actions.size(); ++i) {
    for (std::size_t j = i + 1; j < actions.size(); ++j) {
      const Rat vi = v[actions[i]], vj = v[actions[j]];
      if (std::min(vi, vj) < s && s < std::max(vi, vj)) {
        const Rat q = (s - vi) / (vj - vi);
        mix[actions[i]] = 1 - q;
        mix[actions[j]] = q;
        return mix;
      }
    }
  }
  throw InfeasibleSupport("payoff " + to_string(s) +
                          " is not spanned by the optimal actions");
}

}  // namespace

Equilibrium construct_equilibrium(const Game& g, const Rat& s) {
  const ValueProfile profile = value_profile(g);
  if (profile.value_at(g.prior).contains(s)) {
    Equilibrium e;
    e.support.push_back(
        {g.prior, Rat(1),
         mixture_for_payoff(g, profile.partition.cell_at(g.prior).optimal_actions,
                            s)});
    e.interim = {s, s};
    return e;
  }
  return construct_equilibrium(g, s, extreme_support(profile, g.prior, s));
}

Equilibrium construct_equilibrium(const Game& g, const Rat& s,
                                  const std::pair<Belief, Belief>& support) {
  const ValueProfile profile = value_profile(g);
  const Belief mu = support.first, mup = support.second;
  if (!(mu < g.prior && g.prior < mup))
    throw InfeasibleSupport("prior must lie strictly between the posteriors");
  if (!profile.value_at(mu).contains(s) || !profile.value_at(mup).contains(s))
    throw InfeasibleSupport("payoff " + to_string(s) +
                            " is not attainable at both posteriors");
  const Rat w = (g.prior - mu) / (mup - mu);  // weight on mu'
  Equilibrium e;
  e.support.push_back(
      {mu, 1 - w,
       mixture_for_payoff(g, profile.partition.cell_at(mu).optimal_actions, s)});
  e.support.push_back(
      {mup, w,
       mixture_for_payoff(g, profile.partition.cell_at(mup).optimal_actions, s)});
  e.interim = {s, s};
  return e;
}

Equilibrium caratheodory_reduce(const Game& g, const Equilibrium& e) {
  const EquilibriumCheck check = check_equilibrium(g, e);
  if (!check.ok)
    throw NotAnEquilibrium("caratheodory_reduce: " + check.violations.front());
  if (e.support.size() <= 2) return e;

  // A posterior equal to the prior carries an equilibrium by itself.
  for (const auto& atom : e.support) {
    if (atom.mu == g.prior) {
      Equilibrium out;
      out.support.push_back({atom.mu, Rat(1), atom.mix});
      out.interim = e.interim;
      return out;
    }
  }

  // Otherwise pick the first posterior on each side of the prior; the two
  // Bayes-plausible weights are the unique solution of one linear equation.
  // Interim payoffs survive because each state keeps a posterior it can
  // induce, and that posterior already attains s*(theta).
  const PosteriorAtom* left = nullptr;
  const PosteriorAtom* right = nullptr;
  for (const auto& atom : e.support) {
    if (atom.mu < g.prior && !left) left = &atom;
    if (atom.mu > g.prior && !right) right = &atom;
  }
  const Rat w = (g.prior - left->mu) / (right->mu - left->mu);
  Equilibrium out;
  out.support.push_back({left->mu, 1 - w, left->mix});
  out.support.push_back({right->mu, w, right->mix});
  out.interim = e.interim;
  return out;
}

MessageEquilibrium expand_to_messages(const Game& g, const Equilibrium& e) {
  const EquilibriumCheck check = check_equilibrium(g, e);
  if (!check.ok)
    throw NotAnEquilibrium("expand_to_messages: " + check.violations.front());

  const std::size_t m = e.support.size();
  MessageEquilibrium out;
  out.sender_strategy = Mat::Zero(2, static_cast<Eigen::Index>(m));
  for (std::size_t k = 0; k < m; ++k) {
    const auto& atom = e.support[k];
    out.messages.push_back("m" + std::to_string(k) + "@" + to_string(atom.mu));
    out.beliefs.push_back(atom.mu);
    out.receiver_strategies.push_back(atom.mix);
    // sigma(m_k | theta) mu0(theta) = mu_k(theta) p(mu_k)
    out.sender_strategy(0, k) = (1 - atom.mu) * atom.weight / (1 - g.prior);
    out.sender_strategy(1, k) = atom.mu * atom.weight / g.prior;
  }
  return out;
}

Outcome collapse_messages(const Game& g, const MessageEquilibrium& m) {
  Outcome o;
  for (std::size_t k = 0; k < m.messages.size(); ++k) {
    const Rat weight = m.sender_strategy(0, k) * (1 - g.prior) +
                       m.sender_strategy(1, k) * g.prior;
    if (weight == 0) continue;
    o.belief_distribution.emplace_back(m.beliefs[k], weight);
  }
  for (int state = 0; state < 2; ++state) {
    const Vec u = g.sender_vector(state);
    Rat best = u.dot(m.receiver_strategies.front());
    for (std::size_t k = 0; k < m.messages.size(); ++k)
      if (m.sender_strategy(state, k) > 0)
        best = std::max(best, u.dot(m.receiver_strategies[k]));
    o.interim[state] = best;
  }
  return o;
}

nlohmann::json equilibrium_to_json(const Equilibrium& e) {
  nlohmann::json support = nlohmann::json::array();
  for (const auto& atom : e.support)
    support.push_back({{"mu", rational_to_json(atom.mu)},
                       {"weight", rational_to_json(atom.weight)},
                       {"mix", vec_to_json(atom.mix)}});
  return {{"support", support},
          {"interim", {rational_to_json(e.interim[0]),
                       rational_to_json(e.interim[1])}}};
}

Equilibrium equilibrium_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("support") || !j.contains("interim"))
    throw SchemaError("equilibrium needs 'support' and 'interim' fields");
  Equilibrium e;
  for (const auto& atom : j.at("support"))
    e.support.push_back({parse_rational(atom.at("mu")),
                         parse_rational(atom.at("weight")),
                         vec_from_json(atom.at("mix"))});
  const auto& interim = j.at("interim");
  if (!interim.is_array() || interim.size() != 2)
    throw SchemaError("interim must be a pair of payoffs");
  e.interim = {parse_rational(interim[0]), parse_rational(interim[1])};
  return e;
}

nlohmann::json message_equilibrium_to_json(const MessageEquilibrium& m) {
  nlohmann::json messages = nlohmann::json::array();
  for (std::size_t k = 0; k < m.messages.size(); ++k)
    messages.push_back(
        {{"label", m.messages[k]},
         {"belief", rational_to_json(m.beliefs[k])},
         {"sent", {rational_to_json(m.sender_strategy(0, k)),
                   rational_to_json(m.sender_strategy(1, k))}},
         {"receiver_mix", vec_to_json(m.receiver_strategies[k])}});
  return {{"messages", messages}};
}

}  // namespace cheaptalk
