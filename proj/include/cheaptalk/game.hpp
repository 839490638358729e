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

#ifndef CHEAPTALK_GAME_HPP
#define CHEAPTALK_GAME_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cheaptalk/rational.hpp"

namespace cheaptalk {

// A belief is the probability assigned to the second state; any belief over
// a binary state space is identified with a number in [0,1].
using Belief = Rat;

struct SyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotTransparent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Binary-state cheap-talk game. Utility matrices are n x 2; column 0 is the
// first state, column 1 the second. Action order is the file order and is
// authoritative for every vector in the library. Immutable after
// construction.
struct Game {
  std::array<std::string, 2> states;
  Rat prior;  // probability of the second state, strictly inside (0,1)
  std::vector<std::string> actions;
  Mat sender_utility;
  Mat receiver_utility;

  int num_actions() const { return static_cast<int>(actions.size()); }

  bool transparent() const {
    return sender_utility.col(0) == sender_utility.col(1);
  }

  // Sender payoff column for one state (0 or 1), so that the payoff of a
  // mixed action r is sender_vector(state).dot(r).
  Vec sender_vector(int state) const { return sender_utility.col(state); }

  // v_S for transparent games. Throws NotTransparent otherwise.
  Vec sender_values() const {
    if (!transparent()) throw NotTransparent("sender utility is state-dependent");
    return sender_utility.col(0);
  }

  // Expected receiver payoff of action a at belief mu.
  Rat receiver_payoff(int a, const Belief& mu) const {
    return receiver_utility(a, 0) * (1 - mu) + receiver_utility(a, 1) * mu;
  }
};

// Parses and validates the JSON game document. Throws SyntaxError on
// malformed JSON, SchemaError on missing/mistyped fields, ValidationError
// (with a field path) on violated game invariants.
Game parse_game(const std::string& text);

nlohmann::json game_to_json(const Game& g);

// Constructs a validated Game from parts; used by parse_game and fixtures.
Game make_game(std::array<std::string, 2> states, Rat prior,
               std::vector<std::string> actions, Mat sender_utility,
               Mat receiver_utility);

}  // namespace cheaptalk

#endif  // CHEAPTALK_GAME_HPP
