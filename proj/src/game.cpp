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

#include "cheaptalk/game.hpp"

namespace cheaptalk {

namespace {

Mat utility_matrix(const nlohmann::json& rows, int n, const std::string& field) {
  if (!rows.is_array())
    throw SchemaError(field + " must be an array of per-action rows");
  if (static_cast<int>(rows.size()) != n)
    throw ValidationError(field + ": expected one row per action");
  Mat m(n, 2);
  for (int a = 0; a < n; ++a) {
    const auto& row = rows[a];
    if (!row.is_array() || row.size() != 2)
      throw SchemaError(field + "[" + std::to_string(a) +
                        "]: expected [u_theta1, u_theta2]");
    try {
      m(a, 0) = parse_rational(row[0]);
      m(a, 1) = parse_rational(row[1]);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(field + "[" + std::to_string(a) + "]: " + e.what());
    }
  }
  return m;
}

}  // namespace

Game make_game(std::array<std::string, 2> states, Rat prior,
               std::vector<std::string> actions, Mat sender_utility,
               Mat receiver_utility) {
  if (prior <= 0 || prior >= 1)
    throw ValidationError("prior: must have full support, got " + to_string(prior));
  const int n = static_cast<int>(actions.size());
  if (n < 2) throw ValidationError("actions: at least two actions required");
  if (sender_utility.rows() != n || sender_utility.cols() != 2)
    throw ValidationError("sender_utility: expected " + std::to_string(n) + "x2");
  if (receiver_utility.rows() != n || receiver_utility.cols() != 2)
    throw ValidationError("receiver_utility: expected " + std::to_string(n) + "x2");
  return Game{std::move(states), std::move(prior), std::move(actions),
              std::move(sender_utility), std::move(receiver_utility)};
}

Game parse_game(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("game document must be a JSON object");
  for (const char* field :
       {"states", "prior", "actions", "sender_utility", "receiver_utility"})
    if (!doc.contains(field)) throw SchemaError(std::string("missing field: ") + field);

  const auto& states = doc["states"];
  if (!states.is_array() || !std::all_of(states.begin(), states.end(),
                                         [](const auto& s) { return s.is_string(); }))
    throw SchemaError("states must be an array of names");
  if (states.size() != 2)
    throw ValidationError("states: exactly two states supported, got " +
                          std::to_string(states.size()));

  Rat prior;
  try {
    prior = parse_rational(doc["prior"]);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("prior: ") + e.what());
  }

  const auto& actions_json = doc["actions"];
  if (!actions_json.is_array())
    throw SchemaError("actions must be an array of names");
  std::vector<std::string> actions;
  for (const auto& a : actions_json) {
    if (!a.is_string()) throw SchemaError("actions must be an array of names");
    actions.push_back(a.get<std::string>());
  }

  const int n = static_cast<int>(actions.size());
  if (n < 2) throw ValidationError("actions: at least two actions required");
  Mat sender = utility_matrix(doc["sender_utility"], n, "sender_utility");
  Mat receiver = utility_matrix(doc["receiver_utility"], n, "receiver_utility");

  return make_game({states[0].get<std::string>(), states[1].get<std::string>()},
                   std::move(prior), std::move(actions), std::move(sender),
                   std::move(receiver));
}

nlohmann::json game_to_json(const Game& g) {
  nlohmann::json out;
  out["states"] = {g.states[0], g.states[1]};
  out["prior"] = rational_to_json(g.prior);
  out["actions"] = g.actions;
  auto matrix = [](const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index a = 0; a < m.rows(); ++a)
      rows.push_back({rational_to_json(m(a, 0)), rational_to_json(m(a, 1))});
    return rows;
  };
  out["sender_utility"] = matrix(g.sender_utility);
  out["receiver_utility"] = matrix(g.receiver_utility);
  return out;
}

}  // namespace cheaptalk
