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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"

using namespace cheaptalk;

namespace {

const char* kEx1Json = R"({
  "states": ["theta1", "theta2"],
  "prior": "1/2",
  "actions": ["a0", "a1", "a2"],
  "sender_utility": [[0, 0], [1, 1], [2, 2]],
  "receiver_utility": [[3, 3], [4, 0], [0, 4]]
})";

bool mat_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("parse_game reads the documented schema") {
  const Game g = parse_game(kEx1Json);
  CHECK(g.states[0] == "theta1");
  CHECK(g.prior == Rat(1, 2));
  CHECK(g.num_actions() == 3);
  CHECK(g.transparent());
  CHECK(g.sender_utility(2, 0) == 2);
  CHECK(g.receiver_utility(1, 1) == 0);
}

TEST_CASE("game JSON round-trips exactly") {
  const Game g = testing::ex2();
  const Game back = parse_game(game_to_json(g).dump());
  CHECK(back.states == g.states);
  CHECK(back.prior == g.prior);
  CHECK(back.actions == g.actions);
  CHECK(mat_eq(back.sender_utility, g.sender_utility));
  CHECK(mat_eq(back.receiver_utility, g.receiver_utility));
}

TEST_CASE("parse_game rejects malformed input") {
  CHECK_THROWS_AS(parse_game("{"), SyntaxError);
  CHECK_THROWS_AS(parse_game("[1,2]"), SchemaError);
  CHECK_THROWS_AS(parse_game(R"({"states":["a","b"]})"), SchemaError);

  nlohmann::json j = nlohmann::json::parse(kEx1Json);
  j["prior"] = "0";
  CHECK_THROWS_AS(parse_game(j.dump()), ValidationError);
  j["prior"] = "1";
  CHECK_THROWS_AS(parse_game(j.dump()), ValidationError);
  j["prior"] = "2/0";
  CHECK_THROWS_AS(parse_game(j.dump()), ValidationError);
  j = nlohmann::json::parse(kEx1Json);
  j["states"] = {"only"};
  CHECK_THROWS_AS(parse_game(j.dump()), ValidationError);
  j = nlohmann::json::parse(kEx1Json);
  j["actions"] = {"a0"};
  CHECK_THROWS_AS(parse_game(j.dump()), ValidationError);
  j = nlohmann::json::parse(kEx1Json);
  j["sender_utility"] = {{0, 0}, {1, 1}};
  CHECK_THROWS_AS(parse_game(j.dump()), ValidationError);
  j = nlohmann::json::parse(kEx1Json);
  j["receiver_utility"][0] = {1, 2, 3};
  CHECK_THROWS_AS(parse_game(j.dump()), SchemaError);
}

TEST_CASE("truncated documents throw instead of crashing") {
  const std::string full = kEx1Json;
  for (std::size_t len = 0; len < full.size(); len += 7)
    CHECK_THROWS_AS(parse_game(full.substr(0, len)), std::runtime_error);
}

TEST_CASE("transparency detection and sender values") {
  Game g = testing::ex1();
  CHECK(g.transparent());
  const Vec v = g.sender_values();
  CHECK(v[0] == 0);
  CHECK(v[2] == 2);
  g.sender_utility(1, 1) = 7;
  CHECK_FALSE(g.transparent());
  CHECK_THROWS_AS(g.sender_values(), NotTransparent);
}

TEST_CASE("receiver payoff is linear in the belief") {
  const Game g = testing::ex1();
  for (int a = 0; a < 3; ++a) {
    const Rat at0 = g.receiver_payoff(a, 0);
    const Rat at1 = g.receiver_payoff(a, 1);
    const Rat mid = g.receiver_payoff(a, Rat(1, 3));
    CHECK(mid == at0 + Rat(1, 3) * (at1 - at0));
  }
  CHECK(g.receiver_payoff(1, Rat(1, 4)) == 3);
  CHECK(g.receiver_payoff(0, Rat(1, 4)) == 3);
}

TEST_CASE("random games round-trip through JSON") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Game g = testing::random_transparent_game(rng);
    const Game back = parse_game(game_to_json(g).dump());
    CHECK(back.prior == g.prior);
    CHECK(mat_eq(back.sender_utility, g.sender_utility));
    CHECK(mat_eq(back.receiver_utility, g.receiver_utility));
  }
}
