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

#ifndef CHEAPTALK_TESTS_TEST_SUPPORT_HPP
#define CHEAPTALK_TESTS_TEST_SUPPORT_HPP

#include <random>

#include "cheaptalk/fixtures.hpp"

namespace cheaptalk::testing {

// Random transparent game: 2..6 actions, integer payoffs in [-9, 9], random
// rational prior with denominator at most 12.
inline Game random_transparent_game(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_dist(2, 6);
  std::uniform_int_distribution<int> pay(-9, 9);
  std::uniform_int_distribution<int> den(2, 12);
  const int n = n_dist(rng);
  Mat sender(n, 2), receiver(n, 2);
  std::vector<std::string> actions;
  for (int a = 0; a < n; ++a) {
    sender(a, 0) = sender(a, 1) = pay(rng);
    receiver(a, 0) = pay(rng);
    receiver(a, 1) = pay(rng);
    actions.push_back("a" + std::to_string(a));
  }
  const int q = den(rng);
  std::uniform_int_distribution<int> num(1, q - 1);
  return make_game({"theta1", "theta2"}, Rat(num(rng), q), std::move(actions),
                   std::move(sender), std::move(receiver));
}

inline Game ex1() { return *builtin_fixture("ex1").game; }
inline Game ex2() { return *builtin_fixture("ex2").game; }

// Three-action game with a unique low-value middle action and a fully
// revealing equilibrium of payoff 3: A = {a0} on [0,1/4), {a1} on (1/4,3/4),
// {a2} on (3/4,1], sender values (3,0,3).
inline Game valley_game() {
  Mat sender(3, 2), receiver(3, 2);
  sender << 3, 3, 0, 0, 3, 3;
  receiver << 2, -2, 1, 1, -2, 2;
  return make_game({"theta1", "theta2"}, Rat(1, 2), {"a0", "a1", "a2"},
                   std::move(sender), std::move(receiver));
}

}  // namespace cheaptalk::testing

#endif  // CHEAPTALK_TESTS_TEST_SUPPORT_HPP
