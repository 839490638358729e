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

#include "cheaptalk/fixtures.hpp"

namespace cheaptalk {

namespace {

Game two_state_game(std::vector<std::vector<int>> receiver_rows,
                    std::vector<int> sender_values) {
  const int n = static_cast<int>(sender_values.size());
  Mat sender(n, 2), receiver(n, 2);
  std::vector<std::string> actions;
  for (int a = 0; a < n; ++a) {
    sender(a, 0) = sender(a, 1) = sender_values[a];
    receiver(a, 0) = receiver_rows[a][0];
    receiver(a, 1) = receiver_rows[a][1];
    actions.push_back("a" + std::to_string(a));
  }
  return make_game({"theta1", "theta2"}, Rat(1, 2), std::move(actions),
                   std::move(sender), std::move(receiver));
}

// Abstract profile from breakpoints and the singleton values on the open
// cells. Interior breakpoints carry the span of their neighbors; the
// endpoint values default to the adjacent cell value unless overridden.
ValueProfile profile_from_steps(const std::vector<Rat>& breakpoints,
                                const std::vector<Rat>& open_values,
                                std::optional<ValueInterval> at_zero,
                                std::optional<ValueInterval> at_one) {
  ValueProfile p;
  auto point = [&](const Belief& mu, const ValueInterval& v) {
    p.partition.cells.push_back({mu, mu, {}});
    p.values.push_back(v);
  };
  auto open = [&](const Belief& lo, const Belief& hi, const Rat& v) {
    p.partition.cells.push_back({lo, hi, {}});
    p.values.push_back({v, v});
  };
  point(0, at_zero.value_or(ValueInterval{open_values.front(),
                                          open_values.front()}));
  Belief prev = 0;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    open(prev, breakpoints[i], open_values[i]);
    const Rat lo = std::min(open_values[i], open_values[i + 1]);
    const Rat hi = std::max(open_values[i], open_values[i + 1]);
    point(breakpoints[i], {lo, hi});
    prev = breakpoints[i];
  }
  open(prev, 1, open_values.back());
  point(1, at_one.value_or(ValueInterval{open_values.back(),
                                         open_values.back()}));
  return p;
}

std::vector<Rat> sixths() { return {Rat(1, 6), Rat(2, 6), Rat(3, 6), Rat(4, 6), Rat(5, 6)}; }

}  // namespace

Fixture builtin_fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  if (name == "ex1") {
    f.game = two_state_game({{3, 3}, {4, 0}, {0, 4}}, {0, 1, 2});
    f.prior = f.game->prior;
    return f;
  }
  if (name == "ex2") {
    f.game = two_state_game({{3, 3}, {5, -7}, {4, 0}, {0, 4}}, {0, 1, 2, 3});
    f.prior = f.game->prior;
    return f;
  }
  if (name == "ex3") {
    // Step heights 4,2,1,5,3 and a top value 6: the lowest value sits in the
    // third cell, the second-lowest left of it, the maximum at the right
    // edge. Representative prior inside the lowest cell.
    f.profile = profile_from_steps(sixths(), {4, 2, 1, 5, 3, 6}, std::nullopt,
                                   std::nullopt);
    f.prior = Rat(5, 12);
    return f;
  }
  if (name == "ex4a") {
    // The rightmost belief keeps two optimal actions: its value interval
    // [1, 5/2] reaches below every interior step, so every attainable
    // payoff stays robust.
    f.profile = profile_from_steps({Rat(1, 5), Rat(2, 5), Rat(3, 5)},
                                   {3, 2, 4, 1}, std::nullopt,
                                   ValueInterval{Rat(1), Rat(5, 2)});
    f.prior = Rat(7, 10);
    return f;
  }
  if (name == "ex4b") {
    // Same shape with the tie at belief one broken by a fifth step of value
    // 5/2: payoffs strictly between 1 and 2 stop being robust.
    f.profile = profile_from_steps(
        {Rat(1, 5), Rat(2, 5), Rat(3, 5), Rat(4, 5)},
        {3, 2, 4, 1, Rat(5, 2)}, std::nullopt, std::nullopt);
    f.prior = Rat(7, 10);
    return f;
  }
  throw UnknownFixture("no fixture named '" + name +
                       "'; known: ex1 ex2 ex3 ex4a ex4b");
}

std::vector<std::string> fixture_names() {
  return {"ex1", "ex2", "ex3", "ex4a", "ex4b"};
}

}  // namespace cheaptalk
