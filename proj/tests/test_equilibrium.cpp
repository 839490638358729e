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
#include "cheaptalk/equilibrium.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cheaptalk;

namespace {

Vec mix3(const Rat& a, const Rat& b, const Rat& c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("constructed equilibrium for the first example, payoff 1") {
  const Game g = testing::ex1();
  const Equilibrium e = construct_equilibrium(g, 1);
  REQUIRE(e.support.size() == 2);
  CHECK(e.support[0].mu == 0);
  CHECK(e.support[0].weight == Rat(1, 3));
  CHECK(vec_eq(e.support[0].mix, mix3(0, 1, 0)));
  CHECK(e.support[1].mu == Rat(3, 4));
  CHECK(e.support[1].weight == Rat(2, 3));
  CHECK(vec_eq(e.support[1].mix, mix3(Rat(1, 2), 0, Rat(1, 2))));
  CHECK(e.interim == std::array<Rat, 2>{1, 1});
  CHECK(check_equilibrium(g, e).ok);
}

TEST_CASE("constructed equilibrium for the second example, payoff 2") {
  const Game g = testing::ex2();
  const Equilibrium e = construct_equilibrium(g, 2);
  REQUIRE(e.support.size() == 2);
  CHECK(e.support[0].mu == Rat(1, 8));
  CHECK(e.support[0].weight == Rat(2, 5));
  CHECK(e.support[1].mu == Rat(3, 4));
  CHECK(e.support[1].weight == Rat(3, 5));
  CHECK(e.interim == std::array<Rat, 2>{2, 2});
  CHECK(check_equilibrium(g, e).ok);

  // Explicit support, mixed payoff 3/2 at both posteriors.
  const Equilibrium h =
      construct_equilibrium(g, Rat(3, 2), {Rat(1, 8), Rat(3, 4)});
  CHECK(check_equilibrium(g, h).ok);
  CHECK(h.interim == std::array<Rat, 2>{Rat(3, 2), Rat(3, 2)});
}

TEST_CASE("babbling construction when the prior already attains s") {
  const Game g = testing::ex1();
  const Equilibrium e = construct_equilibrium(g, 0);
  REQUIRE(e.support.size() == 1);
  CHECK(e.support[0].mu == g.prior);
  CHECK(e.support[0].weight == 1);
  CHECK(check_equilibrium(g, e).ok);
  CHECK(e.interim == std::array<Rat, 2>{0, 0});
}

TEST_CASE("construction rejects unattainable payoffs") {
  const Game g = testing::ex1();
  CHECK_THROWS_AS(construct_equilibrium(g, 2), PayoffNotAttainable);
  CHECK_THROWS_AS(construct_equilibrium(g, Rat(1, 2), {Rat(1, 2), Rat(3, 4)}),
                  InfeasibleSupport);
  // Posterior pair must bracket the prior.
  CHECK_THROWS_AS(construct_equilibrium(g, 1, {Rat(3, 4), Rat(7, 8)}),
                  InfeasibleSupport);
}

TEST_CASE("check_equilibrium reports each violated clause") {
  const Game g = testing::ex1();
  Equilibrium e = construct_equilibrium(g, 1);

  Equilibrium bad = e;
  bad.support[0].weight = Rat(1, 2);
  bad.support[1].weight = Rat(1, 2);
  auto c = check_equilibrium(g, bad);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.violations.empty());

  bad = e;
  bad.support[1].mix = mix3(0, 1, 0);  // a1 is not optimal at 3/4
  c = check_equilibrium(g, bad);
  CHECK_FALSE(c.ok);

  bad = e;
  bad.support[0].mix = mix3(1, 0, 0);  // breaks sender indifference: v=0 vs 1
  c = check_equilibrium(g, bad);
  CHECK_FALSE(c.ok);

  bad = e;
  bad.interim = {Rat(7), Rat(7)};
  c = check_equilibrium(g, bad);
  CHECK_FALSE(c.ok);
  CHECK(c.recomputed_interim == std::array<Rat, 2>{1, 1});
}

TEST_CASE("payoff set and envelope match the profile computation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Game g = testing::random_transparent_game(rng);
    const ValueProfile p = value_profile(g);
    CHECK(equilibrium_payoff_set(g) == payoff_set(p, g.prior));
    CHECK(quasiconcave_envelope(g, g.prior) == envelope_at(p, g.prior));

    // Every sampled payoff in the set is realized by a checked equilibrium.
    const IntervalSet set = equilibrium_payoff_set(g);
    for (const auto& comp : set.components)
      for (const Rat& s : {comp.lo, Rat((comp.lo + comp.hi) / 2), comp.hi}) {
        const Equilibrium e = construct_equilibrium(g, s);
        const auto c = check_equilibrium(g, e);
        CAPTURE(to_string(s));
        CHECK(c.ok);
        // Transparent motives: the ex ante payoff equals both interims.
        CHECK(e.interim[0] == s);
        CHECK(e.interim[1] == s);
      }
    CHECK_THROWS_AS(construct_equilibrium(g, set.max() + 1),
                    PayoffNotAttainable);
  }
}

TEST_CASE("caratheodory reduction keeps mixtures and interim payoffs") {
  const Game g = testing::ex1();
  // Three-posterior equilibrium with payoff 1: posteriors 0, 1/4, 3/4.
  Equilibrium e;
  e.support.push_back({0, Rat(1, 9), mix3(0, 1, 0)});
  e.support.push_back({Rat(1, 4), Rat(1, 3), mix3(0, 1, 0)});
  e.support.push_back({Rat(3, 4), Rat(5, 9), mix3(Rat(1, 2), 0, Rat(1, 2))});
  e.interim = {1, 1};
  REQUIRE(check_equilibrium(g, e).ok);

  const Equilibrium r = caratheodory_reduce(g, e);
  CHECK(r.support.size() <= 2);
  CHECK(r.interim == e.interim);
  CHECK(check_equilibrium(g, r).ok);
  Rat mean = 0;
  for (const auto& atom : r.support) mean += atom.weight * atom.mu;
  CHECK(mean == g.prior);

  // Already-small supports pass through unchanged.
  const Equilibrium two = construct_equilibrium(g, 1);
  const Equilibrium same = caratheodory_reduce(g, two);
  CHECK(same.support.size() == 2);
  CHECK(same.support[0].mu == two.support[0].mu);
}

TEST_CASE("message form: Bayes consistency and round trip") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const Game g = testing::random_transparent_game(rng);
    const IntervalSet set = equilibrium_payoff_set(g);
    const Rat s = set.max();
    const Equilibrium e = construct_equilibrium(g, s);
    const MessageEquilibrium m = expand_to_messages(g, e);
    REQUIRE(m.messages.size() == e.support.size());
    REQUIRE(m.sender_strategy.cols() ==
            static_cast<Eigen::Index>(m.messages.size()));

    // Rows are distributions over messages.
    for (int state = 0; state < 2; ++state) {
      Rat total = 0;
      for (Eigen::Index k = 0; k < m.sender_strategy.cols(); ++k) {
        CHECK(m.sender_strategy(state, k) >= 0);
        total += m.sender_strategy(state, k);
      }
      CHECK(total == 1);
    }
    // Bayes' rule reproduces the stated posterior of every message.
    const Belief mu0 = g.prior;
    for (std::size_t k = 0; k < m.messages.size(); ++k) {
      const Rat marginal = (1 - mu0) * m.sender_strategy(0, k) +
                           mu0 * m.sender_strategy(1, k);
      CHECK(marginal == e.support[k].weight);
      CHECK(mu0 * m.sender_strategy(1, k) == m.beliefs[k] * marginal);
    }

    const Outcome direct = outcome_of(e);
    const Outcome back = collapse_messages(g, m);
    CHECK(back.interim == direct.interim);
    CHECK(back.belief_distribution == direct.belief_distribution);
  }
}

TEST_CASE("equilibrium JSON round trip") {
  const Game g = testing::ex2();
  const Equilibrium e = construct_equilibrium(g, 2);
  const Equilibrium back = equilibrium_from_json(equilibrium_to_json(e));
  REQUIRE(back.support.size() == e.support.size());
  for (std::size_t k = 0; k < e.support.size(); ++k) {
    CHECK(back.support[k].mu == e.support[k].mu);
    CHECK(back.support[k].weight == e.support[k].weight);
    CHECK(vec_eq(back.support[k].mix, e.support[k].mix));
  }
  CHECK(back.interim == e.interim);
  // Message form serializes without loss of the strategy matrix shape.
  const nlohmann::json mj =
      message_equilibrium_to_json(expand_to_messages(g, e));
  REQUIRE(mj.contains("messages"));
  CHECK(mj.at("messages").size() == e.support.size());
  CHECK(mj.at("messages")[0].contains("sent"));
}
