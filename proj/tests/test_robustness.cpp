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
#include "cheaptalk/feasibility.hpp"
#include "cheaptalk/robustness.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cheaptalk;

TEST_CASE("babbling is fully robust") {
  const Game g = testing::ex1();
  const auto v = classify_two_posterior(g, construct_equilibrium(g, 0));
  CHECK(v.status == RobustStatus::fully_robust);
  CHECK(v.rule == RobustRule::babbling);
}

TEST_CASE("one degenerate posterior with three actions in the union") {
  const Game g = testing::ex1();
  const auto v = classify_two_posterior(g, construct_equilibrium(g, 1));
  CHECK(v.status == RobustStatus::robust);
  CHECK(v.rule == RobustRule::cond_one_degenerate);
}

TEST_CASE("four actions in the union") {
  const Game g = testing::ex2();
  auto v = classify_two_posterior(g, construct_equilibrium(g, 2));
  CHECK(v.status == RobustStatus::robust);
  CHECK(v.rule == RobustRule::cond_large_union);
  v = classify_two_posterior(
      g, construct_equilibrium(g, Rat(3, 2), {Rat(1, 8), Rat(3, 4)}));
  CHECK(v.status == RobustStatus::robust);
  CHECK(v.rule == RobustRule::cond_large_union);
}

TEST_CASE("fully revealing support is robust") {
  const Game g = testing::valley_game();
  const Equilibrium e = construct_equilibrium(g, 3);
  REQUIRE(e.support.size() == 2);
  REQUIRE(e.support[0].mu == 0);
  REQUIRE(e.support[1].mu == 1);
  const auto v = classify_two_posterior(g, e);
  CHECK(v.status == RobustStatus::robust);
  CHECK(v.rule == RobustRule::cond_fully_revealing);
}

TEST_CASE("no condition holds: not robust") {
  const Game g = testing::ex1();
  const Equilibrium e =
      construct_equilibrium(g, Rat(1, 2), {Rat(1, 4), Rat(3, 4)});
  const auto v = classify_two_posterior(g, e);
  CHECK(v.status == RobustStatus::not_robust);
  CHECK(v.rule == RobustRule::none);
}

TEST_CASE("payoff inside the babbling range is robust by switching") {
  const Game g = testing::ex1();
  // Payoff 0 on the nondegenerate support {1/4, 3/4}: the support itself
  // fails every condition but the babbling equilibrium attains 0.
  const Equilibrium e = construct_equilibrium(g, 0, {Rat(1, 4), Rat(3, 4)});
  const auto v = classify_two_posterior(g, e);
  CHECK(v.status == RobustStatus::robust);
  CHECK(v.rule == RobustRule::none);
  CHECK_FALSE(v.notes.empty());
}

TEST_CASE("classification rejects oversized or broken inputs") {
  const Game g = testing::ex1();
  Equilibrium e = construct_equilibrium(g, 1);
  Equilibrium big = e;
  big.support.push_back(e.support[0]);
  CHECK_THROWS_AS(classify_two_posterior(g, big), UnsupportedSupportSize);
  Equilibrium broken = e;
  broken.support[0].weight = Rat(9, 10);
  CHECK_THROWS_AS(classify_two_posterior(g, broken), NotAnEquilibrium);
}

TEST_CASE("attainability conditions at the extreme support") {
  const Game g1 = testing::ex1();
  auto v = robust_attainable(g1, 1);
  CHECK(v.status == RobustStatus::robust);
  CHECK(v.rule == RobustRule::attain_boundary_value);

  const Game g2 = testing::ex2();
  v = robust_attainable(g2, 2);
  CHECK(v.status == RobustStatus::robust);
  CHECK(v.rule == RobustRule::attain_disjoint_sets);
  v = robust_attainable(g2, Rat(3, 2));
  CHECK(v.status == RobustStatus::robust);

  CHECK_THROWS_AS(robust_attainable(g1, 0), BabblingSuffices);
  CHECK_THROWS_AS(robust_attainable(g1, 2), PayoffNotAttainable);
}

TEST_CASE("not robustly attainable payoff in the first example") {
  const auto v = robust_attainable(testing::ex1(), Rat(1, 2));
  CHECK(v.status == RobustStatus::not_robust);
}

TEST_CASE("robust payoff sets of the worked examples") {
  IntervalSet want1;
  want1.add_point(0);
  want1.add_point(1);
  CHECK(robust_payoff_set(testing::ex1()) == want1);

  IntervalSet want2;
  want2.add_point(0);
  want2.add({1, 2, true, true});
  CHECK(robust_payoff_set(testing::ex2()) == want2);
}

TEST_CASE("generic characterization agrees on the worked examples") {
  const ValueProfile p1 = value_profile(testing::ex1());
  CHECK(generic_robust_set(p1, Rat(1, 2)) == robust_payoff_set(testing::ex1()));
  const ValueProfile p2 = value_profile(testing::ex2());
  CHECK(generic_robust_set(p2, Rat(1, 2)) == robust_payoff_set(testing::ex2()));
}

TEST_CASE("generic characterization on the abstract fixtures") {
  auto run = [](const char* name) {
    const Fixture f = builtin_fixture(name);
    return generic_robust_set(*f.profile, f.prior);
  };
  IntervalSet want3;
  want3.add_point(1);
  want3.add({2, 4, true, true});
  CHECK(run("ex3") == want3);

  IntervalSet want4a;
  want4a.add({1, Rat(5, 2), true, true});
  CHECK(run("ex4a") == want4a);

  IntervalSet want4b;
  want4b.add_point(1);
  want4b.add({2, Rat(5, 2), true, true});
  CHECK(run("ex4b") == want4b);
}

TEST_CASE("degenerate profiles are rejected as non-generic") {
  // Two adjacent open cells with the same value.
  ValueProfile p;
  auto cell = [&](const Belief& lo, const Belief& hi, const Rat& vlo,
                  const Rat& vhi) {
    p.partition.cells.push_back({lo, hi, {}});
    p.values.push_back({vlo, vhi});
  };
  cell(0, 0, 1, 1);
  cell(0, Rat(1, 2), 1, 1);
  cell(Rat(1, 2), Rat(1, 2), 1, 1);
  cell(Rat(1, 2), 1, 1, 1);
  cell(1, 1, 1, 1);
  CHECK_THROWS_AS(generic_robust_set(p, Rat(1, 4)), NotGeneric);
}

TEST_CASE("refuter directions on the worked examples") {
  const Game g1 = testing::ex1();
  const Equilibrium e1 =
      construct_equilibrium(g1, Rat(1, 2), {Rat(1, 4), Rat(3, 4)});
  const Refuter r1 = fully_robust_refuter(g1, e1);
  REQUIRE(r1.direction.size() == 3);
  CHECK(r1.direction[0] == 0);
  CHECK(r1.direction[1] == 1);
  CHECK(r1.direction[2] == -1);
  CHECK_FALSE(r1.epsilons.empty());
  for (std::size_t i = 1; i < r1.epsilons.size(); ++i)
    CHECK(r1.epsilons[i] < r1.epsilons[i - 1]);

  const Game g2 = testing::ex2();
  const Equilibrium e2 = construct_equilibrium(g2, 2);
  const Refuter r2 = fully_robust_refuter(g2, e2);
  REQUIRE(r2.direction.size() == 4);
  CHECK(r2.direction[0] == -1);
  CHECK(r2.direction[1] == 1);
  CHECK(r2.direction[2] == 1);
  CHECK(r2.direction[3] == -1);

  CHECK_THROWS_AS(fully_robust_refuter(g1, construct_equilibrium(g1, 0)),
                  RefuterInapplicable);
}

TEST_CASE("refuter tilts kill the support exactly") {
  // For each nontrivial fixture equilibrium, the suggested tilt makes the
  // sign-constraint system on that support infeasible at every listed eps.
  struct Case {
    Game g;
    Equilibrium e;
  };
  const Game g1 = testing::ex1();
  const Game g2 = testing::ex2();
  const std::vector<Case> cases = {
      {g1, construct_equilibrium(g1, 1)},
      {g1, construct_equilibrium(g1, Rat(1, 2), {Rat(1, 4), Rat(3, 4)})},
      {g2, construct_equilibrium(g2, 2)},
      {g2, construct_equilibrium(g2, Rat(3, 2), {Rat(1, 8), Rat(3, 4)})},
  };
  for (const auto& [g, e] : cases) {
    const Refuter ref = fully_robust_refuter(g, e);
    const Vec u = g.sender_values();
    const Belief mu = std::min(e.support[0].mu, e.support[1].mu);
    const Belief mup = std::max(e.support[0].mu, e.support[1].mu);
    for (const Rat& eps : ref.epsilons) {
      const Vec tilted = u + eps * ref.direction;
      const auto q = make_query(g, u, tilted, mu, mup, e.interim, Rat(1, 10));
      const auto res = perturbed_equilibrium_search(q);
      CHECK_FALSE(res.feasible);
      CHECK_FALSE(res.certificate.empty());
    }
  }
}

TEST_CASE("random games: robust set sits between babbling and envelope") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const Game g = testing::random_transparent_game(rng);
    const ValueProfile p = value_profile(g);
    const IntervalSet all = payoff_set(p, g.prior);
    const IntervalSet robust = robust_payoff_set(g);
    REQUIRE_FALSE(robust.empty());
    // The babbling range is always robust; nothing outside the payoff set is.
    CHECK(robust.contains(p.value_at(g.prior).lo));
    CHECK(robust.contains(p.value_at(g.prior).hi));
    for (const auto& comp : robust.components) {
      for (const Rat& s : {comp.lo, Rat((comp.lo + comp.hi) / 2), comp.hi})
        CHECK(all.contains(s));
    }
    // The envelope value is robust (sender-optimal payoff survives).
    CHECK(robust.contains(envelope_at(p, g.prior)));
  }
}
