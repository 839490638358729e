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

#include "cheaptalk/robustness.hpp"

#include <algorithm>
#include <set>

namespace cheaptalk {

std::string to_string(RobustStatus s) {
  switch (s) {
    case RobustStatus::fully_robust: return "fully_robust";
    case RobustStatus::robust: return "robust";
    case RobustStatus::not_robust: return "not_robust";
  }
  return "?";
}

std::string to_string(RobustRule r) {
  switch (r) {
    case RobustRule::babbling: return "babbling";
    case RobustRule::cond_fully_revealing: return "cond_fully_revealing";
    case RobustRule::cond_one_degenerate: return "cond_one_degenerate";
    case RobustRule::cond_large_union: return "cond_large_union";
    case RobustRule::attain_boundary_value: return "attain_boundary_value";
    case RobustRule::attain_disjoint_sets: return "attain_disjoint_sets";
    case RobustRule::attain_large_set: return "attain_large_set";
    case RobustRule::attain_sufficient: return "attain_sufficient";
    case RobustRule::none: return "none";
  }
  return "?";
}

namespace {

std::vector<int> sorted_union(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out.empty();
}

}  // namespace

RobustnessVerdict classify_two_posterior(const Game& g, const Equilibrium& e) {
  if (!g.transparent())
    throw NotTransparent("classification requires state-independent sender utility");
  if (e.support.size() > 2)
    throw UnsupportedSupportSize("reduce the support to two posteriors first");
  const EquilibriumCheck check = check_equilibrium(g, e);
  if (!check.ok)
    throw NotAnEquilibrium("classify_two_posterior: " + check.violations.front());

  RobustnessVerdict v;
  if (e.support.size() == 1) {
    v.status = RobustStatus::fully_robust;
    v.rule = RobustRule::babbling;
    v.notes = "no information transmitted; any sender perturbation keeps it";
    return v;
  }

  const Rat s = e.interim[0];
  const ValueProfile profile = value_profile(g);
  if (profile.value_at(g.prior).contains(s)) {
    v.status = RobustStatus::robust;
    v.rule = RobustRule::none;
    v.notes = "payoff attainable at the prior; the babbling equilibrium with "
              "the same payoff is fully robust";
    return v;
  }

  const bool ordered = e.support[0].mu < e.support[1].mu;
  const Belief mu = ordered ? e.support[0].mu : e.support[1].mu;
  const Belief mup = ordered ? e.support[1].mu : e.support[0].mu;
  const std::vector<int> A = best_reply_set(g, mu);
  const std::vector<int> Ap = best_reply_set(g, mup);
  const std::size_t union_size = sorted_union(A, Ap).size();

  if (mu == 0 && mup == 1) {
    v.status = RobustStatus::robust;
    v.rule = RobustRule::cond_fully_revealing;
  } else if ((mu == 0 || mup == 1) && union_size >= 3) {
    v.status = RobustStatus::robust;
    v.rule = RobustRule::cond_one_degenerate;
  } else if (union_size >= 4) {
    v.status = RobustStatus::robust;
    v.rule = RobustRule::cond_large_union;
  } else {
    v.status = RobustStatus::not_robust;
    v.rule = RobustRule::none;
    v.notes = "support shape admits no open set of perturbations keeping "
              "sender indifference";
  }
  return v;
}

RobustnessVerdict robust_attainable(const Game& g, const Rat& s) {
  const ValueProfile profile = value_profile(g);
  const Belief mu0 = g.prior;
  if (s <= profile.value_at(mu0).hi)
    throw BabblingSuffices("payoff " + to_string(s) +
                           " does not exceed the best babbling payoff");
  const auto [mu, mup] = extreme_support(profile, mu0, s);
  const std::vector<int> A = profile.partition.cell_at(mu).optimal_actions;
  const std::vector<int> Ap = profile.partition.cell_at(mup).optimal_actions;

  RobustnessVerdict v;
  if (profile.value_at(0).contains(s) || profile.value_at(1).contains(s)) {
    v.status = RobustStatus::robust;
    v.rule = RobustRule::attain_boundary_value;
  } else if (disjoint(A, Ap)) {
    v.status = RobustStatus::robust;
    v.rule = RobustRule::attain_disjoint_sets;
  } else if (A.size() >= 3 || Ap.size() >= 3) {
    v.status = RobustStatus::robust;
    v.rule = RobustRule::attain_large_set;
  } else {
    v.status = RobustStatus::not_robust;
    v.rule = RobustRule::none;
  }

  // Shortcut criterion: two actions with value <= s, each optimal at some
  // belief. It implies one of the conditions above; report when it fires.
  const Vec values = g.sender_values();
  std::set<int> optimal_somewhere;
  for (const Cell& c : profile.partition.cells)
    optimal_somewhere.insert(c.optimal_actions.begin(), c.optimal_actions.end());
  int low_actions = 0;
  for (int a : optimal_somewhere)
    if (values[a] <= s) ++low_actions;
  if (low_actions >= 2) {
    if (v.status == RobustStatus::robust) {
      v.notes = "two-low-actions shortcut also applies";
    } else {
      v.status = RobustStatus::robust;
      v.rule = RobustRule::attain_sufficient;
    }
  }
  return v;
}

IntervalSet robust_payoff_set(const Game& g) {
  const ValueProfile profile = value_profile(g);
  const Belief mu0 = g.prior;
  const ValueInterval& at_prior = profile.value_at(mu0);

  IntervalSet out;
  out.add({at_prior.lo, at_prior.hi, true, true});
  const Rat ceiling = envelope_at(profile, mu0);
  if (ceiling <= at_prior.hi) return out;

  // Verdicts are piecewise constant between sender action values: the
  // extreme support and its optimal-action sets change only there.
  std::set<Rat> candidates{at_prior.hi, ceiling};
  const Vec values = g.sender_values();
  for (Eigen::Index a = 0; a < values.size(); ++a)
    if (values[a] > at_prior.hi && values[a] < ceiling)
      candidates.insert(values[a]);

  auto robust_at = [&](const Rat& s) {
    try {
      return robust_attainable(g, s).status == RobustStatus::robust;
    } catch (const BabblingSuffices&) {
      return true;
    } catch (const PayoffNotAttainable&) {
      return false;
    }
  };

  std::vector<Rat> points(candidates.begin(), candidates.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] > at_prior.hi && robust_at(points[i]))
      out.add_point(points[i]);
    if (i + 1 < points.size() && robust_at((points[i] + points[i + 1]) / 2))
      out.add({points[i], points[i + 1], false, false});
  }
  return out;
}

IntervalSet generic_robust_set(const ValueProfile& profile, const Belief& mu0) {
  const auto& cells = profile.partition.cells;

  // Genericity validation: singleton values on open cells, interior
  // breakpoint values spanned by the two neighbors, endpoint values
  // containing the adjacent cell value, no repeated open-cell value.
  std::set<Rat> open_values;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const ValueInterval& v = profile.values[i];
    if (!cells[i].is_point()) {
      if (v.lo != v.hi)
        throw NotGeneric("open cell starting at " + to_string(cells[i].lo) +
                         " carries a non-singleton value");
      if (!open_values.insert(v.lo).second)
        throw NotGeneric("two open cells share the value " + to_string(v.lo));
      continue;
    }
    if (i == 0 || i + 1 == cells.size()) {
      const std::size_t nb = i == 0 ? 1 : i - 1;
      if (nb < cells.size() && !(v.lo <= profile.values[nb].lo &&
                                 profile.values[nb].hi <= v.hi))
        throw NotGeneric("endpoint value at " + to_string(cells[i].lo) +
                         " does not contain the adjacent cell value");
      continue;
    }
    const Rat left = profile.values[i - 1].lo, right = profile.values[i + 1].lo;
    if (v.lo != std::min(left, right) || v.hi != std::max(left, right))
      throw NotGeneric("breakpoint value at " + to_string(cells[i].lo) +
                       " is not the span of its neighbors");
  }

  Rat second_lowest = 0;
  {
    if (open_values.size() < 2)
      throw NotGeneric("profile attains fewer than two distinct values");
    auto it = open_values.begin();
    ++it;
    second_lowest = *it;
  }

  const Rat ceiling = envelope_at(profile, mu0);
  IntervalSet allowed;
  const ValueInterval& at_prior = profile.value_at(mu0);
  allowed.add({at_prior.lo, at_prior.hi, true, true});
  allowed.add({profile.values.front().lo, profile.values.front().hi, true, true});
  allowed.add({profile.values.back().lo, profile.values.back().hi, true, true});
  if (second_lowest <= ceiling)
    allowed.add({second_lowest, ceiling, true, true});

  // Robust set = payoff set restricted to the allowed region.
  IntervalSet out;
  for (const auto& p : payoff_set(profile, mu0).components) {
    for (const auto& a : allowed.components) {
      IntervalSet::Component c;
      c.lo = std::max(p.lo, a.lo);
      c.hi = std::min(p.hi, a.hi);
      c.lo_closed = (p.lo == c.lo ? p.lo_closed : true) &&
                    (a.lo == c.lo ? a.lo_closed : true);
      c.hi_closed = (p.hi == c.hi ? p.hi_closed : true) &&
                    (a.hi == c.hi ? a.hi_closed : true);
      if (c.lo < c.hi || (c.lo == c.hi && c.lo_closed && c.hi_closed))
        out.add(c);
    }
  }
  return out;
}

Refuter fully_robust_refuter(const Game& g, const Equilibrium& e) {
  if (!g.transparent())
    throw NotTransparent("refuter requires state-independent sender utility");
  if (e.support.size() != 2)
    throw RefuterInapplicable("refuter needs a two-posterior support");
  const Rat s = e.interim[0];
  if (value_correspondence(g, g.prior).contains(s))
    throw RefuterInapplicable("payoff is attainable at the prior");

  const bool ordered = e.support[0].mu < e.support[1].mu;
  const Belief mu = ordered ? e.support[0].mu : e.support[1].mu;
  const Belief mup = ordered ? e.support[1].mu : e.support[0].mu;
  const std::vector<int> A = best_reply_set(g, mu);
  const std::vector<int> Ap = best_reply_set(g, mup);

  Refuter out;
  out.direction = Vec::Zero(g.num_actions());
  for (int a : A)
    if (!std::binary_search(Ap.begin(), Ap.end(), a)) out.direction[a] = 1;
  for (int a : Ap)
    if (!std::binary_search(A.begin(), A.end(), a)) out.direction[a] = -1;
  bool zero = true;
  for (Eigen::Index a = 0; a < out.direction.size(); ++a)
    zero = zero && out.direction[a] == 0;
  if (zero)
    throw RefuterInapplicable("optimal sets coincide at both posteriors");
  Rat eps(1, 1000);
  for (int k = 0; k < 5; ++k, eps /= 2) out.epsilons.push_back(eps);
  return out;
}

}  // namespace cheaptalk
