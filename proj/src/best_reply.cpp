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

#include "cheaptalk/best_reply.hpp"

#include <algorithm>
#include <set>

namespace cheaptalk {

const Cell& BestReplyPartition::cell_at(const Belief& mu) const {
  return cells[cell_index_at(mu)];
}

int BestReplyPartition::cell_index_at(const Belief& mu) const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].contains(mu)) return static_cast<int>(i);
  throw std::invalid_argument("belief outside [0,1]: " + to_string(mu));
}

std::vector<int> best_reply_set(const Game& g, const Belief& mu) {
  const int n = g.num_actions();
  Rat best = g.receiver_payoff(0, mu);
  for (int a = 1; a < n; ++a) best = std::max(best, g.receiver_payoff(a, mu));
  std::vector<int> out;
  for (int a = 0; a < n; ++a)
    if (g.receiver_payoff(a, mu) == best) out.push_back(a);
  return out;
}

BestReplyPartition best_reply_partition(const Game& g) {
  const int n = g.num_actions();
  std::set<Rat> roots;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Rat d0 = g.receiver_utility(a, 0) - g.receiver_utility(b, 0);
      const Rat d1 = g.receiver_utility(a, 1) - g.receiver_utility(b, 1);
      if (d0 == d1) continue;  // parallel, no crossing
      const Rat root = d0 / (d0 - d1);
      if (root > 0 && root < 1) roots.insert(root);
    }
  }

  std::vector<Cell> cells;
  auto push_point = [&](const Belief& mu) {
    cells.push_back({mu, mu, best_reply_set(g, mu)});
  };
  auto push_open = [&](const Belief& lo, const Belief& hi) {
    cells.push_back({lo, hi, best_reply_set(g, (lo + hi) / 2)});
  };

  push_point(0);
  Belief prev = 0;
  for (const Rat& b : roots) {
    push_open(prev, b);
    push_point(b);
    prev = b;
  }
  push_open(prev, 1);
  push_point(1);

  // Drop interior breakpoints that are roots of an indifference between
  // actions that are not optimal there; the action set is then constant
  // across the point and the three cells merge into one open interval.
  std::vector<Cell> merged;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    bool interior_point = c.is_point() && c.lo != 0 && c.lo != 1;
    if (interior_point && !merged.empty() && i + 1 < cells.size() &&
        merged.back().optimal_actions == c.optimal_actions &&
        cells[i + 1].optimal_actions == c.optimal_actions) {
      merged.back().hi = cells[i + 1].hi;
      ++i;  // swallow the right neighbor as well
      continue;
    }
    merged.push_back(c);
  }
  return BestReplyPartition{std::move(merged)};
}

ValueInterval value_correspondence(const Game& g, const Belief& mu) {
  const Vec v = g.sender_values();
  const std::vector<int> actions = best_reply_set(g, mu);
  Rat lo = v[actions.front()], hi = lo;
  for (int a : actions) {
    lo = std::min(lo, v[a]);
    hi = std::max(hi, v[a]);
  }
  return {lo, hi};
}

ValueProfile value_profile(const Game& g) {
  const Vec v = g.sender_values();
  ValueProfile p;
  p.partition = best_reply_partition(g);
  for (const Cell& c : p.partition.cells) {
    Rat lo = v[c.optimal_actions.front()], hi = lo;
    for (int a : c.optimal_actions) {
      lo = std::min(lo, v[a]);
      hi = std::max(hi, v[a]);
    }
    p.values.push_back({lo, hi});
  }
  return p;
}

namespace {

bool cell_reaches_left_of(const Cell& c, const Belief& mu0) {
  return c.lo < mu0;  // a point cell left of mu0, or an open cell starting left
}

bool cell_reaches_right_of(const Cell& c, const Belief& mu0) {
  return c.is_point() ? c.lo > mu0 : c.hi > mu0;
}

}  // namespace

Rat envelope_at(const ValueProfile& profile, const Belief& mu0) {
  Rat max_left = profile.value_at(mu0).hi;
  Rat max_right = max_left;
  for (std::size_t i = 0; i < profile.partition.cells.size(); ++i) {
    const Cell& c = profile.partition.cells[i];
    if (cell_reaches_left_of(c, mu0))
      max_left = std::max(max_left, profile.values[i].hi);
    if (cell_reaches_right_of(c, mu0))
      max_right = std::max(max_right, profile.values[i].hi);
  }
  return std::min(max_left, max_right);
}

IntervalSet payoff_set(const ValueProfile& profile, const Belief& mu0) {
  IntervalSet out;
  const ValueInterval& at_prior = profile.value_at(mu0);
  out.add({at_prior.lo, at_prior.hi, true, true});

  const auto& cells = profile.partition.cells;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cell_reaches_left_of(cells[i], mu0)) continue;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (!cell_reaches_right_of(cells[j], mu0)) continue;
      const Rat lo = std::max(profile.values[i].lo, profile.values[j].lo);
      const Rat hi = std::min(profile.values[i].hi, profile.values[j].hi);
      if (lo <= hi) out.add({lo, hi, true, true});
    }
  }
  return out;
}

std::pair<Belief, Belief> extreme_support(const ValueProfile& profile,
                                          const Belief& mu0, const Rat& s) {
  const ValueInterval& at_prior = profile.value_at(mu0);
  if (at_prior.contains(s))
    throw BabblingSuffices("payoff " + to_string(s) +
                           " lies in V(mu0); a babbling equilibrium attains it");
  if (s > envelope_at(profile, mu0))
    throw PayoffNotAttainable("payoff " + to_string(s) +
                              " exceeds the quasiconcave envelope at the prior");

  const auto& cells = profile.partition.cells;
  Belief left(-1), right(-1);
  bool have_left = false, have_right = false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cell_reaches_left_of(cells[i], mu0) || !profile.values[i].contains(s))
      continue;
    if (!cells[i].is_point())
      throw ValidationError(
          "value profile violates upper hemicontinuity at belief " +
          to_string(cells[i].lo));
    left = cells[i].lo;
    have_left = true;
    break;
  }
  for (std::size_t i = cells.size(); i-- > 0;) {
    if (!cell_reaches_right_of(cells[i], mu0) || !profile.values[i].contains(s))
      continue;
    if (!cells[i].is_point())
      throw ValidationError(
          "value profile violates upper hemicontinuity at belief " +
          to_string(cells[i].hi));
    right = cells[i].lo;
    have_right = true;
    break;
  }
  if (!have_left || !have_right)
    throw PayoffNotAttainable("payoff " + to_string(s) +
                              " is not supported on both sides of the prior");
  return {left, right};
}

nlohmann::json value_profile_to_json(const ValueProfile& p) {
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t i = 0; i < p.partition.cells.size(); ++i) {
    const Cell& c = p.partition.cells[i];
    nlohmann::json cell;
    if (c.is_point())
      cell["at"] = rational_to_json(c.lo);
    else
      cell["span"] = {rational_to_json(c.lo), rational_to_json(c.hi)};
    if (!c.optimal_actions.empty()) cell["actions"] = c.optimal_actions;
    cell["value"] = {rational_to_json(p.values[i].lo),
                     rational_to_json(p.values[i].hi)};
    cells.push_back(cell);
  }
  return {{"cells", cells}};
}

ValueProfile value_profile_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cells"))
    throw SchemaError("value profile must be an object with a cells array");
  ValueProfile p;
  for (const auto& cell : j.at("cells")) {
    Cell c;
    if (cell.contains("at")) {
      c.lo = c.hi = parse_rational(cell.at("at"));
    } else if (cell.contains("span")) {
      c.lo = parse_rational(cell.at("span").at(0));
      c.hi = parse_rational(cell.at("span").at(1));
    } else {
      throw SchemaError("cell needs an 'at' point or a 'span' interval");
    }
    if (cell.contains("actions"))
      c.optimal_actions = cell.at("actions").get<std::vector<int>>();
    ValueInterval v{parse_rational(cell.at("value").at(0)),
                    parse_rational(cell.at("value").at(1))};
    if (v.lo > v.hi) throw ValidationError("cell value interval is empty");
    p.partition.cells.push_back(std::move(c));
    p.values.push_back(v);
  }
  // Tiling checks: first cell {0}, last {1}, adjacent endpoints agree.
  const auto& cells = p.partition.cells;
  if (cells.empty() || cells.front().lo != 0 || !cells.front().is_point() ||
      cells.back().hi != 1 || !cells.back().is_point())
    throw ValidationError("profile cells must start at {0} and end at {1}");
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    if (cells[i].hi != cells[i + 1].lo)
      throw ValidationError("profile cells leave a gap or overlap at " +
                            to_string(cells[i].hi));
    if (cells[i].is_point() == cells[i + 1].is_point())
      throw ValidationError("profile cells must alternate points and intervals");
  }
  return p;
}

}  // namespace cheaptalk
