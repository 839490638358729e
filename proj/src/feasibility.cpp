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

#include "cheaptalk/feasibility.hpp"

#include <algorithm>
#include <set>

namespace cheaptalk {

SignConstraintSystem sign_constraints(const Belief& mu, const Belief& mup) {
  SignConstraintSystem s;
  // The first state induces mu always (mu < 1) and mu' iff mu' < 1; the
  // second induces mu' always and mu iff mu > 0.
  s.theta1 = mup < 1 ? ConstraintKind::equality : ConstraintKind::geq;
  s.theta2 = mu > 0 ? ConstraintKind::equality : ConstraintKind::leq;
  return s;
}

FeasibilityQuery make_query(const Game& g, const Vec& u1, const Vec& u2,
                            const Belief& mu, const Belief& mup,
                            const std::array<Rat, 2>& target,
                            const Rat& eps_payoff) {
  FeasibilityQuery q;
  q.actions_mu = best_reply_set(g, mu);
  q.actions_mup = best_reply_set(g, mup);
  q.num_actions = g.num_actions();
  q.u1 = u1;
  q.u2 = u2;
  q.mu = mu;
  q.mup = mup;
  q.signs = sign_constraints(mu, mup);
  q.target = target;
  q.eps_payoff = eps_payoff;
  return q;
}

namespace {

// A row encodes sum_j coeff[j] z_j (<= | ==) constant.
struct Row {
  std::vector<Rat> coeff;
  Rat constant;
};

// Scale so the largest absolute coefficient is 1; keeps Fourier-Motzkin
// intermediates small and makes duplicate rows comparable.
void normalize(Row& row) {
  Rat scale = 0;
  for (const Rat& c : row.coeff) scale = std::max(scale, abs(c));
  if (scale == 0) scale = abs(row.constant);
  if (scale == 0 || scale == 1) return;
  for (Rat& c : row.coeff) c /= scale;
  row.constant /= scale;
}

struct Infeasible {
  std::string certificate;
};

// Exact feasibility of { eq rows hold with equality, ineq rows with <= }.
// Returns a feasible point or throws Infeasible with the contradictory
// eliminated constraint.
std::vector<Rat> solve(std::vector<Row> eqs, std::vector<Row> ineqs,
                       int nvars) {
  // Gaussian elimination of the equalities. Pivot rows are stored in
  // creation order; each one only involves variables pivoted later plus the
  // free variables, so reverse-order evaluation recovers the pivots.
  std::vector<std::pair<int, Row>> pivots;
  std::vector<bool> pivoted(nvars, false);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    Row& row = eqs[i];
    int pv = -1;
    for (int j = 0; j < nvars; ++j)
      if (row.coeff[j] != 0) {
        pv = j;
        break;
      }
    if (pv < 0) {
      if (row.constant != 0)
        throw Infeasible{"equalities reduce to 0 = " + to_string(row.constant)};
      continue;
    }
    auto reduce = [&](Row& other) {
      if (other.coeff[pv] == 0) return;
      const Rat f = other.coeff[pv] / row.coeff[pv];
      for (int j = 0; j < nvars; ++j) other.coeff[j] -= f * row.coeff[j];
      other.coeff[pv] = 0;  // exact by construction
      other.constant -= f * row.constant;
    };
    for (std::size_t k = i + 1; k < eqs.size(); ++k) reduce(eqs[k]);
    for (Row& other : ineqs) reduce(other);
    pivoted[pv] = true;
    pivots.emplace_back(pv, row);
  }

  // Fourier-Motzkin over the free variables, greedily picking the variable
  // with the fewest pairwise combinations.
  std::vector<int> free_vars;
  for (int j = 0; j < nvars; ++j)
    if (!pivoted[j]) free_vars.push_back(j);

  std::vector<std::pair<int, std::vector<Row>>> stages;
  std::vector<Row> rows = std::move(ineqs);
  while (!free_vars.empty()) {
    int best_var = -1;
    long best_cost = -1;
    std::size_t best_pos = 0;
    for (std::size_t vi = 0; vi < free_vars.size(); ++vi) {
      long pos = 0, neg = 0;
      for (const Row& row : rows) {
        if (row.coeff[free_vars[vi]] > 0) ++pos;
        if (row.coeff[free_vars[vi]] < 0) ++neg;
      }
      const long cost = pos * neg;
      if (best_cost < 0 || cost < best_cost) {
        best_cost = cost;
        best_var = free_vars[vi];
        best_pos = vi;
      }
    }
    free_vars.erase(free_vars.begin() + best_pos);
    const int v = best_var;
    stages.emplace_back(v, rows);

    std::vector<Row> upper, lower, rest;
    for (Row& row : rows) {
      if (row.coeff[v] > 0)
        upper.push_back(std::move(row));
      else if (row.coeff[v] < 0)
        lower.push_back(std::move(row));
      else
        rest.push_back(std::move(row));
    }
    std::set<std::pair<std::vector<Rat>, Rat>> seen;
    auto keep = [&](Row row) {
      normalize(row);
      bool trivial = true;
      for (const Rat& c : row.coeff) trivial = trivial && c == 0;
      if (trivial) {
        if (row.constant < 0)
          throw Infeasible{"eliminated system yields 0 <= " +
                           to_string(row.constant)};
        return;
      }
      if (seen.insert({row.coeff, row.constant}).second)
        rest.push_back(std::move(row));
    };
    for (Row& row : rest) {
      normalize(row);
      seen.insert({row.coeff, row.constant});
    }
    for (const Row& up : upper) {
      for (const Row& lo : lower) {
        Row combined;
        combined.coeff.assign(nvars, Rat(0));
        const Rat fu = 1 / up.coeff[v], fl = -1 / lo.coeff[v];
        for (int j = 0; j < nvars; ++j)
          combined.coeff[j] = fu * up.coeff[j] + fl * lo.coeff[j];
        combined.coeff[v] = 0;
        combined.constant = fu * up.constant + fl * lo.constant;
        keep(std::move(combined));
      }
    }
    rows = std::move(rest);
  }
  for (const Row& row : rows)
    if (row.constant < 0)
      throw Infeasible{"eliminated system yields 0 <= " + to_string(row.constant)};

  // Back-substitution: free variables in reverse elimination order, then the
  // equality pivots in reverse creation order.
  std::vector<Rat> z(nvars, Rat(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const int v = it->first;
    bool has_lo = false, has_hi = false;
    Rat lo = 0, hi = 0;
    for (const Row& row : it->second) {
      if (row.coeff[v] == 0) continue;
      Rat rhs = row.constant;
      for (int j = 0; j < nvars; ++j)
        if (j != v && row.coeff[j] != 0) rhs -= row.coeff[j] * z[j];
      const Rat bound = rhs / row.coeff[v];
      if (row.coeff[v] > 0) {
        hi = has_hi ? std::min(hi, bound) : bound;
        has_hi = true;
      } else {
        lo = has_lo ? std::max(lo, bound) : bound;
        has_lo = true;
      }
    }
    if (has_lo && has_hi)
      z[v] = (lo + hi) / 2;
    else if (has_lo)
      z[v] = lo;
    else if (has_hi)
      z[v] = std::min(hi, Rat(0));
    else
      z[v] = 0;
  }
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const int v = it->first;
    const Row& row = it->second;
    Rat rhs = row.constant;
    for (int j = 0; j < nvars; ++j)
      if (j != v && row.coeff[j] != 0) rhs -= row.coeff[j] * z[j];
    z[v] = rhs / row.coeff[v];
  }
  return z;
}

}  // namespace

FeasibilityResult perturbed_equilibrium_search(const FeasibilityQuery& q) {
  const int k1 = static_cast<int>(q.actions_mu.size());
  const int k2 = static_cast<int>(q.actions_mup.size());
  const int m = k1 + k2;
  const int n = q.num_actions;
  FeasibilityResult out;

  // x_a = sum of r-weight minus rp-weight on action a; coordinates outside
  // both optimal sets are identically zero, so a window constraint there is
  // a constant test.
  auto x_row = [&](int a) {
    std::vector<Rat> row(m, Rat(0));
    for (int j = 0; j < k1; ++j)
      if (q.actions_mu[j] == a) row[j] += 1;
    for (int j = 0; j < k2; ++j)
      if (q.actions_mup[j] == a) row[k1 + j] -= 1;
    return row;
  };

  std::vector<Row> eqs, ineqs;
  {
    Row r1{std::vector<Rat>(m, Rat(0)), Rat(1)};
    for (int j = 0; j < k1; ++j) r1.coeff[j] = 1;
    eqs.push_back(r1);
    Row r2{std::vector<Rat>(m, Rat(0)), Rat(1)};
    for (int j = 0; j < k2; ++j) r2.coeff[k1 + j] = 1;
    eqs.push_back(r2);
  }
  for (int j = 0; j < m; ++j) {
    Row nonneg{std::vector<Rat>(m, Rat(0)), Rat(0)};
    nonneg.coeff[j] = -1;
    ineqs.push_back(nonneg);
  }

  auto add_sign = [&](const Vec& u, ConstraintKind kind) {
    if (kind == ConstraintKind::none) return;
    Row row{std::vector<Rat>(m, Rat(0)), Rat(0)};
    for (int j = 0; j < k1; ++j) row.coeff[j] = u[q.actions_mu[j]];
    for (int j = 0; j < k2; ++j) row.coeff[k1 + j] = -u[q.actions_mup[j]];
    if (kind == ConstraintKind::equality) {
      eqs.push_back(row);
    } else if (kind == ConstraintKind::leq) {
      ineqs.push_back(row);
    } else {  // geq: flip to <=
      for (Rat& c : row.coeff) c = -c;
      ineqs.push_back(row);
    }
  };
  add_sign(q.u1, q.signs.theta1);
  add_sign(q.u2, q.signs.theta2);

  if (q.signs.x_radius >= 0) {
    for (int a = 0; a < n; ++a) {
      std::vector<Rat> row = x_row(a);
      const bool constant =
          std::all_of(row.begin(), row.end(), [](const Rat& c) { return c == 0; });
      const Rat center = q.signs.x_center.size() == n ? q.signs.x_center[a] : Rat(0);
      if (constant) {
        if (abs(center) > q.signs.x_radius) {
          out.certificate = "x window excludes the zero coordinate of action " +
                            std::to_string(a);
          return out;
        }
        continue;
      }
      Row up{row, center + q.signs.x_radius};
      ineqs.push_back(up);
      Row down{row, q.signs.x_radius - center};
      for (Rat& c : down.coeff) c = -c;
      ineqs.push_back(down);
    }
  }

  // Interim payoff windows; under the sign constraints the first state's
  // payoff is u1 . r and the second state's is u2 . rp.
  auto add_window = [&](const Vec& u, bool first_block, const Rat& target) {
    Row up{std::vector<Rat>(m, Rat(0)), target + q.eps_payoff};
    if (first_block)
      for (int j = 0; j < k1; ++j) up.coeff[j] = u[q.actions_mu[j]];
    else
      for (int j = 0; j < k2; ++j) up.coeff[k1 + j] = u[q.actions_mup[j]];
    Row down = up;
    for (Rat& c : down.coeff) c = -c;
    down.constant = q.eps_payoff - target;
    ineqs.push_back(up);
    ineqs.push_back(down);
  };
  add_window(q.u1, true, q.target[0]);
  add_window(q.u2, false, q.target[1]);

  std::vector<Rat> z;
  try {
    z = solve(std::move(eqs), std::move(ineqs), m);
  } catch (const Infeasible& e) {
    out.certificate = e.certificate;
    return out;
  }

  out.feasible = true;
  out.r = Vec::Zero(n);
  out.rp = Vec::Zero(n);
  for (int j = 0; j < k1; ++j) out.r[q.actions_mu[j]] += z[j];
  for (int j = 0; j < k2; ++j) out.rp[q.actions_mup[j]] += z[k1 + j];
  out.x = out.r - out.rp;
  out.payoffs = {q.u1.dot(out.r), q.u2.dot(out.rp)};
  return out;
}

std::optional<FeasibilityResult> exhaustive_two_posterior_search(
    const Game& g, const Vec& u1, const Vec& u2,
    const std::array<Rat, 2>& target, const Rat& eps_payoff) {
  const BestReplyPartition partition = best_reply_partition(g);
  const Belief mu0 = g.prior;

  // Candidate posteriors: one representative per cell on each side of the
  // prior. Feasibility depends on a posterior only through its cell and
  // whether it is degenerate, so representatives are exhaustive.
  std::vector<Belief> left{mu0}, right{mu0};  // the prior allows babbling
  for (const Cell& c : partition.cells) {
    if (c.lo < mu0)
      left.push_back(c.is_point() ? c.lo : (c.lo + std::min(c.hi, mu0)) / 2);
    if ((c.is_point() ? c.lo : c.hi) > mu0 && !c.contains(mu0))
      right.push_back(c.is_point() ? c.lo : (std::max(c.lo, mu0) + c.hi) / 2);
    else if (!c.is_point() && c.contains(mu0))
      right.push_back((mu0 + c.hi) / 2);
  }

  for (const Belief& mu : left) {
    for (const Belief& mup : right) {
      if ((mu == mu0) != (mup == mu0)) continue;  // prior pairs only with itself
      FeasibilityQuery q = make_query(g, u1, u2, mu, mup, target, eps_payoff);
      FeasibilityResult res = perturbed_equilibrium_search(q);
      if (res.feasible) return res;
    }
  }
  return std::nullopt;
}

}  // namespace cheaptalk
