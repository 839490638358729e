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

#include "cheaptalk/geometry.hpp"

#include <algorithm>

#include "cheaptalk/sampling.hpp"

namespace cheaptalk {

namespace {

constexpr std::uint64_t kConstructionSeed = 0x5DEECE66Dull;
const int kConstructionSamples = 200;

std::vector<int> sorted_intersection(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

int dim_span_D(const Game& g, const Belief& mu, const Belief& mup) {
  std::vector<int> u = best_reply_set(g, mu);
  const std::vector<int> ap = best_reply_set(g, mup);
  std::vector<int> all;
  std::set_union(u.begin(), u.end(), ap.begin(), ap.end(),
                 std::back_inserter(all));
  return static_cast<int>(all.size()) - 1;
}

Mat difference_generators(const Game& g, const Belief& mu, const Belief& mup) {
  const std::vector<int> a = best_reply_set(g, mu);
  const std::vector<int> ap = best_reply_set(g, mup);
  Mat out = Mat::Zero(g.num_actions(),
                      static_cast<Eigen::Index>(a.size() * ap.size()));
  Eigen::Index col = 0;
  for (int i : a) {
    for (int j : ap) {
      out(i, col) += 1;
      out(j, col) -= 1;
      ++col;
    }
  }
  return out;
}

std::pair<Vec, Vec> decompose_difference(const Vec& x,
                                         const std::vector<int>& actions_mu,
                                         const std::vector<int>& actions_mup,
                                         const std::pair<Vec, Vec>& anchor,
                                         const Rat& eps) {
  const Eigen::Index n = x.size();
  Rat total = 0, pos_mass = 0;
  Vec xp = Vec::Zero(n), xm = Vec::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    total += x[i];
    if (x[i] > 0) {
      if (!std::binary_search(actions_mu.begin(), actions_mu.end(),
                              static_cast<int>(i)))
        throw NotInD("positive part puts mass outside the first optimal set");
      xp[i] = x[i];
      pos_mass += x[i];
    } else if (x[i] < 0) {
      if (!std::binary_search(actions_mup.begin(), actions_mup.end(),
                              static_cast<int>(i)))
        throw NotInD("negative part puts mass outside the second optimal set");
      xm[i] = -x[i];
    }
  }
  if (total != 0) throw NotInD("coordinates do not sum to zero");
  if (pos_mass > 1) throw NotInD("positive part exceeds unit mass");
  const std::vector<int> shared = sorted_intersection(actions_mu, actions_mup);
  if (pos_mass < 1 && shared.empty())
    throw NotInD("no shared action can absorb the slack mass");

  const Vec& r0 = anchor.first;
  const Vec& rp0 = anchor.second;
  if (r0.size() != n || rp0.size() != n)
    throw AnchorMismatch("anchor dimension does not match x");
  Rat sum0 = 0, sump0 = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (r0[i] < 0 || rp0[i] < 0)
      throw AnchorMismatch("anchor mixtures must be nonnegative");
    if (r0[i] > 0 && !std::binary_search(actions_mu.begin(), actions_mu.end(),
                                         static_cast<int>(i)))
      throw AnchorMismatch("anchor first mixture leaves the optimal set");
    if (rp0[i] > 0 && !std::binary_search(actions_mup.begin(),
                                          actions_mup.end(),
                                          static_cast<int>(i)))
      throw AnchorMismatch("anchor second mixture leaves the optimal set");
    sum0 += r0[i];
    sump0 += rp0[i];
  }
  if (sum0 != 1 || sump0 != 1)
    throw AnchorMismatch("anchor mixtures must sum to one");
  const Vec x0 = r0 - rp0;
  if (eps >= 0 && linf_norm(Vec(x - x0)) > eps)
    throw AnchorMismatch("x deviates from the anchor by more than eps");

  // Slack transport: d0 = r0 - x0+ = min(r0, r0') coordinatewise; its total
  // mass is corrected by the change in positive-part mass, added on the
  // first shared action or greedily removed from the largest slacks.
  Vec d = Vec::Zero(n);
  Rat pos0 = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    d[i] = std::min(r0[i], rp0[i]);
    if (x0[i] > 0) pos0 += x0[i];
  }
  Rat adjust = pos0 - pos_mass;
  if (adjust > 0) {
    d[shared.front()] += adjust;
  } else if (adjust < 0) {
    Rat remaining = -adjust;
    std::vector<int> order = shared;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d[a] > d[b]; });
    for (int i : order) {
      const Rat take = std::min(d[i], remaining);
      d[i] -= take;
      remaining -= take;
      if (remaining == 0) break;
    }
    if (remaining > 0) throw NotInD("slack mass cannot be represented");
  }
  return {Vec(xp + d), Vec(xm + d)};
}

namespace {

// Exact solve of a square rational system; empty result if singular.
std::optional<Vec> solve_square(Mat a, Vec b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index row = col; row < n; ++row)
      if (a(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      std::swap(b[col], b[pivot]);
    }
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col || a(row, col) == 0) continue;
      const Rat f = a(row, col) / a(col, col);
      a.row(row) -= f * a.row(col);
      b[row] -= f * b[col];
    }
  }
  Vec x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
  return x;
}

// Least-norm w = a p + b q with w.p = t1 and w.q = t2; empty if p, q are
// linearly dependent.
std::optional<Vec> gram_solve(const Vec& p, const Vec& q, const Rat& t1,
                              const Rat& t2) {
  Mat gram(2, 2);
  gram << p.dot(p), p.dot(q), p.dot(q), q.dot(q);
  Vec rhs(2);
  rhs << t1, t2;
  const auto coef = solve_square(gram, rhs);
  if (!coef) return std::nullopt;
  return Vec((*coef)[0] * p + (*coef)[1] * q);
}

struct Frame {
  Belief mu, mup;
  Vec r, rp, x0;
  std::vector<int> a, ap;
  std::vector<Vec> vertices;  // e_a - e_a' in lexicographic pair order
  std::vector<Rat> f;         // sender value of each vertex
};

Frame make_frame(const Game& g, const Equilibrium& e) {
  Frame fr;
  const bool ordered = e.support[0].mu <= e.support[1].mu;
  const auto& lo = ordered ? e.support[0] : e.support[1];
  const auto& hi = ordered ? e.support[1] : e.support[0];
  fr.mu = lo.mu;
  fr.mup = hi.mu;
  fr.r = lo.mix;
  fr.rp = hi.mix;
  fr.x0 = fr.r - fr.rp;
  fr.a = best_reply_set(g, fr.mu);
  fr.ap = best_reply_set(g, fr.mup);
  const Vec v = g.sender_values();
  for (int i : fr.a) {
    for (int j : fr.ap) {
      Vec z = Vec::Zero(g.num_actions());
      z[i] += 1;
      z[j] -= 1;
      fr.vertices.push_back(z);
      fr.f.push_back(v[i] - v[j]);
    }
  }
  return fr;
}

bool independent(const Vec& p, const Vec& q) {
  // rank-2 test via a 2x2 minor
  for (Eigen::Index i = 0; i < p.size(); ++i)
    for (Eigen::Index j = i + 1; j < p.size(); ++j)
      if (p[i] * q[j] - p[j] * q[i] != 0) return true;
  return false;
}

PerturbationWitness base_witness(const Game& g, const Frame& fr,
                                 const std::array<Rat, 2>& target,
                                 const Rat& tx) {
  PerturbationWitness w;
  w.mu = fr.mu;
  w.mup = fr.mup;
  w.target = target;
  w.eps_payoff = Rat(1, 10);
  w.x_center = fr.x0;
  w.x_radius = tx;
  w.delta = 0;
  return w;
}

// Fully revealing support: both interim comparisons are one-sided, so
// tilting the two states' utilities in opposite directions along x0 keeps
// x0 itself feasible on an open ball.
PerturbationWitness build_open_halfspaces(const Game& g, const Frame& fr,
                                          const std::array<Rat, 2>& target,
                                          const Rat& tu, const Rat& tx) {
  const Vec v = g.sender_values();
  PerturbationWitness w = base_witness(g, fr, target, tx);
  w.construction_case = "open_halfspaces";
  const Rat norm = linf_norm(fr.x0);
  if (norm == 0) {
    w.center_u1 = v;
    w.center_u2 = v;
    w.radius = tu;
    return w;
  }
  const Rat eta = tu / (2 * std::max(Rat(1), norm));
  w.center_u1 = v + eta * fr.x0;
  w.center_u2 = v - eta * fr.x0;
  w.radius = std::min(Rat(tu / 2),
                      Rat(eta * fr.x0.dot(fr.x0) / (2 * l1_norm(fr.x0))));
  return w;
}

// One degenerate posterior: a single indifference constraint. Build two
// nearby points of the difference polytope on which the indifferent state's
// utility takes strictly opposite signs, and tilt the one-sided state
// strictly past zero on both; every nearby utility pair then crosses zero
// somewhere on the connecting segment.
PerturbationWitness build_one_equality_wedge(const Game& g, const Frame& fr,
                                             const std::array<Rat, 2>& target,
                                             const Rat& tu, const Rat& tx) {
  const Vec v = g.sender_values();
  // theta2 is one-sided (<= 0) when mu = 0; theta1 is one-sided (>= 0)
  // when mu' = 1.
  const bool mu_degenerate = fr.mu == 0;
  const int ineq_sign = mu_degenerate ? -1 : +1;

  // Vertex choices: most negative value for the low end, most positive for
  // the high end, zero-value vertices as fallback anchors.
  int z_neg = -1, z_pos = -1, z_zero = -1;
  for (std::size_t j = 0; j < fr.vertices.size(); ++j) {
    if (fr.f[j] < 0 && (z_neg < 0 || fr.f[j] < fr.f[z_neg]))
      z_neg = static_cast<int>(j);
    if (fr.f[j] > 0 && (z_pos < 0 || fr.f[j] > fr.f[z_pos]))
      z_pos = static_cast<int>(j);
    if (fr.f[j] == 0 && z_zero < 0) z_zero = static_cast<int>(j);
  }
  int lo_vertex = z_neg >= 0 ? z_neg : z_zero;
  int hi_vertex = z_pos >= 0 ? z_pos : z_zero;
  if (lo_vertex == hi_vertex) {
    // One zero vertex serving both ends; pick any other vertex for the
    // second endpoint.
    for (std::size_t j = 0; j < fr.vertices.size(); ++j)
      if (static_cast<int>(j) != lo_vertex) {
        (z_neg < 0 ? lo_vertex : hi_vertex) = static_cast<int>(j);
        break;
      }
  }
  if (lo_vertex < 0 || hi_vertex < 0 || lo_vertex == hi_vertex)
    throw WitnessSearchFailed("difference polytope has too few vertices");

  Rat tau = std::min(Rat(tx / 4), Rat(1, 16));
  for (int attempt = 0; attempt < 40; ++attempt, tau /= 2) {
    const Vec p_lo = fr.x0 + tau * (fr.vertices[lo_vertex] - fr.x0);
    const Vec p_hi = fr.x0 + tau * (fr.vertices[hi_vertex] - fr.x0);
    if (!independent(p_lo, p_hi)) continue;
    const auto qa = gram_solve(p_lo, p_hi, 1, 0);
    const auto qb = gram_solve(p_lo, p_hi, 0, 1);
    const auto wv = gram_solve(p_lo, p_hi, 1, 1);
    if (!qa || !qb || !wv) continue;

    const Rat t_lo = v.dot(p_lo), t_hi = v.dot(p_hi);
    const Rat eta =
        tu / (4 * std::max(Rat(1), linf_norm(*qa) + linf_norm(*qb)));
    Vec correction = Vec::Zero(v.size());
    if (t_lo >= 0) correction += (-eta - t_lo) * (*qa);
    if (t_hi <= 0) correction += (eta - t_hi) * (*qb);
    const Vec u_eq = v + correction;
    if (!(u_eq.dot(p_lo) < 0 && u_eq.dot(p_hi) > 0)) continue;
    if (linf_norm(correction) > tu / 2) continue;

    const Rat eta_i = tu / (4 * std::max(Rat(1), linf_norm(*wv)));
    if (!(eta_i > 2 * std::max(abs(t_lo), abs(t_hi)))) continue;
    const Vec u_ineq = v + Rat(ineq_sign) * eta_i * (*wv);
    if (!(Rat(ineq_sign) * u_ineq.dot(p_lo) > 0 &&
          Rat(ineq_sign) * u_ineq.dot(p_hi) > 0))
      continue;

    PerturbationWitness w = base_witness(g, fr, target, tx);
    w.construction_case = "one_equality_wedge";
    w.center_u1 = mu_degenerate ? u_eq : u_ineq;
    w.center_u2 = mu_degenerate ? u_ineq : u_eq;
    w.radius = tu / 2;
    w.delta = tau;
    return w;
  }
  throw WitnessSearchFailed("wedge construction found no valid segment");
}

// Both posteriors interior: both states must stay exactly indifferent.
// Express a point near x0 as a strictly positive combination of three
// independent vertices; the per-state vertex-value vectors are placed in
// the plane orthogonal to the weights, so their cross product recovers
// strictly positive weights for every nearby utility pair.
PerturbationWitness build_two_equality_triple(const Game& g, const Frame& fr,
                                              const std::array<Rat, 2>& target,
                                              const Rat& tu, const Rat& tx) {
  const Vec v = g.sender_values();
  const Eigen::Index n = v.size();
  const std::size_t nv = fr.vertices.size();

  Mat V;
  Vec lambda0;
  bool found = false;
  for (std::size_t i = 0; i < nv && !found; ++i) {
    for (std::size_t j = i + 1; j < nv && !found; ++j) {
      for (std::size_t k = j + 1; k < nv && !found; ++k) {
        Mat cand(n, 3);
        cand.col(0) = fr.vertices[i];
        cand.col(1) = fr.vertices[j];
        cand.col(2) = fr.vertices[k];
        Mat gram = cand.transpose() * cand;
        const auto lam = solve_square(gram, Vec(cand.transpose() * fr.x0));
        if (!lam) continue;  // linearly dependent triple
        if (Vec(cand * (*lam)) != fr.x0) continue;
        if ((*lam)[0] < 0 || (*lam)[1] < 0 || (*lam)[2] < 0) continue;
        if ((*lam)[0] + (*lam)[1] + (*lam)[2] != 1) continue;
        V = cand;
        lambda0 = *lam;
        found = true;
      }
    }
  }
  if (!found)
    throw WitnessSearchFailed(
        "no independent vertex triple represents the mixture difference");

  auto cross = [](const Vec& a, const Vec& b) {
    Vec c(3);
    c << a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0];
    return c;
  };

  const Vec y0 = V.transpose() * v;
  Rat delta = tx / 16, delta_p = tu / 16;
  for (int attempt = 0; attempt < 40; ++attempt, delta /= 2, delta_p /= 2) {
    const Vec lambda = lambda0 + delta * Vec::Ones(3);
    const Rat lam_sum = lambda[0] + lambda[1] + lambda[2];
    const Vec x_hat = (V * lambda) / lam_sum;
    const Vec y_hat = y0 - (lambda.dot(y0) / lambda.dot(lambda)) * lambda;
    Vec b1(3);
    b1 << lambda[1], -lambda[0], Rat(0);
    const Vec b2 = cross(lambda, b1);
    Vec y1 = y_hat + delta_p * b1;
    Vec y2 = y_hat + delta_p * b2;
    Vec m = cross(y1, y2);
    Rat c = m.dot(lambda) / lambda.dot(lambda);
    if (c < 0) {
      std::swap(y1, y2);
      m = -m;
      c = -c;
    }
    if (c == 0 || Vec(m - c * lambda) != Vec::Zero(3)) continue;

    Mat gram = V.transpose() * V;
    const auto alpha = solve_square(gram, Vec(y1 - y0));
    const auto beta = solve_square(gram, Vec(y2 - y0));
    if (!alpha || !beta) continue;
    const Vec u1 = v + V * (*alpha);
    const Vec u2 = v + V * (*beta);
    if (linf_norm(Vec(u1 - v)) > tu / 2 || linf_norm(Vec(u2 - v)) > tu / 2)
      continue;
    if (linf_norm(Vec(x_hat - fr.x0)) > tx / 2) continue;

    PerturbationWitness w = base_witness(g, fr, target, tx);
    w.construction_case = "two_equality_triple";
    w.center_u1 = u1;
    w.center_u2 = u2;
    w.radius = tu / 2;
    w.x_center = x_hat;
    w.lambda = lambda;
    w.delta = delta;
    return w;
  }
  throw WitnessSearchFailed("triple construction exhausted its shrink budget");
}

}  // namespace

bool confirm_witness(const Game& g, const PerturbationWitness& w,
                     int n_samples, std::uint64_t seed, std::string* failure) {
  const Eigen::Index n = g.num_actions();
  auto check = [&](const Vec& u1, const Vec& u2) {
    FeasibilityQuery q =
        make_query(g, u1, u2, w.mu, w.mup, w.target, w.eps_payoff);
    q.signs.x_center = w.x_center;
    q.signs.x_radius = w.x_radius;
    const FeasibilityResult res = perturbed_equilibrium_search(q);
    if (res.feasible) return true;
    if (failure)
      *failure = "infeasible at u1=" + vec_to_json(u1).dump() +
                 " u2=" + vec_to_json(u2).dump() + ": " + res.certificate;
    return false;
  };

  // Deterministic skeleton: the center, the diagonal corners, and every
  // axis-aligned extreme point of the pair ball.
  if (!check(w.center_u1, w.center_u2)) return false;
  const Vec ones = Vec::Ones(n);
  if (!check(Vec(w.center_u1 + w.radius * ones),
             Vec(w.center_u2 + w.radius * ones)))
    return false;
  if (!check(Vec(w.center_u1 - w.radius * ones),
             Vec(w.center_u2 - w.radius * ones)))
    return false;
  for (Eigen::Index i = 0; i < 2 * n; ++i) {
    for (int sign : {1, -1}) {
      Vec u1 = w.center_u1, u2 = w.center_u2;
      if (i < n)
        u1[i] += sign * w.radius;
      else
        u2[i - n] += sign * w.radius;
      if (!check(u1, u2)) return false;
    }
  }

  DyadicSampler sampler(seed);
  for (int s = 0; s < n_samples; ++s) {
    const Vec u1 = w.center_u1 + sampler.offset_vec(n, w.radius);
    const Vec u2 = w.center_u2 + sampler.offset_vec(n, w.radius);
    if (!check(u1, u2)) return false;
  }
  return true;
}

PerturbationWitness perturbation_witness(const Game& g, const Equilibrium& e,
                                         const Rat& target_radius_u,
                                         const Rat& target_radius_x) {
  if (target_radius_u <= 0 || target_radius_x <= 0)
    throw std::invalid_argument("witness radii must be positive");
  const RobustnessVerdict verdict = classify_two_posterior(g, e);
  if (verdict.status == RobustStatus::not_robust)
    throw NotRobustEquilibrium("equilibrium classifies as not robust");

  PerturbationWitness w;
  if (e.support.size() == 1) {
    w.construction_case = "babbling";
    w.mu = w.mup = e.support[0].mu;
    w.center_u1 = w.center_u2 = g.sender_values();
    w.radius = target_radius_u;
    w.x_center = Vec::Zero(g.num_actions());
    w.x_radius = target_radius_x;
    w.target = e.interim;
    w.eps_payoff = Rat(1, 10);
    w.delta = 0;
  } else {
    if (verdict.rule == RobustRule::none)
      throw NotRobustEquilibrium(
          "two-posterior witness needs a payoff above the babbling range");
    const Frame fr = make_frame(g, e);
    switch (verdict.rule) {
      case RobustRule::cond_fully_revealing:
        w = build_open_halfspaces(g, fr, e.interim, target_radius_u,
                                  target_radius_x);
        break;
      case RobustRule::cond_one_degenerate:
        w = build_one_equality_wedge(g, fr, e.interim, target_radius_u,
                                     target_radius_x);
        break;
      default:
        w = build_two_equality_triple(g, fr, e.interim, target_radius_u,
                                      target_radius_x);
        break;
    }
  }

  // Resolution floor is relative to the requested radius: the confirmable
  // radius scales with the construction's margins, which scale with the
  // target.
  const Rat floor = target_radius_u / (1 << 20);
  while (!confirm_witness(g, w, kConstructionSamples, kConstructionSeed)) {
    w.radius /= 2;
    if (w.radius < floor)
      throw WitnessSearchFailed(
          "confirmation kept failing down to 2^-20 of the target radius");
  }
  return w;
}

nlohmann::json witness_to_json(const PerturbationWitness& w) {
  return {{"center", {vec_to_json(w.center_u1), vec_to_json(w.center_u2)}},
          {"radius", rational_to_json(w.radius)},
          {"x_center", vec_to_json(w.x_center)},
          {"x_radius", rational_to_json(w.x_radius)},
          {"case", w.construction_case},
          {"support", {rational_to_json(w.mu), rational_to_json(w.mup)}}};
}

}  // namespace cheaptalk
