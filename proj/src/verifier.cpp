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

#include "cheaptalk/verifier.hpp"

#include "cheaptalk/sampling.hpp"

namespace cheaptalk {

std::string to_string(VerifierVerdict v) {
  switch (v) {
    case VerifierVerdict::consistent: return "consistent";
    case VerifierVerdict::refuted: return "refuted";
    case VerifierVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

nlohmann::json verifier_report_to_json(const VerifierReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i)
    failures.push_back({{"u1", vec_to_json(r.failures[i].u1)},
                        {"u2", vec_to_json(r.failures[i].u2)},
                        {"reason", r.failures[i].reason}});
  return {{"verdict", to_string(r.verdict)},
          {"samples_tested", r.samples_tested},
          {"failures", failures},
          {"center", {vec_to_json(r.center_u1), vec_to_json(r.center_u2)}},
          {"seed", r.seed},
          {"notes", r.notes}};
}

namespace {

struct SupportFrame {
  Belief mu, mup;
  Vec x0;
};

SupportFrame support_frame(const Equilibrium& e) {
  SupportFrame fr;
  if (e.support.size() == 1) {
    fr.mu = fr.mup = e.support[0].mu;
    fr.x0 = Vec::Zero(e.support[0].mix.size());
    return fr;
  }
  const bool ordered = e.support[0].mu <= e.support[1].mu;
  const auto& lo = ordered ? e.support[0] : e.support[1];
  const auto& hi = ordered ? e.support[1] : e.support[0];
  fr.mu = lo.mu;
  fr.mup = hi.mu;
  fr.x0 = lo.mix - hi.mix;
  return fr;
}

bool run_sample(const Game& g, const SupportFrame& fr, const Vec& u1,
                const Vec& u2, const Vec& x_center, const Rat& x_radius,
                const std::array<Rat, 2>& target, const Rat& eps_payoff,
                std::string* reason) {
  FeasibilityQuery q = make_query(g, u1, u2, fr.mu, fr.mup, target, eps_payoff);
  q.signs.x_center = x_center;
  q.signs.x_radius = x_radius;
  const FeasibilityResult res = perturbed_equilibrium_search(q);
  if (!res.feasible && reason) *reason = res.certificate;
  return res.feasible;
}

}  // namespace

VerifierReport monte_carlo_robustness(const Game& g, const Equilibrium& e,
                                      const Rat& eps_u, const Rat& eps_payoff,
                                      int n_samples, std::uint64_t seed) {
  if (e.support.size() > 2)
    throw UnsupportedSupportSize("verifier handles at most two posteriors");
  const SupportFrame fr = support_frame(e);
  const Vec us = g.sender_values();
  const Eigen::Index n = us.size();

  VerifierReport report;
  report.seed = seed;

  // Preferred path: a constructed witness pins down the center and the
  // mixture-difference window.
  bool have_witness = false;
  PerturbationWitness witness;
  try {
    witness = perturbation_witness(g, e, eps_u / 2, Rat(1, 4));
    have_witness = true;
  } catch (const NotRobustEquilibrium&) {
  } catch (const WitnessSearchFailed&) {
  }

  DyadicSampler sampler(seed);
  if (have_witness) {
    report.center_u1 = witness.center_u1;
    report.center_u2 = witness.center_u2;
    report.notes = "center from constructive witness (" +
                   witness.construction_case + ")";
    bool all_ok = true;
    for (int s = 0; s < n_samples; ++s) {
      const Vec u1 = witness.center_u1 + sampler.offset_vec(n, witness.radius);
      const Vec u2 = witness.center_u2 + sampler.offset_vec(n, witness.radius);
      ++report.samples_tested;
      std::string reason;
      if (!run_sample(g, fr, u1, u2, witness.x_center, witness.x_radius,
                      e.interim, eps_payoff, &reason)) {
        all_ok = false;
        if (report.failures.size() < 10)
          report.failures.push_back({u1, u2, reason});
      }
    }
    report.verdict =
        all_ok ? VerifierVerdict::consistent : VerifierVerdict::inconclusive;
    return report;
  }

  // Fallback: ternary grid of candidate centers around the sender utility,
  // capped at 729; refuted only once every candidate fails a sample.
  report.center_u1 = us;
  report.center_u2 = us;
  const Rat step = eps_u / 2;
  long grid_size = 1;
  for (Eigen::Index i = 0; i < 2 * n && grid_size < 729; ++i) grid_size *= 3;
  const bool capped = grid_size > 729;
  if (capped) grid_size = 729;
  report.notes = capped ? "center grid capped at 729 candidates"
                        : "center grid over " + std::to_string(grid_size) +
                              " candidates";

  for (long idx = 0; idx < grid_size; ++idx) {
    Vec c1 = us, c2 = us;
    long code = idx;
    for (Eigen::Index i = 0; i < 2 * n; ++i) {
      const int digit = static_cast<int>(code % 3);
      code /= 3;
      const Rat shift = digit == 0 ? Rat(0) : (digit == 1 ? step : -step);
      if (i < n)
        c1[i] += shift;
      else
        c2[i - n] += shift;
    }
    bool center_ok = true;
    for (int s = 0; s < n_samples && center_ok; ++s) {
      const Vec u1 = c1 + sampler.offset_vec(n, step);
      const Vec u2 = c2 + sampler.offset_vec(n, step);
      ++report.samples_tested;
      std::string reason;
      if (!run_sample(g, fr, u1, u2, fr.x0, Rat(1, 4), e.interim, eps_payoff,
                      &reason)) {
        center_ok = false;
        if (report.failures.size() < 10)
          report.failures.push_back({u1, u2, reason});
      }
    }
    if (center_ok) {
      report.center_u1 = c1;
      report.center_u2 = c2;
      report.verdict = VerifierVerdict::consistent;
      report.notes += "; surviving center found";
      return report;
    }
  }
  report.verdict = VerifierVerdict::refuted;
  return report;
}

VerifierReport monte_carlo_full_robustness(const Game& g, const Equilibrium& e,
                                           const Rat& eps_u,
                                           const Rat& eps_payoff, int n_samples,
                                           std::uint64_t seed) {
  if (e.support.size() > 2)
    throw UnsupportedSupportSize("verifier handles at most two posteriors");
  const SupportFrame fr = support_frame(e);
  const Vec us = g.sender_values();
  const Eigen::Index n = us.size();

  VerifierReport report;
  report.seed = seed;
  report.center_u1 = us;
  report.center_u2 = us;

  std::vector<std::pair<Vec, Vec>> skeleton;
  try {
    const Refuter refuter = fully_robust_refuter(g, e);
    skeleton.emplace_back(us, Vec(us + (eps_u / 2) * refuter.direction));
    report.notes = "refuting tilt direction tested first";
  } catch (const RefuterInapplicable&) {
    report.notes = "no refuting tilt applies";
  }

  DyadicSampler sampler(seed);
  auto test = [&](const Vec& u1, const Vec& u2) {
    ++report.samples_tested;
    std::string reason;
    if (run_sample(g, fr, u1, u2, fr.x0, Rat(1, 4), e.interim, eps_payoff,
                   &reason))
      return true;
    report.failures.push_back({u1, u2, reason});
    report.verdict = VerifierVerdict::refuted;
    return false;
  };

  for (const auto& [u1, u2] : skeleton)
    if (!test(u1, u2)) return report;
  for (int s = 0; s < n_samples; ++s) {
    const Vec u1 = us + sampler.offset_vec(n, eps_u);
    const Vec u2 = us + sampler.offset_vec(n, eps_u);
    if (!test(u1, u2)) return report;
  }
  report.verdict = VerifierVerdict::consistent;
  return report;
}

}  // namespace cheaptalk
