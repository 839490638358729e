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

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cheaptalk/fixtures.hpp"
#include "cheaptalk/plot.hpp"
#include "cheaptalk/verifier.hpp"

namespace {

using namespace cheaptalk;

// A game or an abstract value profile with a representative prior.
struct Input {
  std::optional<Game> game;
  std::optional<ValueProfile> profile;
  Belief prior;
};

nlohmann::json fixture_to_json(const Fixture& f) {
  if (f.game) return game_to_json(*f.game);
  return {{"profile", value_profile_to_json(*f.profile)},
          {"prior", rational_to_json(f.prior)}};
}

// Accepts a JSON file (game, raw profile, or profile-with-prior wrapper) or
// the name of a built-in fixture.
Input load_input(const std::string& path) {
  Input in;
  if (!std::filesystem::exists(path)) {
    const auto names = fixture_names();
    if (std::find(names.begin(), names.end(), path) != names.end()) {
      Fixture f = builtin_fixture(path);
      in.game = std::move(f.game);
      in.profile = std::move(f.profile);
      in.prior = f.prior;
      return in;
    }
    throw ValidationError("no such file or fixture: " + path);
  }
  std::ifstream stream(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(stream);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(path + ": " + e.what());
  }
  if (j.is_object() && j.contains("states")) {
    in.game = parse_game(j.dump());
    in.prior = in.game->prior;
  } else if (j.is_object() && j.contains("profile")) {
    in.profile = value_profile_from_json(j.at("profile"));
    in.prior = parse_rational(j.at("prior"));
  } else if (j.is_object() && j.contains("cells")) {
    in.profile = value_profile_from_json(j);
    in.prior = Rat(1, 2);
  } else {
    throw SchemaError(path + ": expected a game or a value profile");
  }
  return in;
}

Game require_game(const Input& in, const std::string& what) {
  if (!in.game)
    throw ValidationError(what + " needs a concrete game, not a profile");
  return *in.game;
}

Equilibrium load_equilibrium(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw ValidationError("cannot read equilibrium file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(stream);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(path + ": " + e.what());
  }
  return equilibrium_from_json(j);
}

Rat rat_arg(const std::string& s) { return parse_rational(nlohmann::json(s)); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << content;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"exact analysis of binary-state cheap talk with transparent "
               "sender motives"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string input_path, eq_path, out_path, csv_path, emit_dir, prior_str,
      support_str, payoff_str, mode = "robust";
  std::string radius_str = "1/100", x_radius_str = "1/4",
              eps_payoff_str = "1/10";
  int samples = 200;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand(
      "analyze", "cell decomposition, value profile, envelope, payoff set");
  analyze->add_option("input", input_path, "game JSON file or fixture name")
      ->required();
  analyze->callback([&] {
    const Input in = load_input(input_path);
    const ValueProfile profile =
        in.game ? value_profile(*in.game) : *in.profile;
    print_json({{"profile", value_profile_to_json(profile)},
                {"prior", rational_to_json(in.prior)},
                {"envelope", rational_to_json(envelope_at(profile, in.prior))},
                {"payoff_set",
                 interval_set_to_json(payoff_set(profile, in.prior))}});
  });

  auto* robust = app.add_subcommand(
      "robust-set", "all payoffs attainable in a robust equilibrium");
  robust->add_option("input", input_path, "game or profile JSON, or fixture")
      ->required();
  robust->add_option("--prior", prior_str, "prior override (rational)");
  robust->callback([&] {
    Input in = load_input(input_path);
    if (!prior_str.empty()) in.prior = rat_arg(prior_str);
    IntervalSet set;
    if (in.game) {
      Game g = *in.game;
      g.prior = in.prior;
      set = robust_payoff_set(g);
    } else {
      set = generic_robust_set(*in.profile, in.prior);
    }
    print_json({{"prior", rational_to_json(in.prior)},
                {"robust_set", interval_set_to_json(set)}});
  });

  auto* classify = app.add_subcommand(
      "classify", "closed-form robustness classification of an equilibrium");
  classify->add_option("input", input_path, "game JSON file or fixture name")
      ->required();
  classify->add_option("--eq", eq_path, "equilibrium JSON file")->required();
  classify->callback([&] {
    const Game g = require_game(load_input(input_path), "classify");
    Equilibrium e = load_equilibrium(eq_path);
    const bool reduced = e.support.size() > 2;
    if (reduced) e = caratheodory_reduce(g, e);
    const RobustnessVerdict v = classify_two_posterior(g, e);
    print_json({{"status", to_string(v.status)},
                {"rule", to_string(v.rule)},
                {"notes", v.notes},
                {"reduced", reduced},
                {"equilibrium", equilibrium_to_json(e)}});
  });

  auto* witness = app.add_subcommand(
      "witness", "certified perturbation ball around a robust equilibrium");
  witness->add_option("input", input_path, "game JSON file or fixture name")
      ->required();
  witness->add_option("--eq", eq_path, "equilibrium JSON file")->required();
  witness->add_option("--radius", radius_str, "target utility radius")
      ->required();
  witness->add_option("--x-radius", x_radius_str,
                      "mixture-difference window radius (default 1/4)");
  witness->callback([&] {
    const Game g = require_game(load_input(input_path), "witness");
    const Equilibrium e = load_equilibrium(eq_path);
    print_json(witness_to_json(
        perturbation_witness(g, e, rat_arg(radius_str), rat_arg(x_radius_str))));
  });

  auto* verify = app.add_subcommand(
      "verify", "Monte-Carlo feasibility check of a robustness claim");
  verify->add_option("input", input_path, "game JSON file or fixture name")
      ->required();
  verify->add_option("--eq", eq_path, "equilibrium JSON file")->required();
  verify->add_option("--mode", mode, "robust|full (default robust)")
      ->check(CLI::IsMember({"robust", "full"}));
  verify->add_option("--samples", samples, "samples per center (default 200)");
  verify->add_option("--radius", radius_str,
                     "utility ball radius (default 1/100)");
  verify->add_option("--seed", seed, "sampler seed (default 0)");
  verify->add_option("--eps-payoff", eps_payoff_str,
                     "payoff window half-width (default 1/10)");
  verify->callback([&] {
    const Game g = require_game(load_input(input_path), "verify");
    const Equilibrium e = load_equilibrium(eq_path);
    const Rat eps_u = rat_arg(radius_str);
    const Rat eps_payoff = rat_arg(eps_payoff_str);
    const VerifierReport report =
        mode == "full"
            ? monte_carlo_full_robustness(g, e, eps_u, eps_payoff, samples,
                                          seed)
            : monte_carlo_robustness(g, e, eps_u, eps_payoff, samples, seed);
    print_json(verifier_report_to_json(report));
    if (report.verdict == VerifierVerdict::refuted) exit_code = 3;
  });

  auto* plot = app.add_subcommand(
      "plot", "render value profile, envelope, and robust region");
  plot->add_option("input", input_path, "game or profile JSON, or fixture")
      ->required();
  plot->add_option("--out", out_path, "output SVG path")->required();
  plot->add_option("--csv", csv_path, "also emit exact CSV");
  plot->add_option("--prior", prior_str, "prior override (rational)");
  plot->callback([&] {
    Input in = load_input(input_path);
    if (!prior_str.empty()) in.prior = rat_arg(prior_str);
    FigureSpec fig;
    if (in.game) {
      Game g = *in.game;
      g.prior = in.prior;
      fig = make_figure(g);
    } else {
      fig = make_figure(*in.profile, in.prior);
    }
    write_file(out_path, emit_svg(fig));
    if (!csv_path.empty()) write_file(csv_path, emit_csv(fig));
  });

  auto* examples =
      app.add_subcommand("examples", "print or emit a built-in fixture");
  examples->add_option("name", input_path, "ex1|ex2|ex3|ex4a|ex4b")
      ->required();
  examples->add_option("--emit", emit_dir, "write <name>.json into this dir");
  examples->callback([&] {
    const Fixture f = builtin_fixture(input_path);
    const nlohmann::json j = fixture_to_json(f);
    if (!emit_dir.empty()) {
      std::filesystem::create_directories(emit_dir);
      write_file((std::filesystem::path(emit_dir) / (f.name + ".json"))
                     .string(),
                 j.dump(2) + "\n");
    }
    print_json(j);
  });

  auto* construct = app.add_subcommand(
      "construct", "build an equilibrium with a given sender payoff");
  construct->add_option("input", input_path, "game JSON file or fixture name")
      ->required();
  construct->add_option("--payoff", payoff_str, "target ex ante sender payoff")
      ->required();
  construct->add_option("--support", support_str,
                        "explicit posterior pair mu,mu'");
  construct->callback([&] {
    const Game g = require_game(load_input(input_path), "construct");
    const Rat s = rat_arg(payoff_str);
    Equilibrium e;
    if (support_str.empty()) {
      e = construct_equilibrium(g, s);
    } else {
      const auto comma = support_str.find(',');
      if (comma == std::string::npos)
        throw ValidationError("--support expects mu,mu'");
      e = construct_equilibrium(
          g, s,
          {rat_arg(support_str.substr(0, comma)),
           rat_arg(support_str.substr(comma + 1))});
    }
    print_json(equilibrium_to_json(e));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
