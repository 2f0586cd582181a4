#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "crowdgame/cli_commands.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CROWDGAME_SEED")) {
    try {
      std::size_t pos = 0;
      const std::uint64_t seed = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return seed;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("CROWDGAME_SEED must be an unsigned integer, got '" + std::string(env) + "'");
  }
  return 12345;
}

std::vector<double> make_grid(double lo, double hi, int points, const std::vector<double>& explicit_values) {
  if (!explicit_values.empty()) return explicit_values;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    grid.push_back(lo);
    return grid;
  }
  for (int i = 0; i < points; ++i) grid.push_back(lo + i * (hi - lo) / (points - 1));
  return grid;
}

void write_or_print(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw std::runtime_error("failed while writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibrium analysis and seeded simulation of a two-firm competition\n"
               "between crowdsourcing and in-house work under mutual sabotage"};
  app.require_subcommand(1);

  double q = 0.0, d = 0.0;
  double p1 = 0.0, p2 = 0.0;
  std::string profile_name, format = "text", out_path;

  auto* eq = app.add_subcommand("eq", "ex-ante payoffs, pure equilibria, region label and second-stage queries");
  eq->add_option("--q", q, "attack cost in [0,1]")->required()->check(CLI::Range(0.0, 1.0));
  eq->add_option("--d", d, "attack damage in [0,1]")->required()->check(CLI::Range(0.0, 1.0));
  auto* eq_p1 = eq->add_option("--p1", p1, "realized productivity of player 1");
  auto* eq_p2 = eq->add_option("--p2", p2, "realized productivity of player 2");
  auto* eq_profile = eq->add_option("--profile", profile_name, "first-stage profile (CC, CS, SC, SS; default CC)");
  eq->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::int64_t trials = 1000000;
  std::uint64_t seed = 0;
  std::string policy1 = "equilibrium", policy2 = "equilibrium", conditioning = "all";
  int partitions = 8;

  auto* sim = app.add_subcommand("simulate", "seeded Monte Carlo batch; JSON report to stdout or --out");
  sim->add_option("--q", q, "attack cost in [0,1]")->required()->check(CLI::Range(0.0, 1.0));
  sim->add_option("--d", d, "attack damage in [0,1]")->required()->check(CLI::Range(0.0, 1.0));
  sim->add_option("--trials", trials, "number of games")->check(CLI::PositiveNumber);
  auto* sim_seed = sim->add_option("--seed", seed, "master seed (default: CROWDGAME_SEED or 12345)");
  sim->add_option("--policy1", policy1, "policy of player 1");
  sim->add_option("--policy2", policy2, "policy of player 2");
  sim->add_option("--conditioning", conditioning, "all or contested")
      ->check(CLI::IsMember({"all", "contested"}));
  sim->add_option("--partitions", partitions, "deterministic partition count")->check(CLI::Range(1, 4096));
  sim->add_option("--out", out_path, "write the JSON report to this file instead of stdout");

  double q_min = 0.0, q_max = 1.0, d_min = 0.0, d_max = 1.0;
  int q_points = 101, d_points = 101;
  std::vector<double> q_values, d_values;

  auto* sweep = app.add_subcommand("sweep", "phase-diagram CSV over a (q,d) grid");
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_option("--q-min", q_min)->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--q-max", q_max)->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--q-points", q_points, "grid points on the q axis")->check(CLI::PositiveNumber);
  sweep->add_option("--q-values", q_values, "explicit q values (overrides min/max/points)")->delimiter(',');
  sweep->add_option("--d-min", d_min)->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--d-max", d_max)->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--d-points", d_points, "grid points on the d axis")->check(CLI::PositiveNumber);
  sweep->add_option("--d-values", d_values, "explicit d values (overrides min/max/points)")->delimiter(',');

  crowdgame::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "run the brute-force checks against the closed forms");
  verify->add_option("--resolution", verify_options.quadrature_resolution, "quadrature grid per axis")
      ->check(CLI::Range(100, 100000));
  verify->add_option("--grid", verify_options.region_grid, "interior region-agreement lattice per axis")
      ->check(CLI::Range(2, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eq->parsed()) {
      crowdgame::EqOptions options;
      options.params = {q, d, 1.0};
      if (eq_p1->count() > 0) options.p1 = p1;
      if (eq_p2->count() > 0) options.p2 = p2;
      if (eq_profile->count() > 0) options.profile = crowdgame::profile_from_string(profile_name);
      options.json = format == "json";
      std::cout << crowdgame::run_eq(options);
      return kExitOk;
    }
    if (sim->parsed()) {
      crowdgame::SimulateOptions options;
      options.params = {q, d, 1.0};
      options.trials = trials;
      options.seed = sim_seed->count() > 0 ? seed : default_seed();
      options.policy1 = policy1;
      options.policy2 = policy2;
      options.conditioning = crowdgame::conditioning_from_string(conditioning);
      options.partitions = partitions;
      write_or_print(crowdgame::run_simulate(options), out_path);
      return kExitOk;
    }
    if (sweep->parsed()) {
      crowdgame::SweepSpec spec;
      spec.cost_grid = make_grid(q_min, q_max, q_points, q_values);
      spec.damage_grid = make_grid(d_min, d_max, d_points, d_values);
      write_or_print(sweep_csv(spec), out_path);
      return kExitOk;
    }
    if (verify->parsed()) {
      return crowdgame::run_verify(verify_options, std::cout) == 0 ? kExitOk : kExitCheckFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
