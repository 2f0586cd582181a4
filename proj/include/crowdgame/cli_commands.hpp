#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crowdgame/equilibrium.hpp"
#include "crowdgame/montecarlo.hpp"
#include "crowdgame/verification.hpp"

// Command cores behind the CLI, kept as string-returning functions so tests
// can assert on the exact bytes the tool emits.

namespace crowdgame {

std::string format_g12(double value);  // %.12g

struct EqOptions {
  GameParams params;
  std::optional<double> p1;
  std::optional<double> p2;
  std::optional<FirstStageProfile> profile;
  bool json = false;
};

// Ex-ante payoff table, pure equilibria and region label; with realized
// productivities, also the second-stage equilibrium.
std::string run_eq(const EqOptions& options);

struct SweepSpec {
  std::vector<double> cost_grid;
  std::vector<double> damage_grid;

  void validate() const;  // nonempty, sorted, within [0,1]
};

inline constexpr const char* kSweepHeader =
    "q,d,region,u_cc,u_ss,u_c_vs_s_crowd,u_c_vs_s_closed,overlap_prob,lead_prob,"
    "contested_total_utility,weak_win_prob";

// One row per (q,d), q outer; numbers at 12 significant digits.
std::string sweep_csv(const SweepSpec& spec);

struct SimulateOptions {
  GameParams params;
  std::int64_t trials = 1000000;
  std::uint64_t seed = 12345;
  std::string policy1 = "equilibrium";
  std::string policy2 = "equilibrium";
  Conditioning conditioning = Conditioning::All;
  int partitions = 8;
};

// JSON report embedding the full config so every number is reproducible from
// the output alone.
std::string run_simulate(const SimulateOptions& options);

// Prints one line per verified quantity plus a summary; returns 0 when all
// checks pass, 1 otherwise.
int run_verify(const VerifyOptions& options, std::ostream& out,
               const ClosedFormBindings& bindings = ClosedFormBindings::analytic());

}  // namespace crowdgame
