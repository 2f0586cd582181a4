#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "crowdgame/model.hpp"

// Seeded simulation of the full two-stage game under pluggable policies.
//
// Reproducibility contract: a SimReport is a pure function of
// (params, policies, seed, trials, conditioning, partitions). Trial t draws
// from four substreams with ids 4t+0 productivities, 4t+1 tie breaks,
// 4t+2 player 1's decisions, 4t+3 player 2's decisions (see random.hpp for
// the id -> stream rule). Per-trial streams make trial trajectories
// independent of the partition layout; partition sums are merged in index
// order, so only the float accumulation depends on `partitions`.

namespace crowdgame {

struct Policy {
  std::string name;
  // Both callbacks see only observable state: the public parameters, the
  // realized profile and productivities, and the player's own stream.
  std::function<FirstStageAction(const GameParams&, RandomStream&)> first_stage;
  std::function<AttackAction(int self, FirstStageProfile, const ProductivityPair&,
                             const GameParams&, RandomStream&)>
      attack_rule;
};

enum class Conditioning { All, ContestedOnly };
enum class EquilibriumSelect { PreferCC, PreferSS };

const char* to_string(Conditioning conditioning);
Conditioning conditioning_from_string(std::string_view name);  // "all" | "contested"

struct SimConfig {
  GameParams params;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  Policy policy1;
  Policy policy2;
  Conditioning conditioning = Conditioning::All;
  int partitions = 8;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(n)
};

struct SimReport {
  Estimate u1;
  Estimate u2;
  Estimate attack_rate;       // attacks per counted trial
  Estimate total_cost;        // attack spend per counted trial
  Estimate total_utility;     // u1 + u2 per counted trial
  Estimate winner_effective_productivity;
  Estimate weak_win_rate;     // counted trials won by the lower-productivity side
  double contested_fraction = 0.0;  // over all trials, regardless of conditioning
  std::int64_t trials_counted = 0;  // trials passing the conditioning filter
  std::int64_t trials = 0;
};

// Runs config.trials independent games and aggregates the trials passing the
// conditioning filter (post-filtering, not rejection sampling). Throws
// std::domain_error / std::invalid_argument on malformed configs.
SimReport run_batch(const SimConfig& config);

// First stage plays the pure equilibrium of the region (`select` breaks the
// tie when both CC and SS are equilibria); the second stage plays the
// subgame equilibrium exactly, drawing from the player's own stream when it
// is mixed.
Policy equilibrium_policy(EquilibriumSelect select = EquilibriumSelect::PreferCC);

Policy always_attack_policy();
Policy never_attack_policy();

// Crowdsources, then attacks iff trailing by less than the damage -- the
// heuristic of a weak player who profits from an uncountered attack.
Policy attack_if_behind_policy();

// Catalog keyed by name: equilibrium, always_attack, never_attack,
// attack_if_behind.
const std::map<std::string, Policy>& builtin_policies();

// Lookup in the catalog; throws std::invalid_argument listing the catalog
// for unknown names.
Policy builtin_policy(const std::string& name);

}  // namespace crowdgame
