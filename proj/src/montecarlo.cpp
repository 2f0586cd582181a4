#include "crowdgame/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "crowdgame/equilibrium.hpp"

namespace crowdgame {

const char* to_string(Conditioning conditioning) {
  return conditioning == Conditioning::All ? "all" : "contested";
}

Conditioning conditioning_from_string(std::string_view name) {
  if (name == "all") return Conditioning::All;
  if (name == "contested") return Conditioning::ContestedOnly;
  throw std::invalid_argument("unknown conditioning '" + std::string(name) +
                              "' (expected 'all' or 'contested')");
}

namespace {

struct Accumulator {
  double u1 = 0, u1_sq = 0;
  double u2 = 0, u2_sq = 0;
  double attacks = 0, attacks_sq = 0;
  double cost = 0, cost_sq = 0;
  double total_u = 0, total_u_sq = 0;
  double winner_eff = 0, winner_eff_sq = 0;
  std::int64_t weak_wins = 0;
  std::int64_t counted = 0;
  std::int64_t contested = 0;
  std::int64_t total = 0;

  void merge(const Accumulator& o) {
    u1 += o.u1; u1_sq += o.u1_sq;
    u2 += o.u2; u2_sq += o.u2_sq;
    attacks += o.attacks; attacks_sq += o.attacks_sq;
    cost += o.cost; cost_sq += o.cost_sq;
    total_u += o.total_u; total_u_sq += o.total_u_sq;
    winner_eff += o.winner_eff; winner_eff_sq += o.winner_eff_sq;
    weak_wins += o.weak_wins;
    counted += o.counted;
    contested += o.contested;
    total += o.total;
  }
};

Estimate estimate_from(double sum, double sum_sq, std::int64_t n) {
  Estimate e;
  if (n <= 0) return e;
  e.mean = sum / static_cast<double>(n);
  if (n > 1) {
    const double var = std::max(0.0, (sum_sq - sum * sum / static_cast<double>(n)) /
                                         static_cast<double>(n - 1));
    e.std_error = std::sqrt(var / static_cast<double>(n));
  }
  return e;
}

}  // namespace

SimReport run_batch(const SimConfig& config) {
  config.params.validate();
  if (config.trials < 1) throw std::domain_error("trials must be >= 1");
  if (config.partitions < 1 || config.partitions > 4096)
    throw std::domain_error("partitions must lie in [1, 4096]");
  if (!config.policy1.first_stage || !config.policy1.attack_rule ||
      !config.policy2.first_stage || !config.policy2.attack_rule)
    throw std::invalid_argument("both policies need first_stage and attack_rule callbacks");

  const std::int64_t trials = config.trials;
  const int partitions = static_cast<int>(std::min<std::int64_t>(config.partitions, trials));
  std::vector<Accumulator> parts(partitions);

  auto run_partition = [&](int k) {
    Accumulator& acc = parts[static_cast<std::size_t>(k)];
    const std::int64_t lo = trials * k / partitions;
    const std::int64_t hi = trials * (k + 1) / partitions;
    for (std::int64_t t = lo; t < hi; ++t) {
      const std::uint64_t base = 4 * static_cast<std::uint64_t>(t);
      auto prod_rng = make_stream(config.seed, base);
      auto tie_rng = make_stream(config.seed, base + 1);
      auto rng1 = make_stream(config.seed, base + 2);
      auto rng2 = make_stream(config.seed, base + 3);

      const FirstStageProfile profile = make_profile(config.policy1.first_stage(config.params, rng1),
                                                     config.policy2.first_stage(config.params, rng2));
      const ProductivityPair prods = sample_productivities(profile, prod_rng);
      const AttackProfile attacks{
          config.policy1.attack_rule(1, profile, prods, config.params, rng1),
          config.policy2.attack_rule(2, profile, prods, config.params, rng2)};
      const Outcome out = resolve_outcome(profile, prods, attacks, config.params, tie_rng);

      const double gap = std::abs(prods.p1 - prods.p2);
      const bool contested = profile == FirstStageProfile::CC && gap < config.params.attack_damage;
      acc.total += 1;
      if (contested) acc.contested += 1;
      if (config.conditioning == Conditioning::ContestedOnly && !contested) continue;

      const int n_attacks = (attacks.by_player1 == AttackAction::Attack ? 1 : 0) +
                            (attacks.by_player2 == AttackAction::Attack ? 1 : 0);
      const double cost = config.params.attack_cost * n_attacks;
      const double total_u = out.u1 + out.u2;
      const double winner_eff = out.winner == 1 ? out.effective_p1 : out.effective_p2;
      const bool weak_won = (out.winner == 1 && prods.p1 < prods.p2) ||
                            (out.winner == 2 && prods.p2 < prods.p1);

      acc.counted += 1;
      acc.u1 += out.u1; acc.u1_sq += out.u1 * out.u1;
      acc.u2 += out.u2; acc.u2_sq += out.u2 * out.u2;
      acc.attacks += n_attacks; acc.attacks_sq += static_cast<double>(n_attacks) * n_attacks;
      acc.cost += cost; acc.cost_sq += cost * cost;
      acc.total_u += total_u; acc.total_u_sq += total_u * total_u;
      acc.winner_eff += winner_eff; acc.winner_eff_sq += winner_eff * winner_eff;
      if (weak_won) acc.weak_wins += 1;
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const int n_threads = static_cast<int>(std::min<unsigned>({hw, static_cast<unsigned>(partitions), 32u}));
  if (n_threads <= 1) {
    for (int k = 0; k < partitions; ++k) run_partition(k);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i)
      pool.emplace_back([&] {
        for (int k = next.fetch_add(1); k < partitions; k = next.fetch_add(1)) run_partition(k);
      });
    for (auto& th : pool) th.join();
  }

  Accumulator all;
  for (const Accumulator& part : parts) all.merge(part);  // fixed merge order

  SimReport report;
  report.trials = all.total;
  report.trials_counted = all.counted;
  report.contested_fraction =
      all.total > 0 ? static_cast<double>(all.contested) / static_cast<double>(all.total) : 0.0;
  report.u1 = estimate_from(all.u1, all.u1_sq, all.counted);
  report.u2 = estimate_from(all.u2, all.u2_sq, all.counted);
  report.attack_rate = estimate_from(all.attacks, all.attacks_sq, all.counted);
  report.total_cost = estimate_from(all.cost, all.cost_sq, all.counted);
  report.total_utility = estimate_from(all.total_u, all.total_u_sq, all.counted);
  report.winner_effective_productivity = estimate_from(all.winner_eff, all.winner_eff_sq, all.counted);
  report.weak_win_rate = estimate_from(static_cast<double>(all.weak_wins),
                                       static_cast<double>(all.weak_wins), all.counted);
  return report;
}

Policy equilibrium_policy(EquilibriumSelect select) {
  Policy policy;
  policy.name = "equilibrium";
  policy.first_stage = [select](const GameParams& params, RandomStream&) {
    switch (classify_region(params)) {
      case RegionLabel::CCUnique: return FirstStageAction::Crowdsource;
      case RegionLabel::SSUnique: return FirstStageAction::InHouse;
      case RegionLabel::Both:
        return select == EquilibriumSelect::PreferCC ? FirstStageAction::Crowdsource
                                                     : FirstStageAction::InHouse;
    }
    return FirstStageAction::InHouse;
  };
  policy.attack_rule = [](int self, FirstStageProfile profile, const ProductivityPair& prods,
                          const GameParams& params, RandomStream& rng) {
    const SecondStageEquilibrium eq = second_stage_equilibrium(profile, prods, params);
    const double prob = eq.attack_prob_of(self);
    if (prob <= 0.0) return AttackAction::NoAttack;
    if (prob >= 1.0) return AttackAction::Attack;
    return uniform01(rng) < prob ? AttackAction::Attack : AttackAction::NoAttack;
  };
  return policy;
}

Policy always_attack_policy() {
  Policy policy;
  policy.name = "always_attack";
  policy.first_stage = [](const GameParams&, RandomStream&) { return FirstStageAction::Crowdsource; };
  policy.attack_rule = [](int, FirstStageProfile, const ProductivityPair&, const GameParams&,
                          RandomStream&) { return AttackAction::Attack; };
  return policy;
}

Policy never_attack_policy() {
  Policy policy;
  policy.name = "never_attack";
  policy.first_stage = [](const GameParams&, RandomStream&) { return FirstStageAction::Crowdsource; };
  policy.attack_rule = [](int, FirstStageProfile, const ProductivityPair&, const GameParams&,
                          RandomStream&) { return AttackAction::NoAttack; };
  return policy;
}

Policy attack_if_behind_policy() {
  Policy policy;
  policy.name = "attack_if_behind";
  policy.first_stage = [](const GameParams&, RandomStream&) { return FirstStageAction::Crowdsource; };
  policy.attack_rule = [](int self, FirstStageProfile, const ProductivityPair& prods,
                          const GameParams& params, RandomStream&) {
    const double own = self == 1 ? prods.p1 : prods.p2;
    const double opp = self == 1 ? prods.p2 : prods.p1;
    const bool behind_within_reach = own < opp && opp - own < params.attack_damage;
    return behind_within_reach ? AttackAction::Attack : AttackAction::NoAttack;
  };
  return policy;
}

const std::map<std::string, Policy>& builtin_policies() {
  static const std::map<std::string, Policy> catalog = {
      {"always_attack", always_attack_policy()},
      {"attack_if_behind", attack_if_behind_policy()},
      {"equilibrium", equilibrium_policy()},
      {"never_attack", never_attack_policy()},
  };
  return catalog;
}

Policy builtin_policy(const std::string& name) {
  const auto& catalog = builtin_policies();
  const auto it = catalog.find(name);
  if (it == catalog.end()) {
    std::string names;
    for (const auto& [key, unused] : catalog) {
      if (!names.empty()) names += ", ";
      names += key;
    }
    throw std::invalid_argument("unknown policy '" + name + "' (available: " + names + ")");
  }
  return it->second;
}

}  // namespace crowdgame
