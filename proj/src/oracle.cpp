#include "crowdgame/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace crowdgame {

namespace {

void check_resolution(int resolution) {
  if (resolution < 100)
    throw std::domain_error("quadrature resolution must be >= 100, got " + std::to_string(resolution));
}

void check_strategy(const MixedAttackStrategy& s) {
  if (!(s.prob1 >= 0.0 && s.prob1 <= 1.0 && s.prob2 >= 0.0 && s.prob2 <= 1.0))
    throw std::domain_error("strategy entries must lie in [0,1]");
}

}  // namespace

double quadrature_overlap(double attack_damage, int resolution) {
  check_resolution(resolution);
  const int n = resolution;
  const double h = 1.0 / n;
  std::int64_t hits = 0;
  for (int i = 0; i < n; ++i) {
    const double p1 = (i + 0.5) * h;
    for (int j = 0; j < n; ++j) {
      const double p2 = (j + 0.5) * h;
      if (p2 < p1 && p1 < p2 + attack_damage) ++hits;
    }
  }
  return static_cast<double>(hits) * h * h;
}

double quadrature_lead(double attack_damage, int resolution) {
  check_resolution(resolution);
  const int n = resolution;
  const double h = 1.0 / n;
  std::int64_t hits = 0;
  for (int i = 0; i < n; ++i) {
    const double p1 = (i + 0.5) * h;
    for (int j = 0; j < n; ++j) {
      const double p2 = (j + 0.5) * h;
      if (p2 + attack_damage < p1) ++hits;
    }
  }
  return static_cast<double>(hits) * h * h;
}

VerificationReport best_response_check_2x2(const Bimatrix2x2& g,
                                           const MixedAttackStrategy& strategy,
                                           int deviation_grid, double tolerance) {
  check_strategy(strategy);
  if (deviation_grid < 2) throw std::domain_error("deviation grid must have at least 2 points");

  // Expected utility of the row player mixing t against the column mixture.
  auto row_value = [&](double t) {
    const double s2 = strategy.prob2;
    const double act0 = s2 * g.row[0][0] + (1.0 - s2) * g.row[0][1];
    const double act1 = s2 * g.row[1][0] + (1.0 - s2) * g.row[1][1];
    return t * act0 + (1.0 - t) * act1;
  };
  auto col_value = [&](double t) {
    const double s1 = strategy.prob1;
    const double act0 = s1 * g.col[0][0] + (1.0 - s1) * g.col[1][0];
    const double act1 = s1 * g.col[0][1] + (1.0 - s1) * g.col[1][1];
    return t * act0 + (1.0 - t) * act1;
  };

  const double base_row = row_value(strategy.prob1);
  const double base_col = col_value(strategy.prob2);
  double best_gain = 0.0;
  for (int k = 0; k < deviation_grid; ++k) {
    const double t = static_cast<double>(k) / (deviation_grid - 1);
    best_gain = std::max(best_gain, row_value(t) - base_row);
    best_gain = std::max(best_gain, col_value(t) - base_col);
  }
  return make_report("best_response_2x2", 0.0, best_gain, tolerance);
}

std::vector<FirstStageProfile> exhaustive_first_stage_check(const PayoffTable& table) {
  std::vector<FirstStageProfile> stable;
  for (FirstStageProfile profile : {FirstStageProfile::CC, FirstStageProfile::CS,
                                    FirstStageProfile::SC, FirstStageProfile::SS}) {
    const FirstStageAction a1 = action_of(profile, 1);
    const FirstStageAction a2 = action_of(profile, 2);
    const FirstStageAction flip1 = a1 == FirstStageAction::Crowdsource ? FirstStageAction::InHouse
                                                                       : FirstStageAction::Crowdsource;
    const FirstStageAction flip2 = a2 == FirstStageAction::Crowdsource ? FirstStageAction::InHouse
                                                                       : FirstStageAction::Crowdsource;
    if (table.at(profile).u1 >= table.at(make_profile(flip1, a2)).u1 &&
        table.at(profile).u2 >= table.at(make_profile(a1, flip2)).u2)
      stable.push_back(profile);
  }
  return stable;
}

ContestedStats enumerate_contested_statistics(double attack_cost,
                                              const MixedAttackStrategy& strategy) {
  check_strategy(strategy);
  GameParams params{attack_cost, 0.5, 1.0};
  params.validate();
  // Representative in-reach state: p2 < p1 < p2 + d, so player 1 is strong.
  const ProductivityPair prods{2.0 / 3.0, 1.0 / 3.0};
  RandomStream unused_tie(0);  // no cell of the band can tie

  double weak_win = 0.0;
  for (int b1 : {0, 1}) {
    for (int b2 : {0, 1}) {
      const AttackProfile attacks{b1 == 0 ? AttackAction::Attack : AttackAction::NoAttack,
                                  b2 == 0 ? AttackAction::Attack : AttackAction::NoAttack};
      const Outcome out = resolve_outcome(FirstStageProfile::CC, prods, attacks, params, unused_tie);
      const double w1 = b1 == 0 ? strategy.prob1 : 1.0 - strategy.prob1;
      const double w2 = b2 == 0 ? strategy.prob2 : 1.0 - strategy.prob2;
      if (out.winner == 2) weak_win += w1 * w2;

      // Pin the cell structure: the winner keeps the reward minus its own
      // cost, the loser pays only its own cost.
      const double win_u = out.winner == 1 ? out.u1 : out.u2;
      const double lose_u = out.winner == 1 ? out.u2 : out.u1;
      const bool winner_attacked = (out.winner == 1 ? b1 : b2) == 0;
      const bool loser_attacked = (out.winner == 1 ? b2 : b1) == 0;
      if (win_u != (winner_attacked ? 1.0 - attack_cost : 1.0) ||
          lose_u != (loser_attacked ? -attack_cost : 0.0))
        throw std::logic_error("contested cell has unexpected utility structure");
    }
  }

  // The product mixture telescopes over the enumerated cells: attack counts
  // reduce to prob1 + prob2, and with the cell structure pinned above the
  // total utility reduces to 1 - cost * attacks.
  ContestedStats stats;
  stats.expected_attacks = strategy.prob1 + strategy.prob2;
  stats.weak_win_prob = weak_win;
  stats.total_utility = 1.0 - attack_cost * stats.expected_attacks;
  return stats;
}

}  // namespace crowdgame
