#include "crowdgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace crowdgame {

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

void check_unit(double x, const char* name) {
  if (!in_unit(x)) throw std::domain_error(std::string(name) + " must lie in [0,1], got " + std::to_string(x));
}

}  // namespace

const char* to_string(SubgameCase tag) {
  switch (tag) {
    case SubgameCase::NoContest: return "NoContest";
    case SubgameCase::UnilateralReach: return "UnilateralReach";
    case SubgameCase::Contested: return "Contested";
    case SubgameCase::BothInHouse: return "BothInHouse";
  }
  return "??";
}

const char* to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::CCUnique: return "CCUnique";
    case RegionLabel::SSUnique: return "SSUnique";
    case RegionLabel::Both: return "Both";
  }
  return "??";
}

RegionLabel region_from_string(std::string_view name) {
  if (name == "CCUnique") return RegionLabel::CCUnique;
  if (name == "SSUnique") return RegionLabel::SSUnique;
  if (name == "Both") return RegionLabel::Both;
  throw std::invalid_argument("unknown region label '" + std::string(name) + "'");
}

Bimatrix2x2 contested_payoff_matrix(double attack_cost) {
  check_unit(attack_cost, "attack_cost");
  const double q = attack_cost;
  Bimatrix2x2 g;
  // strong attacks: keeps the lead whatever the weak does
  g.row[0][0] = 1.0 - q;  g.col[0][0] = -q;
  g.row[0][1] = 1.0 - q;  g.col[0][1] = 0.0;
  // strong passes: a weak attack flips the outcome
  g.row[1][0] = 0.0;      g.col[1][0] = 1.0 - q;
  g.row[1][1] = 1.0;      g.col[1][1] = 0.0;
  return g;
}

MixedAttackStrategy solve_2x2_mixed(const Bimatrix2x2& g) {
  // Completely mixed support: each player's mixture makes the opponent
  // indifferent between its two actions.
  const double row_coeff = g.row[0][0] - g.row[0][1] - g.row[1][0] + g.row[1][1];
  const double col_coeff = g.col[0][0] - g.col[0][1] - g.col[1][0] + g.col[1][1];
  if (row_coeff != 0.0 && col_coeff != 0.0) {
    const double prob2 = (g.row[1][1] - g.row[0][1]) / row_coeff;
    const double prob1 = (g.col[1][1] - g.col[1][0]) / col_coeff;
    if (in_unit(prob1) && in_unit(prob2)) return {prob1, prob2};
  }

  // Pure x pure.
  for (int i : {0, 1}) {
    for (int j : {0, 1}) {
      if (g.row[i][j] >= g.row[1 - i][j] && g.col[i][j] >= g.col[i][1 - j])
        return {i == 0 ? 1.0 : 0.0, j == 0 ? 1.0 : 0.0};
    }
  }

  // Pure x mixed (degenerate games only). The pure side needs the opponent
  // indifferent; the mixed side must keep the pure action weakly optimal.
  auto feasible_mix = [](double gap_at_one, double gap_at_zero) -> double {
    // gap(t) = gap_at_zero + (gap_at_one - gap_at_zero) t must be >= 0 for
    // some t in [0,1]; return the midpoint of the feasible interval, or -1.
    const double a = gap_at_one, b = gap_at_zero;
    if (a >= 0.0 && b >= 0.0) return 0.5;
    if (a < 0.0 && b < 0.0) return -1.0;
    const double root = b / (b - a);
    return b >= 0.0 ? root / 2.0 : (root + 1.0) / 2.0;
  };
  for (int i : {0, 1}) {
    if (g.col[i][0] == g.col[i][1]) {
      const double t = feasible_mix(g.row[i][0] - g.row[1 - i][0], g.row[i][1] - g.row[1 - i][1]);
      if (t >= 0.0) return {i == 0 ? 1.0 : 0.0, t};
    }
  }
  for (int j : {0, 1}) {
    if (g.row[0][j] == g.row[1][j]) {
      const double t = feasible_mix(g.col[0][j] - g.col[0][1 - j], g.col[1][j] - g.col[1][1 - j]);
      if (t >= 0.0) return {t, j == 0 ? 1.0 : 0.0};
    }
  }
  throw std::domain_error("no 2x2 support yields an equilibrium; malformed bimatrix");
}

namespace {

// CS/SC second stage: one crowdsourcer against one in-house firm.
SecondStageEquilibrium unilateral_case(double crowd_p, int crowd_player, int inhouse_player,
                                       const GameParams& params) {
  const double q = params.attack_cost;
  const double d = params.attack_damage;
  SecondStageEquilibrium eq;
  if (crowd_p < d) {
    // The in-house firm reaches the crowdsourcer by attacking and takes the
    // prize for sure.
    eq.case_tag = SubgameCase::UnilateralReach;
    eq.strong_player = crowd_p > 0.0 ? crowd_player : 1;
    if (eq.strong_player == inhouse_player) {
      eq.strategy = {1.0, 0.0};
      eq.u_strong = 1.0 - q;
      eq.u_weak = 0.0;
    } else {
      eq.strategy = {0.0, 1.0};
      eq.u_strong = 0.0;
      eq.u_weak = 1.0 - q;
    }
  } else if (crowd_p > 0.0) {
    eq.case_tag = SubgameCase::NoContest;
    eq.strong_player = crowd_player;
    eq.strategy = {0.0, 0.0};
    eq.u_strong = 1.0;
    eq.u_weak = 0.0;
  } else {
    // crowd_p == 0 with zero damage: a dead tie nobody can break; the coin
    // rule makes each side's expected utility one half.
    eq.case_tag = SubgameCase::NoContest;
    eq.strong_player = 1;
    eq.strategy = {0.0, 0.0};
    eq.u_strong = 0.5;
    eq.u_weak = 0.5;
  }
  return eq;
}

}  // namespace

SecondStageEquilibrium second_stage_equilibrium(FirstStageProfile profile,
                                                const ProductivityPair& prods,
                                                const GameParams& params) {
  params.validate();
  check_productivities(profile, prods);
  const double q = params.attack_cost;
  const double d = params.attack_damage;

  SecondStageEquilibrium eq;
  switch (profile) {
    case FirstStageProfile::SS:
      eq.case_tag = SubgameCase::BothInHouse;
      eq.strategy = {0.0, 0.0};
      eq.u_strong = eq.u_weak = 0.5;
      eq.strong_player = 1;
      return eq;
    case FirstStageProfile::CS:
      return unilateral_case(prods.p1, 1, 2, params);
    case FirstStageProfile::SC:
      return unilateral_case(prods.p2, 2, 1, params);
    case FirstStageProfile::CC:
      break;
  }

  if (prods.p1 == prods.p2)
    throw std::domain_error("second_stage_equilibrium needs distinct productivities when both crowdsource");
  eq.strong_player = prods.p1 > prods.p2 ? 1 : 2;
  const double gap = std::abs(prods.p1 - prods.p2);
  if (gap >= d) {
    eq.case_tag = SubgameCase::NoContest;
    eq.strategy = {0.0, 0.0};
    eq.u_strong = 1.0;
    eq.u_weak = 0.0;
  } else {
    eq.case_tag = SubgameCase::Contested;
    eq.strategy = {1.0 - q, q};
    eq.u_strong = 1.0 - q;
    eq.u_weak = 0.0;
  }
  return eq;
}

double overlap_probability(double attack_damage) {
  check_unit(attack_damage, "attack_damage");
  const double half_sq = 0.5 * attack_damage * attack_damage;
  return attack_damage - half_sq;
}

double lead_probability(double attack_damage) {
  check_unit(attack_damage, "attack_damage");
  const double half_sq = 0.5 * attack_damage * attack_damage;
  return (half_sq - attack_damage) + 0.5;
}

PayoffTable ex_ante_payoffs(const GameParams& params) {
  params.validate();
  const double q = params.attack_cost;
  const double d = params.attack_damage;
  PayoffTable table;
  const double cc = 0.5 - overlap_probability(d) * q;
  table.cc = {cc, cc};
  table.cs = {1.0 - d, d * (1.0 - q)};
  table.sc = {table.cs.u2, table.cs.u1};
  table.ss = {0.5, 0.5};
  return table;
}

std::vector<FirstStageProfile> pure_first_stage_equilibria(const GameParams& params) {
  const PayoffTable table = ex_ante_payoffs(params);
  std::vector<FirstStageProfile> stable;
  for (FirstStageProfile profile : {FirstStageProfile::CC, FirstStageProfile::CS,
                                    FirstStageProfile::SC, FirstStageProfile::SS}) {
    const FirstStageAction a1 = action_of(profile, 1);
    const FirstStageAction a2 = action_of(profile, 2);
    const FirstStageAction flip1 = a1 == FirstStageAction::Crowdsource ? FirstStageAction::InHouse
                                                                       : FirstStageAction::Crowdsource;
    const FirstStageAction flip2 = a2 == FirstStageAction::Crowdsource ? FirstStageAction::InHouse
                                                                       : FirstStageAction::Crowdsource;
    const bool p1_stays = table.at(profile).u1 >= table.at(make_profile(flip1, a2)).u1;
    const bool p2_stays = table.at(profile).u2 >= table.at(make_profile(a1, flip2)).u2;
    if (p1_stays && p2_stays) stable.push_back(profile);
  }
  return stable;
}

RegionLabel classify_region(const GameParams& params) {
  params.validate();
  const double q = params.attack_cost;
  const double d = params.attack_damage;
  if (d < 0.5) return RegionLabel::CCUnique;  // also sidesteps the 0/0 at d == 0
  const double threshold = (2.0 * d - 1.0) / (d * d);
  return q < threshold ? RegionLabel::SSUnique : RegionLabel::Both;
}

}  // namespace crowdgame
