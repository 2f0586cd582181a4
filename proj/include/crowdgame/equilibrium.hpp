#pragma once

#include <string_view>
#include <vector>

#include "crowdgame/bimatrix.hpp"
#include "crowdgame/model.hpp"

// Closed-form equilibrium analysis of the two-stage game, with the reward
// normalized to 1 throughout.

namespace crowdgame {

enum class SubgameCase { NoContest, UnilateralReach, Contested, BothInHouse };
enum class RegionLabel { CCUnique, SSUnique, Both };

const char* to_string(SubgameCase tag);
const char* to_string(RegionLabel label);
RegionLabel region_from_string(std::string_view name);

struct SecondStageEquilibrium {
  MixedAttackStrategy strategy;  // oriented strong player first
  double u_strong = 0.0;
  double u_weak = 0.0;
  SubgameCase case_tag = SubgameCase::NoContest;
  // Index of the higher-productivity player; 1 by convention when realized
  // productivities tie (only reachable in symmetric-utility cases).
  int strong_player = 1;

  double attack_prob_of(int player) const {
    return player == strong_player ? strategy.prob1 : strategy.prob2;
  }
  double utility_of(int player) const {
    return player == strong_player ? u_strong : u_weak;
  }
};

// The attack subgame between two crowdsourcers whose gap is within reach:
// rows strong {A, N} x columns weak {A, N}. Throws std::domain_error for a
// cost outside [0,1].
Bimatrix2x2 contested_payoff_matrix(double attack_cost);

// Mixing probabilities solving both players' indifference conditions, by
// support enumeration. The completely mixed support is preferred; pure and
// partially mixed supports are fallbacks for degenerate games. Throws
// std::domain_error when no 2x2 support yields an equilibrium (malformed
// input; cannot happen for well-formed bimatrices).
MixedAttackStrategy solve_2x2_mixed(const Bimatrix2x2& game);

// Backward-induction solution of one realized second stage:
//   SS                        -> BothInHouse, nobody attacks, (1/2, 1/2)
//   CS/SC                     -> the in-house firm attacks iff the
//                                crowdsourcer's draw is below the damage
//   CC, gap >= damage         -> NoContest, leader keeps the reward
//   CC, gap <  damage         -> Contested, mixed (1-q, q) strong-first
// A CC state with p1 == p2 has no strong/weak labeling and is rejected with
// std::domain_error (measure-zero under the continuous model).
SecondStageEquilibrium second_stage_equilibrium(FirstStageProfile profile,
                                                const ProductivityPair& prods,
                                                const GameParams& params);

// Probability that the trailing of two U[0,1] draws is within `attack_damage`
// of the leader: d - d^2/2. Throws std::domain_error outside [0,1].
double overlap_probability(double attack_damage);

// Probability that the leader is out of reach: d^2/2 - d + 1/2.
double lead_probability(double attack_damage);

// Ex-ante first-stage payoff table:
//   CC: 1/2 - (d - d^2/2) q for each    CS: (1 - d, d (1 - q))
//   SC: mirror of CS                    SS: (1/2, 1/2)
PayoffTable ex_ante_payoffs(const GameParams& params);

// Profiles where no unilateral first-stage deviation strictly improves the
// deviator, by best-response checks on ex_ante_payoffs (not the region
// thresholds). Indifference counts as staying. Returned in CC, CS, SC, SS
// order.
//
// Note: a one-sided check on the in-house firm's deviation is not enough to
// rule out CS/SC near (high damage, low cost); membership is decided by both
// players' deviation checks, which exclude them everywhere except the fully
// degenerate point (cost 0, damage 1/2) where every cell ties.
std::vector<FirstStageProfile> pure_first_stage_equilibria(const GameParams& params);

// Closed-form region thresholds: CCUnique iff d < 1/2; SSUnique iff d >= 1/2
// and q < (2d-1)/d^2; Both otherwise. Agreement with
// pure_first_stage_equilibria is a test, not an assumption.
RegionLabel classify_region(const GameParams& params);

}  // namespace crowdgame
