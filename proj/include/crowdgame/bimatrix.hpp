#pragma once

#include "crowdgame/model.hpp"

// Value types shared between the analytic engine and the brute-force checks:
// 2x2 bimatrix games, mixtures over them, and the first-stage payoff table.

namespace crowdgame {

// Mixing probabilities for each player's first-listed action. In attack
// subgames the first action is Attack, so prob1 is the chance player 1
// attacks. A pure strategy is the degenerate case {0, 1}.
struct MixedAttackStrategy {
  double prob1 = 0.0;
  double prob2 = 0.0;
};

// Player 1 is the row player; action index 0 is the first-listed action.
struct Bimatrix2x2 {
  double row[2][2] = {};  // row player's utility, [row action][column action]
  double col[2][2] = {};  // column player's utility
};

struct UtilityPair {
  double u1 = 0.0;
  double u2 = 0.0;
};

// Ex-ante first-stage payoffs, one cell per profile.
struct PayoffTable {
  UtilityPair cc, cs, sc, ss;

  const UtilityPair& at(FirstStageProfile profile) const {
    switch (profile) {
      case FirstStageProfile::CC: return cc;
      case FirstStageProfile::CS: return cs;
      case FirstStageProfile::SC: return sc;
      default: return ss;
    }
  }
};

}  // namespace crowdgame
