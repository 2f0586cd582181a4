#pragma once

#include <string_view>

#include "crowdgame/random.hpp"

// Core state of a two-firm competition. Stage one: each firm either
// crowdsources (C), drawing productivity from U[0,1], or works in-house (S)
// with productivity fixed at 0. Realized productivities are public. Stage
// two: each firm may attack, which removes `attack_damage` from the
// opponent's productivity at a personal cost of `attack_cost`. The firm with
// the higher effective productivity takes the whole reward.

namespace crowdgame {

enum class FirstStageAction { Crowdsource, InHouse };
enum class AttackAction { Attack, NoAttack };

// The four first-stage profiles, player 1 first: CS means player 1
// crowdsources and player 2 stays in-house.
enum class FirstStageProfile { CC, CS, SC, SS };

FirstStageProfile make_profile(FirstStageAction a1, FirstStageAction a2);
FirstStageAction action_of(FirstStageProfile profile, int player);  // player is 1 or 2
bool crowdsources(FirstStageProfile profile, int player);

const char* to_string(FirstStageProfile profile);
const char* to_string(FirstStageAction action);

// Accepts "CC", "CS", "SC", "SS" (case-insensitive); throws
// std::invalid_argument otherwise.
FirstStageProfile profile_from_string(std::string_view name);

struct GameParams {
  double attack_cost = 0.0;    // spent by the attacker, as a fraction of the reward
  double attack_damage = 0.0;  // productivity removed from the attacked firm
  double reward = 1.0;         // normalized; the winner takes it whole

  // Cost and damage are admitted on the closed interval [0,1]; the mixed
  // second-stage equilibrium degenerates to a pure one at the endpoints.
  // Throws std::domain_error on violation.
  void validate() const;
};

struct ProductivityPair {
  double p1 = 0.0;
  double p2 = 0.0;
};

struct AttackProfile {
  AttackAction by_player1 = AttackAction::NoAttack;
  AttackAction by_player2 = AttackAction::NoAttack;
};

struct Outcome {
  int winner = 0;  // 1 or 2
  double u1 = 0.0;
  double u2 = 0.0;
  // Post-attack productivities; may go negative, never clamped (only
  // comparisons matter, and clamping would mask an attacked crowdsourcer
  // falling below the in-house 0).
  double effective_p1 = 0.0;
  double effective_p2 = 0.0;
};

// Throws std::domain_error unless in-house entries are exactly 0 and
// crowdsourcing entries lie in [0,1].
void check_productivities(FirstStageProfile profile, const ProductivityPair& prods);

// Independent U[0,1] draw for each crowdsourcing firm (p1 first), exact 0 for
// in-house firms.
ProductivityPair sample_productivities(FirstStageProfile profile, RandomStream& rng);

// Applies damage subtraction, picks the winner (an exact tie of effective
// productivities is broken by a fair coin from tie_rng), and charges each
// attacker its cost. Throws std::domain_error on inputs inconsistent with
// the profile.
Outcome resolve_outcome(FirstStageProfile profile, const ProductivityPair& prods,
                        const AttackProfile& attacks, const GameParams& params,
                        RandomStream& tie_rng);

}  // namespace crowdgame
