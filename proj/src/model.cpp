#include "crowdgame/model.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace crowdgame {

FirstStageProfile make_profile(FirstStageAction a1, FirstStageAction a2) {
  const bool c1 = a1 == FirstStageAction::Crowdsource;
  const bool c2 = a2 == FirstStageAction::Crowdsource;
  if (c1 && c2) return FirstStageProfile::CC;
  if (c1) return FirstStageProfile::CS;
  if (c2) return FirstStageProfile::SC;
  return FirstStageProfile::SS;
}

FirstStageAction action_of(FirstStageProfile profile, int player) {
  if (player != 1 && player != 2) throw std::domain_error("player index must be 1 or 2");
  switch (profile) {
    case FirstStageProfile::CC: return FirstStageAction::Crowdsource;
    case FirstStageProfile::CS:
      return player == 1 ? FirstStageAction::Crowdsource : FirstStageAction::InHouse;
    case FirstStageProfile::SC:
      return player == 1 ? FirstStageAction::InHouse : FirstStageAction::Crowdsource;
    case FirstStageProfile::SS: return FirstStageAction::InHouse;
  }
  throw std::domain_error("invalid profile");
}

bool crowdsources(FirstStageProfile profile, int player) {
  return action_of(profile, player) == FirstStageAction::Crowdsource;
}

const char* to_string(FirstStageProfile profile) {
  switch (profile) {
    case FirstStageProfile::CC: return "CC";
    case FirstStageProfile::CS: return "CS";
    case FirstStageProfile::SC: return "SC";
    case FirstStageProfile::SS: return "SS";
  }
  return "??";
}

const char* to_string(FirstStageAction action) {
  return action == FirstStageAction::Crowdsource ? "C" : "S";
}

FirstStageProfile profile_from_string(std::string_view name) {
  std::string upper;
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "CC") return FirstStageProfile::CC;
  if (upper == "CS") return FirstStageProfile::CS;
  if (upper == "SC") return FirstStageProfile::SC;
  if (upper == "SS") return FirstStageProfile::SS;
  throw std::invalid_argument("unknown profile '" + std::string(name) + "' (expected CC, CS, SC or SS)");
}

void GameParams::validate() const {
  if (!(attack_cost >= 0.0 && attack_cost <= 1.0))
    throw std::domain_error("attack_cost must lie in [0,1], got " + std::to_string(attack_cost));
  if (!(attack_damage >= 0.0 && attack_damage <= 1.0))
    throw std::domain_error("attack_damage must lie in [0,1], got " + std::to_string(attack_damage));
  if (reward != 1.0)
    throw std::domain_error("reward is normalized to 1");
}

void check_productivities(FirstStageProfile profile, const ProductivityPair& prods) {
  const double ps[2] = {prods.p1, prods.p2};
  for (int player = 1; player <= 2; ++player) {
    const double p = ps[player - 1];
    if (crowdsources(profile, player)) {
      if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("crowdsourcing productivity of player " + std::to_string(player) +
                                " must lie in [0,1], got " + std::to_string(p));
    } else if (p != 0.0) {
      throw std::domain_error("in-house productivity of player " + std::to_string(player) +
                              " must be exactly 0, got " + std::to_string(p));
    }
  }
}

ProductivityPair sample_productivities(FirstStageProfile profile, RandomStream& rng) {
  ProductivityPair prods;
  if (crowdsources(profile, 1)) prods.p1 = uniform01(rng);
  if (crowdsources(profile, 2)) prods.p2 = uniform01(rng);
  return prods;
}

Outcome resolve_outcome(FirstStageProfile profile, const ProductivityPair& prods,
                        const AttackProfile& attacks, const GameParams& params,
                        RandomStream& tie_rng) {
  params.validate();
  check_productivities(profile, prods);

  const bool attack1 = attacks.by_player1 == AttackAction::Attack;
  const bool attack2 = attacks.by_player2 == AttackAction::Attack;

  Outcome out;
  out.effective_p1 = prods.p1 - (attack2 ? params.attack_damage : 0.0);
  out.effective_p2 = prods.p2 - (attack1 ? params.attack_damage : 0.0);

  if (out.effective_p1 > out.effective_p2) {
    out.winner = 1;
  } else if (out.effective_p2 > out.effective_p1) {
    out.winner = 2;
  } else {
    out.winner = fair_coin(tie_rng) ? 1 : 2;
  }

  const double cost1 = attack1 ? params.attack_cost : 0.0;
  const double cost2 = attack2 ? params.attack_cost : 0.0;
  out.u1 = (out.winner == 1 ? params.reward : 0.0) - cost1;
  out.u2 = (out.winner == 2 ? params.reward : 0.0) - cost2;
  return out;
}

}  // namespace crowdgame
