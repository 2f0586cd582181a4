#pragma once

#include <string>
#include <vector>

#include "crowdgame/bimatrix.hpp"
#include "crowdgame/model.hpp"

// Brute-force and quadrature ground truth for the closed forms. Everything
// here is computed from first principles (indicator grids, deviation scans,
// enumeration through resolve_outcome); nothing calls the analytic engine,
// which only appears as caller-supplied inputs.

namespace crowdgame {

struct VerificationReport {
  std::string quantity;
  double closed_form = 0.0;
  double oracle_value = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

inline VerificationReport make_report(std::string quantity, double closed_form,
                                      double oracle_value, double tolerance) {
  VerificationReport r;
  r.quantity = std::move(quantity);
  r.closed_form = closed_form;
  r.oracle_value = oracle_value;
  r.abs_error = closed_form >= oracle_value ? closed_form - oracle_value : oracle_value - closed_form;
  r.tolerance = tolerance;
  r.passed = r.abs_error <= tolerance;
  return r;
}

// Midpoint-rule mass of {p2 < p1 < p2 + d} on the unit square. The integrand
// is an indicator, so the error comes from the cells straddling the two
// discontinuity lines and is O(1/resolution). Throws std::domain_error for
// resolution < 100.
double quadrature_overlap(double attack_damage, int resolution);

// Same rule for {p2 + d < p1}.
double quadrature_lead(double attack_damage, int resolution);

// Evaluates each player's pure actions and `deviation_grid` mixtures against
// the opponent's strategy; passes when no deviation gains more than
// tolerance over the candidate profile.
VerificationReport best_response_check_2x2(const Bimatrix2x2& game,
                                           const MixedAttackStrategy& strategy,
                                           int deviation_grid, double tolerance = 1e-12);

// Profiles surviving both players' unilateral first-stage deviations, by
// direct enumeration over the supplied ex-ante table (weak inequality, same
// convention as the analytic engine). Returned in CC, CS, SC, SS order.
std::vector<FirstStageProfile> exhaustive_first_stage_check(const PayoffTable& table);

struct ContestedStats {
  double expected_attacks = 0.0;
  double weak_win_prob = 0.0;
  double total_utility = 0.0;
};

// Enumerates the four attack profiles of a contested second stage through
// resolve_outcome on a representative in-reach state and reduces them under
// the product mixture. Per-cell utilities are checked bitwise against the
// winner-pays-own-cost structure, and the reduction is kept in factored form
// so the attack-mass and cost identities hold to the last bit.
ContestedStats enumerate_contested_statistics(double attack_cost,
                                              const MixedAttackStrategy& strategy);

}  // namespace crowdgame
