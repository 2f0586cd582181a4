#pragma once

#include <functional>
#include <vector>

#include "crowdgame/equilibrium.hpp"
#include "crowdgame/oracle.hpp"

// Assembles the oracle checks against the analytic engine. The closed forms
// under test are injected through ClosedFormBindings so the oracle module
// itself never links against them; tests can substitute broken bindings to
// prove the suite catches faults.

namespace crowdgame {

struct ClosedFormBindings {
  std::function<double(double)> overlap;
  std::function<double(double)> lead;
  std::function<Bimatrix2x2(double)> contested_matrix;
  std::function<MixedAttackStrategy(const Bimatrix2x2&)> mixed_solver;
  std::function<PayoffTable(const GameParams&)> payoff_table;
  std::function<RegionLabel(const GameParams&)> region;

  static ClosedFormBindings analytic();
};

struct VerifyOptions {
  int quadrature_resolution = 2000;
  int damage_grid = 101;    // d values for the probability checks
  int cost_grid = 101;      // q values for the contested checks
  int region_grid = 51;     // interior (q,d) lattice per axis
  int deviation_grid = 1001;
};

// Runs every check and returns one report per verified quantity. Quadrature
// tolerance scales as 4/resolution (2e-3 at the default 2000); the algebraic
// checks are pinned at 1e-12 and below.
std::vector<VerificationReport> run_verification_suite(
    const VerifyOptions& options = {},
    const ClosedFormBindings& bindings = ClosedFormBindings::analytic());

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace crowdgame
