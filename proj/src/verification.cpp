#include "crowdgame/verification.hpp"

#include <algorithm>
#include <cmath>

namespace crowdgame {

ClosedFormBindings ClosedFormBindings::analytic() {
  ClosedFormBindings b;
  b.overlap = [](double d) { return overlap_probability(d); };
  b.lead = [](double d) { return lead_probability(d); };
  b.contested_matrix = [](double q) { return contested_payoff_matrix(q); };
  b.mixed_solver = [](const Bimatrix2x2& g) { return solve_2x2_mixed(g); };
  b.payoff_table = [](const GameParams& p) { return ex_ante_payoffs(p); };
  b.region = [](const GameParams& p) { return classify_region(p); };
  return b;
}

namespace {

bool matches_label(const std::vector<FirstStageProfile>& stable, RegionLabel label) {
  switch (label) {
    case RegionLabel::CCUnique:
      return stable == std::vector<FirstStageProfile>{FirstStageProfile::CC};
    case RegionLabel::SSUnique:
      return stable == std::vector<FirstStageProfile>{FirstStageProfile::SS};
    case RegionLabel::Both:
      return stable == std::vector<FirstStageProfile>{FirstStageProfile::CC, FirstStageProfile::SS};
  }
  return false;
}

}  // namespace

std::vector<VerificationReport> run_verification_suite(const VerifyOptions& options,
                                                       const ClosedFormBindings& bindings) {
  std::vector<VerificationReport> reports;
  const double quad_tol = 4.0 / options.quadrature_resolution;

  // Probability integrals against midpoint quadrature, plus the closure
  // identity: the two events partition {p1 > p2}.
  {
    double worst_overlap = -1, overlap_closed = 0, overlap_quad = 0;
    double worst_lead = -1, lead_closed = 0, lead_quad = 0;
    double worst_closure = -1, closure_value = 0.5;
    for (int i = 0; i < options.damage_grid; ++i) {
      const double d = static_cast<double>(i) / (options.damage_grid - 1);
      const double closed_o = bindings.overlap(d);
      const double closed_l = bindings.lead(d);
      const double quad_o = quadrature_overlap(d, options.quadrature_resolution);
      const double quad_l = quadrature_lead(d, options.quadrature_resolution);
      if (std::abs(closed_o - quad_o) > worst_overlap) {
        worst_overlap = std::abs(closed_o - quad_o);
        overlap_closed = closed_o;
        overlap_quad = quad_o;
      }
      if (std::abs(closed_l - quad_l) > worst_lead) {
        worst_lead = std::abs(closed_l - quad_l);
        lead_closed = closed_l;
        lead_quad = quad_l;
      }
      if (std::abs(closed_o + closed_l - 0.5) > worst_closure) {
        worst_closure = std::abs(closed_o + closed_l - 0.5);
        closure_value = closed_o + closed_l;
      }
    }
    reports.push_back(make_report("overlap_probability", overlap_closed, overlap_quad, quad_tol));
    reports.push_back(make_report("lead_probability", lead_closed, lead_quad, quad_tol));
    reports.push_back(make_report("probability_closure", 0.5, closure_value, 0.0));
  }

  // Contested subgame: solver output, no profitable deviation, and the exact
  // enumeration identities under the (1-q, q) mixture.
  {
    double worst_solver = 0, worst_deviation = 0;
    double worst_mass = 0, worst_weak = 0, worst_total = 0;
    for (int i = 0; i < options.cost_grid; ++i) {
      const double q = static_cast<double>(i) / (options.cost_grid - 1);
      const Bimatrix2x2 game = bindings.contested_matrix(q);
      const MixedAttackStrategy solved = bindings.mixed_solver(game);
      worst_solver = std::max({worst_solver, std::abs(solved.prob1 - (1.0 - q)),
                               std::abs(solved.prob2 - q)});
      const VerificationReport br =
          best_response_check_2x2(game, solved, options.deviation_grid, 1e-12);
      worst_deviation = std::max(worst_deviation, br.oracle_value);

      const ContestedStats stats = enumerate_contested_statistics(q, {1.0 - q, q});
      worst_mass = std::max(worst_mass, std::abs(stats.expected_attacks - 1.0));
      worst_weak = std::max(worst_weak, std::abs(stats.weak_win_prob - q * q));
      worst_total = std::max(worst_total, std::abs(stats.total_utility - (1.0 - q)));
    }
    reports.push_back(make_report("contested_mixed_equilibrium", 0.0, worst_solver, 1e-12));
    reports.push_back(make_report("contested_best_response", 0.0, worst_deviation, 1e-12));
    reports.push_back(make_report("contested_attack_mass", 0.0, worst_mass, 0.0));
    reports.push_back(make_report("contested_weak_win", 0.0, worst_weak, 1e-15));
    reports.push_back(make_report("contested_total_utility", 0.0, worst_total, 0.0));
  }

  // First stage: threshold classifier vs deviation enumeration on an interior
  // lattice, CS/SC never stable, and the CC entry recomposed from the
  // probability integrals.
  {
    const int n = options.region_grid;
    int mismatches = 0, cs_sc_hits = 0;
    double worst_compose = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const GameParams params{static_cast<double>(i) / (n + 1),
                                static_cast<double>(j) / (n + 1), 1.0};
        const std::vector<FirstStageProfile> stable =
            exhaustive_first_stage_check(bindings.payoff_table(params));
        for (FirstStageProfile p : stable)
          if (p == FirstStageProfile::CS || p == FirstStageProfile::SC) ++cs_sc_hits;
        if (!matches_label(stable, bindings.region(params))) ++mismatches;

        const double composed = bindings.overlap(params.attack_damage) * (1.0 - params.attack_cost) +
                                bindings.lead(params.attack_damage);
        worst_compose =
            std::max(worst_compose, std::abs(bindings.payoff_table(params).cc.u1 - composed));
      }
    }
    reports.push_back(make_report("region_agreement", 0.0, mismatches, 0.0));
    reports.push_back(make_report("cs_sc_excluded", 0.0, cs_sc_hits, 0.0));
    reports.push_back(make_report("ex_ante_composition", 0.0, worst_compose, 1e-15));
  }

  return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed; });
}

}  // namespace crowdgame
