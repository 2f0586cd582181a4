#include "crowdgame/cli_commands.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace crowdgame {

std::string format_g12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ProductivityPair prods_for(const EqOptions& options, FirstStageProfile profile) {
  ProductivityPair prods;
  if (crowdsources(profile, 1)) {
    if (!options.p1) throw std::invalid_argument("profile " + std::string(to_string(profile)) + " needs --p1");
    prods.p1 = *options.p1;
  } else if (options.p1 && *options.p1 != 0.0) {
    throw std::invalid_argument("player 1 is in-house; --p1 must be omitted or 0");
  }
  if (crowdsources(profile, 2)) {
    if (!options.p2) throw std::invalid_argument("profile " + std::string(to_string(profile)) + " needs --p2");
    prods.p2 = *options.p2;
  } else if (options.p2 && *options.p2 != 0.0) {
    throw std::invalid_argument("player 2 is in-house; --p2 must be omitted or 0");
  }
  return prods;
}

}  // namespace

std::string run_eq(const EqOptions& options) {
  options.params.validate();
  const PayoffTable table = ex_ante_payoffs(options.params);
  const std::vector<FirstStageProfile> stable = pure_first_stage_equilibria(options.params);
  const RegionLabel region = classify_region(options.params);

  const bool second_stage = options.p1.has_value() || options.p2.has_value() || options.profile.has_value();
  std::optional<SecondStageEquilibrium> eq;
  FirstStageProfile profile = FirstStageProfile::CC;
  ProductivityPair prods;
  if (second_stage) {
    profile = options.profile.value_or(FirstStageProfile::CC);
    prods = prods_for(options, profile);
    eq = second_stage_equilibrium(profile, prods, options.params);
  }

  if (options.json) {
    ordered_json doc;
    doc["params"] = {{"q", options.params.attack_cost},
                     {"d", options.params.attack_damage},
                     {"reward", options.params.reward}};
    doc["region"] = to_string(region);
    ordered_json pure = ordered_json::array();
    for (FirstStageProfile p : stable) pure.push_back(to_string(p));
    doc["pure_equilibria"] = pure;
    doc["payoffs"] = {{"CC", {table.cc.u1, table.cc.u2}},
                      {"CS", {table.cs.u1, table.cs.u2}},
                      {"SC", {table.sc.u1, table.sc.u2}},
                      {"SS", {table.ss.u1, table.ss.u2}}};
    if (eq) {
      doc["second_stage"] = {{"profile", to_string(profile)},
                             {"p1", prods.p1},
                             {"p2", prods.p2},
                             {"case", to_string(eq->case_tag)},
                             {"strong_player", eq->strong_player},
                             {"attack_prob_strong", eq->strategy.prob1},
                             {"attack_prob_weak", eq->strategy.prob2},
                             {"u_strong", eq->u_strong},
                             {"u_weak", eq->u_weak}};
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "q = " << format_g12(options.params.attack_cost)
      << "  d = " << format_g12(options.params.attack_damage)
      << "  reward = " << format_g12(options.params.reward) << "\n";
  out << "region: " << to_string(region) << "\n";
  out << "pure first-stage equilibria:";
  for (FirstStageProfile p : stable) out << " " << to_string(p);
  out << "\n";
  out << "ex-ante payoffs (player 1, player 2):\n";
  for (FirstStageProfile p : {FirstStageProfile::CC, FirstStageProfile::CS, FirstStageProfile::SC,
                              FirstStageProfile::SS}) {
    out << "  " << to_string(p) << ": (" << format_g12(table.at(p).u1) << ", "
        << format_g12(table.at(p).u2) << ")\n";
  }
  if (eq) {
    out << "second stage " << to_string(profile) << " with p1 = " << format_g12(prods.p1)
        << ", p2 = " << format_g12(prods.p2) << ":\n";
    out << "  case: " << to_string(eq->case_tag) << "\n";
    out << "  strong player: " << eq->strong_player << "\n";
    out << "  attack probabilities (strong, weak): (" << format_g12(eq->strategy.prob1) << ", "
        << format_g12(eq->strategy.prob2) << ")\n";
    out << "  expected utilities (strong, weak): (" << format_g12(eq->u_strong) << ", "
        << format_g12(eq->u_weak) << ")\n";
  }
  return out.str();
}

void SweepSpec::validate() const {
  for (const auto* grid : {&cost_grid, &damage_grid}) {
    const char* name = grid == &cost_grid ? "q" : "d";
    if (grid->empty()) throw std::invalid_argument(std::string(name) + " grid must be nonempty");
    double prev = -1.0;
    for (double v : *grid) {
      if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string(name) + " grid values must lie in [0,1]");
      if (v < prev) throw std::invalid_argument(std::string(name) + " grid must be sorted ascending");
      prev = v;
    }
  }
}

std::string sweep_csv(const SweepSpec& spec) {
  spec.validate();
  std::ostringstream out;
  out << kSweepHeader << "\n";
  for (double q : spec.cost_grid) {
    for (double d : spec.damage_grid) {
      const GameParams params{q, d, 1.0};
      const PayoffTable table = ex_ante_payoffs(params);
      out << format_g12(q) << ',' << format_g12(d) << ',' << to_string(classify_region(params))
          << ',' << format_g12(table.cc.u1) << ',' << format_g12(table.ss.u1) << ','
          << format_g12(table.cs.u1) << ',' << format_g12(table.cs.u2) << ','
          << format_g12(overlap_probability(d)) << ',' << format_g12(lead_probability(d)) << ','
          << format_g12(1.0 - q) << ',' << format_g12(q * q) << "\n";
    }
  }
  return out.str();
}

std::string run_simulate(const SimulateOptions& options) {
  SimConfig config;
  config.params = options.params;
  config.trials = options.trials;
  config.seed = options.seed;
  config.policy1 = builtin_policy(options.policy1);
  config.policy2 = builtin_policy(options.policy2);
  config.conditioning = options.conditioning;
  config.partitions = options.partitions;
  const SimReport report = run_batch(config);

  ordered_json doc;
  doc["command"] = "simulate";
  doc["config"] = {{"q", options.params.attack_cost},
                   {"d", options.params.attack_damage},
                   {"reward", options.params.reward},
                   {"trials", options.trials},
                   {"seed", options.seed},
                   {"policy1", options.policy1},
                   {"policy2", options.policy2},
                   {"conditioning", to_string(options.conditioning)},
                   {"partitions", options.partitions}};
  ordered_json rep;
  rep["trials"] = report.trials;
  rep["trials_counted"] = report.trials_counted;
  rep["contested_fraction"] = report.contested_fraction;
  auto put = [&rep](const char* mean_key, const char* se_key, const Estimate& e) {
    rep[mean_key] = e.mean;
    rep[se_key] = e.std_error;
  };
  put("mean_u1", "se_u1", report.u1);
  put("mean_u2", "se_u2", report.u2);
  put("attack_rate", "se_attack_rate", report.attack_rate);
  put("total_cost", "se_total_cost", report.total_cost);
  put("total_utility", "se_total_utility", report.total_utility);
  put("winner_effective_productivity", "se_winner_effective_productivity",
      report.winner_effective_productivity);
  put("weak_win_rate", "se_weak_win_rate", report.weak_win_rate);
  doc["report"] = rep;
  return doc.dump(2) + "\n";
}

int run_verify(const VerifyOptions& options, std::ostream& out, const ClosedFormBindings& bindings) {
  const std::vector<VerificationReport> reports = run_verification_suite(options, bindings);
  int failed = 0;
  for (const VerificationReport& r : reports) {
    if (!r.passed) ++failed;
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-28s closed=%-16.10g oracle=%-16.10g |err|=%-12.4g tol=%g",
                  r.passed ? "PASS" : "FAIL", r.quantity.c_str(), r.closed_form, r.oracle_value,
                  r.abs_error, r.tolerance);
    out << line << "\n";
  }
  out << (failed == 0 ? "verification passed" : "verification FAILED") << " (" << (reports.size() - failed)
      << "/" << reports.size() << " checks)\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace crowdgame
