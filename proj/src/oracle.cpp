// Copyright 2026 The fiscal-duel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "fiscal_duel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "fiscal_duel/error.hpp"

namespace fiscal_duel {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double abs_tol(const ModelParams<double>& p) {
  return kRelTol * std::max(1.0, p.r_high);
}

// Where a type with rent r goes when the aggregate tax is c1 in J1 and c2 in
// J2: cheapest affordable jurisdiction, J1 on ties, locate when indifferent.
Location choose_location(double r, double c1, double c2, double tau) {
  const bool afford1 = c1 <= r + tau;
  const bool afford2 = c2 <= r + tau;
  if (afford1 && (!afford2 || c1 <= c2 + tau)) return Location::kJ1;
  if (afford2) return Location::kJ2;
  return Location::kAbroad;
}

TypeOutcome<double> type_outcome(double r, const CentralTaxes<double>& g,
                                 double t1, double t2, double tau) {
  TypeOutcome<double> out;
  out.location = choose_location(r, g.g1 + t1, g.g2 + t2, tau);
  if (out.location == Location::kJ1) {
    out.jurisdiction_tax = t1;
    out.j1_payoff = t1;
    out.mnc_payoff = std::max(r - g.g1 - t1, 0.0);
    out.realized_welfare = g.g1 + t1;
  } else if (out.location == Location::kJ2) {
    out.jurisdiction_tax = t2;
    out.j2_payoff = t2;
    out.mnc_payoff = std::max(r - g.g2 - t2, 0.0);
    out.realized_welfare = g.g2 + t2;
  }
  return out;
}

void finish(SubgameOutcome<double>& out, const ModelParams<double>& p) {
  const double wl = 1.0 - p.q;
  out.expected_j1 = p.q * out.high.j1_payoff + wl * out.low.j1_payoff;
  out.expected_j2 = p.q * out.high.j2_payoff + wl * out.low.j2_payoff;
  out.expected_welfare =
      p.q * out.high.realized_welfare + wl * out.low.realized_welfare;
}

double type_discrepancy(const TypeOutcome<double>& a,
                        const TypeOutcome<double>& b) {
  if (a.location != b.location) return kInf;
  return std::max({std::abs(a.jurisdiction_tax - b.jurisdiction_tax),
                   std::abs(a.mnc_payoff - b.mnc_payoff),
                   std::abs(a.j1_payoff - b.j1_payoff),
                   std::abs(a.j2_payoff - b.j2_payoff),
                   std::abs(a.realized_welfare - b.realized_welfare)});
}

double outcome_discrepancy(const SubgameOutcome<double>& a,
                           const SubgameOutcome<double>& b) {
  double d = std::max({type_discrepancy(a.low, b.low),
                       type_discrepancy(a.high, b.high),
                       std::abs(a.expected_j1 - b.expected_j1),
                       std::abs(a.expected_j2 - b.expected_j2),
                       std::abs(a.expected_welfare - b.expected_welfare)});
  if (a.posted_taxes && b.posted_taxes) {
    d = std::max({d, std::abs(a.posted_taxes->first - b.posted_taxes->first),
                  std::abs(a.posted_taxes->second - b.posted_taxes->second)});
  }
  return d;
}

}  // namespace

OracleConfig default_oracle_config(const ModelParams<double>& p) {
  OracleConfig cfg;
  cfg.grid_step = p.r_low / 200.0;
  return cfg;
}

void validate_oracle_config(const OracleConfig& cfg) {
  if (!(cfg.grid_step > 0.0) || !std::isfinite(cfg.grid_step)) {
    throw Error(ErrorCode::kValidationError,
                "grid_step must be positive, got " + format_double(cfg.grid_step));
  }
  if (cfg.max_candidates == 0) {
    throw Error(ErrorCode::kValidationError, "max_candidates must be positive");
  }
}

std::vector<double> tax_grid(double upper, double step, std::size_t cap) {
  const double steps = std::floor(upper / step + 1e-9);
  if (!(steps >= 0.0) || steps + 1.0 > static_cast<double>(cap)) {
    throw Error(ErrorCode::kValidationError,
                "tax grid with step " + format_double(step) + " up to " +
                    format_double(upper) + " exceeds max_candidates");
  }
  const auto n = static_cast<std::size_t>(steps) + 1;
  std::vector<double> grid(n);
  for (std::size_t k = 0; k < n; ++k) grid[k] = static_cast<double>(k) * step;
  return grid;
}

OracleReport grid_nash_posting(const ModelParams<double>& p,
                               const CentralTaxes<double>& raw,
                               const OracleConfig& cfg) {
  validate_oracle_config(cfg);
  const CentralTaxes<double> g = canonicalize_taxes(p, raw).taxes;
  const double tau = abs_tol(p);
  const std::vector<double> grid =
      tax_grid(p.r_high, cfg.grid_step, cfg.max_candidates);
  const std::size_t n = grid.size();
  const double w_low = 1.0 - p.q;
  const double w_high = p.q;

  // Attraction weights of each jurisdiction at profile (k1, k2).
  auto weights = [&](std::size_t k1, std::size_t k2) {
    const double c1 = g.g1 + grid[k1];
    const double c2 = g.g2 + grid[k2];
    double a1 = 0.0;
    double a2 = 0.0;
    switch (choose_location(p.r_low, c1, c2, tau)) {
      case Location::kJ1: a1 += w_low; break;
      case Location::kJ2: a2 += w_low; break;
      case Location::kAbroad: break;
    }
    switch (choose_location(p.r_high, c1, c2, tau)) {
      case Location::kJ1: a1 += w_high; break;
      case Location::kJ2: a2 += w_high; break;
      case Location::kAbroad: break;
    }
    return std::pair{a1 * grid[k1], a2 * grid[k2]};
  };

  std::vector<double> best1(n, -kInf);  // indexed by k2
  std::vector<double> best2(n, -kInf);  // indexed by k1
  for (std::size_t k2 = 0; k2 < n; ++k2) {
    for (std::size_t k1 = 0; k1 < n; ++k1) {
      const auto [u1, u2] = weights(k1, k2);
      best1[k2] = std::max(best1[k2], u1);
      best2[k1] = std::max(best2[k1], u2);
    }
  }

  std::optional<NashProfile> chosen;
  std::size_t chosen_k2 = 0;
  std::size_t count = 0;
  for (std::size_t k2 = 0; k2 < n; ++k2) {
    for (std::size_t k1 = 0; k1 < n; ++k1) {
      const auto [u1, u2] = weights(k1, k2);
      if (u1 < best1[k2] - tau || u2 < best2[k1] - tau) continue;
      ++count;
      if (!chosen || (k2 == chosen_k2 && u1 > chosen->j1_payoff + tau)) {
        chosen = NashProfile{grid[k1], grid[k2], u1, u2};
        chosen_k2 = k2;
      }
    }
  }
  if (!chosen) {
    throw Error(ErrorCode::kNoEquilibrium,
                "no pure Nash profile on the grid; refine grid_step");
  }

  SubgameOutcome<double> found;
  found.profile = {Regime::kPost, Regime::kPost};
  found.posted_taxes = std::make_pair(chosen->t1, chosen->t2);
  found.low = type_outcome(p.r_low, g, chosen->t1, chosen->t2, tau);
  found.high = type_outcome(p.r_high, g, chosen->t1, chosen->t2, tau);
  finish(found, p);

  OracleReport report;
  report.check = "grid_nash_posting";
  report.oracle_value = found;
  report.equilibrium_multiplicity = count;
  report.bound = cfg.grid_step + tau;
  if (g.g1 <= p.r_low) {
    const SubgameOutcome<double> closed = solve_pp(p, g);
    report.closed_form = closed;
    report.compared = true;
    report.max_discrepancy = outcome_discrepancy(found, closed);
  }
  report.matched = report.max_discrepancy <= report.bound;
  return report;
}

OracleReport grid_stackelberg_bp(const ModelParams<double>& p,
                                 const CentralTaxes<double>& raw,
                                 const OracleConfig& cfg) {
  validate_oracle_config(cfg);
  const CentralTaxes<double> g = canonicalize_taxes(p, raw).taxes;
  if (g.g1 > p.r_low) {
    throw Error(ErrorCode::kPreconditionG1, "(b, p) oracle needs g1 <= r_low");
  }
  const double tau = abs_tol(p);
  const std::vector<double> grid =
      tax_grid(p.r_high, cfg.grid_step, cfg.max_candidates);

  auto play = [&](double t2) {
    SubgameOutcome<double> out;
    out.profile = {Regime::kBargain, Regime::kPost};
    for (MncType type : {MncType::kLow, MncType::kHigh}) {
      const double r = rent(p, type);
      const BargainSplit<double> split =
          rubinstein_outside(r - g.g1, r - g.g2 - t2);
      TypeOutcome<double>& slot = type == MncType::kHigh ? out.high : out.low;
      if (split.agreement) {
        slot.location = Location::kJ1;
        slot.jurisdiction_tax = split.j1_payoff;
        slot.j1_payoff = split.j1_payoff;
        slot.mnc_payoff = split.mnc_payoff;
        slot.realized_welfare = g.g1 + split.j1_payoff;
      } else if (split.mnc_payoff > 0.0) {
        slot = type_outcome(r, g, kInf, t2, tau);
      }
    }
    finish(out, p);
    return out;
  };

  OracleReport report;
  report.check = "grid_stackelberg_bp";
  report.bound = cfg.grid_step + tau;
  report.compared = true;
  double best_j2 = -kInf;
  std::vector<double> j2_payoffs;
  j2_payoffs.reserve(grid.size());
  for (double t2 : grid) {
    const SubgameOutcome<double> oracle = play(t2);
    const SubgameOutcome<double> closed = solve_bp(p, g, t2);
    report.max_discrepancy =
        std::max(report.max_discrepancy, outcome_discrepancy(oracle, closed));
    j2_payoffs.push_back(oracle.expected_j2);
    best_j2 = std::max(best_j2, oracle.expected_j2);
    // J1 always undercuts, so J2 earns nothing whatever it posts.
    report.max_discrepancy =
        std::max(report.max_discrepancy, std::abs(oracle.expected_j2));
  }
  for (double u : j2_payoffs) {
    if (u >= best_j2 - tau) ++report.equilibrium_multiplicity;
  }
  report.oracle_value = play(0.0);
  report.closed_form = solve_bp(p, g, 0.0);
  report.matched = report.max_discrepancy <= report.bound;
  return report;
}

SimulatedStageTwo simulate_stage_two(const ModelParams<double>& p,
                                     const CentralTaxes<double>& g,
                                     const std::vector<double>& t1_grid) {
  const double tau = abs_tol(p);
  SimulatedStageTwo sim{};

  double bargain_welfare = 0.0;
  bool bargain_low = false;
  bool bargain_high = false;
  for (MncType type : {MncType::kLow, MncType::kHigh}) {
    const double r = rent(p, type);
    const double w = type_weight(p, type);
    const double s1 = r - g.g1;
    const double s2 = r - g.g2;
    if (s1 < -tau) continue;
    const BargainSplit<double> split =
        three_party_bargain(std::max(s1, 0.0), std::min(std::max(s1, 0.0), s2));
    if (!split.agreement) continue;
    sim.j1_payoff_bargain += w * split.j1_payoff;
    bargain_welfare += w * (g.g1 + split.j1_payoff);
    (type == MncType::kHigh ? bargain_high : bargain_low) = true;
  }

  // J2 is undercut and posts zero; J1 best-responds on its grid. Payoff ties
  // go to the tax attracting more types, then to the lower tax.
  double best_u = -kInf;
  int best_types = -1;
  double post_welfare = 0.0;
  bool post_low = false;
  bool post_high = false;
  for (double t1 : t1_grid) {
    const Location low = choose_location(p.r_low, g.g1 + t1, g.g2, tau);
    const Location high = choose_location(p.r_high, g.g1 + t1, g.g2, tau);
    double u = 0.0;
    int types = 0;
    double welfare = 0.0;
    for (auto [loc, w] : {std::pair{low, 1.0 - p.q}, std::pair{high, p.q}}) {
      if (loc == Location::kJ1) {
        u += w * t1;
        welfare += w * (g.g1 + t1);
        ++types;
      } else if (loc == Location::kJ2) {
        welfare += w * g.g2;
        ++types;
      }
    }
    if (u > best_u + tau || (u >= best_u - tau && types > best_types)) {
      best_u = u;
      best_types = types;
      post_welfare = welfare;
      post_low = low != Location::kAbroad;
      post_high = high != Location::kAbroad;
    }
  }
  sim.j1_payoff_post = best_u;

  if (sim.j1_payoff_post <= sim.j1_payoff_bargain + tau) {
    sim.regime = Regime::kBargain;
    sim.expected_welfare = bargain_welfare;
    sim.low_located = bargain_low;
    sim.high_located = bargain_high;
  } else {
    sim.regime = Regime::kPost;
    sim.expected_welfare = post_welfare;
    sim.low_located = post_low;
    sim.high_located = post_high;
  }
  return sim;
}

OracleReport grid_optimal_central(const ModelParams<double>& p,
                                  const OracleConfig& cfg) {
  validate_oracle_config(cfg);
  const double tau = abs_tol(p);
  const std::vector<double> grid =
      tax_grid(p.r_high, cfg.grid_step, cfg.max_candidates);
  const std::size_t n = grid.size();

  std::vector<double> welfare;
  welfare.reserve(n * (n + 1) / 2);
  std::size_t best_idx = 0;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  SimulatedStageTwo best_sim{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const SimulatedStageTwo sim =
          simulate_stage_two(p, {grid[i], grid[j]}, grid);
      if (!best || sim.expected_welfare > welfare[best_idx] + tau) {
        best = {i, j};
        best_idx = welfare.size();
        best_sim = sim;
      }
      welfare.push_back(sim.expected_welfare);
    }
  }
  const double w_max = welfare[best_idx];

  OracleReport report;
  report.check = "grid_optimal_central";
  report.bound = cfg.grid_step + tau;
  report.compared = true;
  for (double w : welfare) {
    if (w >= w_max - tau) ++report.equilibrium_multiplicity;
  }

  PolicyResult<double> found{
      {grid[best->first], grid[best->second]},
      best_sim.regime,
      best_sim.low_located ? Attracts::kBothTypes : Attracts::kHighOnly,
      w_max,
      both_types_region(p)};
  const PolicyResult<double> closed = optimal_central_taxes(p);
  report.oracle_value = found;
  report.closed_form = closed;

  const double welfare_gap = std::abs(w_max - closed.expected_welfare);
  const double tax_gap =
      std::max(std::abs(found.optimal_taxes.g1 - closed.optimal_taxes.g1),
               std::abs(found.optimal_taxes.g2 - closed.optimal_taxes.g2));
  // On a welfare plateau the grid's first argmax may sit far from the
  // closed-form taxes; those still qualify if they reach the plateau.
  const double plateau_gap = std::abs(
      simulate_stage_two(p, closed.optimal_taxes, grid).expected_welfare - w_max);
  report.max_discrepancy = std::max(welfare_gap, std::min(tax_gap, plateau_gap));
  report.matched = report.max_discrepancy <= report.bound;
  return report;
}

OracleReport delta_limit_check(double s1, double outside,
                               const OracleConfig& cfg) {
  validate_oracle_config(cfg);
  const BargainSplit<double> closed = rubinstein_outside(s1, outside);
  const double slack = kBargainTol * std::max(1.0, s1);

  OracleReport report;
  report.check = "delta_limit_check";
  report.compared = true;
  report.closed_form = closed;
  report.bound = cfg.grid_step + kRelTol * std::max(1.0, s1);
  bool decays = true;
  for (Proposer first : {Proposer::kMnc, Proposer::kJurisdiction}) {
    const std::vector<double>& deltas = cfg.delta_schedule.deltas();
    double prev = kInf;
    for (std::size_t k = 0; k < deltas.size(); ++k) {
      const BargainSplit<double> split =
          rubinstein_delta_oracle(s1, outside, deltas[k], first);
      const double err = split.agreement == closed.agreement
                             ? std::abs(split.mnc_payoff - closed.mnc_payoff)
                             : kInf;
      report.delta_errors.push_back(err);
      // Errors never grow; across the two most patient factors they shrink
      // at least five-fold.
      const bool last_pair = k + 1 == deltas.size() && k > 0;
      if (err > (last_pair ? prev / 5.0 : prev) + slack) decays = false;
      prev = err;
      if (first == Proposer::kMnc) report.oracle_value = split;
    }
    report.max_discrepancy = std::max(report.max_discrepancy, prev);
  }
  report.matched = decays && report.max_discrepancy <= report.bound;
  return report;
}

}  // namespace fiscal_duel
