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


#include "fiscal_duel/runner.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "fiscal_duel/error.hpp"
#include "json.hpp"

namespace fiscal_duel {
namespace {

using Clock = std::chrono::steady_clock;

// Appends cells by column name; the first row fixes the column order and
// every later row must repeat it.
class RowWriter {
 public:
  explicit RowWriter(Table& table) : table_(table) {}

  RowWriter& operator()(std::string_view name, Cell cell) {
    names_.emplace_back(name);
    cells_.push_back(std::move(cell));
    return *this;
  }

  void commit() {
    if (table_.rows.empty() && table_.columns.empty()) {
      table_.columns = names_;
    } else if (names_ != table_.columns) {
      throw Error(ErrorCode::kInternal, "row columns differ from table header");
    }
    table_.rows.push_back(std::move(cells_));
    names_.clear();
    cells_.clear();
  }

 private:
  Table& table_;
  std::vector<std::string> names_;
  std::vector<Cell> cells_;
};

double elapsed_us(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

template <class Scalar>
Scalar from_exact(const Rational& x) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return to_double(x);
  } else {
    return x;
  }
}

template <class Scalar>
ModelParams<Scalar> params_as(const ModelParams<Rational>& p) {
  return {from_exact<Scalar>(p.r_low), from_exact<Scalar>(p.r_high),
          from_exact<Scalar>(p.q)};
}

template <class Scalar>
CentralTaxes<Scalar> taxes_as(const CentralTaxes<Rational>& g) {
  return {from_exact<Scalar>(g.g1), from_exact<Scalar>(g.g2)};
}

std::string_view arithmetic_name(Arithmetic a) {
  return a == Arithmetic::kRational ? "rational" : "double";
}

template <class Scalar>
void write_params(RowWriter& row, const ModelParams<Scalar>& p) {
  row("r_low", number_cell(p.r_low))("r_high", number_cell(p.r_high))(
      "q", number_cell(p.q));
}

template <class Scalar>
void write_type(RowWriter& row, std::string_view suffix,
                const TypeOutcome<Scalar>& t) {
  const std::string s(suffix);
  row("location_" + s, text_cell(location_name(t.location)))(
      "tax_" + s, number_cell(t.jurisdiction_tax))(
      "mnc_payoff_" + s, number_cell(t.mnc_payoff))(
      "welfare_" + s, number_cell(t.realized_welfare));
}

template <class Scalar>
RunOutput run_solve(const RunConfig& cfg) {
  if (!cfg.taxes) {
    throw Error(ErrorCode::kMissingField, "solve needs central taxes g1 and g2");
  }
  if (!cfg.regime_profile) {
    throw Error(ErrorCode::kMissingField, "solve needs a regime profile");
  }
  const auto start = Clock::now();
  const ModelParams<Scalar> p = params_as<Scalar>(cfg.params);
  const CanonicalTaxes<Scalar> canon =
      canonicalize_taxes(p, taxes_as<Scalar>(*cfg.taxes));
  RegimeProfile profile = *cfg.regime_profile;
  if (canon.swapped) std::swap(profile.j1, profile.j2);
  const Scalar t2 = from_exact<Scalar>(cfg.t2_selection);

  const SubgameOutcome<Scalar> out = solve_subgame(p, canon.taxes, profile, t2);
  const StageTwoEquilibrium<Scalar> eq = stage_two_equilibrium(p, canon.taxes);

  RunOutput result;
  RowWriter row(result.table);
  row("command", text_cell("solve"))("arithmetic",
                                     text_cell(arithmetic_name(cfg.arithmetic)));
  write_params(row, p);
  row("g1", number_cell(canon.taxes.g1))("g2", number_cell(canon.taxes.g2))(
      "swapped", bool_cell(canon.swapped))(
      "profile", text_cell(regime_profile_name(profile)))(
      "t2_selection", number_cell(t2));
  row("posted_t1", out.posted_taxes ? number_cell(out.posted_taxes->first) : Cell{})(
      "posted_t2", out.posted_taxes ? number_cell(out.posted_taxes->second) : Cell{});
  write_type(row, "low", out.low);
  write_type(row, "high", out.high);
  row("expected_j1", number_cell(out.expected_j1))(
      "expected_j2", number_cell(out.expected_j2))(
      "expected_welfare", number_cell(out.expected_welfare))(
      "j1_regime", text_cell(regime_name(eq.choice.regime)))(
      "j1_payoff_bargain", number_cell(eq.choice.j1_payoff_bargain))(
      "j1_payoff_post", number_cell(eq.choice.j1_payoff_post))(
      "equilibrium_welfare", number_cell(eq.outcome.expected_welfare))(
      "elapsed_us", number_cell(elapsed_us(start)));
  row.commit();
  return result;
}

struct SweepPoint {
  ModelParams<Rational> params;
  std::optional<CentralTaxes<Rational>> taxes;
};

template <class Scalar>
Table sweep_rows(const std::vector<SweepPoint>& points,
                 std::size_t begin, std::size_t end) {
  Table table;
  for (std::size_t i = begin; i < end; ++i) {
    const auto start = Clock::now();
    const ModelParams<Scalar> p = params_as<Scalar>(points[i].params);
    RowWriter row(table);
    row("index", number_cell(static_cast<double>(i)));
    write_params(row, p);
    if (points[i].taxes) {
      const CanonicalTaxes<Scalar> canon =
          canonicalize_taxes(p, taxes_as<Scalar>(*points[i].taxes));
      const StageTwoEquilibrium<Scalar> eq = stage_two_equilibrium(p, canon.taxes);
      row("g1", number_cell(canon.taxes.g1))("g2", number_cell(canon.taxes.g2))(
          "swapped", bool_cell(canon.swapped))(
          "j1_regime", text_cell(regime_name(eq.choice.regime)))(
          "j1_payoff_bargain", number_cell(eq.choice.j1_payoff_bargain))(
          "j1_payoff_post", number_cell(eq.choice.j1_payoff_post))(
          "expected_j1", number_cell(eq.outcome.expected_j1))(
          "expected_welfare", number_cell(eq.outcome.expected_welfare));
    } else {
      row("g1", Cell{})("g2", Cell{})("swapped", Cell{})("j1_regime", Cell{})(
          "j1_payoff_bargain", Cell{})("j1_payoff_post", Cell{})(
          "expected_j1", Cell{})("expected_welfare", Cell{});
    }
    const PolicyResult<Scalar> opt = optimal_central_taxes(p);
    const ScenarioWelfare<Scalar> sc = scenario_welfare(p);
    row("both_types_region", bool_cell(both_types_region(p)))(
        "optimal_g1", number_cell(opt.optimal_taxes.g1))(
        "optimal_g2", number_cell(opt.optimal_taxes.g2))(
        "attracts", text_cell(attracts_name(opt.attracts)))(
        "optimal_welfare", number_cell(opt.expected_welfare))(
        "scenario_iii", number_cell(sc.scenario_iii))(
        "central_only_bargaining", number_cell(sc.central_only_bargaining))(
        "elapsed_us", number_cell(elapsed_us(start)));
    row.commit();
  }
  return table;
}

template <class Scalar>
RunOutput run_sweep(const RunConfig& cfg) {
  if (!cfg.sweep) throw Error(ErrorCode::kMissingField, "sweep needs a [sweep] section");
  const SweepSpec& s = *cfg.sweep;
  auto axis = [](const std::optional<RangeSpec>& r, const Rational& fixed) {
    return r ? r->points() : std::vector<Rational>{fixed};
  };
  std::vector<SweepPoint> points;
  const bool with_taxes = cfg.taxes || s.g1 || s.g2;
  const std::vector<Rational> g1s =
      with_taxes ? axis(s.g1, cfg.taxes ? cfg.taxes->g1 : Rational(0))
                 : std::vector<Rational>{Rational(0)};
  const std::vector<Rational> g2s =
      with_taxes ? axis(s.g2, cfg.taxes ? cfg.taxes->g2 : Rational(0))
                 : std::vector<Rational>{Rational(0)};
  for (const Rational& rl : axis(s.r_low, cfg.params.r_low)) {
    for (const Rational& rh : axis(s.r_high, cfg.params.r_high)) {
      for (const Rational& q : axis(s.q, cfg.params.q)) {
        for (const Rational& a : g1s) {
          for (const Rational& b : g2s) {
            SweepPoint pt{{rl, rh, q}, std::nullopt};
            if (with_taxes) pt.taxes = CentralTaxes<Rational>{a, b};
            points.push_back(pt);
          }
        }
      }
    }
  }

  // Contiguous chunks evaluated concurrently, concatenated in input order.
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, 16);
  const std::size_t chunk = (points.size() + workers - 1) / workers;
  std::vector<std::future<Table>> parts;
  for (std::size_t begin = 0; begin < points.size(); begin += chunk) {
    const std::size_t end = std::min(points.size(), begin + chunk);
    parts.push_back(std::async(std::launch::async, [&, begin, end] {
      return sweep_rows<Scalar>(points, begin, end);
    }));
  }
  RunOutput result;
  for (auto& part : parts) {
    Table t = part.get();
    if (result.table.columns.empty()) result.table.columns = t.columns;
    for (auto& r : t.rows) result.table.rows.push_back(std::move(r));
  }
  return result;
}

template <class Scalar>
RunOutput run_scenarios(const RunConfig& cfg) {
  const auto start = Clock::now();
  const ModelParams<Scalar> p = params_as<Scalar>(cfg.params);
  const ScenarioWelfare<Scalar> sc = scenario_welfare(p);
  const DominanceCheck check = dominance_check(p);
  const PolicyResult<Scalar> opt = optimal_central_taxes(p);
  RunOutput result;
  RowWriter row(result.table);
  row("command", text_cell("scenarios"))(
      "arithmetic", text_cell(arithmetic_name(cfg.arithmetic)));
  write_params(row, p);
  row("both_types_region", bool_cell(both_types_region(p)))(
      "scenario_i", number_cell(sc.scenario_i))(
      "scenario_ii", number_cell(sc.scenario_ii))(
      "scenario_iii", number_cell(sc.scenario_iii))(
      "central_only_posting", number_cell(sc.central_only_posting))(
      "central_only_bargaining", number_cell(sc.central_only_bargaining))(
      "local_only", number_cell(sc.local_only))(
      "dominance_holds", bool_cell(check.holds))("dominance_strict", bool_cell(check.strict))(
      "optimal_g1", number_cell(opt.optimal_taxes.g1))(
      "optimal_g2", number_cell(opt.optimal_taxes.g2))(
      "j1_regime", text_cell(regime_name(opt.j1_regime)))(
      "attracts", text_cell(attracts_name(opt.attracts)))(
      "optimal_welfare", number_cell(opt.expected_welfare))(
      "elapsed_us", number_cell(elapsed_us(start)));
  row.commit();
  return result;
}

template <class Scalar>
RunOutput run_report(const RunConfig& cfg) {
  const ModelParams<Scalar> p = params_as<Scalar>(cfg.params);
  const Scalar g1 = cfg.report.g1 ? from_exact<Scalar>(*cfg.report.g1) : p.r_low;
  Scalar step;
  if (cfg.report.step) {
    step = from_exact<Scalar>(*cfg.report.step);
  } else if constexpr (std::is_same_v<Scalar, double>) {
    step = cfg.oracle.grid_step;
  } else {
    step = p.r_low / 200;
  }
  if (g1 < 0 || g1 > p.r_low) {
    throw Error(ErrorCode::kPreconditionG1,
                "report g1 must lie in [0, r_low], got " + number_cell(g1).text);
  }

  RunOutput result;
  auto emit = [&](std::string_view series, const Scalar& a, const Scalar& b,
                  const Scalar& value, std::string_view regime) {
    RowWriter row(result.table);
    row("series", text_cell(series))("g1", number_cell(a))("g2", number_cell(b))(
        "value", number_cell(value))("j1_regime", text_cell(regime));
    row.commit();
  };

  // Welfare and J1's payoffs along g2 at fixed g1.
  for (long k = 0;; ++k) {
    const Scalar g2 = g1 + Scalar(k) * step;
    if (g2 > p.r_high) break;
    const StageTwoEquilibrium<Scalar> eq = stage_two_equilibrium(p, {g1, g2});
    const std::string_view regime = regime_name(eq.choice.regime);
    emit("welfare_vs_g2", g1, g2, eq.outcome.expected_welfare, regime);
    emit("j1_payoff_bargain_vs_g2", g1, g2, eq.choice.j1_payoff_bargain, regime);
    emit("j1_payoff_post_vs_g2", g1, g2, eq.choice.j1_payoff_post, regime);
  }
  // Regime-choice boundary over g1: the closed-form threshold and the
  // largest scanned g2 at which J1 still bargains.
  for (long i = 0;; ++i) {
    const Scalar a = Scalar(i) * step;
    if (a > p.r_low) break;
    emit("conflict_threshold", a, conflict_threshold(p, a), conflict_threshold(p, a),
         "bargain");
    std::optional<Scalar> last_bargain;
    for (long k = 0;; ++k) {
      const Scalar b = a + Scalar(k) * step;
      if (b > p.r_high) break;
      if (j1_regime_choice(p, {a, b}).regime == Regime::kBargain) last_bargain = b;
    }
    if (last_bargain) {
      emit("last_bargain_g2_scan", a, *last_bargain, *last_bargain, "bargain");
    }
  }
  return result;
}

void verify_row(Table& table, const OracleReport& r, const ModelParams<double>& p,
                std::optional<CentralTaxes<double>> g,
                std::optional<std::pair<double, double>> pie, double elapsed) {
  auto welfare = [](const OracleValue& v) -> Cell {
    if (auto* s = std::get_if<SubgameOutcome<double>>(&v)) {
      return number_cell(s->expected_welfare);
    }
    if (auto* pr = std::get_if<PolicyResult<double>>(&v)) {
      return number_cell(pr->expected_welfare);
    }
    if (auto* b = std::get_if<BargainSplit<double>>(&v)) {
      return number_cell(b->mnc_payoff);
    }
    return Cell{};
  };
  RowWriter row(table);
  row("check", text_cell(r.check));
  write_params(row, p);
  row("g1", g ? number_cell(g->g1) : Cell{})("g2", g ? number_cell(g->g2) : Cell{})(
      "s1", pie ? number_cell(pie->first) : Cell{})(
      "outside", pie ? number_cell(pie->second) : Cell{})(
      "matched", bool_cell(r.matched))("compared", bool_cell(r.compared))(
      "max_discrepancy", number_cell(r.max_discrepancy))("bound", number_cell(r.bound))(
      "equilibrium_multiplicity",
      number_cell(static_cast<double>(r.equilibrium_multiplicity)))(
      "closed_form_value", welfare(r.closed_form))(
      "oracle_value", welfare(r.oracle_value))("elapsed_us", number_cell(elapsed));
  row.commit();
}

RunOutput run_verify(const RunConfig& cfg) {
  const ModelParams<double> p = cfg.params_double();
  const OracleConfig& oc = cfg.oracle;
  const double rl = p.r_low;
  const double rh = p.r_high;

  std::vector<CentralTaxes<double>> battery = {
      {0.0, 0.0},         {rl / 4, rl / 2}, {rl / 4, (rl + rh) / 2},
      {rl, (rl + rh) / 2}, {rl, rh},         {0.0, rh},
      {rh, rh},
  };
  if (cfg.taxes) {
    battery.insert(battery.begin(),
                   canonicalize_taxes(p, taxes_as<double>(*cfg.taxes)).taxes);
  }
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.random_points; ++i) {
    const double a = std::uniform_real_distribution<double>(0.0, rl)(rng);
    const double b = std::uniform_real_distribution<double>(a, rh)(rng);
    battery.push_back({a, b});
  }

  RunOutput result;
  auto record = [&](const OracleReport& r, std::optional<CentralTaxes<double>> g,
                    std::optional<std::pair<double, double>> pie,
                    Clock::time_point start) {
    if (r.compared && !r.matched) result.oracle_mismatch = true;
    verify_row(result.table, r, p, g, pie, elapsed_us(start));
  };

  for (const CentralTaxes<double>& g : battery) {
    auto start = Clock::now();
    record(grid_nash_posting(p, g, oc), g, std::nullopt, start);
    if (g.g1 <= p.r_low) {
      start = Clock::now();
      record(grid_stackelberg_bp(p, g, oc), g, std::nullopt, start);
    }
  }
  auto start = Clock::now();
  record(grid_optimal_central(p, oc), std::nullopt, std::nullopt, start);
  for (double s1 : {rl, rh}) {
    for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      start = Clock::now();
      record(delta_limit_check(s1, frac * s1, oc), std::nullopt,
             std::pair{s1, frac * s1}, start);
    }
  }
  return result;
}

template <class Scalar>
RunOutput dispatch(const RunConfig& cfg, Command command) {
  switch (command) {
    case Command::kSolve: return run_solve<Scalar>(cfg);
    case Command::kSweep: return run_sweep<Scalar>(cfg);
    case Command::kScenarios: return run_scenarios<Scalar>(cfg);
    case Command::kReport: return run_report<Scalar>(cfg);
    case Command::kVerify: return run_verify(cfg);
  }
  throw Error(ErrorCode::kInternal, "unknown command");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Command parse_command(std::string_view text) {
  if (text == "solve") return Command::kSolve;
  if (text == "sweep") return Command::kSweep;
  if (text == "verify") return Command::kVerify;
  if (text == "scenarios") return Command::kScenarios;
  if (text == "report") return Command::kReport;
  throw Error(ErrorCode::kParseError, "unknown command '" + std::string(text) + "'");
}

std::string_view command_name(Command command) {
  switch (command) {
    case Command::kSolve: return "solve";
    case Command::kSweep: return "sweep";
    case Command::kVerify: return "verify";
    case Command::kScenarios: return "scenarios";
    case Command::kReport: return "report";
  }
  return "?";
}

Cell number_cell(double x) {
  return {Cell::Kind::kNumber, format_double(x), x};
}

Cell number_cell(const Rational& x) {
  return {Cell::Kind::kExact, format_rational(x), to_double(x)};
}

Cell text_cell(std::string_view text) {
  return {Cell::Kind::kText, std::string(text), 0.0};
}

Cell bool_cell(bool b) { return {Cell::Kind::kBool, b ? "true" : "false", 0.0}; }

RunOutput run_command(const RunConfig& cfg, Command command) {
  validate_config(cfg);
  try {
    if (cfg.arithmetic == Arithmetic::kRational && command != Command::kVerify) {
      return dispatch<Rational>(cfg, command);
    }
    return dispatch<double>(cfg, command);
  } catch (const Error& err) {
    if (!is_input_error(err.code())) throw;
    throw Error(err.code(),
                std::string(command_name(command)) + ": " + err.what(), err.cause());
  }
}

std::string render_table(const Table& table, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << csv_escape(table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_escape(row[i].text);
      }
      out << '\n';
    }
    return out.str();
  }
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      auto& slot = obj[table.columns[i]];
      switch (c.kind) {
        case Cell::Kind::kNumber: slot = c.number; break;
        case Cell::Kind::kBool: slot = c.text == "true"; break;
        case Cell::Kind::kEmpty: slot = nullptr; break;
        case Cell::Kind::kExact:
        case Cell::Kind::kText: slot = c.text; break;
      }
    }
    out << obj.dump() << '\n';
  }
  return out.str();
}

}  // namespace fiscal_duel
