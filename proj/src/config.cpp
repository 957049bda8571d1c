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


#include "fiscal_duel/config.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "fiscal_duel/error.hpp"

namespace fiscal_duel {
namespace {

constexpr std::size_t kMaxSweepPoints = 10'000'000;

struct Value {
  enum class Kind { kScalar, kString, kArray } kind;
  std::string text;                // scalar or string contents
  std::vector<std::string> items;  // array elements
};

struct Entry {
  std::size_t line;
  Value value;
};

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "config line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

Value parse_value(std::string_view raw, std::size_t line) {
  std::string_view v = trim(raw);
  if (v.empty()) parse_error(line, "missing value");
  if (v.front() == '"') {
    if (v.size() < 2 || v.back() != '"') parse_error(line, "unterminated string");
    std::string_view inner = v.substr(1, v.size() - 2);
    if (inner.find('"') != std::string_view::npos) {
      parse_error(line, "quotes inside strings are not supported");
    }
    return {Value::Kind::kString, std::string(inner), {}};
  }
  if (v.front() == '[') {
    if (v.back() != ']') parse_error(line, "unterminated array");
    Value out{Value::Kind::kArray, {}, {}};
    std::string_view inner = trim(v.substr(1, v.size() - 2));
    while (!inner.empty()) {
      auto comma = inner.find(',');
      std::string_view item = trim(inner.substr(0, comma));
      if (item.empty()) parse_error(line, "empty array element");
      out.items.emplace_back(item);
      if (comma == std::string_view::npos) break;
      inner = inner.substr(comma + 1);
      if (trim(inner).empty()) parse_error(line, "trailing comma in array");
    }
    return out;
  }
  return {Value::Kind::kScalar, std::string(v), {}};
}

using Document = std::map<std::string, Entry>;  // "section.key" -> entry

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"",
       {"r_low", "r_high", "q", "g1", "g2", "profile", "t2_selection",
        "arithmetic", "seed"}},
      {"oracle", {"grid_step", "deltas", "max_candidates", "random_points"}},
      {"sweep", {"r_low", "r_high", "q", "g1", "g2"}},
      {"report", {"g1", "step"}},
      {"output", {"format", "path"}},
  };
  return keys;
}

Document tokenize(std::string_view source) {
  Document doc;
  std::string section;
  std::size_t line_no = 0;
  while (!source.empty()) {
    ++line_no;
    auto nl = source.find('\n');
    std::string_view line = source.substr(0, nl);
    source = nl == std::string_view::npos ? std::string_view{}
                                          : source.substr(nl + 1);
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') parse_error(line_no, "malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!allowed_keys().contains(section) || section.empty()) {
        parse_error(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(line_no, "expected key = value");
    std::string key(trim(line.substr(0, eq)));
    if (!allowed_keys().at(section).contains(key)) {
      parse_error(line_no, "unknown key '" + key + "'" +
                               (section.empty() ? "" : " in [" + section + "]"));
    }
    std::string full = section.empty() ? key : section + "." + key;
    if (doc.contains(full)) parse_error(line_no, "duplicate key '" + full + "'");
    doc.emplace(full, Entry{line_no, parse_value(line.substr(eq + 1), line_no)});
  }
  return doc;
}

Rational as_number(const Entry& e, const std::string& key) {
  if (e.value.kind != Value::Kind::kScalar) {
    parse_error(e.line, "'" + key + "' must be a number");
  }
  try {
    return parse_rational(e.value.text);
  } catch (const Error&) {
    parse_error(e.line, "'" + key + "' is not a decimal number: " + e.value.text);
  }
}

std::string as_string(const Entry& e, const std::string& key) {
  if (e.value.kind != Value::Kind::kString) {
    parse_error(e.line, "'" + key + "' must be a quoted string");
  }
  return e.value.text;
}

std::uint64_t as_count(const Entry& e, const std::string& key) {
  const Rational r = as_number(e, key);
  if (r < 0 || boost::multiprecision::denominator(r) != 1 ||
      r > Rational(std::numeric_limits<std::uint64_t>::max())) {
    parse_error(e.line, "'" + key + "' must be a nonnegative integer");
  }
  return boost::multiprecision::numerator(r).convert_to<std::uint64_t>();
}

std::vector<Rational> as_numbers(const Entry& e, const std::string& key) {
  if (e.value.kind != Value::Kind::kArray) {
    parse_error(e.line, "'" + key + "' must be an array");
  }
  std::vector<Rational> out;
  for (const std::string& item : e.value.items) {
    try {
      out.push_back(parse_rational(item));
    } catch (const Error&) {
      parse_error(e.line, "'" + key + "' has a non-numeric element: " + item);
    }
  }
  return out;
}

RangeSpec as_range(const Entry& e, const std::string& key) {
  std::vector<Rational> v = as_numbers(e, key);
  if (v.size() != 3) parse_error(e.line, "'" + key + "' must be [start, stop, step]");
  RangeSpec r{v[0], v[1], v[2]};
  if (!(r.step > 0)) parse_error(e.line, "'" + key + "' needs a positive step");
  if (r.stop < r.start) parse_error(e.line, "'" + key + "' has stop < start");
  const Rational count = (r.stop - r.start) / r.step;
  if (count > Rational(kMaxSweepPoints)) {
    parse_error(e.line, "'" + key + "' has too many points");
  }
  return r;
}

[[noreturn]] void rethrow_validation(const Error& err) {
  throw Error(ErrorCode::kValidationError,
              std::string(error_code_name(err.code())) + ": " + err.what(),
              err.code());
}

template <class Fn>
void validating(Fn&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kValidationError) throw;
    rethrow_validation(err);
  }
}

std::vector<Rational> axis(const std::optional<RangeSpec>& range,
                           const Rational& fixed) {
  return range ? range->points() : std::vector<Rational>{fixed};
}

}  // namespace

std::vector<Rational> RangeSpec::points() const {
  std::vector<Rational> out;
  for (Rational x = start; x <= stop; x += step) out.push_back(x);
  return out;
}

ModelParams<double> RunConfig::params_double() const {
  return {to_double(params.r_low), to_double(params.r_high),
          to_double(params.q)};
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "jsonl" || text == "json-lines") return OutputFormat::kJsonLines;
  throw Error(ErrorCode::kParseError,
              "output format must be csv or jsonl, got '" + std::string(text) + "'");
}

RunConfig parse_config(std::string_view source) {
  const Document doc = tokenize(source);
  auto find = [&](const std::string& key) -> const Entry* {
    auto it = doc.find(key);
    return it == doc.end() ? nullptr : &it->second;
  };

  RunConfig cfg;
  auto sweep_range = [&](const char* key) -> std::optional<RangeSpec> {
    const std::string full = std::string("sweep.") + key;
    if (const Entry* e = find(full)) return as_range(*e, full);
    return std::nullopt;
  };
  SweepSpec sweep{sweep_range("r_low"), sweep_range("r_high"), sweep_range("q"),
                  sweep_range("g1"), sweep_range("g2")};
  if (sweep.r_low || sweep.r_high || sweep.q || sweep.g1 || sweep.g2) {
    cfg.sweep = sweep;
  }

  auto primitive = [&](const char* key,
                       const std::optional<RangeSpec>* swept) -> Rational {
    if (const Entry* e = find(key)) return as_number(*e, key);
    if (swept && *swept) return (*swept)->start;
    throw Error(ErrorCode::kMissingField,
                std::string("config is missing required key '") + key + "'");
  };
  cfg.params.r_low = primitive("r_low", &sweep.r_low);
  cfg.params.r_high = primitive("r_high", &sweep.r_high);
  cfg.params.q = primitive("q", &sweep.q);

  const Entry* g1 = find("g1");
  const Entry* g2 = find("g2");
  if ((g1 == nullptr) != (g2 == nullptr)) {
    throw Error(ErrorCode::kMissingField, "g1 and g2 must be given together");
  }
  if (g1) cfg.taxes = CentralTaxes<Rational>{as_number(*g1, "g1"), as_number(*g2, "g2")};

  if (const Entry* e = find("profile")) {
    try {
      cfg.regime_profile = parse_regime_profile(as_string(*e, "profile"));
    } catch (const Error& err) {
      parse_error(e->line, err.what());
    }
  }
  if (const Entry* e = find("t2_selection")) {
    cfg.t2_selection = as_number(*e, "t2_selection");
  }
  if (const Entry* e = find("arithmetic")) {
    const std::string mode = as_string(*e, "arithmetic");
    if (mode == "rational") {
      cfg.arithmetic = Arithmetic::kRational;
    } else if (mode == "double") {
      cfg.arithmetic = Arithmetic::kDouble;
    } else {
      parse_error(e->line, "arithmetic must be \"double\" or \"rational\"");
    }
  }
  if (const Entry* e = find("seed")) cfg.seed = as_count(*e, "seed");

  cfg.oracle.grid_step = to_double(cfg.params.r_low) / 200.0;
  if (const Entry* e = find("oracle.grid_step")) {
    cfg.oracle.grid_step = to_double(as_number(*e, "grid_step"));
  }
  if (const Entry* e = find("oracle.deltas")) {
    std::vector<double> deltas;
    for (const Rational& d : as_numbers(*e, "deltas")) deltas.push_back(to_double(d));
    try {
      cfg.oracle.delta_schedule = DiscountSchedule(std::move(deltas));
    } catch (const Error& err) {
      parse_error(e->line, err.what());
    }
  }
  if (const Entry* e = find("oracle.max_candidates")) {
    cfg.oracle.max_candidates = as_count(*e, "max_candidates");
  }
  if (const Entry* e = find("oracle.random_points")) {
    cfg.random_points = as_count(*e, "random_points");
  }
  if (const Entry* e = find("report.g1")) cfg.report.g1 = as_number(*e, "report.g1");
  if (const Entry* e = find("report.step")) {
    cfg.report.step = as_number(*e, "report.step");
    if (!(*cfg.report.step > 0)) parse_error(e->line, "report.step must be positive");
  }
  if (const Entry* e = find("output.format")) {
    try {
      cfg.output.format = parse_output_format(as_string(*e, "format"));
    } catch (const Error& err) {
      parse_error(e->line, err.what());
    }
  }
  if (const Entry* e = find("output.path")) cfg.output.path = as_string(*e, "path");

  validate_config(cfg);
  return cfg;
}

void validate_config(const RunConfig& cfg) {
  validating([&] {
    validate_params(cfg.params);
    validate_oracle_config(cfg.oracle);
    if (cfg.taxes) canonicalize_taxes(cfg.params, *cfg.taxes);
    if (cfg.t2_selection < 0) {
      throw Error(ErrorCode::kNegativeSelection, "t2_selection must be >= 0");
    }
  });
  if (!cfg.sweep) return;

  const SweepSpec& s = *cfg.sweep;
  const auto r_lows = axis(s.r_low, cfg.params.r_low);
  const auto r_highs = axis(s.r_high, cfg.params.r_high);
  const auto qs = axis(s.q, cfg.params.q);
  std::vector<Rational> g1s;
  std::vector<Rational> g2s;
  if (cfg.taxes || s.g1 || s.g2) {
    if (!cfg.taxes && !(s.g1 && s.g2)) {
      throw Error(ErrorCode::kMissingField,
                  "sweeping one central tax needs the other as g1/g2 or a range");
    }
    g1s = axis(s.g1, cfg.taxes ? cfg.taxes->g1 : Rational(0));
    g2s = axis(s.g2, cfg.taxes ? cfg.taxes->g2 : Rational(0));
  }
  const double total = static_cast<double>(r_lows.size()) * r_highs.size() *
                       qs.size() * std::max<std::size_t>(1, g1s.size()) *
                       std::max<std::size_t>(1, g2s.size());
  if (total > static_cast<double>(kMaxSweepPoints)) {
    throw Error(ErrorCode::kValidationError, "sweep has too many points");
  }
  validating([&] {
    for (const Rational& rl : r_lows) {
      for (const Rational& rh : r_highs) {
        for (const Rational& q : qs) {
          const ModelParams<Rational> p = validate_params(ModelParams<Rational>{rl, rh, q});
          for (const Rational& a : g1s) {
            for (const Rational& b : g2s) {
              const CentralTaxes<Rational> g = canonicalize_taxes(p, {a, b}).taxes;
              if (g.g1 > p.r_low) {
                throw Error(ErrorCode::kPreconditionG1,
                            "sweep point has min(g1, g2) = " + format_rational(g.g1) +
                                " above r_low = " + format_rational(p.r_low));
              }
            }
          }
        }
      }
    }
  });
}

}  // namespace fiscal_duel
