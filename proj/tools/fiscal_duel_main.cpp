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


// fiscal-duel command-line front end. Talks to the solver only through the
// C API in libfiscal_duel.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fiscal_duel/fiscal_duel.h"

namespace {

int report_failure(fd_status status, const std::string& context) {
  std::cerr << "fiscal-duel: " << context << ": " << fd_last_error_message()
            << "\n";
  return static_cast<int>(status);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium solver and oracle checks for local tax bargaining versus posting.",
               "fiscal-duel"};
  std::string command_name;
  std::string config_path;
  std::string out_path;
  std::string format_name;
  std::optional<double> grid_step;
  std::optional<std::uint64_t> seed;

  app.add_option("command", command_name, "solve, sweep, verify, scenarios or report")
      ->required()
      ->check(CLI::IsMember({"solve", "sweep", "verify", "scenarios", "report"}));
  app.add_option("--config", config_path, "Path to the key-value run document")
      ->required();
  app.add_option("--out", out_path, "Output file (default: [output] path or stdout)");
  app.add_option("--format", format_name, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--grid-step", grid_step, "Oracle grid step");
  app.add_option("--seed", seed, "Seed for randomized verification points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : FD_INPUT_ERROR;
  }

  const auto text = read_file(config_path);
  if (!text) {
    std::cerr << "fiscal-duel: cannot read config file '" << config_path << "'\n";
    return FD_INPUT_ERROR;
  }

  fd_command command{};
  if (fd_status s = fd_parse_command(command_name.c_str(), &command); s != FD_OK) {
    return report_failure(s, "command");
  }

  fd_config* config = nullptr;
  if (fd_status s = fd_config_parse(text->c_str(), &config); s != FD_OK) {
    return report_failure(s, config_path);
  }
  std::unique_ptr<fd_config, decltype(&fd_config_free)> config_guard(config,
                                                                     &fd_config_free);

  if (!format_name.empty()) {
    fd_config_set_format(config, format_name == "jsonl" ? FD_FORMAT_JSONL : FD_FORMAT_CSV);
  }
  if (seed) fd_config_set_seed(config, *seed);
  if (grid_step) {
    if (fd_status s = fd_config_set_grid_step(config, *grid_step); s != FD_OK) {
      return report_failure(s, "--grid-step");
    }
  }

  fd_result* result = nullptr;
  const fd_status status = fd_run(config, command, &result);
  std::unique_ptr<fd_result, decltype(&fd_result_free)> result_guard(result,
                                                                     &fd_result_free);
  if (!result) return report_failure(status, command_name);

  if (out_path.empty()) out_path = fd_config_output_path(config);
  if (out_path.empty()) {
    std::cout << fd_result_text(result);
    std::cout.flush();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << fd_result_text(result);
    if (!out) {
      std::cerr << "fiscal-duel: cannot write '" << out_path << "'\n";
      return FD_INPUT_ERROR;
    }
  }
  if (status == FD_ORACLE_MISMATCH) {
    std::cerr << "fiscal-duel: " << fd_last_error_message() << "\n";
  }
  return static_cast<int>(status);
}
