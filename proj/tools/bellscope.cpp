// Copyright 2026 The Bellscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: Bell-state measurement cascades, two-photon
// selection rules, cavity feasibility numbers, and the quantum-dot protocol.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellscope/cli.hpp"
#include "bellscope/errors.hpp"
#include "bellscope/serialization.hpp"

namespace {

using bellscope::RunConfig;

struct CommonFlags {
  std::string device;
  std::string device_file;
  double eta = 1.0;
  std::string input;
  std::string amplitudes;
  std::string mode = "exact";
  std::uint64_t trials = 100000;
  std::int64_t seed = -1;
  std::string format = "json";
  std::string output;
};

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", flags.output, "Write the artifact to this path");
}

void add_device_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--device", flags.device,
                  "Builtin device (standard, shortcut) or a JSON file path");
  cmd->add_option("--eta", flags.eta, "Crystal efficiency for builtin devices")
      ->check(CLI::Range(0.0, 1.0));
}

void add_input_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--input", flags.input,
                  "Input Bell state: PhiPlus, PhiMinus, PsiPlus, PsiMinus");
  cmd->add_option("--amplitudes", flags.amplitudes,
                  "Raw input amplitudes re,im,re,im,... in (xx,xy,yx,yy) order");
}

Eigen::Vector4cd parse_amplitudes(const std::string& text) {
  std::vector<double> values;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    values.push_back(std::stod(token));
  }
  if (values.size() != 8) {
    throw std::invalid_argument(
        "--amplitudes needs 8 comma-separated numbers (4 re,im pairs)");
  }
  Eigen::Vector4cd a;
  for (int i = 0; i < 4; ++i) {
    a(i) = std::complex<double>(values[2 * i], values[2 * i + 1]);
  }
  return a;
}

void apply_common(const CommonFlags& flags, RunConfig& config) {
  if (!flags.device.empty()) {
    if (flags.device == "standard" || flags.device == "shortcut") {
      config.builtin_device = flags.device;
    } else {
      config.device_path = flags.device;
    }
  }
  config.eta = flags.eta;
  if (!flags.input.empty()) {
    config.input_label = bellscope::bell_label_from_string(flags.input);
  }
  if (!flags.amplitudes.empty()) {
    config.input_amplitudes = parse_amplitudes(flags.amplitudes);
  }
  if (flags.mode == "montecarlo") {
    bellscope::MonteCarloMode mc;
    mc.trials = flags.trials;
    mc.seed = flags.seed >= 0 ? static_cast<std::uint64_t>(flags.seed)
                              : bellscope::default_seed();
    config.monte_carlo = mc;
  } else if (flags.mode != "exact") {
    throw std::invalid_argument("mode must be exact or montecarlo");
  }
  config.format = flags.format;
  if (!flags.output.empty()) {
    config.output_path = flags.output;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-state measurement device simulator"};
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON run configuration replacing all flags");

  CommonFlags flags;

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Propagate one input state through a device");
  add_device_flags(simulate, flags);
  add_input_flags(simulate, flags);
  simulate->add_option("--mode", flags.mode, "exact or montecarlo")
      ->check(CLI::IsMember({"exact", "montecarlo"}));
  simulate->add_option("--trials", flags.trials, "Monte Carlo trial count");
  simulate->add_option("--seed", flags.seed,
                       "Monte Carlo seed (default: BELLSCOPE_SEED or 0)");
  add_output_flags(simulate, flags);

  CLI::App* confusion = app.add_subcommand(
      "confusion", "Outcome probabilities for all four Bell inputs");
  add_device_flags(confusion, flags);
  add_output_flags(confusion, flags);

  CLI::App* selection = app.add_subcommand(
      "selection", "Geometrical factors and relative absorption rates");
  add_input_flags(selection, flags);
  std::string irrep_name;
  std::string model_path;
  double w1 = 0.0;
  double w2 = 0.0;
  selection->add_option("--irrep", irrep_name,
                        "Restrict the factor table to one irrep, e.g. G1+");
  selection->add_option("--model", model_path, "Transition model JSON file");
  selection->add_option("--w1", w1, "Photon 1 energy in eV");
  selection->add_option("--w2", w2, "Photon 2 energy in eV");
  add_output_flags(selection, flags);

  CLI::App* params = app.add_subcommand(
      "params", "Cavity absorption rate, lifetime, and Q factor");
  std::string preset;
  std::string params_file;
  double tau_c = 0.0;
  double res_w1 = 0.0, res_w2 = 0.0, res_transition = 0.0, res_tol = 1e-3;
  params->add_option("--preset", preset, "Builtin parameter set: cucl");
  params->add_option("--params-file", params_file,
                     "Cavity parameter JSON file with unit tags");
  params->add_option("--tau-c", tau_c, "Cavity lifetime in seconds");
  params->add_option("--res-w1", res_w1, "Resonance check: photon 1 eV");
  params->add_option("--res-w2", res_w2, "Resonance check: photon 2 eV");
  params->add_option("--res-transition", res_transition,
                     "Resonance check: two-photon transition energy eV");
  params->add_option("--res-tolerance", res_tol,
                     "Resonance check tolerance in eV");
  add_output_flags(params, flags);

  CLI::App* qdot = app.add_subcommand(
      "qdot", "Four-pass quantum-dot discrimination protocol");
  qdot->add_option("--eta", flags.eta, "Dot absorption efficiency")
      ->check(CLI::Range(0.0, 1.0));
  add_output_flags(qdot, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bellscope::kExitBadConfig;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) {
      config = bellscope::load_config(config_path);
    } else if (simulate->parsed()) {
      config.command = RunConfig::Command::Simulate;
      apply_common(flags, config);
    } else if (confusion->parsed()) {
      config.command = RunConfig::Command::Confusion;
      apply_common(flags, config);
    } else if (selection->parsed()) {
      config.command = RunConfig::Command::Selection;
      apply_common(flags, config);
      if (!irrep_name.empty()) {
        config.irrep_filter = bellscope::irrep_from_string(irrep_name);
      }
      if (!model_path.empty()) {
        config.model_path = model_path;
        config.w1_ev = w1;
        config.w2_ev = w2;
      }
    } else if (params->parsed()) {
      config.command = RunConfig::Command::Params;
      apply_common(flags, config);
      if (!preset.empty()) {
        config.preset = preset;
      }
      if (!params_file.empty()) {
        config.params_path = params_file;
      }
      if (tau_c > 0.0) {
        config.tau_c_s = tau_c;
      }
      if (res_transition > 0.0) {
        config.resonance = bellscope::ResonanceCheck{res_w1, res_w2,
                                                     res_transition, res_tol};
      }
    } else if (qdot->parsed()) {
      config.command = RunConfig::Command::Qdot;
      apply_common(flags, config);
    } else {
      std::cerr << app.help();
      return bellscope::kExitBadConfig;
    }
    return bellscope::run(config, std::cout);
  } catch (const bellscope::ResonanceError& e) {
    std::cerr << "physics error: " << e.what() << "\n";
    return bellscope::kExitPhysics;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bellscope::kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bellscope::kExitBadConfig;
  }
}
