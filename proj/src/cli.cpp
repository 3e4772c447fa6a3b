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

#include "bellscope/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bellscope/device.hpp"
#include "bellscope/quantum_dot.hpp"
#include "bellscope/selection_rules.hpp"
#include "bellscope/serialization.hpp"

namespace bellscope {

using nlohmann::json;

namespace {

TwoPhotonState resolve_input(const RunConfig& config) {
  if (config.input_label) {
    return bell_state(*config.input_label);
  }
  if (config.input_amplitudes) {
    return TwoPhotonState::pure(*config.input_amplitudes);
  }
  throw std::invalid_argument("an input state is required (Bell label or "
                              "raw amplitudes)");
}

DeviceSpec resolve_device(const RunConfig& config) {
  if (config.device_path) {
    return load_device(*config.device_path);
  }
  const std::string name = config.builtin_device.value_or("standard");
  if (name == "standard") {
    return standard_device(config.eta);
  }
  if (name == "shortcut") {
    return shortcut_device(config.eta);
  }
  throw std::invalid_argument("unknown builtin device: " + name);
}

CavityParams resolve_params(const RunConfig& config) {
  CavityParams params;
  if (config.params_path) {
    std::ifstream stream(*config.params_path);
    if (!stream) {
      throw std::invalid_argument("cannot open " + *config.params_path);
    }
    params = cavity_params_from_json(json::parse(stream));
  } else {
    const std::string name = config.preset.value_or("cucl");
    if (name != "cucl") {
      throw std::invalid_argument("unknown parameter preset: " + name);
    }
    params = cucl_preset();
  }
  if (config.tau_c_s) {
    params.cavity_lifetime_s = config.tau_c_s;
  }
  return params;
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("cannot write " + *config.output_path);
    }
    file << text;
  } else {
    out << text;
  }
}

std::string render_json(const json& doc) { return doc.dump(2) + "\n"; }

int run_simulate(const RunConfig& config, std::ostream& out) {
  const DeviceSpec device = resolve_device(config);
  const TwoPhotonState input = resolve_input(config);
  std::string text;
  if (config.monte_carlo) {
    const OutcomeCounts counts = propagate_monte_carlo(
        device, input, config.monte_carlo->trials, config.monte_carlo->seed);
    text = config.format == "csv"
               ? counts_to_csv(counts)
               : render_json(counts_to_json(counts, config.monte_carlo->seed));
  } else {
    const OutcomeDistribution distribution = propagate_exact(device, input);
    text = config.format == "csv"
               ? distribution_to_csv(distribution)
               : render_json(distribution_to_json(distribution));
  }
  emit(config, text, out);
  return kExitOk;
}

int run_confusion(const RunConfig& config, std::ostream& out) {
  const ConfusionMatrix matrix = confusion_matrix(resolve_device(config));
  emit(config,
       config.format == "csv" ? confusion_to_csv(matrix)
                              : render_json(confusion_to_json(matrix)),
       out);
  return kExitOk;
}

int run_selection(const RunConfig& config, std::ostream& out) {
  const TwoPhotonState input = resolve_input(config);
  const CGTable cg = build_cg_table();

  struct Factor {
    Irrep irrep;
    int row;
    std::complex<double> value;
  };
  std::vector<Factor> factors;
  for (Irrep mu : kProductIrreps) {
    if (config.irrep_filter && mu != *config.irrep_filter) {
      continue;
    }
    for (int m = 0; m < dimension(mu); ++m) {
      factors.push_back({mu, m, geometrical_factor(mu, m, input, cg)});
    }
  }

  std::optional<double> rate;
  if (config.model_path) {
    const TransitionModel model = load_transition_model(*config.model_path);
    rate = tpa_relative_rate(input, model, cg, config.w1_ev, config.w2_ev);
  }

  if (config.format == "csv") {
    std::ostringstream csv;
    csv << "quantity,re,im\n";
    for (const Factor& factor : factors) {
      csv << to_string(factor.irrep) << ':' << factor.row << ','
          << format12(factor.value.real()) << ','
          << format12(factor.value.imag()) << '\n';
    }
    if (rate) {
      csv << "rate," << format12(*rate) << ",0\n";
    }
    emit(config, csv.str(), out);
    return kExitOk;
  }

  json doc;
  doc["schema"] = kSchemaVersion;
  json factor_docs = json::array();
  for (const Factor& factor : factors) {
    factor_docs.push_back({{"irrep", to_string(factor.irrep)},
                           {"row", factor.row},
                           {"value",
                            {round12(factor.value.real()),
                             round12(factor.value.imag())}}});
  }
  doc["factors"] = std::move(factor_docs);
  if (rate) {
    doc["rate"] = round12(*rate);
  }
  emit(config, render_json(doc), out);
  return kExitOk;
}

int run_params(const RunConfig& config, std::ostream& out) {
  const CavityParams params = resolve_params(config);
  const TpaRateResult rate = tpa_rate(params);
  const CavityQResult quality = required_q(params);
  std::optional<double> eta;
  if (params.cavity_lifetime_s) {
    eta = absorption_efficiency(params);
  }
  std::optional<ResonanceResult> resonance;
  if (config.resonance) {
    resonance = check_resonance(*config.resonance);
  }

  if (config.format == "csv") {
    std::ostringstream csv;
    csv << "quantity,value\n";
    csv << "alpha_per_s," << format12(rate.rate_per_s) << '\n';
    csv << "field_V_per_m," << format12(rate.field_v_per_m) << '\n';
    csv << "tau_min_s," << format12(quality.tau_min_s) << '\n';
    csv << "omega_rad_per_s," << format12(quality.omega_rad_per_s) << '\n';
    csv << "q," << format12(quality.q) << '\n';
    if (eta) {
      csv << "eta," << format12(*eta) << '\n';
    }
    if (resonance) {
      csv << "resonant_pair," << (resonance->resonant_pair ? 1 : 0) << '\n';
      csv << "degenerate_single_source_resonant,"
          << (resonance->degenerate_single_source_resonant ? 1 : 0) << '\n';
    }
    emit(config, csv.str(), out);
    return kExitOk;
  }

  json doc;
  doc["schema"] = kSchemaVersion;
  doc["alpha_per_s"] = round12(rate.rate_per_s);
  doc["field_V_per_m"] = round12(rate.field_v_per_m);
  doc["tau_min_s"] = round12(quality.tau_min_s);
  doc["omega_rad_per_s"] = round12(quality.omega_rad_per_s);
  doc["q"] = round12(quality.q);
  if (eta) {
    doc["eta"] = round12(*eta);
  }
  if (resonance) {
    doc["resonant_pair"] = resonance->resonant_pair;
    doc["degenerate_single_source_resonant"] =
        resonance->degenerate_single_source_resonant;
  }
  emit(config, render_json(doc), out);
  return kExitOk;
}

int run_qdot(const RunConfig& config, std::ostream& out) {
  const FourPassProtocol protocol = four_pass_protocol(config.eta);
  if (config.format == "csv") {
    emit(config, confusion_to_csv(protocol.confusion), out);
    return kExitOk;
  }
  json doc = confusion_to_json(protocol.confusion);
  json schedule = json::array();
  for (const PassElement& element : protocol.schedule.elements) {
    if (const auto* pass = std::get_if<DotPassElement>(&element)) {
      schedule.push_back("dot_pass:" + std::to_string(pass->pass_id));
    } else if (std::get_if<PiRetarderElement>(&element)) {
      schedule.push_back("pi_retarder");
    } else {
      schedule.push_back("half_pi_rotator");
    }
  }
  doc["schedule"] = std::move(schedule);
  emit(config, render_json(doc), out);
  return kExitOk;
}

}  // namespace

void RunConfig::validate() const {
  if (builtin_device && device_path) {
    throw std::invalid_argument(
        "a builtin device and a device file are mutually exclusive");
  }
  if (input_label && input_amplitudes) {
    throw std::invalid_argument(
        "a Bell label and raw amplitudes are mutually exclusive");
  }
  if (monte_carlo && monte_carlo->trials < 1) {
    throw std::invalid_argument("montecarlo mode needs trials >= 1");
  }
  if (format != "json" && format != "csv") {
    throw std::invalid_argument("format must be json or csv, got " + format);
  }
  if (model_path && (w1_ev <= 0.0 || w2_ev <= 0.0)) {
    throw std::invalid_argument(
        "a transition model needs positive photon energies --w1 and --w2");
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BELLSCOPE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

RunConfig config_from_json(const json& doc) {
  RunConfig config;
  const std::string command = doc.at("command").get<std::string>();
  if (command == "simulate") {
    config.command = RunConfig::Command::Simulate;
  } else if (command == "confusion") {
    config.command = RunConfig::Command::Confusion;
  } else if (command == "selection") {
    config.command = RunConfig::Command::Selection;
  } else if (command == "params") {
    config.command = RunConfig::Command::Params;
  } else if (command == "qdot") {
    config.command = RunConfig::Command::Qdot;
  } else {
    throw std::invalid_argument("unknown command: " + command);
  }

  if (doc.contains("device")) {
    const json& device = doc["device"];
    if (device.is_string()) {
      config.builtin_device = device.get<std::string>();
    } else {
      config.device_path = device.at("path").get<std::string>();
    }
  }
  if (doc.contains("eta")) {
    config.eta = doc["eta"].get<double>();
  }
  if (doc.contains("input")) {
    const json& input = doc["input"];
    if (input.is_string()) {
      config.input_label = bell_label_from_string(input.get<std::string>());
    } else {
      const TwoPhotonState state = state_from_json(input);
      config.input_amplitudes = state.amplitudes();
    }
  }
  if (doc.contains("mode") && !doc["mode"].is_string()) {
    const json& mode = doc["mode"].at("montecarlo");
    MonteCarloMode mc;
    mc.trials = mode.at("trials").get<std::uint64_t>();
    mc.seed = mode.contains("seed") ? mode["seed"].get<std::uint64_t>()
                                    : default_seed();
    config.monte_carlo = mc;
  }
  if (doc.contains("model")) {
    config.model_path = doc["model"].get<std::string>();
  }
  if (doc.contains("w1")) {
    config.w1_ev = doc["w1"].get<double>();
  }
  if (doc.contains("w2")) {
    config.w2_ev = doc["w2"].get<double>();
  }
  if (doc.contains("irrep")) {
    config.irrep_filter = irrep_from_string(doc["irrep"].get<std::string>());
  }
  if (doc.contains("preset")) {
    config.preset = doc["preset"].get<std::string>();
  }
  if (doc.contains("params_file")) {
    config.params_path = doc["params_file"].get<std::string>();
  }
  if (doc.contains("tau_c_s")) {
    config.tau_c_s = doc["tau_c_s"].get<double>();
  }
  if (doc.contains("resonance")) {
    const json& res = doc["resonance"];
    ResonanceCheck check;
    check.w1_ev = res.at("w1").get<double>();
    check.w2_ev = res.at("w2").get<double>();
    check.transition_energy_ev = res.at("transition").get<double>();
    if (res.contains("tolerance")) {
      check.tolerance_ev = res["tolerance"].get<double>();
    }
    config.resonance = check;
  }
  if (doc.contains("format")) {
    config.format = doc["format"].get<std::string>();
  }
  if (doc.contains("output")) {
    config.output_path = doc["output"].get<std::string>();
  }
  config.validate();
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw std::invalid_argument("cannot open " + path);
  }
  return config_from_json(json::parse(stream));
}

int run(const RunConfig& config, std::ostream& out) {
  config.validate();
  switch (config.command) {
    case RunConfig::Command::Simulate:
      return run_simulate(config, out);
    case RunConfig::Command::Confusion:
      return run_confusion(config, out);
    case RunConfig::Command::Selection:
      return run_selection(config, out);
    case RunConfig::Command::Params:
      return run_params(config, out);
    case RunConfig::Command::Qdot:
      return run_qdot(config, out);
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace bellscope
