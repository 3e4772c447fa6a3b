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

#include "bellscope/serialization.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bellscope {

using nlohmann::json;

double round12(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return std::strtod(buffer, nullptr);
}

std::string format12(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

namespace {

json complex_to_json(const std::complex<double>& z) {
  return json::array({round12(z.real()), round12(z.imag())});
}

std::complex<double> complex_from_json(const json& doc) {
  if (!doc.is_array() || doc.size() != 2) {
    throw std::invalid_argument("complex numbers are [re, im] pairs");
  }
  return {doc[0].get<double>(), doc[1].get<double>()};
}

json load_json_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw std::invalid_argument("cannot open " + path);
  }
  return json::parse(stream);
}

// Unit tables, values in the SI unit each dimension is stored in.
const std::map<std::string, double> kEnergyUnitsEv = {
    {"eV", 1.0}, {"meV", 1e-3}, {"J", 1.0 / constants::kElectronVolt}};
const std::map<std::string, double> kBetaUnits = {{"m/W", 1.0},
                                                  {"cm/W", 1e-2}};
const std::map<std::string, double> kVolumeUnits = {
    {"m^3", 1.0}, {"cm^3", 1e-6}, {"um^3", 1e-18}, {"nm^3", 1e-27}};
const std::map<std::string, double> kTimeUnits = {
    {"s", 1.0},    {"ms", 1e-3}, {"us", 1e-6},
    {"ns", 1e-9},  {"ps", 1e-12}, {"fs", 1e-15}};

double parse_quantity(const json& doc, const std::map<std::string, double>& units,
                      const char* name) {
  if (doc.is_number()) {
    throw std::invalid_argument(std::string(name) +
                                " needs an explicit unit: "
                                "{\"value\": ..., \"unit\": \"...\"}");
  }
  const double value = doc.at("value").get<double>();
  const std::string unit = doc.at("unit").get<std::string>();
  const auto it = units.find(unit);
  if (it == units.end()) {
    throw std::invalid_argument(std::string("unsupported unit \"") + unit +
                                "\" for " + name);
  }
  return value * it->second;
}

}  // namespace

json state_to_json(const TwoPhotonState& state) {
  json doc;
  doc["schema"] = kSchemaVersion;
  if (state.is_pure()) {
    doc["kind"] = "pure";
    json amplitudes = json::array();
    for (int i = 0; i < 4; ++i) {
      amplitudes.push_back(complex_to_json(state.amplitudes()(i)));
    }
    doc["amplitudes"] = std::move(amplitudes);
  } else {
    doc["kind"] = "mixed";
    json density = json::array();
    const Eigen::Matrix4cd rho = state.density();
    for (int i = 0; i < 4; ++i) {
      json row = json::array();
      for (int j = 0; j < 4; ++j) {
        row.push_back(complex_to_json(rho(i, j)));
      }
      density.push_back(std::move(row));
    }
    doc["density"] = std::move(density);
  }
  return doc;
}

TwoPhotonState state_from_json(const json& doc) {
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "pure") {
    const json& amplitudes = doc.at("amplitudes");
    if (!amplitudes.is_array() || amplitudes.size() != 4) {
      throw std::invalid_argument("pure states carry 4 amplitudes");
    }
    Eigen::Vector4cd a;
    for (int i = 0; i < 4; ++i) {
      a(i) = complex_from_json(amplitudes[i]);
    }
    return TwoPhotonState::pure(a);
  }
  if (kind == "mixed") {
    const json& density = doc.at("density");
    if (!density.is_array() || density.size() != 4) {
      throw std::invalid_argument("density matrices are 4x4");
    }
    Eigen::Matrix4cd rho;
    for (int i = 0; i < 4; ++i) {
      if (!density[i].is_array() || density[i].size() != 4) {
        throw std::invalid_argument("density matrices are 4x4");
      }
      for (int j = 0; j < 4; ++j) {
        rho(i, j) = complex_from_json(density[i][j]);
      }
    }
    return TwoPhotonState::mixed(rho);
  }
  throw std::invalid_argument("state kind must be \"pure\" or \"mixed\"");
}

json device_to_json(const DeviceSpec& device) {
  json doc;
  doc["schema"] = kSchemaVersion;
  json stages = json::array();
  for (const StageSpec& stage : device.stages) {
    json entry;
    if (const auto* crystal = std::get_if<CrystalStage>(&stage)) {
      entry["kind"] = "crystal";
      entry["detector"] = crystal->detector_id;
      entry["eta"] = round12(crystal->eta);
      entry["absorbed"] = state_to_json(crystal->absorbed);
    } else if (const auto* detector = std::get_if<PhotodetectorStage>(&stage)) {
      entry["kind"] = "photodetector";
      entry["detector"] = detector->detector_id;
    } else if (const auto* rotator = std::get_if<RotatorStage>(&stage)) {
      entry["kind"] = "rotator";
      entry["photon"] = rotator->photon;
      entry["angle"] = round12(rotator->angle);
    } else {
      entry["kind"] = "retarder_both";
    }
    stages.push_back(std::move(entry));
  }
  doc["stages"] = std::move(stages);
  if (device.terminal_label) {
    doc["terminal"] = json{{"photodetector", *device.terminal_label}};
  } else {
    doc["terminal"] = "no-click";
  }
  return doc;
}

DeviceSpec device_from_json(const json& doc) {
  DeviceSpec device;
  for (const json& entry : doc.at("stages")) {
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind == "crystal") {
      CrystalStage crystal;
      crystal.detector_id = entry.at("detector").get<int>();
      crystal.eta = entry.at("eta").get<double>();
      if (entry.contains("absorbed")) {
        const json& absorbed = entry["absorbed"];
        crystal.absorbed =
            absorbed.is_string()
                ? bell_state(bell_label_from_string(absorbed.get<std::string>()))
                : state_from_json(absorbed);
      }
      device.stages.push_back(crystal);
    } else if (kind == "photodetector") {
      device.stages.push_back(
          PhotodetectorStage{entry.at("detector").get<int>()});
    } else if (kind == "rotator") {
      device.stages.push_back(RotatorStage{entry.at("photon").get<int>(),
                                           entry.at("angle").get<double>()});
    } else if (kind == "retarder_both") {
      device.stages.push_back(RetarderBothStage{});
    } else {
      throw std::invalid_argument("unknown stage kind: " + kind);
    }
  }
  if (doc.contains("terminal") && !doc["terminal"].is_string()) {
    device.terminal_label =
        doc["terminal"].at("photodetector").get<std::string>();
  }
  device.validate();
  return device;
}

DeviceSpec load_device(const std::string& path) {
  return device_from_json(load_json_file(path));
}

TransitionModel transition_model_from_json(const json& doc) {
  TransitionModel model;
  model.ground_energy_ev = doc.at("E0").get<double>();
  for (const json& entry : doc.at("intermediates")) {
    IntermediateLevel level;
    level.energy_ev = entry.at("E").get<double>();
    level.matrix_element = complex_from_json(entry.at("M"));
    model.intermediates.push_back(level);
  }
  for (const json& entry : doc.at("finals")) {
    FinalLevel level;
    level.irrep = irrep_from_string(entry.at("irrep").get<std::string>());
    level.energy_ev = entry.at("E").get<double>();
    model.finals.push_back(level);
  }
  if (doc.contains("sigma")) {
    model.sigma_ev = doc["sigma"].get<double>();
  }
  model.validate();
  return model;
}

TransitionModel load_transition_model(const std::string& path) {
  return transition_model_from_json(load_json_file(path));
}

CavityParams cavity_params_from_json(const json& doc) {
  CavityParams params;
  params.photon_energy_ev =
      parse_quantity(doc.at("photon_energy"), kEnergyUnitsEv, "photon_energy");
  params.refractive_index = doc.at("refractive_index").get<double>();
  params.tpa_coefficient_m_per_w =
      parse_quantity(doc.at("tpa_coefficient"), kBetaUnits, "tpa_coefficient");
  params.mode_volume_m3 =
      parse_quantity(doc.at("mode_volume"), kVolumeUnits, "mode_volume");
  if (doc.contains("cavity_lifetime")) {
    params.cavity_lifetime_s =
        parse_quantity(doc["cavity_lifetime"], kTimeUnits, "cavity_lifetime");
  }
  params.validate();
  return params;
}

json confusion_to_json(const ConfusionMatrix& matrix) {
  json doc;
  doc["schema"] = kSchemaVersion;
  json rows = json::array();
  for (BellLabel label : matrix.rows) {
    rows.push_back(to_string(label));
  }
  doc["rows"] = std::move(rows);
  doc["columns"] = matrix.columns;
  json entries = json::array();
  for (Eigen::Index i = 0; i < matrix.entries.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < matrix.entries.cols(); ++j) {
      row.push_back(round12(matrix.entries(i, j)));
    }
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

std::string confusion_to_csv(const ConfusionMatrix& matrix) {
  std::ostringstream out;
  out << "input";
  for (const std::string& column : matrix.columns) {
    out << ',' << column;
  }
  out << '\n';
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    out << to_string(matrix.rows[i]);
    for (Eigen::Index j = 0; j < matrix.entries.cols(); ++j) {
      out << ',' << format12(matrix.entries(static_cast<Eigen::Index>(i), j));
    }
    out << '\n';
  }
  return out.str();
}

json distribution_to_json(const OutcomeDistribution& distribution) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["labels"] = distribution.labels;
  json probabilities = json::array();
  for (double p : distribution.probabilities) {
    probabilities.push_back(round12(p));
  }
  doc["probabilities"] = std::move(probabilities);
  return doc;
}

std::string distribution_to_csv(const OutcomeDistribution& distribution) {
  std::ostringstream out;
  out << "outcome,probability\n";
  for (std::size_t i = 0; i < distribution.labels.size(); ++i) {
    out << distribution.labels[i] << ','
        << format12(distribution.probabilities[i]) << '\n';
  }
  return out.str();
}

json counts_to_json(const OutcomeCounts& counts, std::uint64_t seed) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["labels"] = counts.labels;
  doc["counts"] = counts.counts;
  doc["trials"] = counts.trials;
  doc["seed"] = seed;
  return doc;
}

std::string counts_to_csv(const OutcomeCounts& counts) {
  std::ostringstream out;
  out << "outcome,count\n";
  for (std::size_t i = 0; i < counts.labels.size(); ++i) {
    out << counts.labels[i] << ',' << counts.counts[i] << '\n';
  }
  return out.str();
}

}  // namespace bellscope
