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

#ifndef BELLSCOPE_SERIALIZATION_HPP
#define BELLSCOPE_SERIALIZATION_HPP

#include <string>

#include <json.hpp>

#include "bellscope/device.hpp"
#include "bellscope/physical_params.hpp"
#include "bellscope/quantum_dot.hpp"
#include "bellscope/selection_rules.hpp"
#include "bellscope/two_photon_state.hpp"

namespace bellscope {

/// Version stamped into every emitted JSON document.
inline constexpr int kSchemaVersion = 1;

/// Rounds to 12 significant digits, the precision used by all emitted
/// numbers (JSON and CSV carry identical values).
double round12(double value);

/// 12-significant-digit text form of a double.
std::string format12(double value);

// Two-photon states:
// {"kind": "pure", "amplitudes": [[re, im], ...]} in (xx, xy, yx, yy) order,
// or {"kind": "mixed", "density": [[[re, im], ...], ...]}.
nlohmann::json state_to_json(const TwoPhotonState& state);
TwoPhotonState state_from_json(const nlohmann::json& doc);

// Devices:
// {"stages": [{"kind": "crystal", "detector": 1, "eta": 0.9,
//              "absorbed": "PhiPlus"},
//             {"kind": "retarder_both"},
//             {"kind": "rotator", "photon": 1, "angle": 1.5707963},
//             {"kind": "photodetector", "detector": 5}],
//  "terminal": "no-click" | {"photodetector": "PsiPlus"}}
// "absorbed" also accepts a full state document; it defaults to "PhiPlus".
nlohmann::json device_to_json(const DeviceSpec& device);
DeviceSpec device_from_json(const nlohmann::json& doc);
DeviceSpec load_device(const std::string& path);

// Transition models:
// {"E0": eV, "intermediates": [{"E": eV, "M": [re, im]}],
//  "finals": [{"irrep": "G1+", "E": eV}], "sigma": eV}
TransitionModel transition_model_from_json(const nlohmann::json& doc);
TransitionModel load_transition_model(const std::string& path);

// Cavity parameters with explicit unit tags, e.g.
// {"photon_energy": {"value": 3.186, "unit": "eV"},
//  "refractive_index": 3.0,
//  "tpa_coefficient": {"value": 0.1, "unit": "cm/W"},
//  "mode_volume": {"value": 1.0, "unit": "um^3"},
//  "cavity_lifetime": {"value": 17, "unit": "ps"}}
// Accepted units: eV/meV/J; cm/W, m/W; um^3, nm^3, cm^3, m^3; s down to fs.
CavityParams cavity_params_from_json(const nlohmann::json& doc);

nlohmann::json confusion_to_json(const ConfusionMatrix& matrix);
std::string confusion_to_csv(const ConfusionMatrix& matrix);

nlohmann::json distribution_to_json(const OutcomeDistribution& distribution);
std::string distribution_to_csv(const OutcomeDistribution& distribution);

nlohmann::json counts_to_json(const OutcomeCounts& counts, std::uint64_t seed);
std::string counts_to_csv(const OutcomeCounts& counts);

}  // namespace bellscope

#endif  // BELLSCOPE_SERIALIZATION_HPP
