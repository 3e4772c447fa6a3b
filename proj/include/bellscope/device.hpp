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

#ifndef BELLSCOPE_DEVICE_HPP
#define BELLSCOPE_DEVICE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "bellscope/bell.hpp"
#include "bellscope/jones.hpp"
#include "bellscope/two_photon_state.hpp"

namespace bellscope {

/// Two-photon absorbing crystal read out by detector `detector_id`. Clicks
/// with probability eta * <absorbed|rho|absorbed> and transmits the
/// complementary Kraus branch.
struct CrystalStage {
  int detector_id = 0;
  TwoPhotonState absorbed = bell_state(BellLabel::PhiPlus);
  double eta = 1.0;
};

/// Quarter-wave plates on both photons.
struct RetarderBothStage {};

/// Polarization rotator on one photon.
struct RotatorStage {
  int photon = 1;
  double angle = 0.0;
};

/// Ordinary photodetector placed in the beam: clicks on any surviving
/// photons with unit efficiency, absorbing all remaining weight.
struct PhotodetectorStage {
  int detector_id = 0;
};

using StageSpec = std::variant<CrystalStage, RetarderBothStage, RotatorStage,
                               PhotodetectorStage>;

/// Ordered cascade of stages. When `terminal_label` is set, photons leaving
/// the last stage fire a terminal photodetector reported under that label;
/// otherwise the remaining weight is reported as "no-click".
struct DeviceSpec {
  std::vector<StageSpec> stages;
  std::optional<std::string> terminal_label;

  /// Outcome labels in reporting order: in-line detectors by stage order,
  /// then the terminal photodetector label when present, then "no-click".
  std::vector<std::string> outcome_labels() const;

  /// Detector ids must be unique, efficiencies in [0, 1], absorbed states
  /// pure and normalized. Throws std::invalid_argument on violation.
  void validate() const;
};

inline constexpr const char* kNoClickLabel = "no-click";

/// The four-crystal cascade:
///   crystal1 -> retarders -> crystal2 -> rotator(photon 1, pi/2)
///   -> crystal3 -> retarders -> crystal4
/// with every crystal absorbing Phi+ at efficiency eta. At eta = 1 the
/// detectors 1..4 fire for inputs Phi+, Phi-, Psi-, Psi+ respectively.
DeviceSpec standard_device(double eta);

/// The same cascade with the fourth crystal replaced by a unit-efficiency
/// terminal photodetector labeled "PsiPlus". Photons any upstream crystal
/// failed to absorb also end up there, which is the error mode of the
/// three-crystal shortcut.
DeviceSpec shortcut_device(double eta);

struct ChannelResult {
  double p_click = 0.0;
  TwoPhotonState conditional = bell_state(BellLabel::PhiPlus);
};

/// Two-outcome measurement channel of one crystal. For a state of weight w:
///
///   p_click     = eta * <absorbed|rho|absorbed>
///   conditional = K rho K^dag / (1 - p_click),  K = sqrt(I - eta |a><a|)
///
/// so a normalized input yields a normalized conditional state; the click
/// operator and K^dag K add up to the identity. When p_click reaches the
/// full weight the conditional state is the zero state.
ChannelResult crystal_channel(const TwoPhotonState& state,
                              const TwoPhotonState& absorbed, double eta);

/// Probabilities over the device outcomes, ordered as outcome_labels().
struct OutcomeDistribution {
  std::vector<std::string> labels;
  std::vector<double> probabilities;

  double probability(const std::string& label) const;
};

/// Exact outcome distribution by sequential channel application. The
/// returned probabilities sum to the input weight (1 for normalized input).
OutcomeDistribution propagate_exact(const DeviceSpec& device,
                                    const TwoPhotonState& input);

/// Empirical outcome counts from per-trial stochastic branching.
struct OutcomeCounts {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;
  std::uint64_t trials = 0;
};

/// Samples `trials` independent runs. Each trial uses its own generator
/// seeded from (seed, trial index), so results are reproducible for a fixed
/// seed and independent of execution order.
OutcomeCounts propagate_monte_carlo(const DeviceSpec& device,
                                    const TwoPhotonState& input,
                                    std::uint64_t trials, std::uint64_t seed);

/// Outcome probabilities per input Bell state. Rows follow kAllBellLabels;
/// columns follow DeviceSpec::outcome_labels(). Every row sums to 1.
struct ConfusionMatrix {
  std::array<BellLabel, 4> rows = kAllBellLabels;
  std::vector<std::string> columns;
  Eigen::Matrix<double, 4, Eigen::Dynamic> entries;

  double entry(BellLabel input, const std::string& column) const;
};

ConfusionMatrix confusion_matrix(const DeviceSpec& device);

}  // namespace bellscope

#endif  // BELLSCOPE_DEVICE_HPP
