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

#include "bellscope/device.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace bellscope {

namespace {

constexpr double kBranchEpsilon = 1e-15;

void check_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("crystal efficiency must lie in [0, 1], got " +
                                std::to_string(eta));
  }
}

void check_absorbed(const TwoPhotonState& absorbed) {
  if (!absorbed.is_pure()) {
    throw std::invalid_argument("absorbed state must be pure");
  }
  if (std::abs(absorbed.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("absorbed state must be normalized");
  }
}

// Complementary Kraus operator K = I + (sqrt(1 - eta) - 1) |a><a| applied
// without renormalization, so the output weight is the survival mass.
Eigen::Vector4cd survive_pure(const Eigen::Vector4cd& amplitudes,
                              const Eigen::Vector4cd& absorbed, double eta) {
  const std::complex<double> component = absorbed.dot(amplitudes);
  return amplitudes + (std::sqrt(1.0 - eta) - 1.0) * component * absorbed;
}

Eigen::Matrix4cd survive_mixed(const Eigen::Matrix4cd& density,
                               const Eigen::Vector4cd& absorbed, double eta) {
  const Eigen::Matrix4cd k =
      Eigen::Matrix4cd::Identity() +
      (std::sqrt(1.0 - eta) - 1.0) * (absorbed * absorbed.adjoint());
  return k * density * k.adjoint();
}

double click_mass(const TwoPhotonState& state, const Eigen::Vector4cd& absorbed,
                  double eta) {
  if (state.is_pure()) {
    return eta * std::norm(absorbed.dot(state.amplitudes()));
  }
  return eta * (absorbed.adjoint() * state.density() * absorbed)(0, 0).real();
}

TwoPhotonState survive(const TwoPhotonState& state,
                       const Eigen::Vector4cd& absorbed, double eta) {
  if (state.is_pure()) {
    return TwoPhotonState::pure(survive_pure(state.amplitudes(), absorbed, eta));
  }
  return TwoPhotonState::mixed(survive_mixed(state.density(), absorbed, eta));
}

TwoPhotonState zero_state(bool pure) {
  if (pure) {
    return TwoPhotonState::pure(Eigen::Vector4cd::Zero());
  }
  return TwoPhotonState::mixed(Eigen::Matrix4cd::Zero());
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic uniform in [0, 1) with 53 random bits, independent of the
// standard library's distribution implementation.
class TrialRng {
public:
  TrialRng(uint64_t seed, uint64_t trial)
      : state_(splitmix64(seed ^ splitmix64(trial))) {}

  double uniform() {
    state_ = splitmix64(state_);
    return static_cast<double>(state_ >> 11) * 0x1.0p-53;
  }

private:
  uint64_t state_;
};

}  // namespace

std::vector<std::string> DeviceSpec::outcome_labels() const {
  std::vector<std::string> labels;
  for (const StageSpec& stage : stages) {
    if (const auto* crystal = std::get_if<CrystalStage>(&stage)) {
      labels.push_back(std::to_string(crystal->detector_id));
    } else if (const auto* detector = std::get_if<PhotodetectorStage>(&stage)) {
      labels.push_back(std::to_string(detector->detector_id));
    }
  }
  if (terminal_label) {
    labels.push_back(*terminal_label);
  }
  labels.push_back(kNoClickLabel);
  return labels;
}

void DeviceSpec::validate() const {
  std::set<int> ids;
  for (const StageSpec& stage : stages) {
    if (const auto* crystal = std::get_if<CrystalStage>(&stage)) {
      check_eta(crystal->eta);
      check_absorbed(crystal->absorbed);
      if (!ids.insert(crystal->detector_id).second) {
        throw std::invalid_argument("duplicate detector id " +
                                    std::to_string(crystal->detector_id));
      }
    } else if (const auto* detector = std::get_if<PhotodetectorStage>(&stage)) {
      if (!ids.insert(detector->detector_id).second) {
        throw std::invalid_argument("duplicate detector id " +
                                    std::to_string(detector->detector_id));
      }
    } else if (const auto* rotator = std::get_if<RotatorStage>(&stage)) {
      if (rotator->photon != 1 && rotator->photon != 2) {
        throw std::invalid_argument("rotator photon index must be 1 or 2");
      }
    }
  }
}

DeviceSpec standard_device(double eta) {
  check_eta(eta);
  const TwoPhotonState phi_plus = bell_state(BellLabel::PhiPlus);
  DeviceSpec device;
  device.stages = {
      CrystalStage{1, phi_plus, eta},
      RetarderBothStage{},
      CrystalStage{2, phi_plus, eta},
      RotatorStage{1, std::numbers::pi / 2},
      CrystalStage{3, phi_plus, eta},
      RetarderBothStage{},
      CrystalStage{4, phi_plus, eta},
  };
  return device;
}

DeviceSpec shortcut_device(double eta) {
  check_eta(eta);
  const TwoPhotonState phi_plus = bell_state(BellLabel::PhiPlus);
  DeviceSpec device;
  device.stages = {
      CrystalStage{1, phi_plus, eta},
      RetarderBothStage{},
      CrystalStage{2, phi_plus, eta},
      RotatorStage{1, std::numbers::pi / 2},
      CrystalStage{3, phi_plus, eta},
      RetarderBothStage{},
  };
  device.terminal_label = to_string(BellLabel::PsiPlus);
  return device;
}

ChannelResult crystal_channel(const TwoPhotonState& state,
                              const TwoPhotonState& absorbed, double eta) {
  check_eta(eta);
  check_absorbed(absorbed);
  const Eigen::Vector4cd& a = absorbed.amplitudes();

  const double p_click = click_mass(state, a, eta);
  if (1.0 - p_click <= kBranchEpsilon) {
    return ChannelResult{p_click, zero_state(state.is_pure())};
  }
  if (state.is_pure()) {
    const Eigen::Vector4cd survivor = survive_pure(state.amplitudes(), a, eta);
    return ChannelResult{p_click, TwoPhotonState::pure(
                                      survivor / std::sqrt(1.0 - p_click))};
  }
  const Eigen::Matrix4cd survivor = survive_mixed(state.density(), a, eta);
  return ChannelResult{p_click,
                       TwoPhotonState::mixed(survivor / (1.0 - p_click))};
}

double OutcomeDistribution::probability(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) {
      return probabilities[i];
    }
  }
  throw std::invalid_argument("unknown outcome label: " + label);
}

OutcomeDistribution propagate_exact(const DeviceSpec& device,
                                    const TwoPhotonState& input) {
  device.validate();

  OutcomeDistribution result;
  result.labels = device.outcome_labels();
  result.probabilities.assign(result.labels.size(), 0.0);

  // The state is carried sub-normalized: its weight is the probability that
  // no detector has fired yet.
  TwoPhotonState state = input;
  std::size_t detector_index = 0;
  for (const StageSpec& stage : device.stages) {
    if (const auto* crystal = std::get_if<CrystalStage>(&stage)) {
      const Eigen::Vector4cd& a = crystal->absorbed.amplitudes();
      result.probabilities[detector_index++] +=
          click_mass(state, a, crystal->eta);
      state = survive(state, a, crystal->eta);
    } else if (std::get_if<PhotodetectorStage>(&stage)) {
      result.probabilities[detector_index++] += state.norm();
      state = zero_state(state.is_pure());
    } else if (std::get_if<RetarderBothStage>(&stage)) {
      state = quarter_wave_both(state);
    } else if (const auto* rotator = std::get_if<RotatorStage>(&stage)) {
      state = rotate_one(state, rotator->photon, rotator->angle);
    }
  }
  // Whatever survived the cascade fires the terminal photodetector when one
  // is present, and counts as no-click otherwise.
  const std::size_t exit_index =
      result.probabilities.size() - (device.terminal_label ? 2 : 1);
  result.probabilities[exit_index] += state.norm();
  return result;
}

OutcomeCounts propagate_monte_carlo(const DeviceSpec& device,
                                    const TwoPhotonState& input,
                                    std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("trial count must be at least 1");
  }
  device.validate();
  if (std::abs(input.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("Monte Carlo input state must be normalized");
  }

  OutcomeCounts result;
  result.labels = device.outcome_labels();
  result.counts.assign(result.labels.size(), 0);
  result.trials = trials;

  const std::size_t exit_index =
      result.labels.size() - (device.terminal_label ? 2 : 1);

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, trial);
    TwoPhotonState state = input;
    bool clicked = false;
    std::size_t detector_index = 0;

    for (const StageSpec& stage : device.stages) {
      if (const auto* crystal = std::get_if<CrystalStage>(&stage)) {
        const ChannelResult branch =
            crystal_channel(state, crystal->absorbed, crystal->eta);
        if (rng.uniform() < branch.p_click) {
          ++result.counts[detector_index];
          clicked = true;
          break;
        }
        state = branch.conditional;
        ++detector_index;
      } else if (std::get_if<PhotodetectorStage>(&stage)) {
        ++result.counts[detector_index];
        clicked = true;
        break;
      } else if (std::get_if<RetarderBothStage>(&stage)) {
        state = quarter_wave_both(state);
      } else if (const auto* rotator = std::get_if<RotatorStage>(&stage)) {
        state = rotate_one(state, rotator->photon, rotator->angle);
      }
    }
    if (!clicked) {
      ++result.counts[exit_index];
    }
  }
  return result;
}

double ConfusionMatrix::entry(BellLabel input, const std::string& column) const {
  const auto row_it = std::find(rows.begin(), rows.end(), input);
  const auto col_it = std::find(columns.begin(), columns.end(), column);
  if (col_it == columns.end()) {
    throw std::invalid_argument("unknown outcome label: " + column);
  }
  return entries(row_it - rows.begin(), col_it - columns.begin());
}

ConfusionMatrix confusion_matrix(const DeviceSpec& device) {
  ConfusionMatrix matrix;
  matrix.columns = device.outcome_labels();
  matrix.entries.resize(4, static_cast<Eigen::Index>(matrix.columns.size()));
  for (std::size_t row = 0; row < matrix.rows.size(); ++row) {
    const OutcomeDistribution distribution =
        propagate_exact(device, bell_state(matrix.rows[row]));
    for (std::size_t col = 0; col < distribution.probabilities.size(); ++col) {
      matrix.entries(static_cast<Eigen::Index>(row),
                     static_cast<Eigen::Index>(col)) =
          distribution.probabilities[col];
    }
  }
  return matrix;
}

}  // namespace bellscope
