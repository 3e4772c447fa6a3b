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

#include "bellscope/quantum_dot.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace bellscope {

namespace {

constexpr double kNormSlack = 1e-6;

Eigen::Vector4cd absorbed_amplitudes() {
  return qd_bell_state(BellLabel::PsiPlus).amplitudes();
}

}  // namespace

DotPhotonState DotPhotonState::pure(const Eigen::Vector4cd& amplitudes) {
  const double weight = amplitudes.squaredNorm();
  if (weight > 1.0 + kNormSlack) {
    throw std::invalid_argument(
        "dot-photon state weight " + std::to_string(weight) + " exceeds 1");
  }
  return DotPhotonState(amplitudes);
}

DotPhotonState qd_bell_state(BellLabel label) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd a = Eigen::Vector4cd::Zero();
  switch (label) {
    case BellLabel::PhiPlus:   // (up s+  +  down s-) / sqrt(2)
      a(0) = s;
      a(3) = s;
      break;
    case BellLabel::PhiMinus:
      a(0) = s;
      a(3) = -s;
      break;
    case BellLabel::PsiPlus:   // (up s-  +  down s+) / sqrt(2)
      a(1) = s;
      a(2) = s;
      break;
    case BellLabel::PsiMinus:
      a(1) = s;
      a(2) = -s;
      break;
  }
  return DotPhotonState::pure(a);
}

DotPhotonState qd_pi_retarder(const DotPhotonState& state) {
  const Eigen::Vector4cd& a = state.amplitudes();
  Eigen::Vector4cd out;
  out << a(1), a(0), a(3), a(2);
  return DotPhotonState::pure(out);
}

DotPhotonState qd_half_pi_rotator(const DotPhotonState& state) {
  const Eigen::Vector4cd& a = state.amplitudes();
  Eigen::Vector4cd out;
  out << a(0), -a(1), a(2), -a(3);
  return DotPhotonState::pure(out);
}

DotPassResult dot_pass(const DotPhotonState& state, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("dot efficiency must lie in [0, 1], got " +
                                std::to_string(eta));
  }
  const Eigen::Vector4cd absorbed = absorbed_amplitudes();
  const std::complex<double> component = absorbed.dot(state.amplitudes());

  DotPassResult result;
  result.p_click = eta * std::norm(component);
  const Eigen::Vector4cd survivor =
      state.amplitudes() + (std::sqrt(1.0 - eta) - 1.0) * component * absorbed;
  if (1.0 - result.p_click <= 1e-15) {
    result.conditional = DotPhotonState::pure(Eigen::Vector4cd::Zero());
  } else {
    result.conditional =
        DotPhotonState::pure(survivor / std::sqrt(1.0 - result.p_click));
  }
  return result;
}

void PassSchedule::validate() const {
  std::set<int> ids;
  for (const PassElement& element : elements) {
    if (const auto* pass = std::get_if<DotPassElement>(&element)) {
      if (!ids.insert(pass->pass_id).second) {
        throw std::invalid_argument("duplicate pass id " +
                                    std::to_string(pass->pass_id));
      }
    }
  }
  if (ids.size() > 4) {
    throw std::invalid_argument("a schedule may hold at most four passes");
  }
}

std::vector<int> PassSchedule::pass_ids() const {
  std::vector<int> ids;
  for (const PassElement& element : elements) {
    if (const auto* pass = std::get_if<DotPassElement>(&element)) {
      ids.push_back(pass->pass_id);
    }
  }
  return ids;
}

PassSchedule four_pass_schedule() {
  PassSchedule schedule;
  schedule.elements = {
      DotPassElement{1},      HalfPiRotatorElement{}, DotPassElement{2},
      HalfPiRotatorElement{}, PiRetarderElement{},    DotPassElement{3},
      HalfPiRotatorElement{}, DotPassElement{4},
  };
  return schedule;
}

OutcomeDistribution qd_propagate_exact(const PassSchedule& schedule,
                                       const DotPhotonState& input,
                                       double eta) {
  schedule.validate();

  OutcomeDistribution result;
  for (int id : schedule.pass_ids()) {
    result.labels.push_back("pass" + std::to_string(id));
  }
  result.labels.push_back(kNoClickLabel);
  result.probabilities.assign(result.labels.size(), 0.0);

  // Same sub-normalized bookkeeping as the crystal cascade: the amplitude
  // weight is the probability that no pass has absorbed the photon yet.
  const Eigen::Vector4cd absorbed = absorbed_amplitudes();
  Eigen::Vector4cd amplitudes = input.amplitudes();
  std::size_t pass_index = 0;
  for (const PassElement& element : schedule.elements) {
    if (std::get_if<DotPassElement>(&element)) {
      const std::complex<double> component = absorbed.dot(amplitudes);
      result.probabilities[pass_index++] += eta * std::norm(component);
      amplitudes += (std::sqrt(1.0 - eta) - 1.0) * component * absorbed;
    } else if (std::get_if<PiRetarderElement>(&element)) {
      amplitudes = qd_pi_retarder(DotPhotonState::pure(amplitudes)).amplitudes();
    } else {
      amplitudes =
          qd_half_pi_rotator(DotPhotonState::pure(amplitudes)).amplitudes();
    }
  }
  result.probabilities.back() += amplitudes.squaredNorm();
  return result;
}

FourPassProtocol four_pass_protocol(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("dot efficiency must lie in [0, 1], got " +
                                std::to_string(eta));
  }
  FourPassProtocol protocol;
  protocol.schedule = four_pass_schedule();

  ConfusionMatrix& matrix = protocol.confusion;
  const OutcomeDistribution probe = qd_propagate_exact(
      protocol.schedule, qd_bell_state(BellLabel::PhiPlus), eta);
  matrix.columns = probe.labels;
  matrix.entries.resize(4, static_cast<Eigen::Index>(matrix.columns.size()));
  for (std::size_t row = 0; row < matrix.rows.size(); ++row) {
    const OutcomeDistribution distribution = qd_propagate_exact(
        protocol.schedule, qd_bell_state(matrix.rows[row]), eta);
    for (std::size_t col = 0; col < distribution.probabilities.size(); ++col) {
      matrix.entries(static_cast<Eigen::Index>(row),
                     static_cast<Eigen::Index>(col)) =
          distribution.probabilities[col];
    }
  }
  return protocol;
}

}  // namespace bellscope
