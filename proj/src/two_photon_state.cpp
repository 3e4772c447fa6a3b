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

#include "bellscope/two_photon_state.hpp"

#include <cmath>
#include <stdexcept>

namespace bellscope {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kEigenvalueTol = 1e-12;
constexpr double kNormSlack = 1e-6;

}  // namespace

TwoPhotonState::TwoPhotonState(Eigen::Vector4cd amplitudes)
    : rep_(std::move(amplitudes)) {}

TwoPhotonState::TwoPhotonState(Eigen::Matrix4cd density)
    : rep_(std::move(density)) {}

TwoPhotonState TwoPhotonState::pure(const Eigen::Vector4cd& amplitudes) {
  const double weight = amplitudes.squaredNorm();
  if (weight > 1.0 + kNormSlack) {
    throw std::invalid_argument(
        "pure state weight " + std::to_string(weight) + " exceeds 1");
  }
  return TwoPhotonState(amplitudes);
}

TwoPhotonState TwoPhotonState::mixed(const Eigen::Matrix4cd& density) {
  if ((density - density.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(density,
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kEigenvalueTol) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
  const double trace = density.trace().real();
  if (trace > 1.0 + kNormSlack) {
    throw std::invalid_argument(
        "density matrix trace " + std::to_string(trace) + " exceeds 1");
  }
  return TwoPhotonState(density);
}

const Eigen::Vector4cd& TwoPhotonState::amplitudes() const {
  if (!is_pure()) {
    throw std::invalid_argument("state is mixed; it has no amplitude vector");
  }
  return std::get<Eigen::Vector4cd>(rep_);
}

Eigen::Matrix4cd TwoPhotonState::density() const {
  if (is_pure()) {
    const auto& a = std::get<Eigen::Vector4cd>(rep_);
    return a * a.adjoint();
  }
  return std::get<Eigen::Matrix4cd>(rep_);
}

double TwoPhotonState::norm() const {
  if (is_pure()) {
    return std::get<Eigen::Vector4cd>(rep_).squaredNorm();
  }
  return std::get<Eigen::Matrix4cd>(rep_).trace().real();
}

TwoPhotonState bell_state(BellLabel label) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd a = Eigen::Vector4cd::Zero();
  switch (label) {
    case BellLabel::PhiPlus:
      a(basis_index(Pol::X, Pol::X)) = s;
      a(basis_index(Pol::Y, Pol::Y)) = s;
      break;
    case BellLabel::PhiMinus:
      a(basis_index(Pol::X, Pol::X)) = s;
      a(basis_index(Pol::Y, Pol::Y)) = -s;
      break;
    case BellLabel::PsiPlus:
      a(basis_index(Pol::X, Pol::Y)) = s;
      a(basis_index(Pol::Y, Pol::X)) = s;
      break;
    case BellLabel::PsiMinus:
      a(basis_index(Pol::X, Pol::Y)) = s;
      a(basis_index(Pol::Y, Pol::X)) = -s;
      break;
  }
  return TwoPhotonState::pure(a);
}

std::complex<double> overlap(const TwoPhotonState& a, const TwoPhotonState& b) {
  if (!a.is_pure() || !b.is_pure()) {
    throw std::invalid_argument(
        "overlap requires pure states; use state_fidelity for mixed states");
  }
  return a.amplitudes().dot(b.amplitudes());
}

double state_fidelity(const TwoPhotonState& a, const TwoPhotonState& b) {
  return (a.density() * b.density()).trace().real();
}

std::string to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus:
      return "PhiPlus";
    case BellLabel::PhiMinus:
      return "PhiMinus";
    case BellLabel::PsiPlus:
      return "PsiPlus";
    case BellLabel::PsiMinus:
      return "PsiMinus";
  }
  throw std::invalid_argument("unknown Bell label");
}

BellLabel bell_label_from_string(const std::string& name) {
  for (BellLabel label : kAllBellLabels) {
    if (to_string(label) == name) {
      return label;
    }
  }
  throw std::invalid_argument("unknown Bell label: " + name);
}

}  // namespace bellscope
