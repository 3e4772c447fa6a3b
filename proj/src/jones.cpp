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

#include "bellscope/jones.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace bellscope {

namespace {

constexpr double kUnitaryTol = 1e-12;

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

JonesOperator::JonesOperator(const Eigen::Matrix2cd& matrix) : matrix_(matrix) {
  const Eigen::Matrix2cd gram = matrix.adjoint() * matrix;
  if ((gram - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > kUnitaryTol) {
    throw std::invalid_argument("Jones operator is not unitary");
  }
}

JonesOperator JonesOperator::identity() {
  return JonesOperator(Eigen::Matrix2cd::Identity());
}

JonesOperator JonesOperator::quarter_wave() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = std::complex<double>(0.0, 1.0);
  return JonesOperator(m);
}

JonesOperator JonesOperator::rotation(double angle) {
  Eigen::Matrix2cd m;
  m << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return JonesOperator(m);
}

TwoPhotonState apply_jones(const TwoPhotonState& state, const JonesOperator& op1,
                           const JonesOperator& op2) {
  const Eigen::Matrix4cd u = kron2(op1.matrix(), op2.matrix());
  if (state.is_pure()) {
    return TwoPhotonState::pure(u * state.amplitudes());
  }
  return TwoPhotonState::mixed(u * state.density() * u.adjoint());
}

TwoPhotonState quarter_wave_both(const TwoPhotonState& state) {
  return apply_jones(state, JonesOperator::quarter_wave(),
                     JonesOperator::quarter_wave());
}

TwoPhotonState rotate_one(const TwoPhotonState& state, int which, double angle) {
  if (which != 1 && which != 2) {
    throw std::invalid_argument("photon index must be 1 or 2, got " +
                                std::to_string(which));
  }
  const JonesOperator rot = JonesOperator::rotation(angle);
  const JonesOperator id = JonesOperator::identity();
  return which == 1 ? apply_jones(state, rot, id) : apply_jones(state, id, rot);
}

}  // namespace bellscope
