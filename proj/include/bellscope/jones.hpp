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

#ifndef BELLSCOPE_JONES_HPP
#define BELLSCOPE_JONES_HPP

#include <Eigen/Dense>

#include "bellscope/two_photon_state.hpp"

namespace bellscope {

/// 2x2 unitary acting on one photon's polarization.
class JonesOperator {
public:
  /// Validates U^dag U = I within 1e-12; throws std::invalid_argument.
  explicit JonesOperator(const Eigen::Matrix2cd& matrix);

  static JonesOperator identity();

  /// Quarter-wave plate with fast axis along x: diag(1, i). Adds a pi/2 phase
  /// to the y component.
  static JonesOperator quarter_wave();

  /// Polarization rotation by `angle` radians:
  /// [[cos, -sin], [sin, cos]], so x rotates towards y for positive angles.
  static JonesOperator rotation(double angle);

  const Eigen::Matrix2cd& matrix() const { return matrix_; }

private:
  Eigen::Matrix2cd matrix_;
};

/// Applies op1 (x) op2 to the state. Pure states stay pure; density matrices
/// transform by conjugation. Norm is preserved.
TwoPhotonState apply_jones(const TwoPhotonState& state, const JonesOperator& op1,
                           const JonesOperator& op2);

/// Quarter-wave plates on both photons: diag(1, i) (x) diag(1, i). Swaps
/// Phi+ <-> Phi- and multiplies Psi+/- by the common phase i.
TwoPhotonState quarter_wave_both(const TwoPhotonState& state);

/// Rotates the polarization of photon `which` (1 or 2) by `angle` radians.
/// At angle pi/2 the Bell basis is permuted as {Psi+ <-> Phi-, Psi- <-> Phi+}
/// up to phases. Throws std::invalid_argument for any other photon index.
TwoPhotonState rotate_one(const TwoPhotonState& state, int which, double angle);

}  // namespace bellscope

#endif  // BELLSCOPE_JONES_HPP
