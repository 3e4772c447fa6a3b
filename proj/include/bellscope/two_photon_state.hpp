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

#ifndef BELLSCOPE_TWO_PHOTON_STATE_HPP
#define BELLSCOPE_TWO_PHOTON_STATE_HPP

#include <complex>
#include <variant>

#include <Eigen/Dense>

#include "bellscope/bell.hpp"

namespace bellscope {

/// Linear polarization of a single photon. Photons propagate along z, so the
/// polarization space is spanned by x and y.
enum class Pol : int { X = 0, Y = 1 };

/// Index of the two-photon basis component |l l'>. The basis ordering is
/// fixed as (xx, xy, yx, yy); every amplitude vector and density matrix in
/// this library uses it, including serialized forms.
constexpr int basis_index(Pol first, Pol second) {
  return 2 * static_cast<int>(first) + static_cast<int>(second);
}

/// A state of the two-photon polarization space, either a pure amplitude
/// vector or a density matrix. States may be sub-normalized: the total weight
/// (squared norm of the amplitudes, or the trace of the density matrix) can
/// be below one, which is how conditional post-non-absorption states are
/// carried through a device.
class TwoPhotonState {
public:
  /// Wraps a pure state. Requires |a|^2 <= 1 + 1e-6.
  static TwoPhotonState pure(const Eigen::Vector4cd& amplitudes);

  /// Wraps a mixed state. The matrix must be Hermitian within 1e-12, have
  /// eigenvalues >= -1e-12, and trace <= 1 + 1e-6.
  static TwoPhotonState mixed(const Eigen::Matrix4cd& density);

  bool is_pure() const { return std::holds_alternative<Eigen::Vector4cd>(rep_); }

  /// Amplitudes in the (xx, xy, yx, yy) order. Throws if the state is mixed.
  const Eigen::Vector4cd& amplitudes() const;

  /// Density matrix; |psi><psi| when the state is pure.
  Eigen::Matrix4cd density() const;

  /// Total probability weight: sum |a_i|^2 for pure states, trace for mixed.
  double norm() const;

private:
  explicit TwoPhotonState(Eigen::Vector4cd amplitudes);
  explicit TwoPhotonState(Eigen::Matrix4cd density);

  std::variant<Eigen::Vector4cd, Eigen::Matrix4cd> rep_;
};

/// The normalized Bell state for the given label:
///   Phi+/- = (|xx> +/- |yy>) / sqrt(2)
///   Psi+/- = (|xy> +/- |yx>) / sqrt(2)
TwoPhotonState bell_state(BellLabel label);

/// Inner product <a|b> of two pure states. Throws std::invalid_argument if
/// either state is mixed; use state_fidelity for density matrices.
std::complex<double> overlap(const TwoPhotonState& a, const TwoPhotonState& b);

/// Tr(rho_a rho_b). For two pure states this equals |<a|b>|^2.
double state_fidelity(const TwoPhotonState& a, const TwoPhotonState& b);

}  // namespace bellscope

#endif  // BELLSCOPE_TWO_PHOTON_STATE_HPP
