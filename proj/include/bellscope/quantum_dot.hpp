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

#ifndef BELLSCOPE_QUANTUM_DOT_HPP
#define BELLSCOPE_QUANTUM_DOT_HPP

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "bellscope/bell.hpp"
#include "bellscope/device.hpp"

namespace bellscope {

/// Joint state of an electron-hole pair in a quantum dot and one photon, in
/// the fixed basis (up s+, up s-, down s+, down s-): up/down are the pair
/// spin states and s+/- the circular photon polarizations. Amplitudes may be
/// sub-normalized to carry conditional post-non-absorption weight.
class DotPhotonState {
public:
  static DotPhotonState pure(const Eigen::Vector4cd& amplitudes);

  const Eigen::Vector4cd& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.squaredNorm(); }

private:
  explicit DotPhotonState(Eigen::Vector4cd amplitudes)
      : amplitudes_(std::move(amplitudes)) {}

  Eigen::Vector4cd amplitudes_;
};

/// Bell states of the pair-photon system:
///   Phi+/- = (|up s+> +/- |down s->) / sqrt(2)
///   Psi+/- = (|up s-> +/- |down s+>) / sqrt(2)
DotPhotonState qd_bell_state(BellLabel label);

/// Half-wave plate on the photon: swaps s+ <-> s-. Interchanges the Phi and
/// Psi Bell states, preserving the sign.
DotPhotonState qd_pi_retarder(const DotPhotonState& state);

/// pi/2 polarization rotator on the photon: relative phase -1 between s+
/// and s- (diag(1, -1)). Flips the Bell-state signs, Phi+/- <-> Phi-/+ and
/// Psi+/- <-> Psi-/+.
DotPhotonState qd_half_pi_rotator(const DotPhotonState& state);

struct DotPassResult {
  double p_click = 0.0;
  DotPhotonState conditional = qd_bell_state(BellLabel::PhiPlus);
};

/// One pass of the beam through the dot. Pauli blocking lets the dot absorb
/// only the Psi+ component, with efficiency eta; the channel is the same
/// two-outcome Kraus pair as a crystal with absorbed state Psi+. The
/// conditional state is renormalized, matching crystal_channel.
DotPassResult dot_pass(const DotPhotonState& state, double eta);

struct PiRetarderElement {};
struct HalfPiRotatorElement {};
struct DotPassElement {
  int pass_id = 0;
};

using PassElement =
    std::variant<PiRetarderElement, HalfPiRotatorElement, DotPassElement>;

/// Ordered pass-and-transform schedule. Pass ids must be unique and at most
/// four passes are allowed.
struct PassSchedule {
  std::vector<PassElement> elements;

  void validate() const;
  std::vector<int> pass_ids() const;
};

/// The discrimination schedule
///   pass 1 -> rotator -> pass 2 -> rotator -> retarder -> pass 3
///   -> rotator -> pass 4
/// under which, at eta = 1, Psi+ clicks at pass 1, Psi- at pass 2, Phi+ at
/// pass 3 and Phi- at pass 4.
PassSchedule four_pass_schedule();

/// Outcome distribution of a schedule for one input, over pass ids plus
/// no-click. Column labels are "pass<N>".
OutcomeDistribution qd_propagate_exact(const PassSchedule& schedule,
                                       const DotPhotonState& input, double eta);

struct FourPassProtocol {
  PassSchedule schedule;
  ConfusionMatrix confusion;
};

/// Builds four_pass_schedule() and its confusion matrix over the four Bell
/// inputs at dot efficiency eta.
FourPassProtocol four_pass_protocol(double eta);

}  // namespace bellscope

#endif  // BELLSCOPE_QUANTUM_DOT_HPP
