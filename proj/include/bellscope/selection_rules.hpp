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

#ifndef BELLSCOPE_SELECTION_RULES_HPP
#define BELLSCOPE_SELECTION_RULES_HPP

#include <complex>
#include <vector>

#include "bellscope/cg_table.hpp"
#include "bellscope/two_photon_state.hpp"

namespace bellscope {

/// Polarization part of the two-photon absorption amplitude into row m of
/// final irrep mu:
///
///   G_{mu m}(psi) = sum_{l,l'} A_{l l'}(psi) (mu m | l, l')
///
/// where A_{l l'} = sqrt(2) <l l'|psi> is the pair amplitude of the basis
/// component |l l'> including the exchange factor of the two photons, and is
/// zero whenever l or l' is z (the photons propagate along z). With this
/// convention the G1p factor is 2/sqrt(3) for (|xx> + |yy>)/sqrt(2) and 0
/// for (|xx> - |yy>)/sqrt(2) and the cross-polarized pair states: only the
/// Phi+ Bell state drives a G1p -> G1p transition.
///
/// Linear in the amplitudes of psi. Throws std::invalid_argument for mixed
/// states; imperfect-absorption statistics of mixed states are handled by
/// the device channel model.
std::complex<double> geometrical_factor(Irrep mu, int m,
                                        const TwoPhotonState& psi,
                                        const CGTable& cg);

/// Second-order energy denominator for an intermediate level at e_phi:
///
///   1/(e_phi - e0 - w1) +/- 1/(e_phi - e0 - w2)
///
/// in 1/eV, with + for Symmetric and - for Antisymmetric final irreps. The
/// antisymmetric combination vanishes for degenerate photons w1 == w2.
/// Throws ResonanceError when either photon is exactly resonant with the
/// intermediate level.
double energy_denominator(double e_phi, double e0, double w1, double w2,
                          SymmetryClass symmetry);

/// An intermediate level reached by one-photon absorption: its energy and the
/// product of reduced matrix elements <f||P||phi><phi||P||0>, treated as an
/// opaque complex input in arbitrary units.
struct IntermediateLevel {
  double energy_ev = 0.0;
  std::complex<double> matrix_element{1.0, 0.0};
};

/// A two-photon final level with its cubic-group irrep.
struct FinalLevel {
  Irrep irrep = Irrep::G1p;
  double energy_ev = 0.0;
};

/// Level scheme entering the two-photon absorption rate. The delta function
/// of the golden rule is replaced by a unit-normalized Gaussian lineshape of
/// width sigma (default 1 meV).
struct TransitionModel {
  double ground_energy_ev = 0.0;
  std::vector<IntermediateLevel> intermediates;
  std::vector<FinalLevel> finals;
  double sigma_ev = 1e-3;

  /// Checks sigma > 0 and all intermediate energies above the ground level.
  /// Throws std::invalid_argument on violation.
  void validate() const;
};

/// Relative two-photon absorption rate (arbitrary units, >= 0) for photons of
/// energies w1, w2 (eV):
///
///   sum_{f} | sum_m G_{mu_f m}(psi) sum_phi Lambda_phi^{+/-} M_phi |^2
///           * gauss(E_f - E0 - w1 - w2; sigma)
///
/// The +/- sign of each Lambda follows the symmetry class of the final
/// irrep. Invariant under a global phase of psi and quadratic under
/// amplitude scaling. Throws ResonanceError on an exactly resonant
/// intermediate level (the message names it) and std::invalid_argument for
/// mixed or invalid inputs.
double tpa_relative_rate(const TwoPhotonState& psi, const TransitionModel& model,
                         const CGTable& cg, double w1, double w2);

}  // namespace bellscope

#endif  // BELLSCOPE_SELECTION_RULES_HPP
