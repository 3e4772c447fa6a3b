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

#include "bellscope/selection_rules.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bellscope/errors.hpp"

namespace bellscope {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double gaussian(double x, double sigma) {
  return std::exp(-0.5 * (x / sigma) * (x / sigma)) /
         (sigma * std::sqrt(kTwoPi));
}

}  // namespace

std::complex<double> geometrical_factor(Irrep mu, int m,
                                        const TwoPhotonState& psi,
                                        const CGTable& cg) {
  if (!psi.is_pure()) {
    throw std::invalid_argument(
        "geometrical factor is defined for pure states; mixed states go "
        "through the device channel model");
  }
  const Eigen::Vector4cd& a = psi.amplitudes();
  const double sqrt2 = std::sqrt(2.0);
  std::complex<double> g = 0.0;
  // z-polarized components are absent for photons propagating along z, so
  // only the 2x2 (l, l') block over {x, y} contributes.
  for (int l = 0; l < 2; ++l) {
    for (int lp = 0; lp < 2; ++lp) {
      g += sqrt2 * a(2 * l + lp) * cg.coefficient(mu, m, l, lp);
    }
  }
  return g;
}

double energy_denominator(double e_phi, double e0, double w1, double w2,
                          SymmetryClass symmetry) {
  const double d1 = e_phi - e0 - w1;
  const double d2 = e_phi - e0 - w2;
  if (d1 == 0.0 || d2 == 0.0) {
    throw ResonanceError("photon energy " + std::to_string(d1 == 0.0 ? w1 : w2) +
                         " eV is resonant with the intermediate level at " +
                         std::to_string(e_phi) + " eV");
  }
  const double sign = symmetry == SymmetryClass::Symmetric ? 1.0 : -1.0;
  return 1.0 / d1 + sign / d2;
}

void TransitionModel::validate() const {
  if (sigma_ev <= 0.0) {
    throw std::invalid_argument("lineshape width sigma must be positive");
  }
  for (const IntermediateLevel& level : intermediates) {
    if (level.energy_ev <= ground_energy_ev) {
      throw std::invalid_argument(
          "intermediate level at " + std::to_string(level.energy_ev) +
          " eV is not above the ground level");
    }
  }
}

double tpa_relative_rate(const TwoPhotonState& psi, const TransitionModel& model,
                         const CGTable& cg, double w1, double w2) {
  model.validate();
  if (w1 <= 0.0 || w2 <= 0.0) {
    throw std::invalid_argument("photon energies must be positive");
  }
  if (!psi.is_pure()) {
    throw std::invalid_argument(
        "tpa_relative_rate is defined for pure states; mixed states go "
        "through the device channel model");
  }

  double rate = 0.0;
  for (const FinalLevel& final : model.finals) {
    const SymmetryClass symmetry = symmetry_class(final.irrep);

    std::complex<double> ladder = 0.0;
    for (std::size_t i = 0; i < model.intermediates.size(); ++i) {
      const IntermediateLevel& phi = model.intermediates[i];
      try {
        ladder += energy_denominator(phi.energy_ev, model.ground_energy_ev, w1,
                                     w2, symmetry) *
                  phi.matrix_element;
      } catch (const ResonanceError&) {
        throw ResonanceError("intermediate level " + std::to_string(i) +
                             " at " + std::to_string(phi.energy_ev) +
                             " eV is exactly resonant");
      }
    }

    std::complex<double> amplitude = 0.0;
    for (int m = 0; m < dimension(final.irrep); ++m) {
      amplitude += geometrical_factor(final.irrep, m, psi, cg) * ladder;
    }

    const double detuning =
        final.energy_ev - model.ground_energy_ev - w1 - w2;
    rate += std::norm(amplitude) * gaussian(detuning, model.sigma_ev);
  }
  return rate;
}

}  // namespace bellscope
