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

#ifndef BELLSCOPE_PHYSICAL_PARAMS_HPP
#define BELLSCOPE_PHYSICAL_PARAMS_HPP

#include <optional>

namespace bellscope {

// CODATA 2018 values, frozen for bit-reproducible outputs.
namespace constants {
inline constexpr double kSpeedOfLight = 299792458.0;            // m/s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12; // F/m
inline constexpr double kHbar = 1.054571817e-34;                // J s
inline constexpr double kElectronVolt = 1.602176634e-19;        // J
}  // namespace constants

/// Cavity and material parameters for the two-photon absorption rate
/// estimate. All quantities are stored in the units noted below; the JSON
/// loader converts from explicitly tagged input units.
struct CavityParams {
  double photon_energy_ev = 0.0;       // eV
  double refractive_index = 0.0;       // dimensionless
  double tpa_coefficient_m_per_w = 0.0; // m/W
  double mode_volume_m3 = 0.0;         // m^3
  std::optional<double> cavity_lifetime_s;

  /// All quantities strictly positive; throws std::invalid_argument.
  void validate() const;
};

/// CuCl biexciton resonance: photon energy 3.186 eV, n = 3, beta = 0.1 cm/W,
/// V = 1 um^3. No cavity lifetime is assumed.
CavityParams cucl_preset();

struct TpaRateResult {
  double rate_per_s = 0.0;       // alpha = c^2 beta hbar omega / (n^4 V)
  double field_v_per_m = 0.0;    // E = sqrt(hbar omega / (n^2 eps0 V))
};

/// Cavity-enhanced two-photon absorption rate and the single-photon
/// intra-cavity field, in SI units.
TpaRateResult tpa_rate(const CavityParams& params);

struct CavityQResult {
  double tau_min_s = 0.0;         // 1 / alpha
  double omega_rad_per_s = 0.0;   // photon angular frequency
  double q = 0.0;                 // omega * tau_min = omega / alpha
};

/// Minimum cavity photon lifetime for efficient absorption (tau_min = 1/alpha)
/// and the corresponding quality factor Q = omega * tau_min.
CavityQResult required_q(const CavityParams& params);

/// Branching ratio of absorption against cavity decay,
/// eta = alpha / (alpha + 1/tau_c). Maps cavity parameters onto the device
/// crystal efficiency. Requires cavity_lifetime_s; throws
/// std::invalid_argument when it is missing.
double absorption_efficiency(const CavityParams& params);

/// Photon-pair energies against a two-photon transition energy.
struct ResonanceCheck {
  double w1_ev = 0.0;
  double w2_ev = 0.0;
  double transition_energy_ev = 0.0;
  double tolerance_ev = 1e-3;
};

struct ResonanceResult {
  /// |w1 + w2 - dE| <= tol: the pair drives the two-photon transition.
  bool resonant_pair = false;
  /// |2 w1 - dE| <= tol or |2 w2 - dE| <= tol: two photons taken from a
  /// single source would also be resonant, so nondegenerate operation does
  /// not reject same-source pairs.
  bool degenerate_single_source_resonant = false;
};

ResonanceResult check_resonance(const ResonanceCheck& check);

}  // namespace bellscope

#endif  // BELLSCOPE_PHYSICAL_PARAMS_HPP
