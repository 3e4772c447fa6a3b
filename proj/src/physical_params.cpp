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

#include "bellscope/physical_params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bellscope {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be positive, got " +
                                std::to_string(value));
  }
}

}  // namespace

void CavityParams::validate() const {
  require_positive(photon_energy_ev, "photon energy");
  require_positive(refractive_index, "refractive index");
  require_positive(tpa_coefficient_m_per_w, "TPA coefficient");
  require_positive(mode_volume_m3, "mode volume");
  if (cavity_lifetime_s) {
    require_positive(*cavity_lifetime_s, "cavity lifetime");
  }
}

CavityParams cucl_preset() {
  CavityParams params;
  params.photon_energy_ev = 3.186;
  params.refractive_index = 3.0;
  params.tpa_coefficient_m_per_w = 0.1e-2;  // 0.1 cm/W
  params.mode_volume_m3 = 1e-18;            // 1 um^3
  return params;
}

TpaRateResult tpa_rate(const CavityParams& params) {
  params.validate();
  const double photon_energy_j =
      params.photon_energy_ev * constants::kElectronVolt;
  const double n2 = params.refractive_index * params.refractive_index;

  TpaRateResult result;
  result.rate_per_s = constants::kSpeedOfLight * constants::kSpeedOfLight *
                      params.tpa_coefficient_m_per_w * photon_energy_j /
                      (n2 * n2 * params.mode_volume_m3);
  result.field_v_per_m =
      std::sqrt(photon_energy_j /
                (n2 * constants::kVacuumPermittivity * params.mode_volume_m3));
  return result;
}

CavityQResult required_q(const CavityParams& params) {
  const double alpha = tpa_rate(params).rate_per_s;

  CavityQResult result;
  result.tau_min_s = 1.0 / alpha;
  result.omega_rad_per_s =
      params.photon_energy_ev * constants::kElectronVolt / constants::kHbar;
  result.q = result.omega_rad_per_s * result.tau_min_s;
  return result;
}

double absorption_efficiency(const CavityParams& params) {
  if (!params.cavity_lifetime_s) {
    throw std::invalid_argument(
        "absorption efficiency requires the cavity lifetime");
  }
  const double alpha = tpa_rate(params).rate_per_s;
  return alpha / (alpha + 1.0 / *params.cavity_lifetime_s);
}

ResonanceResult check_resonance(const ResonanceCheck& check) {
  if (!(check.tolerance_ev > 0.0)) {
    throw std::invalid_argument("resonance tolerance must be positive");
  }
  ResonanceResult result;
  result.resonant_pair =
      std::abs(check.w1_ev + check.w2_ev - check.transition_energy_ev) <=
      check.tolerance_ev;
  result.degenerate_single_source_resonant =
      std::abs(2.0 * check.w1_ev - check.transition_energy_ev) <=
          check.tolerance_ev ||
      std::abs(2.0 * check.w2_ev - check.transition_energy_ev) <=
          check.tolerance_ev;
  return result;
}

}  // namespace bellscope
