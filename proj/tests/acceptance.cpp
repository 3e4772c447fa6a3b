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

// End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
// exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bellscope/device.hpp"
#include "bellscope/physical_params.hpp"
#include "bellscope/quantum_dot.hpp"
#include "bellscope/selection_rules.hpp"
#include "oracles.hpp"

using namespace bellscope;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool passed,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", passed ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  if (!passed) {
    ++failures;
  }
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3g", value);
  return buffer;
}

// 1. The G1p geometrical factor separates Phi+ from the other Bell states.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const CGTable cg = build_cg_table();

  const double phi_plus = std::abs(
      geometrical_factor(Irrep::G1p, 0, bell_state(BellLabel::PhiPlus), cg) -
      2.0 / std::sqrt(3.0));
  double others = 0.0;
  for (BellLabel label :
       {BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus}) {
    others = std::max(others, std::abs(geometrical_factor(
                                  Irrep::G1p, 0, bell_state(label), cg)));
  }
  const double elapsed = seconds_since(start);
  report(1, "selection-rule exactness",
         phi_plus < 1e-12 && others < 1e-12 && elapsed < 1.0,
         "|G(Phi+) - 2/sqrt(3)| = " + fmt(phi_plus) +
             ", max|G(other)| = " + fmt(others) + ", " + fmt(elapsed) + " s");
}

// 2. Retarder and rotator transformation identities via squared overlaps.
void criterion_2() {
  const double half_pi = 1.5707963267948966;
  double worst = 0.0;
  const auto check = [&](const TwoPhotonState& out, BellLabel target) {
    worst = std::max(worst,
                     std::abs(std::norm(overlap(bell_state(target), out)) - 1.0));
  };
  check(quarter_wave_both(bell_state(BellLabel::PhiMinus)), BellLabel::PhiPlus);
  check(quarter_wave_both(bell_state(BellLabel::PsiPlus)), BellLabel::PsiPlus);
  check(quarter_wave_both(bell_state(BellLabel::PsiMinus)), BellLabel::PsiMinus);
  check(rotate_one(bell_state(BellLabel::PsiPlus), 1, half_pi),
        BellLabel::PhiMinus);
  check(rotate_one(bell_state(BellLabel::PsiMinus), 1, half_pi),
        BellLabel::PhiPlus);
  check(rotate_one(bell_state(BellLabel::PhiPlus), 1, half_pi),
        BellLabel::PsiMinus);
  check(rotate_one(bell_state(BellLabel::PhiMinus), 1, half_pi),
        BellLabel::PsiPlus);
  report(2, "transformation identities", worst < 1e-12,
         "max |overlap^2 - 1| = " + fmt(worst));
}

// 3. The eta = 1 cascade discriminates every Bell state with certainty.
void criterion_3() {
  const std::map<BellLabel, std::string> assignment = {
      {BellLabel::PhiPlus, "1"},
      {BellLabel::PhiMinus, "2"},
      {BellLabel::PsiMinus, "3"},
      {BellLabel::PsiPlus, "4"},
  };
  const ConfusionMatrix matrix = confusion_matrix(standard_device(1.0));
  double worst = 0.0;
  for (BellLabel input : kAllBellLabels) {
    for (const std::string& column : matrix.columns) {
      const double expected = column == assignment.at(input) ? 1.0 : 0.0;
      worst = std::max(worst,
                       std::abs(matrix.entry(input, column) - expected));
    }
  }
  report(3, "complete discrimination oracle", worst < 1e-12,
         "max deviation from identity = " + fmt(worst));
}

// 4. The three-crystal shortcut mislabels each other input as Psi+ with
// probability exactly 1 - eta.
void criterion_4() {
  double worst = 0.0;
  for (double eta : {0.25, 0.5, 0.9}) {
    const ConfusionMatrix matrix = confusion_matrix(shortcut_device(eta));
    for (BellLabel input :
         {BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiMinus}) {
      worst = std::max(
          worst, std::abs(matrix.entry(input, "PsiPlus") - (1.0 - eta)));
    }
  }
  report(4, "error-mode reproduction", worst < 1e-12,
         "max |p(false Psi+) - (1 - eta)| = " + fmt(worst));
}

// 5. Cavity feasibility numbers against the independent unit conversion and
// the order-of-magnitude anchors.
void criterion_5() {
  const auto reference = oracles::independent_cucl_numbers();
  const TpaRateResult rate = tpa_rate(cucl_preset());
  const CavityQResult quality = required_q(cucl_preset());

  const double oracle_gap = std::max(
      {std::abs(rate.rate_per_s - reference.alpha_per_s) / reference.alpha_per_s,
       std::abs(quality.tau_min_s - reference.tau_min_s) / reference.tau_min_s,
       std::abs(quality.q - reference.q) / reference.q});
  const bool anchors =
      std::abs(rate.rate_per_s - 6e11) / 6e11 < 0.10 &&
      std::abs(quality.tau_min_s - 1.7e-12) / 1.7e-12 < 0.15 &&
      std::abs(quality.q - 8e3) / 8e3 < 0.15;
  report(5, "physical numbers", oracle_gap < 1e-12 && anchors,
         "alpha = " + fmt(rate.rate_per_s) + "/s, tau = " +
             fmt(quality.tau_min_s) + " s, Q = " + fmt(quality.q) +
             ", oracle gap = " + fmt(oracle_gap));
}

// 6. The frozen coupling table is orthogonal and spans the same per-irrep
// subspaces as the projection operators.
void criterion_6() {
  const CGTable cg = build_cg_table();
  const double unitarity =
      (cg.matrix() * cg.matrix().transpose() -
       Eigen::Matrix<double, 9, 9>::Identity())
          .cwiseAbs()
          .maxCoeff();
  double subspace = 0.0;
  for (Irrep mu : kProductIrreps) {
    Eigen::Matrix<double, 9, 9> from_table =
        Eigen::Matrix<double, 9, 9>::Zero();
    for (int m = 0; m < dimension(mu); ++m) {
      const auto row = cg.matrix().row(CGTable::row_offset(mu) + m);
      from_table += row.transpose() * row;
    }
    subspace = std::max(subspace, (from_table - oracles::projection_operator(mu))
                                      .cwiseAbs()
                                      .maxCoeff());
  }
  report(6, "coupling table soundness", unitarity < 1e-12 && subspace < 1e-10,
         "unitarity = " + fmt(unitarity) + ", subspace distance = " +
             fmt(subspace));
}

// 7. Monte Carlo frequencies against the exact distribution, 4-sigma bounds.
void criterion_7() {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t trials = 100000;
  const DeviceSpec device = standard_device(0.7);
  double worst_sigma = 0.0;
  for (BellLabel input : kAllBellLabels) {
    const OutcomeDistribution exact =
        propagate_exact(device, bell_state(input));
    const OutcomeCounts counts =
        propagate_monte_carlo(device, bell_state(input), trials, 20260810);
    for (std::size_t k = 0; k < exact.probabilities.size(); ++k) {
      const double p = exact.probabilities[k];
      const double sigma =
          std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
      const double gap = std::abs(static_cast<double>(counts.counts[k]) /
                                      static_cast<double>(trials) -
                                  p);
      if (sigma > 0.0) {
        worst_sigma = std::max(worst_sigma, gap / sigma);
      } else if (gap > 0.0) {
        worst_sigma = 1e9;
      }
    }
  }
  const double elapsed = seconds_since(start);
  report(7, "Monte Carlo consistency", worst_sigma <= 4.0 && elapsed < 10.0,
         "worst deviation = " + fmt(worst_sigma) + " sigma, " + fmt(elapsed) +
             " s");
}

// 8. The four-pass dot protocol discriminates every input, Psi+ first.
void criterion_8() {
  const std::map<BellLabel, std::string> assignment = {
      {BellLabel::PsiPlus, "pass1"},
      {BellLabel::PsiMinus, "pass2"},
      {BellLabel::PhiPlus, "pass3"},
      {BellLabel::PhiMinus, "pass4"},
  };
  const FourPassProtocol protocol = four_pass_protocol(1.0);
  double worst = 0.0;
  for (BellLabel input : kAllBellLabels) {
    for (const std::string& column : protocol.confusion.columns) {
      const double expected = column == assignment.at(input) ? 1.0 : 0.0;
      worst = std::max(
          worst, std::abs(protocol.confusion.entry(input, column) - expected));
    }
  }
  const double psi_plus_first =
      protocol.confusion.entry(BellLabel::PsiPlus, "pass1");
  report(8, "quantum-dot protocol", worst < 1e-12 && psi_plus_first > 0.5,
         "max deviation = " + fmt(worst) + ", p(Psi+ at pass 1) = " +
             fmt(psi_plus_first));
}

// 9. The factored absorption rate equals the unfactorized nested-loop sum.
void criterion_9() {
  const CGTable cg = build_cg_table();
  std::mt19937_64 rng(90210);
  std::uniform_real_distribution<double> uniform(0.1, 1.0);
  std::normal_distribution<double> normal;

  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    TransitionModel model;
    model.intermediates = {
        {1.7 + uniform(rng), {normal(rng), normal(rng)}},
        {2.1 + uniform(rng), {normal(rng), normal(rng)}},
    };
    model.finals = {
        {Irrep::G1p, 3.18 + 0.01 * uniform(rng)},
        {Irrep::G5p, 3.19 + 0.01 * uniform(rng)},
    };
    model.sigma_ev = 0.002;

    Eigen::Vector4cd amplitudes;
    for (int k = 0; k < 4; ++k) {
      amplitudes(k) = std::complex<double>(normal(rng), normal(rng));
    }
    amplitudes.normalize();

    const double w1 = 1.55, w2 = 1.66;
    const double fast = tpa_relative_rate(TwoPhotonState::pure(amplitudes),
                                          model, cg, w1, w2);
    const double reference =
        oracles::brute_force_tpa_rate(amplitudes, model, cg, w1, w2);
    worst = std::max(worst, std::abs(fast - reference) /
                                std::max(std::abs(reference), 1e-300));
  }
  report(9, "brute-force equivalence", worst < 1e-10,
         "max relative gap = " + fmt(worst));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria failed\n", failures);
  }
  return failures;
}
