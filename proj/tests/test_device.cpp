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

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "bellscope/device.hpp"

using namespace bellscope;

namespace {

constexpr double kTol = 1e-12;

// Which detector each Bell input should fire in the standard cascade.
const std::map<BellLabel, std::string> kStandardAssignment = {
    {BellLabel::PhiPlus, "1"},
    {BellLabel::PhiMinus, "2"},
    {BellLabel::PsiMinus, "3"},
    {BellLabel::PsiPlus, "4"},
};

Eigen::Vector4cd random_amplitudes(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Vector4cd a;
  for (int i = 0; i < 4; ++i) {
    a(i) = std::complex<double>(normal(rng), normal(rng));
  }
  a.normalize();
  return a;
}

}  // namespace

TEST_CASE("crystal channel: clicks, transparency, and completeness") {
  const auto phi_plus = bell_state(BellLabel::PhiPlus);

  SUBCASE("full absorption of the matching state") {
    const auto result = crystal_channel(phi_plus, phi_plus, 1.0);
    CHECK(result.p_click == doctest::Approx(1.0).epsilon(kTol));
    CHECK(result.conditional.norm() == doctest::Approx(0.0));
  }

  SUBCASE("orthogonal states pass unchanged") {
    const auto psi = bell_state(BellLabel::PsiMinus);
    const auto result = crystal_channel(psi, phi_plus, 0.7);
    CHECK(result.p_click == doctest::Approx(0.0).epsilon(kTol));
    CHECK((result.conditional.amplitudes() - psi.amplitudes())
              .cwiseAbs()
              .maxCoeff() < kTol);
  }

  SUBCASE("eta = 0.5 on the matching state renormalizes back to it") {
    const auto result = crystal_channel(phi_plus, phi_plus, 0.5);
    CHECK(result.p_click == doctest::Approx(0.5).epsilon(kTol));
    CHECK(result.conditional.norm() == doctest::Approx(1.0).epsilon(kTol));
    CHECK(std::norm(overlap(result.conditional, phi_plus)) ==
          doctest::Approx(1.0).epsilon(kTol));
  }

  SUBCASE("Kraus completeness: eta|a><a| + K^dag K = I") {
    for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const Eigen::Vector4cd a = phi_plus.amplitudes();
      const Eigen::Matrix4cd k =
          Eigen::Matrix4cd::Identity() +
          (std::sqrt(1.0 - eta) - 1.0) * (a * a.adjoint());
      const Eigen::Matrix4cd total = eta * (a * a.adjoint()) + k.adjoint() * k;
      CHECK((total - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <
            kTol);
    }
  }

  SUBCASE("pure and mixed inputs give the same statistics") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 8; ++i) {
      const Eigen::Vector4cd a = random_amplitudes(rng);
      const auto pure = TwoPhotonState::pure(a);
      const auto mixed = TwoPhotonState::mixed(pure.density());
      const auto from_pure = crystal_channel(pure, phi_plus, 0.6);
      const auto from_mixed = crystal_channel(mixed, phi_plus, 0.6);
      CHECK(from_pure.p_click ==
            doctest::Approx(from_mixed.p_click).epsilon(1e-12));
      CHECK((from_pure.conditional.density() - from_mixed.conditional.density())
                .cwiseAbs()
                .maxCoeff() < 1e-11);
    }
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(crystal_channel(phi_plus, phi_plus, 1.5),
                    std::invalid_argument);
    const auto faint = TwoPhotonState::pure(Eigen::Vector4cd::Unit(0) * 0.5);
    CHECK_THROWS_AS(crystal_channel(phi_plus, faint, 0.5),
                    std::invalid_argument);
  }
}

TEST_CASE("standard device discriminates all four Bell states at eta = 1") {
  const ConfusionMatrix matrix = confusion_matrix(standard_device(1.0));
  for (BellLabel input : kAllBellLabels) {
    for (const std::string& column : matrix.columns) {
      const double expected =
          column == kStandardAssignment.at(input) ? 1.0 : 0.0;
      CHECK(std::abs(matrix.entry(input, column) - expected) < kTol);
    }
  }
}

TEST_CASE("standard device: correct-detector probability equals eta") {
  for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const DeviceSpec device = standard_device(eta);
    for (BellLabel input : kAllBellLabels) {
      const OutcomeDistribution result =
          propagate_exact(device, bell_state(input));
      CHECK(std::abs(result.probability(kStandardAssignment.at(input)) - eta) <
            kTol);
      CHECK(std::abs(result.probability(kNoClickLabel) - (1.0 - eta)) < kTol);
      double sum = 0.0;
      for (double p : result.probabilities) {
        CHECK(p >= -kTol);
        sum += p;
      }
      CHECK(std::abs(sum - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("standard device at eta = 0 never clicks") {
  const ConfusionMatrix matrix = confusion_matrix(standard_device(0.0));
  for (BellLabel input : kAllBellLabels) {
    CHECK(matrix.entry(input, kNoClickLabel) ==
          doctest::Approx(1.0).epsilon(kTol));
  }
}

TEST_CASE("shortcut device mislabels upstream failures as Psi+") {
  SUBCASE("eta = 1: Psi+ reaches the photodetector with certainty") {
    const OutcomeDistribution result = propagate_exact(
        shortcut_device(1.0), bell_state(BellLabel::PsiPlus));
    CHECK(std::abs(result.probability("PsiPlus") - 1.0) < kTol);
  }
  SUBCASE("eta = 0.5: Phi+ splits between detector 1 and the false label") {
    const OutcomeDistribution result = propagate_exact(
        shortcut_device(0.5), bell_state(BellLabel::PhiPlus));
    CHECK(std::abs(result.probability("1") - 0.5) < kTol);
    CHECK(std::abs(result.probability("PsiPlus") - 0.5) < kTol);
  }
  SUBCASE("eta = 0: everything lands on the photodetector") {
    const ConfusionMatrix matrix = confusion_matrix(shortcut_device(0.0));
    for (BellLabel input : kAllBellLabels) {
      CHECK(matrix.entry(input, "PsiPlus") ==
            doctest::Approx(1.0).epsilon(kTol));
    }
  }
  SUBCASE("eta = 0.8: each non-Psi+ input leaks 0.2 onto the label") {
    const ConfusionMatrix matrix = confusion_matrix(shortcut_device(0.8));
    for (BellLabel input :
         {BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiMinus}) {
      CHECK(std::abs(matrix.entry(input, "PsiPlus") - 0.2) < kTol);
    }
    CHECK(std::abs(matrix.entry(BellLabel::PsiPlus, "PsiPlus") - 1.0) < kTol);
  }
}

TEST_CASE("confusion matrix rows sum to one") {
  for (double eta : {0.3, 0.9}) {
    for (const DeviceSpec& device :
         {standard_device(eta), shortcut_device(eta)}) {
      const ConfusionMatrix matrix = confusion_matrix(device);
      for (Eigen::Index row = 0; row < 4; ++row) {
        CHECK(std::abs(matrix.entries.row(row).sum() - 1.0) < 1e-9);
        for (Eigen::Index col = 0; col < matrix.entries.cols(); ++col) {
          CHECK(matrix.entries(row, col) >= -kTol);
          CHECK(matrix.entries(row, col) <= 1.0 + kTol);
        }
      }
    }
  }
}

TEST_CASE("propagation conserves probability for arbitrary pure inputs") {
  std::mt19937_64 rng(43);
  const DeviceSpec device = standard_device(0.37);
  for (int i = 0; i < 16; ++i) {
    const auto input = TwoPhotonState::pure(random_amplitudes(rng));
    const OutcomeDistribution result = propagate_exact(device, input);
    double sum = 0.0;
    for (double p : result.probabilities) {
      sum += p;
    }
    CHECK(std::abs(sum - 1.0) < 1e-9);
  }
}

TEST_CASE("exact propagation agrees between pure and density inputs") {
  std::mt19937_64 rng(47);
  const DeviceSpec device = standard_device(0.62);
  for (int i = 0; i < 8; ++i) {
    const auto pure = TwoPhotonState::pure(random_amplitudes(rng));
    const auto mixed = TwoPhotonState::mixed(pure.density());
    const auto from_pure = propagate_exact(device, pure);
    const auto from_mixed = propagate_exact(device, mixed);
    for (std::size_t k = 0; k < from_pure.probabilities.size(); ++k) {
      CHECK(std::abs(from_pure.probabilities[k] - from_mixed.probabilities[k]) <
            1e-11);
    }
  }
}

TEST_CASE("mixed inputs propagate as convex combinations") {
  const DeviceSpec device = standard_device(0.55);
  const Eigen::Matrix4cd rho =
      0.5 * bell_state(BellLabel::PhiPlus).density() +
      0.5 * bell_state(BellLabel::PsiMinus).density();
  const auto result = propagate_exact(device, TwoPhotonState::mixed(rho));
  const auto phi = propagate_exact(device, bell_state(BellLabel::PhiPlus));
  const auto psi = propagate_exact(device, bell_state(BellLabel::PsiMinus));
  for (std::size_t k = 0; k < result.probabilities.size(); ++k) {
    CHECK(std::abs(result.probabilities[k] -
                   0.5 * (phi.probabilities[k] + psi.probabilities[k])) <
          1e-11);
  }
}

TEST_CASE("Monte Carlo: single deterministic trial") {
  const OutcomeCounts counts = propagate_monte_carlo(
      standard_device(1.0), bell_state(BellLabel::PhiPlus), 1, 99);
  CHECK(counts.trials == 1);
  CHECK(counts.counts[0] == 1);  // detector 1
  for (std::size_t k = 1; k < counts.counts.size(); ++k) {
    CHECK(counts.counts[k] == 0);
  }
}

TEST_CASE("Monte Carlo: fixed seed reproduces counts exactly") {
  const DeviceSpec device = standard_device(0.7);
  const auto first = propagate_monte_carlo(
      device, bell_state(BellLabel::PsiMinus), 20000, 42);
  const auto second = propagate_monte_carlo(
      device, bell_state(BellLabel::PsiMinus), 20000, 42);
  CHECK(first.counts == second.counts);

  const auto other = propagate_monte_carlo(
      device, bell_state(BellLabel::PsiMinus), 20000, 43);
  CHECK(first.counts != other.counts);
}

TEST_CASE("Monte Carlo accepts mixed inputs") {
  const auto rho = TwoPhotonState::mixed(
      0.5 * bell_state(BellLabel::PhiPlus).density() +
      0.5 * bell_state(BellLabel::PsiMinus).density());
  const OutcomeCounts counts =
      propagate_monte_carlo(standard_device(1.0), rho, 4000, 5);
  // Detectors 1 and 3 split the ensemble; a 4-sigma band around one half.
  const double frequency = static_cast<double>(counts.counts[0]) / 4000.0;
  CHECK(std::abs(frequency - 0.5) < 4.0 * std::sqrt(0.25 / 4000.0));
  CHECK(counts.counts[0] + counts.counts[2] == 4000);
}

TEST_CASE("Monte Carlo frequencies sit within 4-sigma of the exact result") {
  const std::uint64_t trials = 100000;
  const DeviceSpec device = standard_device(0.7);
  for (BellLabel input : kAllBellLabels) {
    const OutcomeDistribution exact =
        propagate_exact(device, bell_state(input));
    const OutcomeCounts counts =
        propagate_monte_carlo(device, bell_state(input), trials, 1234);
    for (std::size_t k = 0; k < exact.probabilities.size(); ++k) {
      const double p = exact.probabilities[k];
      const double frequency =
          static_cast<double>(counts.counts[k]) / static_cast<double>(trials);
      const double sigma =
          std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
      CHECK(std::abs(frequency - p) <= 4.0 * sigma + 1e-12);
    }
  }
}

TEST_CASE("device validation catches bad specs") {
  DeviceSpec device = standard_device(0.5);
  device.stages.push_back(CrystalStage{1, bell_state(BellLabel::PhiPlus), 0.5});
  CHECK_THROWS_AS(device.validate(), std::invalid_argument);

  DeviceSpec bad_rotator;
  bad_rotator.stages = {RotatorStage{5, 0.1}};
  CHECK_THROWS_AS(bad_rotator.validate(), std::invalid_argument);

  CHECK_THROWS_AS(standard_device(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(standard_device(1.1), std::invalid_argument);
}

TEST_CASE("crystals can absorb any chosen state") {
  DeviceSpec device;
  device.stages = {CrystalStage{7, bell_state(BellLabel::PsiMinus), 1.0}};
  const auto hit = propagate_exact(device, bell_state(BellLabel::PsiMinus));
  CHECK(std::abs(hit.probability("7") - 1.0) < kTol);
  const auto miss = propagate_exact(device, bell_state(BellLabel::PhiPlus));
  CHECK(std::abs(miss.probability(kNoClickLabel) - 1.0) < kTol);
}

TEST_CASE("outcome labels follow stage order") {
  const DeviceSpec device = shortcut_device(0.9);
  const auto labels = device.outcome_labels();
  REQUIRE(labels.size() == 5);
  CHECK(labels[0] == "1");
  CHECK(labels[1] == "2");
  CHECK(labels[2] == "3");
  CHECK(labels[3] == "PsiPlus");
  CHECK(labels[4] == kNoClickLabel);
}
