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

#ifndef BELLSCOPE_CLI_HPP
#define BELLSCOPE_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "bellscope/cg_table.hpp"
#include "bellscope/physical_params.hpp"
#include "bellscope/two_photon_state.hpp"

namespace bellscope {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadConfig = 2;  // malformed flags, files, or values
inline constexpr int kExitPhysics = 3;    // domain errors, e.g. exact resonance

struct MonteCarloMode {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

/// One fully resolved invocation. Built either from command-line flags or
/// from a single JSON document (--config).
struct RunConfig {
  enum class Command { Simulate, Confusion, Selection, Params, Qdot };

  Command command = Command::Simulate;

  // Device: a builtin name or a spec file, never both.
  std::optional<std::string> builtin_device;  // "standard" | "shortcut"
  std::optional<std::string> device_path;
  double eta = 1.0;

  // Input state: a Bell label or raw amplitudes, never both.
  std::optional<BellLabel> input_label;
  std::optional<Eigen::Vector4cd> input_amplitudes;

  // Sampling mode; exact when absent.
  std::optional<MonteCarloMode> monte_carlo;

  // selection
  std::optional<std::string> model_path;
  double w1_ev = 0.0;
  double w2_ev = 0.0;
  std::optional<Irrep> irrep_filter;

  // params
  std::optional<std::string> preset;
  std::optional<std::string> params_path;
  std::optional<double> tau_c_s;
  std::optional<ResonanceCheck> resonance;

  std::string format = "json";  // "json" | "csv"
  std::optional<std::string> output_path;

  /// Cross-field checks (exclusive device sources, exclusive input forms,
  /// trials >= 1, known format). Throws std::invalid_argument.
  void validate() const;
};

/// Builds a RunConfig from the --config JSON document.
RunConfig config_from_json(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// Seed fallback chain: explicit value, else BELLSCOPE_SEED, else 0.
std::uint64_t default_seed();

/// Executes the configured command, writing the artifact to
/// config.output_path or `out`. Returns kExitOk; failures are reported by
/// throwing (std::invalid_argument -> bad config, ResonanceError -> physics).
int run(const RunConfig& config, std::ostream& out);

}  // namespace bellscope

#endif  // BELLSCOPE_CLI_HPP
