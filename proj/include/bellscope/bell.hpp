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

#ifndef BELLSCOPE_BELL_HPP
#define BELLSCOPE_BELL_HPP

#include <array>
#include <string>

namespace bellscope {

/// The four maximally entangled two-qubit states.
enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellLabel, 4> kAllBellLabels = {
    BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
    BellLabel::PsiMinus};

std::string to_string(BellLabel label);

/// Parses "PhiPlus", "PhiMinus", "PsiPlus", "PsiMinus".
/// Throws std::invalid_argument for anything else.
BellLabel bell_label_from_string(const std::string& name);

}  // namespace bellscope

#endif  // BELLSCOPE_BELL_HPP
