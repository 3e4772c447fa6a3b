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

#ifndef BELLSCOPE_ERRORS_HPP
#define BELLSCOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bellscope {

/// Raised when a photon energy sits exactly on an intermediate level, making
/// the second-order energy denominator singular. The message names the level.
class ResonanceError : public std::domain_error {
public:
  explicit ResonanceError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace bellscope

#endif  // BELLSCOPE_ERRORS_HPP
