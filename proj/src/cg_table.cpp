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

#include "bellscope/cg_table.hpp"

#include <cmath>
#include <stdexcept>

namespace bellscope {

int dimension(Irrep irrep) {
  switch (irrep) {
    case Irrep::G1p:
      return 1;
    case Irrep::G3p:
      return 2;
    case Irrep::G4p:
    case Irrep::G5p:
    case Irrep::G4m:
      return 3;
  }
  throw std::invalid_argument("unknown irrep");
}

std::string to_string(Irrep irrep) {
  switch (irrep) {
    case Irrep::G1p:
      return "G1+";
    case Irrep::G3p:
      return "G3+";
    case Irrep::G4p:
      return "G4+";
    case Irrep::G5p:
      return "G5+";
    case Irrep::G4m:
      return "G4-";
  }
  throw std::invalid_argument("unknown irrep");
}

Irrep irrep_from_string(const std::string& name) {
  if (name == "G1+") return Irrep::G1p;
  if (name == "G3+") return Irrep::G3p;
  if (name == "G4+") return Irrep::G4p;
  if (name == "G5+") return Irrep::G5p;
  if (name == "G4-") return Irrep::G4m;
  throw std::invalid_argument("unknown irrep: " + name);
}

SymmetryClass symmetry_class(Irrep irrep) {
  switch (irrep) {
    case Irrep::G1p:
    case Irrep::G3p:
    case Irrep::G5p:
      return SymmetryClass::Symmetric;
    case Irrep::G4p:
      return SymmetryClass::Antisymmetric;
    case Irrep::G4m:
      break;
  }
  throw std::invalid_argument(
      "G4- is a factor representation, not a product irrep");
}

int CGTable::row_offset(Irrep mu) {
  switch (mu) {
    case Irrep::G1p:
      return 0;
    case Irrep::G3p:
      return 1;
    case Irrep::G4p:
      return 3;
    case Irrep::G5p:
      return 6;
    case Irrep::G4m:
      break;
  }
  throw std::invalid_argument(
      "G4- is a factor representation, not a product irrep");
}

double CGTable::coefficient(Irrep mu, int m, int l, int lp) const {
  if (m < 0 || m >= dimension(mu)) {
    throw std::invalid_argument("row index " + std::to_string(m) +
                                " out of range for " + to_string(mu));
  }
  if (l < 0 || l > 2 || lp < 0 || lp > 2) {
    throw std::invalid_argument("polarization component index out of range");
  }
  return matrix_(row_offset(mu) + m, 3 * l + lp);
}

CGTable build_cg_table() {
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  const double r2 = 1.0 / std::sqrt(2.0);

  // Column order is (xx, xy, xz, yx, yy, yz, zx, zy, zz).
  Eigen::Matrix<double, 9, 9> m;
  m << //
      // G1p: (xx + yy + zz)/sqrt(3)
      r3, 0, 0, 0, r3, 0, 0, 0, r3,
      // G3p u: (2zz - xx - yy)/sqrt(6)
      -r6, 0, 0, 0, -r6, 0, 0, 0, 2 * r6,
      // G3p v: (xx - yy)/sqrt(2)
      r2, 0, 0, 0, -r2, 0, 0, 0, 0,
      // G4p x: (yz - zy)/sqrt(2)
      0, 0, 0, 0, 0, r2, 0, -r2, 0,
      // G4p y: (zx - xz)/sqrt(2)
      0, 0, -r2, 0, 0, 0, r2, 0, 0,
      // G4p z: (xy - yx)/sqrt(2)
      0, r2, 0, -r2, 0, 0, 0, 0, 0,
      // G5p yz: (yz + zy)/sqrt(2)
      0, 0, 0, 0, 0, r2, 0, r2, 0,
      // G5p zx: (zx + xz)/sqrt(2)
      0, 0, r2, 0, 0, 0, r2, 0, 0,
      // G5p xy: (xy + yx)/sqrt(2)
      0, r2, 0, r2, 0, 0, 0, 0, 0;

  return CGTable(m);
}

}  // namespace bellscope
