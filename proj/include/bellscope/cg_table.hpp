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

#ifndef BELLSCOPE_CG_TABLE_HPP
#define BELLSCOPE_CG_TABLE_HPP

#include <string>

#include <Eigen/Dense>

namespace bellscope {

/// Irreducible representations of the cubic group used by the two-photon
/// selection rule. G4m is the vector (dipole) representation carried by the
/// photon polarization; the others appear in the product decomposition
/// G4m (x) G4m = G1p + G3p + G4p + G5p.
enum class Irrep { G1p, G3p, G4p, G5p, G4m };

inline constexpr std::array<Irrep, 4> kProductIrreps = {Irrep::G1p, Irrep::G3p,
                                                        Irrep::G4p, Irrep::G5p};

/// 1, 2, 3, 3, 3 for G1p, G3p, G4p, G5p, G4m.
int dimension(Irrep irrep);

std::string to_string(Irrep irrep);

/// Parses "G1+", "G3+", "G4+", "G5+", "G4-".
Irrep irrep_from_string(const std::string& name);

/// Exchange behavior of a product-representation irrep under swapping the
/// two vector factors. Symmetric irreps pick the + sign of the two-photon
/// energy denominator, antisymmetric ones the - sign.
enum class SymmetryClass { Symmetric, Antisymmetric };

/// G1p, G3p, G5p are symmetric; G4p is antisymmetric. Throws for G4m, which
/// is not part of the product decomposition.
SymmetryClass symmetry_class(Irrep irrep);

/// Clebsch-Gordan coefficients (mu m | l, l') coupling two vector (G4m)
/// factors into the product irreps of the cubic group. Rows are indexed by
/// (mu, m); columns by the factor pair (l, l') with l, l' in {x, y, z}.
///
/// Row conventions:
///   G1p:  single row, (1/sqrt(3)) delta_{l,l'}
///   G3p:  rows (u, v) with u ~ (2zz - xx - yy)/sqrt(6), v ~ (xx - yy)/sqrt(2)
///   G4p:  rows (x, y, z), antisymmetric, x ~ (yz - zy)/sqrt(2) etc.
///   G5p:  rows (yz, zx, xy), symmetric, yz ~ (yz + zy)/sqrt(2) etc.
///
/// The full 9x9 coefficient matrix is orthogonal: the decomposition is
/// complete and the rows are orthonormal.
class CGTable {
public:
  static constexpr int kNumRows = 9;

  double coefficient(Irrep mu, int m, int l, int lp) const;

  /// First row of `mu` in the 9x9 matrix: G1p at 0, G3p at 1, G4p at 3,
  /// G5p at 6.
  static int row_offset(Irrep mu);

  /// Rows ordered (G1p), (G3p u, v), (G4p x, y, z), (G5p yz, zx, xy);
  /// columns ordered by 3*l + l'.
  const Eigen::Matrix<double, 9, 9>& matrix() const { return matrix_; }

private:
  friend CGTable build_cg_table();
  explicit CGTable(const Eigen::Matrix<double, 9, 9>& matrix)
      : matrix_(matrix) {}

  Eigen::Matrix<double, 9, 9> matrix_;
};

/// The coupling table for G4m (x) G4m with the conventions above.
CGTable build_cg_table();

}  // namespace bellscope

#endif  // BELLSCOPE_CG_TABLE_HPP
