// Copyright 2026 The qbroadcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Resource-state families: MEMS, non-maximally entangled pure states,
// Werner-like states, Bell-diagonal states and general canonical triples.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qbroadcast/qcore.hpp"

namespace qbroadcast::families {

enum class Family { kGeneralTwoQubit, kMemsI, kMemsII, kNME, kWernerLike, kBellDiagonal };

std::string family_name(Family f);

/// A family member. `params` holds (r), (k), (p, k) or (c1, c2, c3); the
/// general family carries its triple in `general`.
struct FamilyPoint {
  Family family = Family::kGeneralTwoQubit;
  std::vector<double> params;
  qcore::CanonicalTwoQubit general;
  /// Set for MEMS at r = 2/3, where both subclass matrices coincide.
  bool both_mems_subclasses = false;
};

/// Subclass I for r > 2/3, subclass II for r <= 2/3.
FamilyPoint mems_point(double r);
FamilyPoint nme_point(double k);
FamilyPoint werner_point(double p, double k);
FamilyPoint bell_point(double c1, double c2, double c3);

/// Validates the parameters and returns the canonical triple.
qcore::CanonicalTwoQubit canonical(const FamilyPoint& point);
/// Validates the parameters and builds the density operator.
qcore::DensityOp make_state(const FamilyPoint& point);

/// Maximally entangled mixed state with concurrence r (0 <= r <= 1).
qcore::DensityOp mems(double r);
qcore::CanonicalTwoQubit mems_canonical(double r);
/// The subclass-I matrix, usable for any r in [0, 1] (PSD only for r >= 2/3).
Eigen::Matrix4cd mems_i_matrix(double r);
Eigen::Matrix4cd mems_ii_matrix(double r);

/// sqrt(k)|00> + sqrt(1-k)|11>.
qcore::DensityOp nme(double k);
qcore::CanonicalTwoQubit nme_canonical(double k);

qcore::DensityOp werner_like(double p, double k);
qcore::CanonicalTwoQubit werner_canonical(double p, double k);

/// Bell-state weights lambda_uv, indexed [2u + v].
std::array<double, 4> bell_weights(double c1, double c2, double c3);
bool bell_diagonal_valid(double c1, double c2, double c3, double tol = 1e-12);
/// Throws InvalidBellDiagonalError listing every (u, v) with lambda_uv < -1e-12.
qcore::DensityOp bell_diagonal(double c1, double c2, double c3);
qcore::CanonicalTwoQubit bell_canonical(double c1, double c2, double c3);

/// from_canonical with full diagnostics; throws InvalidStateError.
qcore::DensityOp general_two_qubit(const qcore::CanonicalTwoQubit& c);

/// n x n grid of Werner-like points over p, k in [0, 1], p-major.
std::vector<FamilyPoint> werner_grid(int n);
/// Valid Bell-diagonal points of an n^3 grid over [-1, 1]^3, c1-major.
std::vector<FamilyPoint> bds_tetrahedron_grid(int n);

/// Evenly spaced values lo..hi inclusive (n >= 2), or {lo} when n == 1.
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace qbroadcast::families
