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

// Ancilla-free broadcasting with one real 4x4 unitary applied on each side,
// and a seeded search over the unitary's angles.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qbroadcast/measures.hpp"
#include "qbroadcast/pipelines.hpp"
#include "qbroadcast/qcore.hpp"
#include "qbroadcast/scan.hpp"

namespace qbroadcast::unisearch {

/// Twelve reals (a, b, c, d, e, f, g, h, j, l, m, n) forming six unit pairs
/// (a, b), (c, d), (e, f), (g, h), (j, l), (m, n).
class U4Params {
 public:
  /// Throws ParameterError when a pair deviates from unit norm by > 1e-12.
  explicit U4Params(const std::array<double, 12>& values);
  /// Pair k is (cos theta_k, sin theta_k).
  static U4Params from_angles(const std::array<double, 6>& theta);

  const std::array<double, 12>& values() const { return v_; }
  std::array<double, 6> angles() const;
  /// Largest |pair_1^2 + pair_2^2 - 1|.
  double max_constraint_error() const;

 private:
  std::array<double, 12> v_;
};

/// Throws NumericalError unless U^T U = I within 1e-10.
Eigen::Matrix4d u4_from_params(const U4Params& u);

struct ReferenceUnitaries {
  U4Params werner;
  U4Params bds;
};

/// Cosine tuples of the reported optimal unitaries for the Werner-like and
/// Bell-diagonal families.
ReferenceUnitaries reference_unitaries();

/// rho12 (x) |00><00| on wires (1, 2, 3, 4) with u on wires (1, 3) and (2, 4);
/// returns pairs {14, 23, 13, 24}. Throws NumericalError for non-unitary u.
pipelines::OutputEnsemble broadcast_via_unitary(const qcore::DensityOp& rho12,
                                                const Eigen::Matrix4cd& u);

/// The same map precomputed as Kraus operators, for scanning.
class UnitaryChannel {
 public:
  explicit UnitaryChannel(const Eigen::Matrix4cd& u);
  /// Output pairs in the order 14, 23, 13, 24.
  std::array<Eigen::Matrix4cd, 4> apply(const Eigen::Matrix4cd& rho12) const;

 private:
  std::array<std::array<Eigen::Matrix4cd, 4>, 4> kraus_;
};

/// Per-grid-point tallies. `mask[i]` marks points where both diagonal pairs
/// (14 and 23) are entangled.
struct RangeStats {
  std::size_t points = 0;
  std::size_t broadcastable = 0;
  /// Broadcastable points where 13 or 24 is also entangled.
  std::size_t locals_entangled = 0;
  /// Broadcastable points with both local pairs separable.
  std::size_t optimal = 0;
  double fraction = 0.0;
  std::vector<char> mask;
};

RangeStats range_fraction(const Eigen::Matrix4cd& u,
                          const std::vector<qcore::CanonicalTwoQubit>& grid,
                          double tol = measures::kEntanglementTol);

/// The same tallies for the symmetric (p = 1/2) local cloner.
RangeStats cloner_baseline(const std::vector<qcore::CanonicalTwoQubit>& grid,
                           double tol = measures::kEntanglementTol);

enum class SearchFamily { kWernerLike, kBellDiagonal };

std::string search_family_name(SearchFamily f);
/// Canonical triples of werner_grid(n) or bds_tetrahedron_grid(n).
std::vector<qcore::CanonicalTwoQubit> family_grid(SearchFamily f, int n);

struct SearchConfig {
  SearchFamily family = SearchFamily::kWernerLike;
  int grid_n = 41;
  std::uint64_t seed = 0;
  int restarts = 4;
  /// Maximum sweeps per refinement stage; 0 keeps the sampled angles.
  int refine_steps = 3;
  double tol = measures::kEntanglementTol;
};

struct SearchResult {
  U4Params best_params = U4Params::from_angles({});
  double best_fraction = 0.0;
  double baseline_fraction = 0.0;
  int best_restart = 0;
  std::vector<double> history;  // best fraction per restart
};

/// Restart i draws six angles uniformly in [0, 2pi) from mt19937_64 seeded
/// with seed + i, then refines coordinate-wise: sweeps over the pi/10 lattice,
/// then +-1..10 steps of pi/100, accepting strict improvements only. The best
/// restart wins; ties keep the lower restart index.
SearchResult random_search(const SearchConfig& cfg);

/// One row per grid point with unitary and symmetric-cloner verdicts.
pipelines::ScanTable scan_unitary_family(const Eigen::Matrix4cd& u, SearchFamily f, int n,
                                         double tol = measures::kEntanglementTol);

}  // namespace qbroadcast::unisearch
