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

// Seeded random states and unitaries for property checks.

#pragma once

#include <random>

#include <Eigen/Dense>

#include "qbroadcast/qcore.hpp"

namespace qbroadcast::sampling {

/// Ginibre-distributed mixed state on `wires` qubits (full rank).
qcore::DensityOp random_mixed_state(std::mt19937_64& rng, int wires = 2);
/// Haar-random pure state vector on `wires` qubits.
qcore::CVector random_pure_vector(std::mt19937_64& rng, int wires = 1);
/// Haar-random 2x2 unitary.
Eigen::Matrix2cd random_unitary2(std::mt19937_64& rng);
/// Uniform real number in [lo, hi).
double uniform(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0);

}  // namespace qbroadcast::sampling
