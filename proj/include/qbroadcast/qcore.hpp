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

// Dense density-operator algebra for registers of up to six qubits.
//
// Wires are labelled 1..n, wire 1 being the most significant bit of the
// computational-basis index (|b1 b2 ... bn>). In the broadcasting protocols
// party A holds the odd wires and party B the even wires, so every pair label
// such as "14" addresses wires 1 and 4 directly.

#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qbroadcast::qcore {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr int kMaxWires = 6;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
// Partial traces of exact pure states leave eigenvalues around -1e-16.
inline constexpr double kPsdFloor = -1e-10;
inline constexpr double kIsometryTol = 1e-12;

/// Measured distance of a matrix from the density-operator invariants.
struct StateDiagnostics {
  double hermiticity_error = 0.0;  // max |M - M^dagger|
  double trace_error = 0.0;        // |Tr M - 1|
  double min_eigenvalue = 0.0;     // of the Hermitian part

  bool valid() const {
    return hermiticity_error <= kHermitianTol && trace_error <= kTraceTol &&
           min_eigenvalue >= kPsdFloor;
  }
};

StateDiagnostics diagnose(const CMatrix& m);

/// Number of wires of a 2^n dimensional space; throws DimensionError when
/// `dim` is not a power of two in [2, 2^kMaxWires].
int wires_for_dim(Eigen::Index dim);

class Isometry;
struct WireMap;

/// An immutable density operator on 1..6 qubit wires.
class DensityOp {
 public:
  /// Validates Hermiticity, unit trace and positivity; throws
  /// InvalidStateError (carrying the minimum eigenvalue) on failure.
  explicit DensityOp(CMatrix entries);

  static DensityOp pure(const CVector& psi);
  static DensityOp basis(std::span<const int> bits);
  static DensityOp maximally_mixed(int wires);

  int dim() const { return static_cast<int>(m_.rows()); }
  int wire_count() const { return wires_; }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }
  StateDiagnostics diagnostics() const { return diagnose(m_); }

 private:
  struct Trusted {};
  DensityOp(CMatrix entries, Trusted);

  friend DensityOp tensor(const DensityOp&, const DensityOp&);
  friend DensityOp partial_trace(const DensityOp&, std::span<const int>);
  friend DensityOp permute_wires(const DensityOp&, std::span<const int>);
  friend DensityOp apply_isometry(const DensityOp&, const Isometry&,
                                  const WireMap&);
  friend DensityOp apply_isometry_traced(const DensityOp&, const Isometry&,
                                         const WireMap&, std::span<const int>);

  CMatrix m_;
  int wires_;
};

/// Bloch vectors and correlation matrix of a two-qubit state:
/// rho = 1/4 [I + sum x_i s_i x I + sum y_i I x s_i + sum t_ij s_i x s_j].
struct CanonicalTwoQubit {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d y = Eigen::Vector3d::Zero();
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();

  /// Largest entry-wise difference over x, y and t.
  double distance(const CanonicalTwoQubit& other) const;
  /// The same state with the two wires exchanged: {y, x, t^T}.
  CanonicalTwoQubit swapped() const;
};

/// Pauli matrix s_i for i in {1, 2, 3}; i == 0 gives the identity.
const Eigen::Matrix2cd& pauli(int i);

DensityOp tensor(const DensityOp& a, const DensityOp& b);

/// Reduced state on `keep` (1-based wire labels), wires in the listed order.
DensityOp partial_trace(const DensityOp& rho, std::span<const int> keep);
DensityOp partial_trace(const DensityOp& rho, std::initializer_list<int> keep);

/// Relabels tensor factors: wire i of the result is wire order[i-1] of rho.
DensityOp permute_wires(const DensityOp& rho, std::span<const int> order);
DensityOp permute_wires(const DensityOp& rho, std::initializer_list<int> order);

CanonicalTwoQubit to_canonical(const DensityOp& rho);

/// The 4x4 matrix of a canonical triple without any validity check.
Eigen::Matrix4cd canonical_matrix(const CanonicalTwoQubit& c);

/// Throws InvalidStateError when the triple is not a valid state.
DensityOp from_canonical(const CanonicalTwoQubit& c);

/// A linear map V with V^dagger V = I, stored as an out_dim x in_dim matrix.
class Isometry {
 public:
  /// Throws NumericalError unless V^dagger V = I within kIsometryTol.
  explicit Isometry(CMatrix v);

  static Isometry identity(int dim);

  int in_dim() const { return static_cast<int>(v_.cols()); }
  int out_dim() const { return static_cast<int>(v_.rows()); }
  int in_wires() const { return wires_for_dim(v_.cols()); }
  int out_wires() const { return wires_for_dim(v_.rows()); }
  const CMatrix& matrix() const { return v_; }
  /// max |V^dagger V - I|.
  double isometry_error() const;

 private:
  CMatrix v_;
};

/// Kronecker product of two isometries (a acts on the leading wires).
Isometry kron(const Isometry& a, const Isometry& b);

enum class Party { kA, kB };

/// Placement of an isometry: `perm` is applied to the state first, after
/// which the isometry acts on the leading block of wires.
struct WireMap {
  std::vector<int> perm;
  std::vector<Party> party_of_wire;

  /// Throws WireError when perm is not a permutation of 1..n.
  WireMap(std::vector<int> perm, std::vector<Party> parties = {});
  static WireMap identity(int wires);
  /// Moves `front` (in order) to the leading positions, keeping the
  /// remaining wires in ascending order behind them.
  static WireMap leading(int wires, std::span<const int> front);
  static WireMap leading(int wires, std::initializer_list<int> front);
};

/// Odd wires belong to A, even wires to B.
Party party_of(int wire);

/// V rho V^dagger with V acting on the leading block after `placement`. The
/// output lists V's output wires first, then the untouched wires. Throws
/// NumericalError if the trace drifts by more than kTraceTol.
DensityOp apply_isometry(const DensityOp& rho, const Isometry& v,
                         const WireMap& placement);

/// As apply_isometry, but the output wires of V listed in `discard` (1-based
/// within V's output register) are traced out during application, so the
/// full output state is never materialized.
DensityOp apply_isometry_traced(const DensityOp& rho, const Isometry& v,
                                const WireMap& placement,
                                std::span<const int> discard);

}  // namespace qbroadcast::qcore
