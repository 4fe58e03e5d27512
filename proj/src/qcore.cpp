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

#include "qbroadcast/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "qbroadcast/errors.hpp"

namespace qbroadcast::qcore {
namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Bit of `index` that stores wire `w` (1-based) in an n-wire register.
inline int wire_bit(Eigen::Index index, int w, int n) {
  return static_cast<int>((index >> (n - w)) & 1);
}

void check_wire_list(std::span<const int> wires, int n, bool require_all) {
  std::vector<bool> seen(n + 1, false);
  for (int w : wires) {
    if (w < 1 || w > n) {
      throw WireError("wire " + std::to_string(w) + " outside 1.." +
                      std::to_string(n));
    }
    if (seen[w]) {
      throw WireError("wire " + std::to_string(w) + " listed twice");
    }
    seen[w] = true;
  }
  if (require_all && static_cast<int>(wires.size()) != n) {
    throw WireError("permutation must list all " + std::to_string(n) +
                    " wires");
  }
  if (wires.empty()) throw WireError("empty wire list");
}

// Full-register index from the values of two complementary wire groups.
Eigen::Index compose_index(std::span<const int> group_a, Eigen::Index value_a,
                           std::span<const int> group_b, Eigen::Index value_b,
                           int n) {
  Eigen::Index full = 0;
  const int na = static_cast<int>(group_a.size());
  const int nb = static_cast<int>(group_b.size());
  for (int i = 0; i < na; ++i) {
    if ((value_a >> (na - 1 - i)) & 1) full |= Eigen::Index{1} << (n - group_a[i]);
  }
  for (int i = 0; i < nb; ++i) {
    if ((value_b >> (nb - 1 - i)) & 1) full |= Eigen::Index{1} << (n - group_b[i]);
  }
  return full;
}

CMatrix permuted_matrix(const CMatrix& m, int n, std::span<const int> order) {
  const Eigen::Index dim = m.rows();
  std::vector<Eigen::Index> source(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::Index old = 0;
    for (int pos = 1; pos <= n; ++pos) {
      if (wire_bit(i, pos, n)) old |= Eigen::Index{1} << (n - order[pos - 1]);
    }
    source[i] = old;
  }
  CMatrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) out(r, c) = m(source[r], source[c]);
  }
  return out;
}

void check_capacity(int wires) {
  if (wires > kMaxWires) {
    throw CapacityError("state on " + std::to_string(wires) +
                        " wires exceeds the " + std::to_string(kMaxWires) +
                        "-wire capacity");
  }
}

void check_trace(const CMatrix& m) {
  const double drift = std::abs(m.trace() - Complex(1.0, 0.0));
  if (drift > kTraceTol) {
    throw NumericalError("isometry application changed the trace by " +
                         fmt_double(drift));
  }
}

}  // namespace

StateDiagnostics diagnose(const CMatrix& m) {
  StateDiagnostics d;
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  d.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
  d.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  const CMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  return d;
}

int wires_for_dim(Eigen::Index dim) {
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim) {
    d <<= 1;
    ++n;
  }
  if (d != dim || n < 1) {
    throw DimensionError("dimension " + std::to_string(dim) +
                         " is not a power of two >= 2");
  }
  return n;
}

DensityOp::DensityOp(CMatrix entries, Trusted)
    : m_(std::move(entries)), wires_(wires_for_dim(m_.rows())) {}

DensityOp::DensityOp(CMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw DimensionError("density matrix not square");
  wires_ = wires_for_dim(m_.rows());
  check_capacity(wires_);
  const StateDiagnostics d = diagnose(m_);
  if (d.hermiticity_error > kHermitianTol) {
    throw InvalidStateError(
        "matrix not Hermitian (deviation " + fmt_double(d.hermiticity_error) + ")",
        d.min_eigenvalue);
  }
  if (d.trace_error > kTraceTol) {
    throw InvalidStateError("trace differs from 1 by " + fmt_double(d.trace_error),
                            d.min_eigenvalue);
  }
  if (d.min_eigenvalue < kPsdFloor) {
    throw InvalidStateError(
        "matrix not positive semidefinite (min eigenvalue " +
            fmt_double(d.min_eigenvalue) + ")",
        d.min_eigenvalue);
  }
}

DensityOp DensityOp::pure(const CVector& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw InvalidStateError("zero state vector", 0.0);
  const CVector unit = psi / norm;
  return DensityOp(unit * unit.adjoint());
}

DensityOp DensityOp::basis(std::span<const int> bits) {
  const int n = static_cast<int>(bits.size());
  if (n < 1) throw DimensionError("basis state needs at least one wire");
  check_capacity(n);
  Eigen::Index index = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw DimensionError("basis bits must be 0 or 1");
    index = (index << 1) | b;
  }
  CMatrix m = CMatrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  m(index, index) = 1.0;
  return DensityOp(std::move(m), Trusted{});
}

DensityOp DensityOp::maximally_mixed(int wires) {
  if (wires < 1) throw DimensionError("maximally mixed state needs a wire");
  check_capacity(wires);
  const Eigen::Index dim = Eigen::Index{1} << wires;
  return DensityOp(CMatrix::Identity(dim, dim) / static_cast<double>(dim),
                   Trusted{});
}

double CanonicalTwoQubit::distance(const CanonicalTwoQubit& other) const {
  return std::max({(x - other.x).cwiseAbs().maxCoeff(),
                   (y - other.y).cwiseAbs().maxCoeff(),
                   (t - other.t).cwiseAbs().maxCoeff()});
}

CanonicalTwoQubit CanonicalTwoQubit::swapped() const {
  return CanonicalTwoQubit{y, x, t.transpose()};
}

const Eigen::Matrix2cd& pauli(int i) {
  static const std::array<Eigen::Matrix2cd, 4> kPauli = [] {
    std::array<Eigen::Matrix2cd, 4> p;
    const Complex I(0.0, 1.0);
    p[0] << 1, 0, 0, 1;
    p[1] << 0, 1, 1, 0;
    p[2] << 0, -I, I, 0;
    p[3] << 1, 0, 0, -1;
    return p;
  }();
  if (i < 0 || i > 3) throw DimensionError("Pauli index must be 0..3");
  return kPauli[i];
}

DensityOp tensor(const DensityOp& a, const DensityOp& b) {
  check_capacity(a.wire_count() + b.wire_count());
  const Eigen::Index da = a.dim();
  const Eigen::Index db = b.dim();
  CMatrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
    }
  }
  return DensityOp(std::move(out), DensityOp::Trusted{});
}

DensityOp partial_trace(const DensityOp& rho, std::span<const int> keep) {
  const int n = rho.wire_count();
  check_wire_list(keep, n, false);
  std::vector<int> traced;
  for (int w = 1; w <= n; ++w) {
    if (std::find(keep.begin(), keep.end(), w) == keep.end()) traced.push_back(w);
  }
  const Eigen::Index dk = Eigen::Index{1} << keep.size();
  const Eigen::Index dt = Eigen::Index{1} << traced.size();
  std::vector<Eigen::Index> full(dk * dt);
  for (Eigen::Index k = 0; k < dk; ++k) {
    for (Eigen::Index t = 0; t < dt; ++t) {
      full[k * dt + t] = compose_index(keep, k, traced, t, n);
    }
  }
  CMatrix out = CMatrix::Zero(dk, dk);
  const CMatrix& m = rho.matrix();
  for (Eigen::Index c = 0; c < dk; ++c) {
    for (Eigen::Index r = 0; r < dk; ++r) {
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) acc += m(full[r * dt + t], full[c * dt + t]);
      out(r, c) = acc;
    }
  }
  return DensityOp(std::move(out), DensityOp::Trusted{});
}

DensityOp partial_trace(const DensityOp& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

DensityOp permute_wires(const DensityOp& rho, std::span<const int> order) {
  const int n = rho.wire_count();
  check_wire_list(order, n, true);
  return DensityOp(permuted_matrix(rho.matrix(), n, order),
                   DensityOp::Trusted{});
}

DensityOp permute_wires(const DensityOp& rho, std::initializer_list<int> order) {
  return permute_wires(rho, std::span<const int>(order.begin(), order.size()));
}

CanonicalTwoQubit to_canonical(const DensityOp& rho) {
  if (rho.dim() != 4) {
    throw DimensionError("canonical form needs a two-qubit state, got dim " +
                         std::to_string(rho.dim()));
  }
  CanonicalTwoQubit c;
  const Eigen::Matrix4cd m = rho.matrix();
  const Eigen::Matrix2cd id = pauli(0);
  for (int i = 1; i <= 3; ++i) {
    c.x(i - 1) = (m * Eigen::kroneckerProduct(pauli(i), id).eval()).trace().real();
    c.y(i - 1) = (m * Eigen::kroneckerProduct(id, pauli(i)).eval()).trace().real();
    for (int j = 1; j <= 3; ++j) {
      c.t(i - 1, j - 1) =
          (m * Eigen::kroneckerProduct(pauli(i), pauli(j)).eval()).trace().real();
    }
  }
  return c;
}

Eigen::Matrix4cd canonical_matrix(const CanonicalTwoQubit& c) {
  // basis[4 i + j] = s_i (x) s_j, with s_0 the identity.
  static const std::array<Eigen::Matrix4cd, 16> basis = [] {
    std::array<Eigen::Matrix4cd, 16> b;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) b[4 * i + j] = Eigen::kroneckerProduct(pauli(i), pauli(j));
    }
    return b;
  }();
  Eigen::Matrix4cd m = basis[0];
  for (int i = 1; i <= 3; ++i) {
    m.noalias() += c.x(i - 1) * basis[4 * i];
    m.noalias() += c.y(i - 1) * basis[i];
    for (int j = 1; j <= 3; ++j) m.noalias() += c.t(i - 1, j - 1) * basis[4 * i + j];
  }
  return 0.25 * m;
}

DensityOp from_canonical(const CanonicalTwoQubit& c) {
  CMatrix m = canonical_matrix(c);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < kPsdFloor) {
    throw InvalidStateError(
        "canonical triple is not a valid state (min eigenvalue " +
            fmt_double(min_eig) + ")",
        min_eig);
  }
  return DensityOp(std::move(m));
}

Isometry::Isometry(CMatrix v) : v_(std::move(v)) {
  wires_for_dim(v_.cols());
  wires_for_dim(v_.rows());
  if (v_.rows() < v_.cols()) {
    throw DimensionError("isometry output dimension smaller than input");
  }
  const double err = isometry_error();
  if (err > kIsometryTol) {
    throw NumericalError("V^dagger V deviates from identity by " + fmt_double(err));
  }
}

Isometry Isometry::identity(int dim) {
  return Isometry(CMatrix::Identity(dim, dim));
}

double Isometry::isometry_error() const {
  const CMatrix gram = v_.adjoint() * v_;
  return (gram - CMatrix::Identity(v_.cols(), v_.cols())).cwiseAbs().maxCoeff();
}

Isometry kron(const Isometry& a, const Isometry& b) {
  const CMatrix& va = a.matrix();
  const CMatrix& vb = b.matrix();
  CMatrix out(va.rows() * vb.rows(), va.cols() * vb.cols());
  for (Eigen::Index i = 0; i < va.rows(); ++i) {
    for (Eigen::Index j = 0; j < va.cols(); ++j) {
      out.block(i * vb.rows(), j * vb.cols(), vb.rows(), vb.cols()) = va(i, j) * vb;
    }
  }
  return Isometry(std::move(out));
}

WireMap::WireMap(std::vector<int> p, std::vector<Party> parties)
    : perm(std::move(p)), party_of_wire(std::move(parties)) {
  check_wire_list(perm, static_cast<int>(perm.size()), true);
  if (party_of_wire.empty()) {
    for (int w : perm) party_of_wire.push_back(party_of(w));
  } else if (party_of_wire.size() != perm.size()) {
    throw WireError("party tags must match the wire count");
  }
}

WireMap WireMap::identity(int wires) {
  std::vector<int> p(wires);
  std::iota(p.begin(), p.end(), 1);
  return WireMap(std::move(p));
}

WireMap WireMap::leading(int wires, std::span<const int> front) {
  std::vector<int> p(front.begin(), front.end());
  for (int w = 1; w <= wires; ++w) {
    if (std::find(front.begin(), front.end(), w) == front.end()) p.push_back(w);
  }
  return WireMap(std::move(p));
}

WireMap WireMap::leading(int wires, std::initializer_list<int> front) {
  return leading(wires, std::span<const int>(front.begin(), front.size()));
}

Party party_of(int wire) { return wire % 2 == 1 ? Party::kA : Party::kB; }

namespace {

// (V (x) I_rest) applied on both sides; `rest` is 2^(untouched wires).
CMatrix conjugate_leading(const CMatrix& rho, const CMatrix& v, Eigen::Index rest) {
  const Eigen::Index in = v.cols();
  const Eigen::Index out = v.rows();
  // Row-block product: (V (x) I) rho, treating rho as in x in blocks of rest x rest.
  CMatrix left = CMatrix::Zero(out * rest, in * rest);
  for (Eigen::Index i = 0; i < out; ++i) {
    for (Eigen::Index j = 0; j < in; ++j) {
      const Complex vij = v(i, j);
      if (vij == Complex(0.0)) continue;
      left.middleRows(i * rest, rest) += vij * rho.middleRows(j * rest, rest);
    }
  }
  CMatrix result = CMatrix::Zero(out * rest, out * rest);
  for (Eigen::Index i = 0; i < out; ++i) {
    for (Eigen::Index j = 0; j < in; ++j) {
      const Complex vij = std::conj(v(i, j));
      if (vij == Complex(0.0)) continue;
      result.middleCols(i * rest, rest) += vij * left.middleCols(j * rest, rest);
    }
  }
  return result;
}

CMatrix placed(const DensityOp& rho, const Isometry& v, const WireMap& placement) {
  const int n = rho.wire_count();
  if (static_cast<int>(placement.perm.size()) != n) {
    throw WireError("placement lists " + std::to_string(placement.perm.size()) +
                    " wires for a " + std::to_string(n) + "-wire state");
  }
  if (v.in_wires() > n) {
    throw DimensionError("isometry input (" + std::to_string(v.in_wires()) +
                         " wires) larger than the state");
  }
  return permuted_matrix(rho.matrix(), n, placement.perm);
}

}  // namespace

DensityOp apply_isometry(const DensityOp& rho, const Isometry& v,
                         const WireMap& placement) {
  const CMatrix m = placed(rho, v, placement);
  const int rest_wires = rho.wire_count() - v.in_wires();
  check_capacity(v.out_wires() + rest_wires);
  CMatrix out = conjugate_leading(m, v.matrix(), Eigen::Index{1} << rest_wires);
  check_trace(out);
  return DensityOp(std::move(out), DensityOp::Trusted{});
}

DensityOp apply_isometry_traced(const DensityOp& rho, const Isometry& v,
                                const WireMap& placement,
                                std::span<const int> discard) {
  const CMatrix m = placed(rho, v, placement);
  const int out_wires = v.out_wires();
  check_wire_list(discard, out_wires, false);
  if (static_cast<int>(discard.size()) == out_wires) {
    throw WireError("cannot discard every output wire of the isometry");
  }
  std::vector<int> kept;
  for (int w = 1; w <= out_wires; ++w) {
    if (std::find(discard.begin(), discard.end(), w) == discard.end()) kept.push_back(w);
  }
  const int rest_wires = rho.wire_count() - v.in_wires();
  check_capacity(static_cast<int>(kept.size()) + rest_wires);

  const Eigen::Index dk = Eigen::Index{1} << kept.size();
  const Eigen::Index dd = Eigen::Index{1} << discard.size();
  const Eigen::Index rest = Eigen::Index{1} << rest_wires;
  const CMatrix& vm = v.matrix();
  CMatrix out = CMatrix::Zero(dk * rest, dk * rest);
  CMatrix kraus(dk, vm.cols());
  for (Eigen::Index d = 0; d < dd; ++d) {
    for (Eigen::Index k = 0; k < dk; ++k) {
      kraus.row(k) = vm.row(compose_index(kept, k, discard, d, out_wires));
    }
    if (kraus.cwiseAbs().maxCoeff() == 0.0) continue;
    out += conjugate_leading(m, kraus, rest);
  }
  check_trace(out);
  return DensityOp(std::move(out), DensityOp::Trusted{});
}

}  // namespace qbroadcast::qcore
