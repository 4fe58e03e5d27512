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

#include <doctest.h>

#include <array>

#include "helpers.hpp"
#include "qbroadcast/errors.hpp"
#include "qbroadcast/families.hpp"
#include "qbroadcast/qcore.hpp"

using namespace qbroadcast;
using namespace qbroadcast::qcore;
using qbroadcast::testing::bell_phi_plus;
using qbroadcast::testing::max_abs;

namespace {
DensityOp ket(std::initializer_list<int> bits) {
  std::vector<int> b(bits);
  return DensityOp::basis(b);
}
}  // namespace

TEST_SUITE("qcore") {
  TEST_CASE("tensor of basis states and mixed states") {
    CHECK(max_abs(tensor(ket({0}), ket({0})).matrix() - ket({0, 0}).matrix()) < 1e-15);
    CHECK(max_abs(tensor(DensityOp::maximally_mixed(1), DensityOp::maximally_mixed(1)).matrix() -
                  DensityOp::maximally_mixed(2).matrix()) < 1e-15);
    const auto big = tensor(bell_phi_plus(), ket({0, 0}));
    CHECK(big.dim() == 16);
    CHECK(big.diagnostics().valid());
  }

  TEST_CASE("partial trace") {
    CHECK(max_abs(partial_trace(bell_phi_plus(), {1}).matrix() -
                  DensityOp::maximally_mixed(1).matrix()) < 1e-15);
    CHECK(max_abs(partial_trace(ket({0, 1}), {2}).matrix() - ket({1}).matrix()) < 1e-15);
  }

  TEST_CASE("partial trace matches a nested-loop contraction") {
    std::mt19937_64 rng(7);
    const auto rho = testing::random_state(rng, 3);
    // Keep wires 1 and 3, trace wire 2 (wire 1 is the most significant bit).
    CMatrix expect = CMatrix::Zero(4, 4);
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int c2 = 0; c2 < 2; ++c2)
            for (int b = 0; b < 2; ++b)
              expect(2 * a + c, 2 * a2 + c2) += rho(4 * a + 2 * b + c, 4 * a2 + 2 * b + c2);
    CHECK(max_abs(partial_trace(rho, {1, 3}).matrix() - expect) < 1e-14);
  }

  TEST_CASE("permute wires") {
    std::mt19937_64 rng(3);
    const auto rho = testing::random_state(rng, 3);
    CHECK(max_abs(permute_wires(rho, {1, 2, 3}).matrix() - rho.matrix()) < 1e-15);
    CHECK(max_abs(permute_wires(ket({0, 1}), {2, 1}).matrix() - ket({1, 0}).matrix()) < 1e-15);
    CHECK_THROWS_AS(permute_wires(rho, {1, 1, 2}), WireError);
    CHECK_THROWS_AS(permute_wires(rho, {1, 2}), WireError);
  }

  TEST_CASE("canonical form examples") {
    const auto c = to_canonical(ket({0, 0}));
    CHECK((c.x - Eigen::Vector3d(0, 0, 1)).norm() < 1e-15);
    CHECK((c.y - Eigen::Vector3d(0, 0, 1)).norm() < 1e-15);
    CHECK((c.t - Eigen::Vector3d(0, 0, 1).asDiagonal().toDenseMatrix()).norm() < 1e-15);
    const auto m = to_canonical(DensityOp::maximally_mixed(2));
    CHECK(m.x.norm() + m.y.norm() + m.t.norm() < 1e-15);
    for (double k : {0.1, 0.3, 0.5}) {
      const auto n = to_canonical(families::nme(k));
      const double s = 2.0 * std::sqrt(k * (1.0 - k));
      CHECK(n.t(0, 0) == doctest::Approx(s));
      CHECK(n.t(1, 1) == doctest::Approx(-s));
      CHECK(n.t(2, 2) == doctest::Approx(1.0));
    }
  }

  TEST_CASE("from_canonical inverts to_canonical") {
    CHECK(max_abs(from_canonical(CanonicalTwoQubit{}).matrix() -
                  DensityOp::maximally_mixed(2).matrix()) < 1e-15);
    CanonicalTwoQubit c;
    c.x = c.y = Eigen::Vector3d(0, 0, 1);
    c.t(2, 2) = 1.0;
    CHECK(max_abs(from_canonical(c).matrix() - ket({0, 0}).matrix()) < 1e-15);
    c.x = Eigen::Vector3d(0, 0, 1.5);
    CHECK_THROWS_AS(from_canonical(c), InvalidStateError);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const auto rho = testing::random_state(rng);
      CHECK(max_abs(from_canonical(to_canonical(rho)).matrix() - rho.matrix()) < 1e-13);
    }
  }

  TEST_CASE("MEMS-I canonical triple reproduces the explicit matrix") {
    for (double r : {0.7, 0.8, 0.95, 1.0}) {
      CanonicalTwoQubit c;
      c.x = Eigen::Vector3d(0, 0, 1.0 - r);
      c.y = Eigen::Vector3d(0, 0, r - 1.0);
      c.t.diagonal() << r, -r, 2.0 * r - 1.0;
      CHECK(max_abs(canonical_matrix(c) - families::mems_i_matrix(r)) < 1e-14);
    }
  }

  TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(DensityOp(CMatrix::Identity(3, 3) / 3.0), DimensionError);
    CHECK_THROWS_AS(DensityOp(CMatrix::Identity(2, 2)), InvalidStateError);
    CMatrix nonherm = CMatrix::Identity(2, 2) / 2.0;
    nonherm(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityOp{nonherm}, InvalidStateError);
    CMatrix negative = CMatrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityOp{negative}, InvalidStateError);
    CHECK_THROWS_AS(DensityOp::maximally_mixed(7), CapacityError);
  }

  TEST_CASE("isometries") {
    std::mt19937_64 rng(5);
    const auto rho = testing::random_state(rng, 2);
    const auto same = apply_isometry(rho, Isometry::identity(2), WireMap::leading(2, {1}));
    CHECK(max_abs(same.matrix() - rho.matrix()) < 1e-15);
    CMatrix bad = CMatrix::Identity(4, 2) * 2.0;
    CHECK_THROWS_AS(Isometry{bad}, NumericalError);
    CHECK_THROWS_AS(Isometry{CMatrix::Identity(2, 4)}, DimensionError);
  }

  TEST_CASE("traced application agrees with apply then trace") {
    std::mt19937_64 rng(9);
    const auto rho = testing::random_state(rng, 2);
    // A random 2 -> 8 isometry from the QR factor of two random columns.
    CMatrix cols(8, 2);
    cols.col(0) = sampling::random_pure_vector(rng, 3);
    cols.col(1) = sampling::random_pure_vector(rng, 3);
    Eigen::HouseholderQR<CMatrix> qr(cols);
    const CMatrix v = qr.householderQ() * CMatrix::Identity(8, 2);
    const Isometry iso(v);
    const auto placement = WireMap::leading(2, {2});
    const auto full = apply_isometry(rho, iso, placement);
    // V's three output wires come first, then the untouched wire 1.
    const std::array<int, 1> discard = {3};
    const auto traced = apply_isometry_traced(rho, iso, placement, discard);
    CHECK(max_abs(partial_trace(full, {1, 2, 4}).matrix() - traced.matrix()) < 1e-13);
  }
}
