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

#include "helpers.hpp"
#include "qbroadcast/errors.hpp"
#include "qbroadcast/families.hpp"
#include "qbroadcast/measures.hpp"

using namespace qbroadcast;
using namespace qbroadcast::measures;
using qbroadcast::testing::bell_phi_plus;

TEST_SUITE("measures") {
  TEST_CASE("Peres-Horodecki examples") {
    const auto bell = ph_report(bell_phi_plus());
    CHECK(bell.min_pt_eig == doctest::Approx(-0.5));
    CHECK(bell.entangled);
    CHECK(bell.ladder_entangled());
    std::vector<int> zeros = {0, 0};
    const auto prod = ph_report(qcore::DensityOp::basis(zeros));
    CHECK(std::abs(prod.min_pt_eig) < 1e-15);
    CHECK_FALSE(prod.entangled);
    CHECK_THROWS_AS(ph_report(qcore::DensityOp::maximally_mixed(3)), DimensionError);
  }

  TEST_CASE("Werner-like state at k = 1/2 is entangled iff p > 1/3") {
    for (int i = 0; i <= 300; ++i) {
      const double p = i / 300.0;
      if (std::abs(p - 1.0 / 3.0) < 1e-6) continue;
      CHECK(ph_report(families::werner_like(p, 0.5)).entangled == (p > 1.0 / 3.0));
    }
  }

  TEST_CASE("canonical and matrix PH routes agree") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
      const auto rho = testing::random_state(rng);
      const auto c = qcore::to_canonical(rho);
      CHECK(min_pt_eigenvalue(c) == doctest::Approx(ph_report(rho).min_pt_eig).epsilon(1e-10));
      CHECK(ph_report(c).entangled == ph_report(rho).entangled);
    }
  }

  TEST_CASE("eigenvalue test and determinant ladder agree on random states") {
    std::mt19937_64 rng(1);
    int disagreements = 0;
    for (int i = 0; i < 10000; ++i) {
      const auto r = ph_report(testing::random_state(rng));
      if (std::abs(r.min_pt_eig) < 1e-8) continue;
      if (r.entangled != r.ladder_entangled()) ++disagreements;
    }
    CHECK(disagreements == 0);
  }

  TEST_CASE("concurrence examples") {
    for (double r : {0.1, 0.5, 2.0 / 3.0, 0.8, 1.0}) {
      CHECK(concurrence(families::mems(r)) == doctest::Approx(r).epsilon(1e-9));
    }
    std::vector<int> bits = {0, 1};
    CHECK(concurrence(qcore::DensityOp::basis(bits)) == doctest::Approx(0.0));
    for (double k : {0.0, 0.3, 0.5, 0.9}) {
      CHECK(concurrence(families::nme(k)) ==
            doctest::Approx(2.0 * std::sqrt(k * (1.0 - k))).epsilon(1e-7));
    }
  }

  TEST_CASE("concurrence is positive exactly when the PH test fires") {
    std::mt19937_64 rng(2);
    int disagreements = 0;
    for (int i = 0; i < 2000; ++i) {
      const auto rho = testing::random_state(rng);
      const auto r = ph_report(rho);
      if (std::abs(r.min_pt_eig) < 1e-8) continue;
      if ((concurrence(rho) > 1e-10) != r.entangled) ++disagreements;
    }
    CHECK(disagreements == 0);
  }

  TEST_CASE("geometric discord examples") {
    std::vector<int> zeros = {0, 0};
    CHECK(geometric_discord(qcore::DensityOp::basis(zeros)).d_g == doctest::Approx(0.0));
    CHECK(geometric_discord(bell_phi_plus()).d_g == doctest::Approx(0.5));
    CHECK(geometric_discord(qcore::DensityOp::maximally_mixed(2)).d_g == doctest::Approx(0.0));
  }

  TEST_CASE("linear entropy examples") {
    CHECK(linear_entropy(bell_phi_plus()) == doctest::Approx(0.0));
    CHECK(linear_entropy(qcore::DensityOp::maximally_mixed(2)) == doctest::Approx(1.0));
    const auto m = families::mems(2.0 / 3.0);
    const double purity = (m.matrix() * m.matrix()).trace().real();
    CHECK(linear_entropy(m) == doctest::Approx(4.0 / 3.0 * (1.0 - purity)));
  }

  TEST_CASE("measures are invariant under local unitaries") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
      const auto rho = testing::random_state(rng);
      const auto rot = testing::local_rotate(rho, sampling::random_unitary2(rng),
                                             sampling::random_unitary2(rng));
      CHECK(ph_report(rot).min_pt_eig == doctest::Approx(ph_report(rho).min_pt_eig).epsilon(1e-9));
      CHECK(concurrence(rot) == doctest::Approx(concurrence(rho)).epsilon(1e-9));
      CHECK(geometric_discord(rot).d_g == doctest::Approx(geometric_discord(rho).d_g).epsilon(1e-9));
      CHECK(linear_entropy(rot) == doctest::Approx(linear_entropy(rho)).epsilon(1e-9));
    }
  }
}
