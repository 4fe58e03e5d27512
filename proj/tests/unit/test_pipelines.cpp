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
#include "qbroadcast/closed_forms.hpp"
#include "qbroadcast/errors.hpp"
#include "qbroadcast/families.hpp"
#include "qbroadcast/pipelines.hpp"

using namespace qbroadcast;
using namespace qbroadcast::pipelines;
using qcore::CanonicalTwoQubit;

namespace {

CanonicalTwoQubit triple(const Eigen::Vector3d& x, const Eigen::Vector3d& y,
                         const Eigen::Matrix3d& t) {
  CanonicalTwoQubit c;
  c.x = x;
  c.y = y;
  c.t = t;
  return c;
}

double worst(const CanonicalEnsemble& closed, const OutputEnsemble& brute) {
  double w = 0.0;
  for (const auto& [label, c] : closed) {
    w = std::max(w, c.distance(qcore::to_canonical(brute.pair(label))));
  }
  return w;
}

Eigen::Vector3d ez(double v) { return Eigen::Vector3d(0, 0, v); }

}  // namespace

TEST_SUITE("pipelines") {
  TEST_CASE("closed forms agree with simulation on random inputs") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
      const auto rho = testing::random_state(rng);
      const auto a = cloners::Asym12::from_p(sampling::uniform(rng));
      for (CloneMode m : {CloneMode::kLocal, CloneMode::kNonlocal}) {
        const auto e = broadcast_1to2(rho, a, m);
        CHECK(e.pairs.size() == 6);
        CHECK(worst(closed_form_1to2(qcore::to_canonical(rho), a, m), e) < 1e-9);
      }
    }
    for (int i = 0; i < 5; ++i) {
      const double k = sampling::uniform(rng);
      const auto sp = cloners::SuccessiveParams::from_p(sampling::uniform(rng),
                                                        sampling::uniform(rng));
      for (CloneMode m : {CloneMode::kLocal, CloneMode::kNonlocal}) {
        for (Step2Choice s : {Step2Choice::kDefault, Step2Choice::kMirrored}) {
          const auto e = successive_broadcast(k, sp, m, s);
          CHECK(e.pairs.size() == 15);
          CHECK(worst(closed_form_successive(k, sp, m, s), e) < 1e-9);
        }
      }
      const auto a2 = cloners::Asym13::symmetric(2);
      CHECK(worst(closed_form_direct13(k, a2.alpha, a2.beta, a2.gamma, CloneMode::kLocal),
                  direct13_broadcast(k, a2, CloneMode::kLocal)) < 1e-9);
    }
  }

  TEST_CASE("symmetric 1->2 local outputs") {
    std::mt19937_64 rng(8);
    const auto c = qcore::to_canonical(testing::random_state(rng));
    const auto e = closed_form_1to2(c, cloners::Asym12::from_p(0.5), CloneMode::kLocal);
    const auto expect13 = triple(2.0 / 3.0 * c.x, 2.0 / 3.0 * c.x, Eigen::Matrix3d::Identity() / 3.0);
    CHECK(e.at("13").distance(expect13) < 1e-14);
    CHECK(e.at("14").distance(triple(2.0 / 3.0 * c.x, 2.0 / 3.0 * c.y, 4.0 / 9.0 * c.t)) < 1e-14);
  }

  TEST_CASE("MEMS-I diagonal pair after local cloning") {
    for (double r : {0.7, 0.9}) {
      for (double p : {0.3, 0.5, 0.8}) {
        const auto a = cloners::Asym12::from_p(p);
        const auto e = closed_form_1to2(families::mems_canonical(r), a, CloneMode::kLocal);
        const double mu = a.mu();
        Eigen::Matrix3d t = Eigen::Vector3d(r, -r, 2 * r - 1).asDiagonal();
        const auto expect =
            triple(ez(p * (1 - r) * mu), ez(a.q * (r - 1) * mu), a.p * a.q * mu * mu * t);
        CHECK(e.at("14").distance(expect) < 1e-14);
      }
    }
  }

  TEST_CASE("nonlocal 1->2 outputs") {
    std::mt19937_64 rng(12);
    const auto c = qcore::to_canonical(testing::random_state(rng));
    const auto a = cloners::Asym12::from_p(0.35);
    const auto e = closed_form_1to2(c, a, CloneMode::kNonlocal);
    const double k1 = a.kappa1(), k2 = a.kappa2();
    CHECK(e.at("13").distance(triple(k1 * c.x, k2 * c.x,
                                     k1 * a.q / (1 + a.p) * Eigen::Matrix3d::Identity())) < 1e-14);
    CHECK(e.at("12").distance(triple(k1 * c.x, k1 * c.y, k1 * c.t)) < 1e-14);
    const auto s = closed_form_1to2(c, cloners::Asym12::from_p(0.5), CloneMode::kNonlocal);
    CHECK(s.at("12").distance(triple(0.6 * c.x, 0.6 * c.y, 0.6 * c.t)) < 1e-14);
  }

  TEST_CASE("reduced states are consistent across pairs") {
    std::mt19937_64 rng(13);
    const auto e = broadcast_1to2(testing::random_state(rng), cloners::Asym12::from_p(0.4),
                                  CloneMode::kLocal);
    const auto from13 = qcore::partial_trace(e.pair("13"), {1});
    const auto from14 = qcore::partial_trace(e.pair("14"), {1});
    CHECK(testing::max_abs(from13.matrix() - from14.matrix()) < 1e-14);
  }

  TEST_CASE("degenerate p = 0 local cloner") {
    std::mt19937_64 rng(14);
    const auto c = qcore::to_canonical(testing::random_state(rng));
    const auto e = closed_form_1to2(c, cloners::Asym12::from_p(0.0), CloneMode::kLocal);
    CHECK(e.at("12").distance(CanonicalTwoQubit{}) < 1e-14);
  }

  TEST_CASE("MEMS verdicts") {
    const auto a = cloners::Asym12::from_p(0.5);
    auto optimal = [&](double r, Group g) {
      return verdict(broadcast_1to2(families::mems(r), a, CloneMode::kLocal), g).optimal;
    };
    CHECK(optimal(0.9, Group::kDiagonal));
    CHECK_FALSE(optimal(0.7, Group::kDiagonal));
    for (double r : {0.1, 0.4, 0.6}) {
      const auto v = verdict(broadcast_1to2(families::mems(r), a, CloneMode::kLocal),
                             Group::kDiagonal);
      CHECK_FALSE(v.nonlocal_entangled);
      CHECK_FALSE(v.optimal);
    }
    CHECK(group_pairs(Group::kDiagonal) == std::pair<std::string, std::string>{"14", "23"});
    CHECK(group_pairs(Group::kHorizontal) == std::pair<std::string, std::string>{"12", "34"});
  }

  TEST_CASE("separability bound") {
    CHECK(separability_bound(cloners::Asym12::from_p(0.5), CloneMode::kLocal) ==
          doctest::Approx(0.75));
    CHECK(separability_bound(cloners::Asym12::from_p(0.5), CloneMode::kNonlocal) ==
          doctest::Approx(8.0 / 9.0));
    // A pure product state has |x| = 1, above the local bound: the local
    // pairs are flagged and the PH test agrees.
    qcore::CanonicalTwoQubit c;
    c.x = c.y = ez(1.0);
    c.t(2, 2) = 1.0;
    const auto b = separability_bound_check(c, cloners::Asym12::from_p(0.5), CloneMode::kLocal);
    CHECK_FALSE(b.x_within);
    CHECK(b.agrees);
    std::mt19937_64 rng(15);
    for (int i = 0; i < 200; ++i) {
      const auto s = qcore::to_canonical(testing::random_state(rng));
      for (CloneMode m : {CloneMode::kLocal, CloneMode::kNonlocal}) {
        CHECK(separability_bound_check(s, cloners::Asym12::from_p(sampling::uniform(rng)), m)
                  .agrees);
      }
    }
  }

  TEST_CASE("discord formula and audits") {
    CHECK(discord_formula(cloners::Asym12::from_p(0.5), CloneMode::kLocal) ==
          doctest::Approx(1.0 / 18.0));
    CHECK(discord_formula(cloners::Asym12::from_p(0.5), CloneMode::kNonlocal) ==
          doctest::Approx(0.02));
    std::mt19937_64 rng(16);
    const auto sample = qcore::to_canonical(testing::random_state(rng));
    for (CloneMode m : {CloneMode::kLocal, CloneMode::kNonlocal}) {
      const auto a = discord_audit_1to2(cloners::Asym12::from_p(0.5), m, sample);
      CHECK(a.simulated_13 == doctest::Approx(a.formula).epsilon(1e-10));
      const auto z = discord_audit_1to2(cloners::Asym12::from_p(0.0), m, sample);
      CHECK(z.simulated_13 == doctest::Approx(0.0));
      CHECK(z.implication_holds);
    }
  }

  TEST_CASE("successive closed-form examples") {
    const double k = 0.3, kk = 2 * k - 1;
    const auto sp = cloners::SuccessiveParams::from_p(0.6, 0.45);
    const auto tn = families::nme_canonical(k).t;
    const auto loc = closed_form_successive(k, sp, CloneMode::kLocal);
    const double p1 = sp.P(1);
    CHECK(loc.at("12").distance(triple(ez(kk * p1), ez(kk * p1), p1 * p1 * tn)) < 1e-14);
    const auto non = closed_form_successive(k, sp, CloneMode::kNonlocal);
    const double z1 = sp.zeta(1);
    CHECK(non.at("34").distance(triple(ez(z1 * kk), ez(z1 * kk), z1 * tn)) < 1e-14);
    const double c2 = sp.p2 * sp.q2 / sp.eta(2);
    CHECK(non.at("15").distance(triple(ez(sp.tau(1) * sp.tau(2) * kk),
                                       ez(sp.tau(1) * sp.zeta(2) * kk),
                                       c2 * Eigen::Matrix3d::Identity())) < 1e-14);
  }

  TEST_CASE("direct closed-form examples") {
    const double k = 0.35;
    const auto tn = families::nme_canonical(k).t;
    const auto a2 = cloners::Asym13::symmetric(2);
    const auto c2 = ClosedForm13Coeffs::compute(a2.alpha, a2.beta, a2.gamma, k);
    const auto loc = closed_form_direct13(k, a2.alpha, a2.beta, a2.gamma, CloneMode::kLocal);
    CHECK(loc.at("12").distance(
              triple(ez(c2.A1 * c2.B), ez(c2.A1 * c2.B), c2.A1 * c2.A1 * tn)) < 1e-14);
    const auto a4 = cloners::Asym13::symmetric(4);
    const auto c4 = ClosedForm13Coeffs::compute(a4.alpha, a4.beta, a4.gamma, k);
    const auto non = closed_form_direct13(k, a4.alpha, a4.beta, a4.gamma, CloneMode::kNonlocal);
    CHECK(non.at("13").distance(
              triple(ez(c4.B1), ez(c4.B2), c4.C3 * Eigen::Matrix3d::Identity())) < 1e-14);
    CHECK(c4.B1 == doctest::Approx(c4.B2));
    CHECK(c4.B2 == doctest::Approx(c4.B3));
  }

  TEST_CASE("1->3 verdicts") {
    const auto sp = cloners::SuccessiveParams::from_p(0.6, 0.5);
    CHECK(verdict_1to3(closed_form_successive(0.5, sp, CloneMode::kNonlocal)).optimal);
    CHECK(verdict_1to3(successive_broadcast(0.5, sp, CloneMode::kNonlocal)).optimal);
    const auto v = verdict_1to3(closed_form_successive(0.5, sp, CloneMode::kLocal));
    CHECK(v.nonlocal_entangled_count < 3);
    const auto s4 = cloners::Asym13::symmetric(4);
    CHECK(optimal_1to3(closed_form_direct13(0.5, s4.alpha, s4.beta, s4.gamma,
                                            CloneMode::kNonlocal)));
  }

  TEST_CASE("input validation") {
    CHECK_THROWS_AS(broadcast_1to2(qcore::DensityOp::maximally_mixed(3),
                                   cloners::Asym12::from_p(0.5), CloneMode::kLocal),
                    DimensionError);
    CHECK_THROWS_AS(direct13_broadcast(0.5, cloners::Asym13::symmetric(2), CloneMode::kNonlocal),
                    ParameterError);
  }

  TEST_CASE("diagonal-pair separability probe under nonlocal cloning") {
    std::mt19937_64 rng(2024);
    int counterexamples = 0;
    for (int i = 0; i < 10000; ++i) {
      const auto c = qcore::to_canonical(testing::random_state(rng));
      const auto e = closed_form_1to2(c, cloners::Asym12::from_p(sampling::uniform(rng)),
                                      CloneMode::kNonlocal);
      if (measures::is_entangled(e.at("14")) || measures::is_entangled(e.at("23"))) {
        ++counterexamples;
      }
    }
    MESSAGE("diagonal-pair probe counterexamples: " << counterexamples << " of 10000");
    CHECK(counterexamples == 0);
  }
}
