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

// Acceptance suite: one PASS/FAIL line per criterion. Criteria listed in
// kKnownDeviations are reported as FAIL when they fail but do not change the
// exit status; any other failure does.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qbroadcast/cli.hpp"
#include "qbroadcast/cloners.hpp"
#include "qbroadcast/families.hpp"
#include "qbroadcast/measures.hpp"
#include "qbroadcast/pipelines.hpp"
#include "qbroadcast/sampling.hpp"
#include "qbroadcast/scan.hpp"
#include "qbroadcast/unisearch.hpp"

namespace {

using namespace qbroadcast;
using namespace qbroadcast::pipelines;

// Documented shortfalls of the reproduced regions; see README.
const std::set<int> kKnownDeviations = {7, 10};

constexpr double kTol = measures::kEntanglementTol;
constexpr std::uint64_t kSeed = 2026;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) passed = false;
    if (detail.tellp() > 0) detail << "; ";
    detail << (ok ? "" : "[x] ") << what;
  }
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

bool within(double v, double target, double tol) { return std::abs(v - target) <= tol; }

void verify_scope(Outcome& o, const std::string& scope) {
  for (const auto& r : cli::run_verify(scope, kSeed, kTol)) o.check(r.passed, r.name + " " + r.detail);
}

// 1. Closed forms against simulation, 200 draws per pipeline.
void criterion_oracles(Outcome& o) { verify_scope(o, "closed-forms"); }

// 2. MEMS local threshold at p = 1/2.
void criterion_mems_local(Outcome& o) {
  const double exact = 5.0 / 36.0 * (2.0 + std::sqrt(13.0));
  const auto r = mems_threshold(0.5, CloneMode::kLocal, Group::kDiagonal);
  o.check(r && within(*r, exact, 1e-4),
          "r* = " + (r ? fmt(*r, 10) : std::string("none")) + ", exact " + fmt(exact, 10));
}

// 3. Minimum concurrence for nonlocal broadcasting of MEMS.
void criterion_mems_nonlocal(Outcome& o) {
  double best = 2.0, best_p = -1.0;
  auto probe = [&](double p) {
    for (Group g : {Group::kDiagonal, Group::kHorizontal}) {
      const auto r = mems_threshold(p, CloneMode::kNonlocal, g);
      if (r && *r < best) {
        best = *r;
        best_p = p;
      }
    }
  };
  for (double p : families::linspace(0.0, 1.0, 201)) probe(p);
  if (best_p >= 0.0) {
    for (double p : families::linspace(std::max(0.0, best_p - 0.005),
                                       std::min(1.0, best_p + 0.005), 41)) {
      probe(p);
    }
  }
  o.check(within(best, 0.58, 0.01), "min r* = " + fmt(best) + " at p = " + fmt(best_p));
}

// 4. Lower asymmetry cutoffs for local broadcasting of MEMS.
void criterion_cutoffs(Outcome& o) {
  for (Group g : {Group::kDiagonal, Group::kHorizontal}) {
    const double target = g == Group::kDiagonal ? 0.30 : 0.44;
    auto any = [g](double p) {
      return mems_threshold(p, CloneMode::kLocal, g).has_value();
    };
    // Grid check: the smallest grid p admitting a broadcastable point.
    double first = 2.0;
    for (double p : families::linspace(0.0, 1.0, 201)) {
      if (any(p)) {
        first = p;
        break;
      }
    }
    const double cut = any(0.5) && !any(0.0) ? bisect_flip(any, 0.0, 0.5, 40) : -1.0;
    o.check(within(cut, target, 0.02) && first >= cut - 0.005,
            group_name(g) + " cutoff p = " + fmt(cut) + " (first grid p " + fmt(first) +
                ", expected " + fmt(target) + ")");
  }
}

// 5. MEMS-II never broadcasts with local cloners.
void criterion_mems2(Outcome& o) {
  const auto s = mems2_local_sweep(201, 201);
  o.check(s.hits == 0, std::to_string(s.hits) + " of " + std::to_string(s.points) +
                           " points broadcast on 201 x 201");
}

// 6. Discord formulas and the zero-discord implication.
void criterion_discord(Outcome& o) { verify_scope(o, "discord"); }

// 7. Successive nonlocal 1 -> 3 region.
void criterion_successive_nonlocal(Outcome& o) {
  const int n = 101;
  const auto t = scan_fig4(n, 101);
  const auto s = summarize_region(t, "p1", "p2");
  o.check(within(s.k_min, 0.13, 0.01), "k_min " + fmt(s.k_min) + " vs 0.13");
  o.check(within(s.k_max, 0.87, 0.01), "k_max " + fmt(s.k_max) + " vs 0.87");
  o.check(within(s.u_min, 0.48, 0.02) && within(s.u_max, 0.67, 0.02),
          "p1 box [" + fmt(s.u_min) + ", " + fmt(s.u_max) + "] vs [0.48, 0.67]");
  o.check(within(s.v_min, 0.38, 0.02) && within(s.v_max, 0.62, 0.02),
          "p2 box [" + fmt(s.v_min) + ", " + fmt(s.v_max) + "] vs [0.38, 0.62]");
  o.check(within(s.best_u, 0.60, 0.03) && within(s.best_v, 0.50, 0.02),
          "max sigma " + fmt(s.best_sigma) + " at (" + fmt(s.best_u) + ", " + fmt(s.best_v) + ")");
  const auto cf = t.column("feasible"), cs = t.column("sigma");
  int asym = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& a = t.rows[i * n + j];
      const auto& b = t.rows[i * n + (n - 1 - j)];
      if (a[cf] != b[cf] || std::abs(a[cs] - b[cs]) > 1e-6) ++asym;
    }
  }
  o.check(asym == 0, std::to_string(asym) + " cells break the p2 <-> 1 - p2 symmetry");
}

// 8. Successive local cloning never entangles all three nonlocal pairs.
void criterion_successive_local(Outcome& o) {
  const auto s = successive_local_sweep(21, 41);
  o.check(s.hits == 0, std::to_string(s.hits) + " of " + std::to_string(s.points) +
                           " (p1, p2, k) points with all nonlocal pairs entangled");
}

// 9. Direct local 1 -> 3 cloning is never optimal.
void criterion_direct_local(Outcome& o) {
  const auto s = direct_local_sweep(21, 41);
  o.check(s.hits == 0, std::to_string(s.hits) + " of " + std::to_string(s.points) +
                           " feasible (alpha, beta, k) points optimal");
}

// 10. Direct nonlocal 1 -> 3 region.
void criterion_direct_nonlocal(Outcome& o) {
  const auto t = scan_fig6(101, 101);
  const auto s = summarize_region(t, "beta", "gamma");
  o.check(within(s.k_min, 0.09, 0.01), "k_min " + fmt(s.k_min) + " vs 0.09");
  o.check(within(s.k_max, 0.91, 0.01), "k_max " + fmt(s.k_max) + " vs 0.91");
  const auto sym = cloners::Asym13::symmetric(4);
  const auto exact = direct_k_range(sym.alpha, sym.beta, sym.gamma, CloneMode::kNonlocal, 101);
  o.check(exact.sigma() >= s.best_sigma - 1e-9 && within(s.best_u, sym.beta, 0.01) &&
              within(s.best_v, sym.gamma, 0.01),
          "grid max sigma " + fmt(s.best_sigma) + " at (" + fmt(s.best_u) + ", " + fmt(s.best_v) +
              "), symmetric triple sigma " + fmt(exact.sigma()));
  o.check(within(s.u_min, 0.3, 0.02) && within(s.u_max, 0.7, 0.02),
          "beta box [" + fmt(s.u_min) + ", " + fmt(s.u_max) + "] vs (0.3, 0.7)");
  o.check(within(s.v_min, 0.3, 0.02) && within(s.v_max, 0.7, 0.02),
          "gamma box [" + fmt(s.v_min) + ", " + fmt(s.v_max) + "] vs (0.3, 0.7)");
}

// 11. Reference unitaries from their parameters.
void criterion_reference_unitaries(Outcome& o) {
  Eigen::Matrix4d w, b;
  w << 1, 0, 0, 0, 0, -0.0773, -0.9898, -0.1194, 0, -0.8255, 0.1306, -0.5490, 0, 0.5590, 0.0561,
      -0.8272;
  b << 0.8090, 0.1816, -0.4523, 0.3286, -0.1816, -0.8273, -0.4301, 0.3125, 0.5590, -0.5317,
      0.5148, -0.3740, 0, 0, -0.5878, -0.8090;
  const auto refs = unisearch::reference_unitaries();
  for (const auto& [name, params, rounded] :
       {std::tuple{"werner", refs.werner, w}, std::tuple{"bds", refs.bds, b}}) {
    const Eigen::Matrix4d u = unisearch::u4_from_params(params);
    const double dev = (u - rounded).cwiseAbs().maxCoeff();
    const double unit = (u.transpose() * u - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
    o.check(dev <= 1e-3 && unit <= 1e-10, std::string(name) + " entry deviation " + fmt(dev, 3) +
                                              ", unitarity error " + fmt(unit, 3));
  }
}

// 12. Reference unitaries strictly dominate the symmetric cloner.
void criterion_dominance(Outcome& o) {
  const auto refs = unisearch::reference_unitaries();
  for (auto f : {unisearch::SearchFamily::kWernerLike, unisearch::SearchFamily::kBellDiagonal}) {
    const bool werner = f == unisearch::SearchFamily::kWernerLike;
    const int n = werner ? 201 : 101;
    const auto grid = unisearch::family_grid(f, n);
    const Eigen::Matrix4cd u =
        unisearch::u4_from_params(werner ? refs.werner : refs.bds).cast<std::complex<double>>();
    const auto uni = unisearch::range_fraction(u, grid, kTol);
    const auto base = unisearch::cloner_baseline(grid, kTol);
    std::size_t cloner_only = 0, unitary_only = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (base.mask[i] && !uni.mask[i]) ++cloner_only;
      if (uni.mask[i] && !base.mask[i]) ++unitary_only;
    }
    const double share = static_cast<double>(unitary_only) / static_cast<double>(grid.size());
    o.check(cloner_only == 0 && share >= 0.01,
            unisearch::search_family_name(f) + " (" + std::to_string(grid.size()) +
                " points): unitary " + std::to_string(uni.broadcastable) + ", cloner " +
                std::to_string(base.broadcastable) + ", cloner-only " +
                std::to_string(cloner_only) + ", unitary-only share " + fmt(share, 4));
  }
}

// 13. Property suites.
void criterion_properties(Outcome& o) {
  std::mt19937_64 rng(kSeed);

  for (const auto& r : cli::run_verify("closed-forms", kSeed, kTol)) {
    if (r.name == "closed-forms/symmetric-limit") o.check(r.passed, r.name + " " + r.detail);
  }

  double iso = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto a = cloners::Asym12::from_p(sampling::uniform(rng));
    iso = std::max({iso, cloners::local_cloner_isometry(a).isometry_error(),
                    cloners::nonlocal_cloner_isometry(a).isometry_error()});
  }
  for (int d : {2, 4}) {
    iso = std::max(iso, cloners::direct13_isometry(cloners::Asym13::symmetric(d)).isometry_error());
  }
  o.check(iso < 1e-12, "isometry error " + fmt(iso, 3));

  double drift = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto rho = sampling::random_mixed_state(rng);
    const Eigen::Matrix2cd u1 = sampling::random_unitary2(rng), u2 = sampling::random_unitary2(rng);
    Eigen::Matrix4cd u;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) u.block<2, 2>(2 * r, 2 * c) = u1(r, c) * u2;
    }
    const qcore::DensityOp rot(u * rho.matrix() * u.adjoint());
    drift = std::max({drift,
                      std::abs(measures::concurrence(rot) - measures::concurrence(rho)),
                      std::abs(measures::ph_report(rot).min_pt_eig -
                               measures::ph_report(rho).min_pt_eig),
                      std::abs(measures::geometric_discord(rot).d_g -
                               measures::geometric_discord(rho).d_g)});
  }
  o.check(drift < 1e-9, "local-unitary drift " + fmt(drift, 3) + " over 1000 draws");

  int counterexamples = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto rho = sampling::random_mixed_state(rng);
    const auto e = broadcast_1to2(rho, cloners::Asym12::from_p(sampling::uniform(rng)),
                                  CloneMode::kNonlocal);
    if (measures::ph_report(e.pair("14"), kTol).entangled ||
        measures::ph_report(e.pair("23"), kTol).entangled) {
      ++counterexamples;
    }
  }
  o.check(counterexamples == 0, "diagonal-pair probe: " + std::to_string(counterexamples) +
                                    " counterexamples in 10000 simulated draws (evidence only)");
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"oracle-equivalence", criterion_oracles},
      {"mems-local-threshold", criterion_mems_local},
      {"mems-nonlocal-minimum", criterion_mems_nonlocal},
      {"local-asymmetry-cutoffs", criterion_cutoffs},
      {"mems-ii-local", criterion_mems2},
      {"discord", criterion_discord},
      {"successive-nonlocal-region", criterion_successive_nonlocal},
      {"successive-local-impossibility", criterion_successive_local},
      {"direct-local-impossibility", criterion_direct_local},
      {"direct-nonlocal-region", criterion_direct_nonlocal},
      {"reference-unitaries", criterion_reference_unitaries},
      {"unitary-dominance", criterion_dominance},
      {"property-suites", criterion_properties},
  };
  int passed = 0, unexpected = 0;
  std::vector<int> known;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%s %2d %s (%.1fs): %s\n", o.passed ? "PASS" : "FAIL", id,
                criteria[i].first.c_str(), secs, o.detail.str().c_str());
    std::fflush(stdout);
    if (o.passed) {
      ++passed;
    } else if (kKnownDeviations.count(id)) {
      known.push_back(id);
    } else {
      ++unexpected;
    }
  }
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("summary: %d of %zu criteria pass", passed, criteria.size());
  if (!known.empty()) {
    std::printf("; documented deviations failing:");
    for (int id : known) std::printf(" %d", id);
  }
  std::printf("; unexpected failures: %d; runtime %.1fs\n", unexpected, total);
  return unexpected == 0 ? 0 : 1;
}
