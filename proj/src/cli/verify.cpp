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

#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qbroadcast/cli.hpp"
#include "qbroadcast/families.hpp"
#include "qbroadcast/pipelines.hpp"
#include "qbroadcast/sampling.hpp"
#include "qbroadcast/scan.hpp"

namespace qbroadcast::cli {
namespace {

using namespace qbroadcast::pipelines;
using sampling::uniform;

double worst_distance(const CanonicalEnsemble& a, const CanonicalEnsemble& b) {
  double w = 0.0;
  for (const auto& [label, c] : a) w = std::max(w, c.distance(b.at(label)));
  return w;
}

CheckResult threshold_check(const std::string& name, double worst, double limit, int draws) {
  std::ostringstream os;
  os << draws << " draws, worst entry deviation " << format_double(worst) << " (limit "
     << limit << ")";
  return CheckResult{name, worst <= limit, os.str()};
}

// Random constraint-satisfying triple; gamma is the larger root.
cloners::Asym13 random_triple(std::mt19937_64& rng, int d) {
  for (;;) {
    const double a = uniform(rng, 0.0, 1.0), b = uniform(rng, 0.0, 1.0);
    try {
      return cloners::Asym13{a, b, cloners::solve_gamma(a, b, d).front(), d};
    } catch (const InfeasibleAsymmetryError&) {
    }
  }
}

void closed_form_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  constexpr int kDraws12 = 200;
  constexpr int kDraws13 = 200;
  for (CloneMode mode : {CloneMode::kLocal, CloneMode::kNonlocal}) {
    double worst = 0.0;
    for (int i = 0; i < kDraws12; ++i) {
      const auto rho = sampling::random_mixed_state(rng);
      const auto a = cloners::Asym12::from_p(uniform(rng));
      worst = std::max(worst, worst_distance(closed_form_1to2(qcore::to_canonical(rho), a, mode),
                                             broadcast_1to2(rho, a, mode).canonical()));
    }
    out.push_back(threshold_check("closed-forms/1to2-" + mode_name(mode), worst, 1e-9, kDraws12));
  }
  for (CloneMode mode : {CloneMode::kLocal, CloneMode::kNonlocal}) {
    for (Step2Choice step2 : {Step2Choice::kDefault, Step2Choice::kMirrored}) {
      double worst = 0.0;
      for (int i = 0; i < kDraws13; ++i) {
        const double k = uniform(rng);
        const auto sp = cloners::SuccessiveParams::from_p(uniform(rng), uniform(rng));
        worst = std::max(worst, worst_distance(closed_form_successive(k, sp, mode, step2),
                                               successive_broadcast(k, sp, mode, step2).canonical()));
      }
      out.push_back(threshold_check("closed-forms/successive-" + mode_name(mode) +
                                        (step2 == Step2Choice::kMirrored ? "-mirrored" : ""),
                                    worst, 1e-9, kDraws13));
    }
  }
  for (CloneMode mode : {CloneMode::kLocal, CloneMode::kNonlocal}) {
    double worst = 0.0;
    for (int i = 0; i < kDraws13; ++i) {
      const double k = uniform(rng);
      const auto a = random_triple(rng, mode == CloneMode::kLocal ? 2 : 4);
      worst = std::max(worst,
                       worst_distance(closed_form_direct13(k, a.alpha, a.beta, a.gamma, mode),
                                      direct13_broadcast(k, a, mode).canonical()));
    }
    out.push_back(threshold_check("closed-forms/direct-" + mode_name(mode), worst, 1e-9, kDraws13));
  }
  // Symmetric cloners shrink Bloch vectors by 2/3 (local) and 3/5 (nonlocal).
  const auto half = cloners::Asym12::from_p(0.5);
  const bool sym = std::abs(half.p * half.mu() - 2.0 / 3.0) < 1e-15 &&
                   std::abs(half.p * half.q * half.mu() - 1.0 / 3.0) < 1e-15 &&
                   std::abs(half.kappa1() - 0.6) < 1e-15 && std::abs(half.kappa2() - 0.6) < 1e-15;
  out.push_back(CheckResult{"closed-forms/symmetric-limit", sym,
                            "p = 1/2: local 2/3 and 1/3, nonlocal 3/5"});
}

void theorem_checks(std::vector<CheckResult>& out, double tol) {
  ScanOptions opt;
  opt.tol = tol;
  const double exact = 5.0 / 36.0 * (2.0 + std::sqrt(13.0));
  const auto thr = mems_threshold(0.5, CloneMode::kLocal, Group::kDiagonal, 401, opt);
  out.push_back(CheckResult{"theorems/mems-local-threshold",
                            thr && std::abs(*thr - exact) <= 1e-6,
                            "r* = " + (thr ? format_double(*thr) : std::string("none")) +
                                ", expected " + format_double(exact)});
  auto sweep_check = [&](const std::string& name, const SweepCount& s, const std::string& grid) {
    out.push_back(CheckResult{name, s.hits == 0,
                              grid + ": " + std::to_string(s.hits) + " of " +
                                  std::to_string(s.points) + " points broadcast"});
  };
  sweep_check("theorems/mems-ii-local", mems2_local_sweep(201, 201, opt), "201 x 201 (r, p)");
  sweep_check("theorems/successive-local", successive_local_sweep(21, 41, opt),
              "21 x 21 x 41 (p1, p2, k)");
  sweep_check("theorems/direct-local", direct_local_sweep(21, 41, opt),
              "21 x 21 (alpha, beta) x 41 k");
  // Mirrored step-2 choice equals the default one with p1 -> 1 - p1.
  int mismatches = 0;
  const auto ps = families::linspace(0.0, 1.0, 21);
  for (double p1 : ps) {
    for (double p2 : ps) {
      const auto a = successive_k_range(cloners::SuccessiveParams::from_p(p1, p2),
                                        CloneMode::kNonlocal, Step2Choice::kMirrored, 41, opt);
      const auto b = successive_k_range(cloners::SuccessiveParams::from_p(1.0 - p1, p2),
                                        CloneMode::kNonlocal, Step2Choice::kDefault, 41, opt);
      if (a.feasible != b.feasible ||
          (a.feasible && (std::abs(a.k_lo - b.k_lo) > 1e-9 || std::abs(a.k_hi - b.k_hi) > 1e-9))) {
        ++mismatches;
      }
    }
  }
  out.push_back(CheckResult{"theorems/successive-mirror", mismatches == 0,
                            std::to_string(mismatches) + " mismatches on 21 x 21 (p1, p2)"});
}

void discord_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  const auto sample = qcore::to_canonical(sampling::random_mixed_state(rng));
  for (CloneMode mode : {CloneMode::kLocal, CloneMode::kNonlocal}) {
    double worst = 0.0;
    for (double p : families::linspace(0.0, 1.0, 101)) {
      const auto d = discord_audit_1to2(cloners::Asym12::from_p(p), mode, sample);
      worst = std::max({worst, std::abs(d.simulated_13 - d.formula),
                        std::abs(d.simulated_24 - d.formula)});
    }
    out.push_back(threshold_check("discord/formula-" + mode_name(mode), worst, 1e-10, 101));
    bool holds = true;
    for (double p : {0.0, 1.0}) {
      const auto d = discord_audit_1to2(cloners::Asym12::from_p(p), mode, sample);
      holds = holds && d.simulated_13 <= 1e-12 && d.implication_holds;
    }
    out.push_back(CheckResult{"discord/zero-implication-" + mode_name(mode), holds,
                              "p = 0 and q = 0: D_G(13) = 0 forces a zero-discord pair per group"});
  }
}

}  // namespace

std::vector<CheckResult> run_verify(const std::string& scope, std::uint64_t seed, double tol) {
  if (scope != "all" && scope != "closed-forms" && scope != "theorems" && scope != "discord") {
    throw std::invalid_argument("unknown verify scope '" + scope + "'");
  }
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> out;
  if (scope == "all" || scope == "closed-forms") closed_form_checks(out, rng);
  if (scope == "all" || scope == "theorems") theorem_checks(out, tol);
  if (scope == "all" || scope == "discord") discord_checks(out, rng);
  return out;
}

}  // namespace qbroadcast::cli
