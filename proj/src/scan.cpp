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

#include "qbroadcast/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "qbroadcast/errors.hpp"
#include "qbroadcast/families.hpp"
#include "qbroadcast/parallel.hpp"

namespace qbroadcast::pipelines {
namespace {

using families::linspace;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double b2d(bool b) { return b ? 1.0 : 0.0; }

const std::vector<std::string> kFig4Pairs = {"12", "34", "56", "13", "35",
                                             "15", "24", "46", "26"};

CanonicalEnsemble successive_ensemble(double k, const cloners::SuccessiveParams& sp,
                                      CloneMode mode, Step2Choice step2, bool brute) {
  if (brute) return successive_broadcast(k, sp, mode, step2).canonical();
  return closed_form_successive(k, sp, mode, step2);
}

CanonicalEnsemble direct_ensemble(double k, double a, double b, double g, CloneMode mode,
                                  bool brute) {
  if (brute) {
    const cloners::Asym13 asym{a, b, g, mode == CloneMode::kLocal ? 2 : 4};
    return direct13_broadcast(k, asym, mode).canonical();
  }
  return closed_form_direct13(k, a, b, g, mode);
}

}  // namespace

std::size_t ScanTable::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw Error("scan table has no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

bool mems_optimal(double r, double p, CloneMode mode, Group group, const ScanOptions& opt) {
  const cloners::Asym12 a = cloners::Asym12::from_p(p);
  if (opt.force_brute_force) {
    return verdict(broadcast_1to2(families::mems(r), a, mode), group, opt.tol).optimal;
  }
  return verdict(closed_form_1to2(families::mems_canonical(r), a, mode), group, opt.tol)
      .optimal;
}

double bisect_flip(const std::function<bool(double)>& pred, double lo, double hi,
                   int iterations) {
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::optional<double> mems_threshold(double p, CloneMode mode, Group group, int n_r,
                                     const ScanOptions& opt) {
  const auto rs = linspace(0.0, 1.0, n_r);
  auto ok = [&](double r) { return mems_optimal(r, p, mode, group, opt); };
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (!ok(rs[i])) continue;
    if (i == 0) return rs[0];
    return bisect_flip(ok, rs[i - 1], rs[i], opt.bisection_iterations);
  }
  return std::nullopt;
}

ScanTable scan_fig2(int n_r, int n_p, const ScanOptions& opt) {
  ScanTable t;
  t.columns = {"r", "p", "subclass"};
  for (const char* m : {"local", "nonlocal"}) {
    t.columns.push_back(std::string(m) + "_diagonal_optimal");
    t.columns.push_back(std::string(m) + "_horizontal_optimal");
    for (const char* pair : {"13", "24", "14", "23", "12", "34"}) {
      t.columns.push_back(std::string(m) + "_minpt_" + pair);
    }
  }
  const auto rs = linspace(0.0, 1.0, n_r);
  const auto ps = linspace(0.0, 1.0, n_p);
  t.rows.resize(rs.size() * ps.size());
  parallel_for(t.rows.size(), [&](std::size_t idx) {
    const double r = rs[idx / ps.size()];
    const double p = ps[idx % ps.size()];
    const auto a = cloners::Asym12::from_p(p);
    std::vector<double> row = {r, p, r > 2.0 / 3.0 ? 1.0 : 2.0};
    for (CloneMode mode : {CloneMode::kLocal, CloneMode::kNonlocal}) {
      const CanonicalEnsemble e =
          opt.force_brute_force
              ? broadcast_1to2(families::mems(r), a, mode).canonical()
              : closed_form_1to2(families::mems_canonical(r), a, mode);
      const auto vd = verdict(e, Group::kDiagonal, opt.tol);
      const auto vh = verdict(e, Group::kHorizontal, opt.tol);
      row.push_back(b2d(vd.optimal));
      row.push_back(b2d(vh.optimal));
      for (const char* pair : {"13", "24", "14", "23", "12", "34"}) {
        row.push_back(measures::min_pt_eigenvalue(e.at(pair)));
      }
    }
    t.rows[idx] = std::move(row);
  });
  return t;
}

double KRange::sigma() const {
  if (!feasible) return 0.0;
  return std::max(0.0, std::min(0.5 - k_lo, k_hi - 0.5));
}

KRange k_range(const std::function<bool(double)>& optimal_at, int n_k, int iterations) {
  std::vector<double> ks = linspace(0.0, 1.0, n_k);
  if (std::find(ks.begin(), ks.end(), 0.5) == ks.end()) {
    ks.insert(std::upper_bound(ks.begin(), ks.end(), 0.5), 0.5);
  }
  std::vector<char> ok(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) ok[i] = optimal_at(ks[i]) ? 1 : 0;
  KRange out;
  const auto first = std::find(ok.begin(), ok.end(), 1);
  if (first == ok.end()) return out;
  const auto last = std::find(ok.rbegin(), ok.rend(), 1);
  const std::size_t i0 = static_cast<std::size_t>(first - ok.begin());
  const std::size_t i1 = ok.size() - 1 - static_cast<std::size_t>(last - ok.rbegin());
  out.feasible = true;
  out.contiguous = std::all_of(ok.begin() + i0, ok.begin() + i1 + 1, [](char c) { return c; });
  out.k_lo = i0 == 0 ? ks[0] : bisect_flip(optimal_at, ks[i0 - 1], ks[i0], iterations);
  if (i1 + 1 == ks.size()) {
    out.k_hi = ks.back();
  } else {
    auto negated = [&](double k) { return !optimal_at(k); };
    // Largest optimal k: the flip from optimal (ks[i1]) to not optimal.
    double lo = ks[i1], hi = ks[i1 + 1];
    for (int i = 0; i < iterations; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (negated(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.k_hi = lo;
  }
  return out;
}

bool successive_optimal(double k, const cloners::SuccessiveParams& sp, CloneMode mode,
                        Step2Choice step2, const ScanOptions& opt) {
  return optimal_1to3(successive_ensemble(k, sp, mode, step2, opt.force_brute_force), opt.tol);
}

KRange successive_k_range(const cloners::SuccessiveParams& sp, CloneMode mode,
                          Step2Choice step2, int n_k, const ScanOptions& opt) {
  return k_range([&](double k) { return successive_optimal(k, sp, mode, step2, opt); }, n_k,
                 opt.bisection_iterations);
}

bool direct_optimal(double k, double alpha, double beta, double gamma, CloneMode mode,
                    const ScanOptions& opt) {
  return optimal_1to3(direct_ensemble(k, alpha, beta, gamma, mode, opt.force_brute_force),
                      opt.tol);
}

KRange direct_k_range(double alpha, double beta, double gamma, CloneMode mode, int n_k,
                      const ScanOptions& opt) {
  return k_range([&](double k) { return direct_optimal(k, alpha, beta, gamma, mode, opt); },
                 n_k, opt.bisection_iterations);
}

std::optional<double> solve_alpha(double beta, double gamma, int d) {
  try {
    const auto roots = cloners::solve_gamma(beta, gamma, d);
    if (roots.front() >= 0.0) return roots.front();
  } catch (const InfeasibleAsymmetryError&) {
  }
  return std::nullopt;
}

ScanTable scan_fig4(int n_p, int n_k, const ScanOptions& opt, Step2Choice step2) {
  ScanTable t;
  t.columns = {"p1", "p2", "feasible", "k_lo", "k_hi", "sigma", "contiguous"};
  for (const auto& pair : kFig4Pairs) t.columns.push_back("minpt_" + pair + "_khalf");
  const auto ps = linspace(0.0, 1.0, n_p);
  t.rows.resize(ps.size() * ps.size());
  parallel_for(t.rows.size(), [&](std::size_t idx) {
    const double p1 = ps[idx / ps.size()];
    const double p2 = ps[idx % ps.size()];
    const auto sp = cloners::SuccessiveParams::from_p(p1, p2);
    const KRange kr = successive_k_range(sp, CloneMode::kNonlocal, step2, n_k, opt);
    std::vector<double> row = {p1,
                               p2,
                               b2d(kr.feasible),
                               kr.feasible ? kr.k_lo : kNaN,
                               kr.feasible ? kr.k_hi : kNaN,
                               kr.sigma(),
                               b2d(kr.contiguous)};
    const auto e = successive_ensemble(0.5, sp, CloneMode::kNonlocal, step2,
                                       opt.force_brute_force);
    for (const auto& pair : kFig4Pairs) row.push_back(measures::min_pt_eigenvalue(e.at(pair)));
    t.rows[idx] = std::move(row);
  });
  return t;
}

ScanTable scan_fig6(int n, int n_k, const ScanOptions& opt) {
  ScanTable t;
  t.columns = {"beta", "gamma", "alpha", "valid", "feasible", "k_lo", "k_hi", "sigma",
               "contiguous"};
  for (const auto& pair : kFig4Pairs) t.columns.push_back("minpt_" + pair + "_khalf");
  const auto axis = linspace(0.0, 1.0, n);
  t.rows.resize(axis.size() * axis.size());
  parallel_for(t.rows.size(), [&](std::size_t idx) {
    const double beta = axis[idx / axis.size()];
    const double gamma = axis[idx % axis.size()];
    const auto alpha = solve_alpha(beta, gamma, 4);
    std::vector<double> row = {beta, gamma, alpha.value_or(kNaN), b2d(alpha.has_value())};
    if (!alpha) {
      row.insert(row.end(), {0.0, kNaN, kNaN, 0.0, 1.0});
      row.insert(row.end(), kFig4Pairs.size(), kNaN);
    } else {
      const KRange kr = direct_k_range(*alpha, beta, gamma, CloneMode::kNonlocal, n_k, opt);
      row.insert(row.end(), {b2d(kr.feasible), kr.feasible ? kr.k_lo : kNaN,
                             kr.feasible ? kr.k_hi : kNaN, kr.sigma(), b2d(kr.contiguous)});
      const auto e = direct_ensemble(0.5, *alpha, beta, gamma, CloneMode::kNonlocal,
                                     opt.force_brute_force);
      for (const auto& pair : kFig4Pairs) {
        row.push_back(measures::min_pt_eigenvalue(e.at(pair)));
      }
    }
    t.rows[idx] = std::move(row);
  });
  return t;
}

RegionSummary summarize_region(const ScanTable& table, const std::string& u,
                               const std::string& v) {
  const std::size_t cu = table.column(u), cv = table.column(v);
  const std::size_t cf = table.column("feasible"), clo = table.column("k_lo"),
                    chi = table.column("k_hi"), cs = table.column("sigma");
  RegionSummary s;
  for (const auto& row : table.rows) {
    if (row[cf] != 1.0) continue;
    ++s.feasible_points;
    s.k_min = std::min(s.k_min, row[clo]);
    s.k_max = std::max(s.k_max, row[chi]);
    s.u_min = std::min(s.u_min, row[cu]);
    s.u_max = std::max(s.u_max, row[cu]);
    s.v_min = std::min(s.v_min, row[cv]);
    s.v_max = std::max(s.v_max, row[cv]);
    if (row[cs] > s.best_sigma) {
      s.best_sigma = row[cs];
      s.best_u = row[cu];
      s.best_v = row[cv];
    }
  }
  return s;
}

SweepCount successive_local_sweep(int n_p, int n_k, const ScanOptions& opt) {
  const auto ps = linspace(0.0, 1.0, n_p);
  const auto ks = linspace(0.0, 1.0, n_k);
  std::atomic<long> hits{0};
  parallel_for(ps.size() * ps.size(), [&](std::size_t idx) {
    const auto sp = cloners::SuccessiveParams::from_p(ps[idx / ps.size()], ps[idx % ps.size()]);
    for (double k : ks) {
      const auto e = successive_ensemble(k, sp, CloneMode::kLocal, Step2Choice::kDefault,
                                         opt.force_brute_force);
      bool all = true;
      for (const auto& label : kNonlocalPairs13) {
        if (!measures::is_entangled(e.at(label), opt.tol)) {
          all = false;
          break;
        }
      }
      if (all) ++hits;
    }
  });
  return SweepCount{static_cast<long>(ps.size() * ps.size() * ks.size()), hits.load()};
}

SweepCount direct_local_sweep(int n_ab, int n_k, const ScanOptions& opt) {
  const auto axis = linspace(0.0, 1.0, n_ab);
  const auto ks = linspace(0.0, 1.0, n_k);
  std::atomic<long> hits{0}, points{0};
  parallel_for(axis.size() * axis.size(), [&](std::size_t idx) {
    const double alpha = axis[idx / axis.size()];
    const double beta = axis[idx % axis.size()];
    std::vector<double> gammas;
    try {
      for (double g : cloners::solve_gamma(alpha, beta, 2)) {
        if (g >= 0.0) gammas.push_back(g);
      }
    } catch (const InfeasibleAsymmetryError&) {
    }
    for (double g : gammas) {
      for (double k : ks) {
        ++points;
        if (direct_optimal(k, alpha, beta, g, CloneMode::kLocal, opt)) ++hits;
      }
    }
  });
  return SweepCount{points.load(), hits.load()};
}

SweepCount mems2_local_sweep(int n_r, int n_p, const ScanOptions& opt) {
  const auto rs = linspace(0.0, 2.0 / 3.0, n_r);
  const auto ps = linspace(0.0, 1.0, n_p);
  std::atomic<long> hits{0};
  parallel_for(rs.size() * ps.size(), [&](std::size_t idx) {
    const double r = rs[idx / ps.size()];
    const double p = ps[idx % ps.size()];
    if (mems_optimal(r, p, CloneMode::kLocal, Group::kDiagonal, opt) ||
        mems_optimal(r, p, CloneMode::kLocal, Group::kHorizontal, opt)) {
      ++hits;
    }
  });
  return SweepCount{static_cast<long>(rs.size() * ps.size()), hits.load()};
}

}  // namespace qbroadcast::pipelines
