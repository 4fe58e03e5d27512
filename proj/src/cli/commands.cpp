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

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "qbroadcast/cli.hpp"
#include "qbroadcast/families.hpp"
#include "qbroadcast/measures.hpp"
#include "qbroadcast/pipelines.hpp"
#include "qbroadcast/scan.hpp"
#include "qbroadcast/unisearch.hpp"

namespace qbroadcast::cli {
namespace {

using nlohmann::json;
using namespace qbroadcast::pipelines;

// Family-point flags shared by `state` and `broadcast`.
struct StateArgs {
  std::string family = "nme";
  std::optional<double> k, r, p, c1, c2, c3;
};

void add_state_flags(CLI::App* cmd, StateArgs& s) {
  cmd->add_option("--family", s.family, "nme | mems | werner | bds")
      ->check(CLI::IsMember({"nme", "mems", "werner", "bds"}));
  cmd->add_option("--k", s.k, "NME / Werner-like weight k");
  cmd->add_option("--r", s.r, "MEMS concurrence r");
  cmd->add_option("--p", s.p, "Werner-like mixing p");
  cmd->add_option("--c1", s.c1, "Bell-diagonal c1");
  cmd->add_option("--c2", s.c2, "Bell-diagonal c2");
  cmd->add_option("--c3", s.c3, "Bell-diagonal c3");
}

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing ") + flag);
  return *v;
}

families::FamilyPoint family_point(const StateArgs& s) {
  if (s.family == "nme") return families::nme_point(need(s.k, "--k"));
  if (s.family == "mems") return families::mems_point(need(s.r, "--r"));
  if (s.family == "werner") return families::werner_point(need(s.p, "--p"), need(s.k, "--k"));
  return families::bell_point(need(s.c1, "--c1"), need(s.c2, "--c2"), need(s.c3, "--c3"));
}

json canonical_json(const qcore::CanonicalTwoQubit& c) {
  json t = json::array();
  for (int i = 0; i < 3; ++i) t.push_back({c.t(i, 0), c.t(i, 1), c.t(i, 2)});
  return {{"x", {c.x(0), c.x(1), c.x(2)}}, {"y", {c.y(0), c.y(1), c.y(2)}}, {"t", t}};
}

json ph_json(const measures::PHReport& r) {
  return {{"min_pt_eig", r.min_pt_eig}, {"det_w2", r.det_w2},    {"det_w3", r.det_w3},
          {"det_w4", r.det_w4},         {"entangled", r.entangled},
          {"ladder_entangled", r.ladder_entangled()}};
}

json state_json(const qcore::DensityOp& rho, double tol) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < rho.dim(); ++i) {
    json rr = json::array(), ii = json::array();
    for (int j = 0; j < rho.dim(); ++j) {
      rr.push_back(rho(i, j).real());
      ii.push_back(rho(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  const auto discord = measures::geometric_discord(rho);
  return {{"matrix_real", re},
          {"matrix_imag", im},
          {"canonical", canonical_json(qcore::to_canonical(rho))},
          {"concurrence", measures::concurrence(rho)},
          {"geometric_discord", discord.d_g},
          {"discord_lambda_max", discord.lambda_max},
          {"linear_entropy", measures::linear_entropy(rho)},
          {"ph", ph_json(measures::ph_report(rho, tol))}};
}

// Writes `text` to `out` with a manifest, or to stdout when `out` is empty.
void emit(const std::string& text, const std::string& out, RunManifest& manifest) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  write_text(out, text);
  manifest.finish_and_write(out);
  std::cerr << "wrote " << out << "\n";
}

int cmd_verify(const std::string& scope, std::uint64_t seed, double tol, const std::string& out,
               RunManifest& manifest) {
  const auto results = run_verify(scope, seed, tol);
  bool ok = true;
  json report = {{"scope", scope}, {"seed", seed}, {"tol", tol}, {"checks", json::array()}};
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    report["checks"].push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    ok = ok && r.passed;
  }
  report["passed"] = ok;
  if (!out.empty()) emit(report.dump(2) + "\n", out, manifest);
  if (!ok) {
    for (const auto& r : results) {
      if (!r.passed) {
        std::cerr << "first failing check: " << r.name << "\n";
        break;
      }
    }
  }
  return ok ? kExitPass : kExitCheckFailure;
}

struct ScanArgs {
  std::string figure;
  int grid_n = 0;
  int k_grid_n = 101;
  bool mirrored = false;
};

int default_scan_grid(const std::string& figure) {
  return figure == "bds-cones" ? 101 : 201;
}

int cmd_scan(const ScanArgs& a, double tol, bool brute, const std::string& out,
             RunManifest& manifest) {
  ScanOptions opt;
  opt.tol = tol;
  opt.force_brute_force = brute;
  const auto refs = unisearch::reference_unitaries();
  ScanTable table;
  if (a.figure == "fig2") {
    table = scan_fig2(a.grid_n, a.grid_n, opt);
  } else if (a.figure == "fig4") {
    table = scan_fig4(a.grid_n, a.k_grid_n, opt,
                      a.mirrored ? Step2Choice::kMirrored : Step2Choice::kDefault);
  } else if (a.figure == "fig6") {
    table = scan_fig6(a.grid_n, a.k_grid_n, opt);
  } else if (a.figure == "bds-cones") {
    table = unisearch::scan_unitary_family(unisearch::u4_from_params(refs.bds).cast<qcore::Complex>(),
                                           unisearch::SearchFamily::kBellDiagonal,
                                           a.grid_n, tol);
  } else {
    table = unisearch::scan_unitary_family(
        unisearch::u4_from_params(refs.werner).cast<qcore::Complex>(),
        unisearch::SearchFamily::kWernerLike, a.grid_n, tol);
  }
  emit(csv_text(table, a.figure + "/1"), out, manifest);
  return kExitPass;
}

struct SearchArgs {
  std::string family = "werner";
  int restarts = 4;
  int grid_n = 0;
  int refine_steps = 3;
  bool check_floor = false;
};

int cmd_search(const SearchArgs& a, std::uint64_t seed, double tol, const std::string& out,
               RunManifest& manifest) {
  unisearch::SearchConfig cfg;
  cfg.family = a.family == "werner" ? unisearch::SearchFamily::kWernerLike
                                    : unisearch::SearchFamily::kBellDiagonal;
  cfg.grid_n = a.grid_n;
  cfg.seed = seed;
  cfg.restarts = a.restarts;
  cfg.refine_steps = a.refine_steps;
  cfg.tol = tol;
  const auto result = unisearch::random_search(cfg);
  const auto refs = unisearch::reference_unitaries();
  const auto& ref = a.family == "werner" ? refs.werner : refs.bds;
  const double ref_fraction =
      unisearch::range_fraction(unisearch::u4_from_params(ref).cast<qcore::Complex>(),
                                unisearch::family_grid(cfg.family, cfg.grid_n), tol)
          .fraction;
  const auto angles = result.best_params.angles();
  json j = {{"family", a.family},
            {"grid_n", cfg.grid_n},
            {"seed", seed},
            {"restarts", cfg.restarts},
            {"refine_steps", cfg.refine_steps},
            {"tol", tol},
            {"best_fraction", result.best_fraction},
            {"best_restart", result.best_restart},
            {"baseline_fraction", result.baseline_fraction},
            {"reference_fraction", ref_fraction},
            {"history", result.history},
            {"best_params", result.best_params.values()},
            {"best_angles", angles}};
  const bool floor_ok = result.best_fraction >= 0.95 * ref_fraction;
  if (a.check_floor) j["floor_check_passed"] = floor_ok;
  emit(j.dump(2) + "\n", out, manifest);
  std::cout << "best fraction " << format_double(result.best_fraction) << " (reference "
            << format_double(ref_fraction) << ", symmetric cloner "
            << format_double(result.baseline_fraction) << ")\n";
  return a.check_floor && !floor_ok ? kExitCheckFailure : kExitPass;
}

int cmd_state(const StateArgs& s, double tol, const std::string& out, RunManifest& manifest) {
  const auto point = family_point(s);
  json j = state_json(families::make_state(point), tol);
  j["family"] = families::family_name(point.family);
  j["params"] = point.params;
  if (point.both_mems_subclasses) j["mems_subclass"] = "both";
  emit(j.dump(2) + "\n", out, manifest);
  return kExitPass;
}

struct BroadcastArgs {
  std::string strategy = "1to2-local";
  std::optional<double> p1, p2, alpha, beta, gamma;
  bool mirrored = false;
};

int cmd_broadcast(const StateArgs& s, const BroadcastArgs& b, double tol,
                  const std::string& out, RunManifest& manifest) {
  const auto rho = families::make_state(family_point(s));
  const bool local = b.strategy.ends_with("-local");
  const CloneMode mode = local ? CloneMode::kLocal : CloneMode::kNonlocal;
  OutputEnsemble e;
  json verdicts;
  if (b.strategy.starts_with("1to2")) {
    const auto a = cloners::Asym12::from_p(need(s.p ? s.p : b.p1, "--p"));
    e = broadcast_1to2(rho, a, mode);
    for (Group g : {Group::kDiagonal, Group::kHorizontal}) {
      const auto v = verdict(e, g, tol);
      verdicts[group_name(g)] = {{"nonlocal_entangled", v.nonlocal_entangled},
                                 {"locals_separable", v.locals_separable},
                                 {"optimal", v.optimal}};
    }
  } else {
    if (b.strategy.starts_with("successive")) {
      e = successive_broadcast(
          rho, cloners::SuccessiveParams::from_p(need(b.p1, "--p1"), need(b.p2, "--p2")), mode,
          b.mirrored ? Step2Choice::kMirrored : Step2Choice::kDefault);
    } else {
      const int d = local ? 2 : 4;
      const double alpha = need(b.alpha, "--alpha"), beta = need(b.beta, "--beta");
      const double gamma = b.gamma ? *b.gamma : cloners::solve_gamma(alpha, beta, d).front();
      e = direct13_broadcast(rho, cloners::Asym13{alpha, beta, gamma, d}, mode);
    }
    const auto v = verdict_1to3(e, tol);
    verdicts = {{"nonlocal_entangled_count", v.nonlocal_entangled_count},
                {"locals_separable", v.locals_separable},
                {"optimal", v.optimal}};
  }
  json pairs = json::object();
  for (const auto& [label, pr] : e.pairs) {
    pairs[label] = {{"canonical", canonical_json(qcore::to_canonical(pr))},
                    {"ph", ph_json(measures::ph_report(pr, tol))}};
  }
  json params = json::object();
  for (const auto& [name, value] : e.params) params[name] = value;
  json j = {{"strategy", e.strategy}, {"params", params}, {"pairs", pairs}, {"verdict", verdicts}};
  emit(j.dump(2) + "\n", out, manifest);
  return kExitPass;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"qbroadcast: entanglement broadcasting with asymmetric cloners"};
  app.set_version_flag("--version", std::string(QBROADCAST_VERSION));
  app.require_subcommand(1);

  double tol = measures::kEntanglementTol;
  std::uint64_t seed = 0;
  std::string out;
  bool brute = false;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "entanglement tolerance on the min PT eigenvalue")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", out, "output file");
  };

  std::string scope = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--scope", scope, "all | closed-forms | theorems | discord")
      ->check(CLI::IsMember({"all", "closed-forms", "theorems", "discord"}));
  verify->add_option("--seed", seed, "seed for random draws");
  common(verify);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "grid scan reproducing a broadcasting region");
  scan->add_option("--figure", scan_args.figure, "fig2 | fig4 | fig6 | bds-cones | werner-unitary")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig4", "fig6", "bds-cones", "werner-unitary"}));
  scan->add_option("--grid-n", scan_args.grid_n, "points per parameter axis")
      ->check(CLI::Range(2, 100000));
  scan->add_option("--k-grid-n", scan_args.k_grid_n, "k grid points before bisection")
      ->check(CLI::Range(2, 100000));
  scan->add_flag("--mirrored", scan_args.mirrored, "fig4: second cloner on the other pair");
  scan->add_flag("--force-brute-force", brute, "simulate cloners instead of closed forms");
  common(scan);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "seeded search for a broadcasting unitary");
  search->add_option("--family", search_args.family, "werner | bds")
      ->check(CLI::IsMember({"werner", "bds"}));
  search->add_option("--seed", seed, "base seed; restart i uses seed + i");
  search->add_option("--restarts", search_args.restarts, "number of restarts")
      ->check(CLI::PositiveNumber);
  search->add_option("--grid-n", search_args.grid_n, "points per family axis")
      ->check(CLI::Range(2, 10000));
  search->add_option("--refine-steps", search_args.refine_steps, "sweeps per refinement stage")
      ->check(CLI::NonNegativeNumber);
  search->add_flag("--check-floor", search_args.check_floor,
                   "fail unless the result reaches 95% of the reference unitary");
  common(search);

  StateArgs state_args;
  auto* state = app.add_subcommand("state", "dump a family member as JSON");
  add_state_flags(state, state_args);
  common(state);

  StateArgs bc_state;
  BroadcastArgs bc_args;
  auto* broadcast = app.add_subcommand("broadcast", "broadcast one state and report the pairs");
  add_state_flags(broadcast, bc_state);
  broadcast->add_option("--strategy", bc_args.strategy)
      ->check(CLI::IsMember({"1to2-local", "1to2-nonlocal", "successive-local",
                             "successive-nonlocal", "direct-local", "direct-nonlocal"}));
  broadcast->add_option("--p1", bc_args.p1, "first (or only) cloner asymmetry");
  broadcast->add_option("--p2", bc_args.p2, "second cloner asymmetry");
  broadcast->add_option("--alpha", bc_args.alpha);
  broadcast->add_option("--beta", bc_args.beta);
  broadcast->add_option("--gamma", bc_args.gamma, "solved from the constraint when omitted");
  broadcast->add_flag("--mirrored", bc_args.mirrored);
  common(broadcast);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  RunManifest manifest;
  manifest.started_at = utc_timestamp();
  manifest.seed = seed;
  manifest.parameters = {{"tol", tol}, {"out", out}, {"force_brute_force", brute}};
  try {
    if (verify->parsed()) {
      manifest.command = "verify";
      manifest.parameters["scope"] = scope;
      return cmd_verify(scope, seed, tol, out, manifest);
    }
    if (scan->parsed()) {
      if (scan_args.grid_n == 0) scan_args.grid_n = default_scan_grid(scan_args.figure);
      if (out.empty()) out = scan_args.figure + ".csv";
      manifest.parameters["out"] = out;
      manifest.command = "scan";
      manifest.parameters["figure"] = scan_args.figure;
      manifest.parameters["grid_n"] = scan_args.grid_n;
      manifest.parameters["k_grid_n"] = scan_args.k_grid_n;
      manifest.parameters["mirrored"] = scan_args.mirrored;
      return cmd_scan(scan_args, tol, brute, out, manifest);
    }
    if (search->parsed()) {
      if (search_args.grid_n == 0) search_args.grid_n = search_args.family == "werner" ? 41 : 21;
      if (out.empty()) out = "search-" + search_args.family + ".json";
      manifest.parameters["out"] = out;
      manifest.command = "search";
      manifest.parameters["family"] = search_args.family;
      manifest.parameters["restarts"] = search_args.restarts;
      manifest.parameters["grid_n"] = search_args.grid_n;
      manifest.parameters["refine_steps"] = search_args.refine_steps;
      return cmd_search(search_args, seed, tol, out, manifest);
    }
    if (state->parsed()) {
      manifest.command = "state";
      manifest.parameters["family"] = state_args.family;
      return cmd_state(state_args, tol, out, manifest);
    }
    manifest.command = "broadcast";
    manifest.parameters["strategy"] = bc_args.strategy;
    return cmd_broadcast(bc_state, bc_args, tol, out, manifest);
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParameterError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidStateError& e) {
    std::cerr << "invalid state: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace qbroadcast::cli
