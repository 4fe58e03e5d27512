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

// Command-line front end: verification suites, figure scans, unitary
// search and state dumps, with CSV / JSON artifacts and run manifests.

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qbroadcast/errors.hpp"
#include "qbroadcast/scan.hpp"

namespace qbroadcast::cli {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitUsage = 2, kExitIo = 3 };

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// 17 significant digits; "nan" for NaN.
std::string format_double(double v);

/// "#schema:<name> col:f64,..." then the column names, then one row per line.
std::string csv_text(const pipelines::ScanTable& table, const std::string& schema);
void write_text(const std::filesystem::path& path, const std::string& text);

std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::filesystem::path& path);

/// Record of one invocation. Timestamps live only here, never in the
/// artifacts, so artifacts are reproducible byte for byte.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string started_at;
  std::string finished_at;
  std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256

  nlohmann::json to_json() const;
  /// Hashes `artifact`, records it and writes <artifact>.manifest.json.
  void finish_and_write(const std::filesystem::path& artifact);
};

std::string utc_timestamp();

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Scopes: "all", "closed-forms", "theorems", "discord". Throws
/// std::invalid_argument for anything else.
std::vector<CheckResult> run_verify(const std::string& scope, std::uint64_t seed, double tol);

/// Entry point used by the executable; returns the process exit code.
int run(int argc, char** argv);

}  // namespace qbroadcast::cli
