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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qbroadcast {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix or register size does not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation would produce a state on more than six wires.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A wire label is out of range or a permutation is not a bijection.
class WireError : public Error {
 public:
  using Error::Error;
};

/// A matrix failed the density-operator invariants.
class InvalidStateError : public Error {
 public:
  InvalidStateError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// A family parameter lies outside the family's validity region.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Bell-diagonal coefficients produce a negative weight on some Bell state.
class InvalidBellDiagonalError : public ParameterError {
 public:
  InvalidBellDiagonalError(const std::string& what,
                           std::vector<std::pair<int, int>> violated)
      : ParameterError(what), violated_(std::move(violated)) {}

  /// The (u, v) indices whose weight is negative.
  const std::vector<std::pair<int, int>>& violated() const noexcept {
    return violated_;
  }

 private:
  std::vector<std::pair<int, int>> violated_;
};

/// The 1->3 asymmetry constraint has no real solution for the requested pair.
class InfeasibleAsymmetryError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// A cloner configuration is inconsistent (e.g. fails its normalization).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A numerical post-condition did not hold.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qbroadcast
