// Copyright 2026 The qovp Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qovp {

/// Base class for all qovp errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Mismatched qubit counts or array lengths between objects.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Structurally invalid size arguments (n, k, p, depth ranges).
class InvalidSizeError : public Error {
  public:
    using Error::Error;
};

/// Spectral gap requested for a constant Hamiltonian.
class UndefinedGapError : public Error {
  public:
    using Error::Error;
};

/// Non-finite values encountered during optimization or simulation.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// EQD stagnation was not observed within the searched depth range.
/// Carries the partial EQD curve (one value per depth, starting at p=1).
class StagnationNotFoundError : public Error {
  public:
    StagnationNotFoundError(const std::string &msg, std::vector<int> curve)
        : Error(msg), partial_curve(std::move(curve)) {}

    std::vector<int> partial_curve;
};

/// Invalid or out-of-range experiment configuration.
class ConfigError : public Error {
  public:
    using Error::Error;
};

} // namespace qovp
