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

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "qovp/problems.hpp"

namespace qovp {

using complex_t = std::complex<double>;

/// Exact n-qubit state: 2^n complex amplitudes in natural binary order,
/// qubit 1 = most significant bit. Unit norm is an invariant of every
/// operation that returns a StateVector.
class StateVector {
  public:
    StateVector() = default;
    StateVector(int n, std::vector<complex_t> amplitudes);

    /// |+>^n, the uniform superposition.
    static StateVector plus_state(int n);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }

    std::span<const complex_t> amplitudes() const { return amps_; }
    std::span<complex_t> data() { return amps_; }

    const complex_t &operator[](std::size_t x) const { return amps_[x]; }

    double norm() const;

  private:
    int n_ = 0;
    std::vector<complex_t> amps_;
};

/// Per-layer QAOA angles. Stored order for gradient and QFI indexing is
/// (gamma_1, beta_1, ..., gamma_p, beta_p).
class ParameterVector {
  public:
    ParameterVector() = default;
    ParameterVector(std::vector<double> gammas, std::vector<double> betas);

    /// Builds from the flat interleaved layout (gamma_1, beta_1, ...).
    static ParameterVector from_interleaved(std::span<const double> theta);

    int depth() const { return static_cast<int>(gammas_.size()); }

    double gamma(int k) const { return gammas_[k]; } // 0-indexed layer
    double beta(int k) const { return betas_[k]; }

    const std::vector<double> &gammas() const { return gammas_; }
    const std::vector<double> &betas() const { return betas_; }

    std::vector<double> interleaved() const;

    /// Maps gammas into [0, 2*pi) and betas into [0, pi). For integer-valued
    /// cost functions this leaves the prepared state unchanged up to a
    /// global phase.
    ParameterVector canonicalized() const;

    /// Copy with one extra layer appended at the end.
    ParameterVector with_layer(double gamma, double beta) const;

    bool finite() const;

  private:
    std::vector<double> gammas_;
    std::vector<double> betas_;
};

/// In-place e^{-i*gamma*H} on a diagonal H: per-basis-state phases.
void apply_cost_phase(StateVector &state, const DiagonalHamiltonian &h,
                      double gamma);

/// In-place e^{-i*beta*H_x} with H_x = sum_j X_j, applied as n independent
/// single-qubit rotations.
void apply_mixer(StateVector &state, double beta);

/// One QAOA layer: cost phase followed by the mixer.
void apply_layer(StateVector &state, const DiagonalHamiltonian &h,
                 double gamma, double beta);

/// Prepares prod_k e^{-i*beta_k*H_x} e^{-i*gamma_k*H} |+>^n.
/// Depth 0 returns |+>^n.
StateVector qaoa_state(const DiagonalHamiltonian &h,
                       const ParameterVector &params);

/// <state| H |state> = sum_x C(x) |psi_x|^2.
double expectation(const StateVector &state, const DiagonalHamiltonian &h);

/// Analytic dE/dtheta via a reverse (adjoint) sweep, ordered as
/// (dE/dgamma_1, dE/dbeta_1, ..., dE/dgamma_p, dE/dbeta_p).
std::vector<double> energy_gradient(const DiagonalHamiltonian &h,
                                    const ParameterVector &params);

/// Energy and gradient from a single adjoint sweep.
std::pair<double, std::vector<double>>
energy_and_gradient(const DiagonalHamiltonian &h,
                    const ParameterVector &params);

/// The 2p states d|psi>/dtheta_j, in parameter order. Each is obtained by
/// inserting the generator (-iH for gamma, -iH_x for beta) immediately after
/// the corresponding exponential and propagating through the remaining
/// layers; stored prefix states keep the total cost at O(p^2 * 2^n).
std::vector<StateVector> derivative_states(const DiagonalHamiltonian &h,
                                           const ParameterVector &params);

/// Total probability on the ground space: sum of |psi_x|^2 over strings x
/// with C(x) = E_g.
double ground_overlap(const StateVector &state, const DiagonalHamiltonian &h);

} // namespace qovp
