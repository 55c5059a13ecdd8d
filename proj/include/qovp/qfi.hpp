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

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qovp/statevector.hpp"

namespace qovp {

/// Default relative eigenvalue cut for the numerical rank.
inline constexpr double kDefaultRankTolerance = 1e-10;

/// Assembles F_jk = 4 Re(<d_j|d_k> - <d_j|psi><psi|d_k>) from a state and
/// its parameter derivatives. Output is symmetrized as (F + F^T)/2.
Eigen::MatrixXd qfi_from_states(const StateVector &psi,
                                const std::vector<StateVector> &derivs);

/// Quantum Fisher Information matrix of the QAOA family at the given point,
/// a real symmetric positive semidefinite 2p x 2p matrix.
Eigen::MatrixXd qfi_matrix(const DiagonalHamiltonian &h,
                           const ParameterVector &params);

/// Count of eigenvalues above tau * max(lambda_max, 1) from a symmetric
/// eigendecomposition. Warns on stderr when the retained/dropped eigenvalue
/// gap is thinner than 1e3, since the cut is then not clearly resolved.
int numerical_rank(const Eigen::MatrixXd &m,
                   double tau = kDefaultRankTolerance);

struct RankSample {
    std::uint64_t seed = 0; // derived seed of the sampled parameter point
    int rank = 0;
};

/// EQD of one depth: the maximal QFI rank over sampled parameter points.
struct EqdReport {
    int p = 0;
    std::vector<RankSample> samples;
    int eqd = 0;
};

struct EqdOptions {
    int samples = 3;
    double rank_tolerance = kDefaultRankTolerance;
};

/// Evaluates the QFI rank at independent uniform-random parameter points
/// (gamma in [0,2pi), beta in [0,pi)) and takes the maximum.
EqdReport eqd(const DiagonalHamiltonian &h, int p, std::uint64_t seed,
              const EqdOptions &opts = {});

/// EQD-per-depth curve together with the detected overparametrization depth.
struct EqdCurve {
    int p_c = 0;
    std::vector<EqdReport> reports; // depths 1..reports.size()
    bool saturated_manifold = false;

    std::vector<int> eqd_values() const;
};

/// Walks p = 1, 2, ... until the EQD stagnates for `confirmations`
/// consecutive depths (then p_c is the depth where the plateau starts) or
/// reaches the state-manifold bound 2*(2^n - 1) (then p_c is that depth).
/// Throws StagnationNotFoundError with the partial curve when no plateau is
/// seen by p_max.
EqdCurve overparam_depth(const DiagonalHamiltonian &h, int p_max,
                         std::uint64_t seed, int confirmations = 2,
                         const EqdOptions &opts = {});

} // namespace qovp
