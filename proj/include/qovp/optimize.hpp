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

#include <cstdint>
#include <string>
#include <vector>

#include "qovp/statevector.hpp"

namespace qovp {

struct MinimizeOptions {
    double grad_tolerance = 1e-10; // gradient infinity-norm stop
    int max_iterations = 1000;
};

struct MinimizeResult {
    ParameterVector params;
    double energy = 0.0;
    double grad_norm = 0.0; // infinity norm at the final point
    int iterations = 0;
    bool converged = false; // grad_norm <= grad_tolerance
};

/// Quasi-Newton (L-BFGS) descent on the energy landscape from the given
/// initial point, using analytic adjoint gradients. Deterministic given the
/// initial point. Throws NumericalError if the energy turns non-finite.
MinimizeResult local_minimize(const DiagonalHamiltonian &h,
                              const ParameterVector &init,
                              const MinimizeOptions &opts = {});

/// Per-depth outcome of one layerwise optimization run.
struct DepthRecord {
    int p = 0;
    double error_raw = 0.0; // E*_p - E_g as optimized at this depth
    double error = 0.0;     // monotone post-processed (running minimum)
    ParameterVector params;
    bool converged = false; // cumulative flag from the post-processed curve
    double wall_ms = 0.0;
};

/// Trace of one optimization run across depths 1..p (possibly stopped early
/// at convergence). Past the last recorded depth the run keeps its final
/// post-processed error and convergence flag.
struct RunTrace {
    double ground_energy = 0.0;
    double epsilon = 0.0;
    std::vector<DepthRecord> depths;
    int p_conv = 0; // first converged depth, 0 = never

    bool converged_at(int p) const;
    double error_at(int p) const; // post-processed error at depth p
};

/// The layerwise heuristic: optimize at p=1 from a uniform-random start,
/// then repeatedly warm-start depth p+1 from the depth-p optimum with one
/// fresh uniform-random layer appended and re-optimize all parameters
/// jointly. Stops at p_max or once E*_p - E_g <= epsilon. The returned
/// trace is raw (monotone post-processing not yet applied).
RunTrace layerwise_run(const DiagonalHamiltonian &h, int p_max, double epsilon,
                       std::uint64_t seed, const MinimizeOptions &opts = {});

/// Appendix-style post-processing: replaces each error with the running
/// minimum over depths <= p and recomputes the convergence flags from the
/// post-processed curve (a run converged at p_conv counts as converged for
/// all p >= p_conv).
RunTrace enforce_monotone(RunTrace trace);

/// Aggregate of R independent layerwise runs on one instance.
struct InstanceResult {
    std::string instance_id;
    int n = 0;
    double ground_energy = 0.0;
    double epsilon = 0.0;
    int p_max = 0;
    int runs = 0;
    std::vector<RunTrace> traces;          // post-processed
    std::vector<double> best_error;        // per depth 1..p_max, over runs
    std::vector<double> success_prob;      // per depth 1..p_max
    int p_star = 0;                        // sentinel 2^n - 1 when unsolved
    bool solved = false;
    int p_c = 0;                           // 0 until filled by the harness
};

/// Runs R layerwise runs with sub-seeds derived from (seed, run index),
/// post-processes every trace, and aggregates. The instance is solved at p
/// when any run's post-processed error is <= epsilon there. `workers` > 1
/// executes runs in parallel; results are independent of the schedule.
InstanceResult multi_run(const DiagonalHamiltonian &h, int R, int p_max,
                         double epsilon, std::uint64_t seed,
                         const MinimizeOptions &opts = {}, int workers = 1);

/// Smallest depth with best-over-runs post-processed error <= epsilon;
/// 2^n - 1 when never reached by p_max.
int optimal_depth(const InstanceResult &result, double epsilon);

/// Fraction of runs whose cumulative convergence flag is set at depth p.
double success_probability(const InstanceResult &result, int p);

/// epsilon = alpha * spectral_gap(H). With this tolerance the stability
/// bound guarantees ground overlap >= 1 - alpha at convergence.
double tolerance_from_gap(const DiagonalHamiltonian &h, double alpha);

} // namespace qovp
