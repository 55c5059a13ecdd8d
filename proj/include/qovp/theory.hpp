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

#include "qovp/statevector.hpp"

namespace qovp {

/// Closed-form optimal angle schedule for the ring at depth n/2.
/// All angles lie in {pi/8, pi/4, 3pi/8}.
struct RingSchedule {
    int n = 0;
    ParameterVector params; // depth n/2
};

/// Exact optimal schedule for the even-n ring: every angle is pi/4 except
/// near the middle of the circuit. For n = 4m+2 the middle layer m+1 carries
/// (gamma, beta) = (3pi/8, pi/8); for n = 4m the distinct angles sit in
/// neighboring layers, gamma_m = 3pi/8 and beta_{m+1} = pi/8. Simulating the
/// schedule reaches the ground energy -n exactly. Requires even n >= 4.
RingSchedule ring_analytic_angles(int n);

/// Energy n*sin(4*gamma)*sin(4*beta) of the circuit family where only the
/// middle layer's angles vary and every other angle is pi/4. Valid for
/// n = 4m+2.
double ring_middle_angle_energy(int n, double beta, double gamma);

/// Optimal ring energy below the optimal depth: -n*p/(p+1), valid for
/// 1 <= p < floor(n/2).
double ring_subopt_energy(int n, int p);

/// Energy drop at the optimal depth: 2 for even n, 2/(n-1) for odd n
/// (where the optimal energy is -(n-2)). Requires n >= 4.
double ring_drop(int n);

/// floor(n/2), n >= 3. Guaranteed to be attained for even n; for odd n and
/// for the matching lower bound this is the numerically confirmed value,
/// see ring_depth_proven.
int ring_optimal_depth(int n);

/// True when the depth returned by ring_optimal_depth carries the exact
/// guarantee (even n); false marks it as conjectured (numerical).
bool ring_depth_proven(int n);

} // namespace qovp
