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
#include <utility>
#include <vector>

namespace qovp {

/// Diagonal problem Hamiltonian H = sum_x C(x) |x><x| stored as the dense
/// cost table over all 2^n computational-basis strings. Basis strings are
/// indexed in natural binary order with qubit 1 as the most significant bit.
struct DiagonalHamiltonian {
    int n = 0;
    std::vector<double> cost; // cost[x] = C(x), length 2^n

    std::size_t dim() const { return cost.size(); }
};

/// Simple unweighted graph on vertices 1..n. Edges are stored normalized as
/// (i, j) with i < j, sorted and de-duplicated.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Validates and normalizes an edge list (no self-loops, no duplicates).
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

struct Literal {
    int var = 0;          // 1-indexed variable
    bool negated = false; // literal is "not x_var" when true
};

/// A 2-SAT clause (a OR b); the two literals reference distinct variables.
struct Clause {
    Literal a, b;
};

struct SatInstance {
    int n = 0; // variable count
    std::vector<Clause> clauses;
};

SatInstance make_sat_instance(int n, std::vector<Clause> clauses);

/// n-cycle (the "ring of disagrees"), n >= 3.
Graph ring_graph(int n);

/// Erdos-Renyi G(n, q): each of the n(n-1)/2 edges kept independently with
/// probability q. Deterministic under the seed.
Graph random_graph(int n, double q, std::uint64_t seed);

/// k-regular simple graph via the pairing model, rejecting pairings that
/// produce self-loops or multi-edges. Requires n*k even and k < n.
Graph random_regular_graph(int n, int k, std::uint64_t seed);

/// m uniformly random 2-SAT clauses on n variables: variable pair uniform
/// over C(n,2), negation flags uniform. Duplicate clauses are permitted and
/// accumulate in the cost.
SatInstance random_2sat(int n, int m, std::uint64_t seed);

/// cost[x] = sum over edges of (+1 if the endpoint bits agree else -1);
/// the cut value of x is (|E| - cost[x]) / 2.
DiagonalHamiltonian maxcut_hamiltonian(const Graph &g);

/// cost[x] = number of clauses violated by assignment x. A clause is
/// violated iff both of its literals evaluate false.
DiagonalHamiltonian max2sat_hamiltonian(const SatInstance &s);

struct GroundInfo {
    double energy = 0.0;
    std::int64_t degeneracy = 0;
};

/// Exact minimum of the cost table and the number of attaining strings.
GroundInfo ground_energy(const DiagonalHamiltonian &h);

/// (second-smallest distinct cost value) - E_g. Throws UndefinedGapError
/// for a constant Hamiltonian.
double spectral_gap(const DiagonalHamiltonian &h);

} // namespace qovp
