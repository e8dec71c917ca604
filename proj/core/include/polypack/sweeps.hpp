// Copyright 2026 The polypack authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYPACK_SWEEPS_HPP
#define POLYPACK_SWEEPS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "polypack/flat.hpp"
#include "polypack/gauge.hpp"
#include "polypack/rng.hpp"
#include "polypack/slice.hpp"

namespace polypack {

// Random disjoint n-flats in R^(n+k) sharing a direction space of dimension
// exactly `parallel_dim` (generically).  Disjoint pairs force
// parallel_dim > n - k, so the generator takes the target dimension rather
// than rejecting.
std::pair<Flat, Flat> random_disjoint_flat_pair(int n, int k, int parallel_dim,
                                                CounterRng& rng);

struct TransversalityCombo {
  int n = 0, k = 0;
  int pairs = 0;
  int min_parallel_dim = 0;
  int max_parallel_dim = 0;
  bool strict_ok = false;      // parallel dimension > n - k throughout
  int mismatches = 0;          // measured dim != constructed dim
};

struct TransversalitySweepResult {
  std::vector<TransversalityCombo> combos;
  bool lemma_ok = false;       // every combo satisfies the strict bound
  bool corollary_ok = false;   // k = 2 combos observe >= n - 1
  int corollary_min_excess = 0;  // min over k=2 of (dim - (n-1))
  std::uint64_t seed = 0;
};

// trials pairs per (n, k) combo with k in [1, max_k], k <= n <= max_n.
TransversalitySweepResult transversality_sweep(int trials, std::uint64_t seed,
                                               int max_n = 6, int max_k = 3);

struct LemmaSweepResult {
  int configs = 0;
  int bounded_count = 0;
  double max_rank_residual = 0.0;
  double min_bounded_area = 0.0;   // over bounded slices
  double min_vertex_radius = 0.0;  // over slices with vertices
  double max_chord_angle_deg = 0.0;
  double tangent_pair_angle_deg = 0.0;  // the deterministic equality case
  double hexagon_area = 0.0;
  double hexagon_vertex_radius = 0.0;
  bool rank_ok = false;
  bool area_ok = false;
  bool vertex_ok = false;   // all vertex radii >= 2/sqrt(3) - 1e-9
  bool angle_ok = false;    // all chord angles <= 2 acos(sqrt(3)-1) + 1e-6 deg
  std::uint64_t seed = 0;
};

// Random valid two-to-six-cylinder configurations (skewed, shifted, some in
// ambient dimension up to 5) plus the deterministic equality
// configurations: builds every slice and aggregates the hexagon-bound
// quantities.
LemmaSweepResult lemma_sweep(int trials, std::uint64_t seed);

struct GaugeSweepResult {
  ValiditySweepResult f0;
  ValiditySweepResult f1;
  bool ok = false;  // both maxima <= 1 + 1e-12
};

// Validity sweep for f0 and f1 (optionally scaled, to demonstrate how a
// non-gauge fails the bound).
GaugeSweepResult gauge_sweep(int trials, int centers_per_trial,
                             std::uint64_t seed, double gauge_scale = 1.0);

}  // namespace polypack

#endif  // POLYPACK_SWEEPS_HPP
