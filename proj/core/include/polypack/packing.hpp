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

#ifndef POLYPACK_PACKING_HPP
#define POLYPACK_PACKING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polypack/flat.hpp"

namespace polypack {

// A packing of R^m (m = n+2) by unit-radius polycylinders, given as core
// n-flats.  Periodic packings list core representatives plus independent
// lattice translation vectors; the packing is the orbit of the cores under
// integer lattice combinations.  Finite packings leave the lattice empty.
class PolycylinderPacking {
 public:
  PolycylinderPacking(int ambient_dim, std::vector<Flat> cores,
                      std::vector<Vec> lattice = {});

  int ambient_dim() const { return ambient_dim_; }
  int core_dim() const { return ambient_dim_ - 2; }
  const std::vector<Flat>& cores() const { return cores_; }
  const std::vector<Vec>& lattice() const { return lattice_; }
  bool periodic() const { return !lattice_.empty(); }

 private:
  int ambient_dim_;
  std::vector<Flat> cores_;
  std::vector<Vec> lattice_;
};

// A concrete cylinder of the packing: a lattice translate of one of the
// representative cores.
struct PlacedCore {
  Flat flat;
  int rep_index;
  Vec shift;  // the lattice translation applied (zero for representatives)
};

struct ValidationIssue {
  int i, j;        // representative indices
  Vec shift;       // lattice translate applied to core j
  double distance; // flat distance observed (< 2 - 1e-9)
};

// Lists all core pairs (including lattice translates within range) closer
// than 2 - 1e-9.  Empty result means the packing is valid.
std::vector<ValidationIssue> validate(const PolycylinderPacking& p);

// The product of the densest disk packing in the plane with R^n: core
// representative through the origin with directions e_3..e_{n+2}, lattice
// (2,0,0...) and (1,sqrt(3),0...).  Nearest core distance is exactly 2.
PolycylinderPacking hexagonal_packing(int n);

// All placed cores whose distance to the origin is at most r + 1 (every
// cylinder meeting the ball of radius r).  Throws if the lattice is
// degenerate relative to the core directions (unbounded enumeration).
std::vector<PlacedCore> cores_in_ball(const PolycylinderPacking& p, double r);

// All placed cores within distance `radius` of the point x.
std::vector<PlacedCore> cores_near_point(const PolycylinderPacking& p,
                                         const Vec& x, double radius);

// min over cores of (distance from x to the core flat) - 1; negative inside
// a cylinder, +infinity for an empty packing.
double distance_to_packing(const PolycylinderPacking& p, const Vec& x);

// True iff x is no farther from cylinder i (the representative as placed)
// than from every other cylinder of the packing, including translates.
bool dirichlet_cell_membership(const PolycylinderPacking& p, int i,
                               const Vec& x);

struct DensityEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  double window_radius = 0.0;
  std::uint64_t seed = 0;
};

// Monte-Carlo covered-volume fraction of the window ball r*B^m: uniform
// ball samples (counter-based draws, thread-count independent), binomial
// standard error.  The O(1/r) window bias is reported via the radius, not
// corrected.
DensityEstimate density_estimate(const PolycylinderPacking& p, double r,
                                 std::uint64_t samples, std::uint64_t seed);

}  // namespace polypack

#endif  // POLYPACK_PACKING_HPP
