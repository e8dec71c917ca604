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

#ifndef POLYPACK_FLAT_HPP
#define POLYPACK_FLAT_HPP

#include <utility>

#include "polypack/linalg.hpp"

namespace polypack {

// An affine d-flat in R^m: basepoint plus an orthonormal direction basis.
// Immutable value type; incoming direction sets are re-orthonormalized on
// construction (rank-deficient input throws).
class Flat {
 public:
  // A 0-flat (a point).
  explicit Flat(Vec basepoint);
  Flat(Vec basepoint, Mat directions);

  int ambient_dim() const { return static_cast<int>(base_.size()); }
  int dim() const { return static_cast<int>(dirs_.cols()); }
  const Vec& basepoint() const { return base_; }
  const Mat& directions() const { return dirs_; }

  // Foot of the perpendicular from x onto the flat.
  Vec project(const Vec& x) const;
  double distance_to(const Vec& x) const;
  bool contains(const Vec& x, double eps = tol::on_flat) const;
  Flat translated(const Vec& v) const;

 private:
  Vec base_;
  Mat dirs_;
};

// A linear subspace of R^m (a flat through the origin with the basepoint
// dropped): the tangent cone at infinity of an affine flat.
struct Subspace {
  Mat directions;  // orthonormal columns

  int ambient_dim() const { return static_cast<int>(directions.rows()); }
  int dim() const { return static_cast<int>(directions.cols()); }
  // Residual of v against the subspace; zero iff v lies in it.
  double containment_residual(const Vec& v) const;
};

// Direction space of F; translation invariant.
Subspace tangent_cone(const Flat& f);

// dim(F_inf ∩ G_inf), the dimension of the maximal parallel sub-flats.
// Throws on ambient-dimension mismatch.
int parallel_dimension(const Flat& f, const Flat& g);

// Minimum Euclidean distance between two flats (0 if they intersect),
// computed by rank-revealing least squares over the joint direction span.
double flat_distance(const Flat& f, const Flat& g);

// For disjoint n-flats a_i, a_j in R^(n+2) and a point x on a_i, parallel
// (n-1)-dimensional subflats b_i ⊂ a_i through x and b_j ⊂ a_j through the
// foot of the perpendicular of x on a_j.  Both share the same canonically
// chosen direction space inside F_inf ∩ G_inf.
// Throws if the flats are not disjoint or the parallel dimension drops
// below n-1 (impossible for genuinely disjoint inputs; signals bad input).
std::pair<Flat, Flat> common_parallel_subflats(const Flat& ai, const Flat& aj,
                                               const Vec& x);

// The 3-flat through x orthogonal to the common parallel subflat directions
// of a_i and a_j.  Its intersections with a_i and a_j are lines, and it
// contains orthogonal_plane(a_i, x).
Flat leaf_at(const Vec& x, const Flat& ai, const Flat& aj);

// The 2-flat through x orthogonal to a_i (a_i must have codimension 2 and
// contain x).
Flat orthogonal_plane(const Flat& ai, const Vec& x);

}  // namespace polypack

#endif  // POLYPACK_FLAT_HPP
