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

#include "polypack/flat.hpp"

#include <stdexcept>

namespace polypack {

namespace {

void check_same_ambient(const Flat& f, const Flat& g) {
  if (f.ambient_dim() != g.ambient_dim())
    throw std::invalid_argument("flats live in different ambient dimensions");
}

}  // namespace

Flat::Flat(Vec basepoint)
    : base_(std::move(basepoint)), dirs_(base_.size(), 0) {}

Flat::Flat(Vec basepoint, Mat directions) : base_(std::move(basepoint)) {
  if (directions.cols() > 0 && directions.rows() != base_.size())
    throw std::invalid_argument("direction vectors do not match basepoint");
  if (directions.cols() > base_.size())
    throw std::invalid_argument("flat dimension exceeds ambient dimension");
  dirs_ = directions.cols() == 0 ? Mat(base_.size(), 0)
                                 : orthonormalize(directions);
}

Vec Flat::project(const Vec& x) const {
  if (dim() == 0) return base_;
  return base_ + dirs_ * (dirs_.transpose() * (x - base_));
}

double Flat::distance_to(const Vec& x) const {
  return (x - project(x)).norm();
}

bool Flat::contains(const Vec& x, double eps) const {
  return distance_to(x) <= eps;
}

Flat Flat::translated(const Vec& v) const {
  Flat copy = *this;
  copy.base_ += v;
  return copy;
}

double Subspace::containment_residual(const Vec& v) const {
  if (dim() == 0) return v.norm();
  return (v - directions * (directions.transpose() * v)).norm();
}

Subspace tangent_cone(const Flat& f) { return Subspace{f.directions()}; }

int parallel_dimension(const Flat& f, const Flat& g) {
  check_same_ambient(f, g);
  const Mat inter = subspace_intersection(f.directions(), g.directions(),
                                          f.ambient_dim());
  return static_cast<int>(inter.cols());
}

double flat_distance(const Flat& f, const Flat& g) {
  check_same_ambient(f, g);
  const Vec rhs = g.basepoint() - f.basepoint();
  const int cols = f.dim() + g.dim();
  if (cols == 0) return rhs.norm();
  Mat joint(f.ambient_dim(), cols);
  if (f.dim() > 0) joint.leftCols(f.dim()) = f.directions();
  if (g.dim() > 0) joint.rightCols(g.dim()) = -g.directions();
  // Rank-revealing least squares; parallel flats make the system
  // rank-deficient.
  Eigen::CompleteOrthogonalDecomposition<Mat> cod(joint);
  const Vec z = cod.solve(rhs);
  return (joint * z - rhs).norm();
}

std::pair<Flat, Flat> common_parallel_subflats(const Flat& ai, const Flat& aj,
                                               const Vec& x) {
  check_same_ambient(ai, aj);
  const int m = ai.ambient_dim();
  const int n = ai.dim();
  if (aj.dim() != n)
    throw std::invalid_argument(
        "common_parallel_subflats: expects flats of equal dimension");
  if (!ai.contains(x))
    throw std::invalid_argument("common_parallel_subflats: x not on a_i");
  if (flat_distance(ai, aj) <= tol::disjoint)
    throw std::invalid_argument("common_parallel_subflats: flats intersect");

  const Mat inter =
      subspace_intersection(ai.directions(), aj.directions(), m);
  if (static_cast<int>(inter.cols()) < n - 1)
    throw std::runtime_error(
        "common_parallel_subflats: parallel dimension below n-1");
  const Mat shared = inter.leftCols(std::max(n - 1, 0));
  return {Flat(x, shared), Flat(aj.project(x), shared)};
}

Flat leaf_at(const Vec& x, const Flat& ai, const Flat& aj) {
  if (ai.dim() != ai.ambient_dim() - 2)
    throw std::invalid_argument("leaf_at: cores must have codimension 2");
  const auto [bi, bj] = common_parallel_subflats(ai, aj, x);
  const Mat comp =
      orthonormal_complement(bi.directions(), ai.ambient_dim());
  return Flat(x, comp);
}

Flat orthogonal_plane(const Flat& ai, const Vec& x) {
  if (ai.dim() != ai.ambient_dim() - 2)
    throw std::invalid_argument("orthogonal_plane: core must have codim 2");
  if (!ai.contains(x))
    throw std::invalid_argument("orthogonal_plane: x not on the flat");
  const Mat comp = orthonormal_complement(ai.directions(), ai.ambient_dim());
  return Flat(x, comp);
}

}  // namespace polypack
