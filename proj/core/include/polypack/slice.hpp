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

#ifndef POLYPACK_SLICE_HPP
#define POLYPACK_SLICE_HPP

#include <array>
#include <optional>
#include <vector>

#include "polypack/flat.hpp"
#include "polypack/packing.hpp"

namespace polypack {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// A pair of polycylinders reduced to two right circular cylinders in an R^3
// foliation leaf, in canonical coordinates: the central axis is the z-axis,
// x sits at the origin, and the slice plane is {z = 0}.  The other axis is
// the line through `other_point` (the point nearest the z-axis, ties broken
// nearest the origin) with unit direction `other_dir`; canonically
// other_point = (w, 0, h) with w > 0, h >= 0 and other_dir = (0, uy, uz)
// with uz >= 0 (uy >= 0 when uz = 0).
//
// `frame` maps leaf coordinates back to the ambient space; rot_* give the
// rotation from the shared slice-plane basis of the central core into this
// pair's canonical in-plane frame.
struct LeafPair {
  int i = 0, j = 0;
  Vec3 other_point = Vec3::Zero();
  Vec3 other_dir = Vec3::UnitZ();

  double rot_cos = 1.0, rot_sin = 0.0;
  double rot_flip = 1.0;  // +1, or -1 when the leaf z-axis was reflected

  Vec frame_origin;           // x in ambient coordinates
  Vec frame_x, frame_y, frame_z;  // ambient images of the canonical axes

  double axis_distance() const { return other_point[0]; }
  bool axes_parallel() const;

  // Leaf coordinates of a slice-plane point given in the shared basis.
  Vec3 lift_plane_point(const Vec2& p) const;
  // Distance from a slice-plane point to the two cylinder axes.
  double dist_central(const Vec2& p) const;
  double dist_other(const Vec2& p) const;
};

// Canonical orthonormal basis of the slice plane p_x (the orthogonal
// complement of the core's direction space).
Mat slice_plane_basis(const Flat& core);

// Reduces cylinders i and j of the packing to an R^3 leaf through x (a
// point on core i).  For ambient dimension 2 the configuration is lifted to
// parallel cylinders in R^3.  Throws if the cores are not disjoint.
LeafPair reduce_to_leaf(const PolycylinderPacking& p, int i, int j,
                        const Vec& x);

// Same reduction for two explicit core flats; `plane_basis` is the shared
// slice-plane basis of ai at x.
LeafPair reduce_pair(const Flat& ai, const Flat& aj, const Vec& x,
                     const Mat& plane_basis, int i = 0, int j = 1);

enum class ConicClass { parabola, line };

// The locus of slice-plane points equidistant from the two cylinders of a
// leaf pair: a parabola (skew or crossing axes) or a line (parallel axes).
// Coefficients are in the *shared* slice-plane coordinates,
//   A a^2 + B a b + C b^2 + D a + E b + F = 0,
// with the quadratic part of numerical rank <= 1.  The region nearer the
// central axis is where the form is negative.  Membership predicates are
// evaluated from the stored axes, not the coefficients.
class ConicBisector {
 public:
  ConicBisector(const LeafPair& pair);

  const std::array<double, 6>& coeffs() const { return coeffs_; }
  ConicClass classification() const { return class_; }
  const LeafPair& pair() const { return pair_; }

  double value(const Vec2& p) const;  // implicit form, negative inside
  // dist(p, other axis) - dist(p, central axis): >= 0 on the central side.
  double clearance(const Vec2& p) const;

  // Graph parameterization in the pair's canonical frame: the curve is
  // X = g(t), Y = t with g of degree <= 2; returned in shared coordinates.
  Vec2 point_at(double t) const;
  Vec2 tangent_at(double t) const;  // d/dt of point_at
  double param_of(const Vec2& p) const;

  // |B^2 - 4AC| relative to the coefficient scale; the rank <= 1 residual.
  double quadratic_rank_residual() const;

  // Coefficients of the polynomial q(t) = value(point_at(t)) of another
  // conic evaluated along this curve (degree <= 4, ascending order).
  std::array<double, 5> compose_with(const ConicBisector& other) const;
  // Polynomial |point_at(t)|^2 - r^2 (degree <= 4).
  std::array<double, 5> circle_equation(double radius) const;

 private:
  std::array<double, 6> coeffs_{};
  ConicClass class_ = ConicClass::line;
  LeafPair pair_;
  // canonical-frame graph coefficients: X = gx0 + gx1 t + gx2 t^2
  double g0_ = 0.0, g1_ = 0.0, g2_ = 0.0;
};

ConicBisector bisector_conic(const LeafPair& pair);

// dist(p, central axis) <= dist(p, other axis); boundary points belong to
// the region (closed half-region).
bool half_region_contains(const ConicBisector& b, const Vec2& p);

// One boundary piece of a Dirichlet slice: either an arc of bisector
// `constraint` between curve parameters t0 and t1, or (constraint < 0) an
// arc of the clip circle between polar angles t0 and t1 (CCW).
struct SliceArc {
  int constraint = -1;
  double t0 = 0.0, t1 = 0.0;
};

// The intersection of all bisector half-regions with the clip disk of
// radius clip_radius about x, in shared slice-plane coordinates.  Convex,
// contains the unit disk; `bounded` is true iff no clip arc remains on the
// boundary.
struct DirichletSlice {
  std::vector<ConicBisector> bisectors;
  std::vector<Vec2> vertices;          // boundary vertices, CCW about x
  std::vector<SliceArc> arcs;          // closed positively oriented boundary
  bool bounded = false;
  double clip_radius = 0.0;

  Mat plane_basis;   // shared slice-plane basis (ambient columns)
  Vec center;        // x in ambient coordinates
};

// Builds the Dirichlet slice of cylinder i at x on its core.  Neighbors are
// pruned at flat distance 2R + 2.  Requires a valid packing and
// R >= 2/sqrt(3) + margin.
DirichletSlice build_slice(const PolycylinderPacking& p, int i, const Vec& x,
                           double clip_radius = 8.0);

struct SliceArea {
  double value = 0.0;
  bool lower_bound = false;  // true when the slice was clipped (unbounded)
};

// Area by the Green's-theorem line integral along the boundary arcs.
SliceArea slice_area(const DirichletSlice& s);

// Minimum distance from x to a slice vertex; +infinity if there are no
// vertices.  The hexagon bound requires this to be >= 2/sqrt(3).
double verify_vertex_bound(const DirichletSlice& s);

// Intersects the bisector with the circle of radius 2/sqrt(3) about x and
// returns the maximal angle (degrees) subtended at x by two intersection
// points; nullopt when the bisector misses the circle.
std::optional<double> chord_angle(const ConicBisector& b);

}  // namespace polypack

#endif  // POLYPACK_SLICE_HPP
