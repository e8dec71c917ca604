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

#include "polypack/slice.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace polypack {

namespace {

constexpr double kParallelEps = 1e-9;   // in-plane direction below this: parallel axes
constexpr double kActiveTol = 5e-7;     // constraint counts as active at a vertex
constexpr double kVertexMerge = 1e-8;

// Ascending-coefficient polynomials of degree <= 4.
using Poly5 = std::array<double, 5>;
using Poly3 = std::array<double, 3>;

Poly5 mul_quad(const Poly3& a, const Poly3& b) {
  Poly5 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i + j] += a[i] * b[j];
  return out;
}

void axpy(Poly5& acc, double s, const Poly5& p) {
  for (int i = 0; i < 5; ++i) acc[i] += s * p[i];
}

double eval_poly5(const Poly5& p, double t) {
  double v = 0.0;
  for (int i = 4; i >= 0; --i) v = v * t + p[i];
  return v;
}

double eval_poly5_deriv(const Poly5& p, double t) {
  double v = 0.0;
  for (int i = 4; i >= 1; --i) v = v * t + i * p[i];
  return v;
}

// Real roots of p on [-bound, bound]: trims negligible leading coefficients,
// then companion-matrix eigenvalues with a short Newton polish.
std::vector<double> real_roots(const Poly5& p, double bound) {
  double scale = 0.0;
  for (double c : p) scale = std::max(scale, std::abs(c));
  std::vector<double> roots;
  if (scale == 0.0) return roots;  // identically zero: coincident curves

  int degree = 4;
  while (degree > 0 && std::abs(p[degree]) <= 1e-11 * scale) --degree;

  if (degree == 0) return roots;
  if (degree == 1) {
    roots.push_back(-p[0] / p[1]);
  } else if (degree == 2) {
    const double a = p[2], b = p[1], c = p[0];
    const double disc = b * b - 4.0 * a * c;
    if (disc >= -1e-12 * scale * scale) {
      const double sq = std::sqrt(std::max(disc, 0.0));
      const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
      roots.push_back(q / a);
      if (std::abs(q) > 0.0) roots.push_back(c / q);
      else roots.push_back(-b / a - q / a);
    }
  } else {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i)
      companion(i, degree - 1) = -p[i] / p[degree];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const auto& vals = solver.eigenvalues();
    for (int i = 0; i < vals.size(); ++i) {
      if (std::abs(vals[i].imag()) > 1e-7 * (1.0 + std::abs(vals[i].real())))
        continue;
      roots.push_back(vals[i].real());
    }
  }

  std::vector<double> polished;
  for (double t : roots) {
    for (int it = 0; it < 4; ++it) {
      const double f = eval_poly5(p, t);
      const double df = eval_poly5_deriv(p, t);
      if (std::abs(df) < 1e-14 * scale) break;
      const double step = f / df;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    if (std::abs(t) > bound) continue;
    bool duplicate = false;
    for (double existing : polished)
      if (std::abs(existing - t) < 1e-9) duplicate = true;
    if (!duplicate) polished.push_back(t);
  }
  std::sort(polished.begin(), polished.end());
  return polished;
}

}  // namespace

bool LeafPair::axes_parallel() const {
  return std::abs(other_dir[1]) <= kParallelEps;
}

Vec3 LeafPair::lift_plane_point(const Vec2& p) const {
  const double x = rot_cos * p.x() + rot_sin * p.y();
  const double y = rot_flip * (-rot_sin * p.x() + rot_cos * p.y());
  return Vec3(x, y, 0.0);
}

double LeafPair::dist_central(const Vec2& p) const { return p.norm(); }

double LeafPair::dist_other(const Vec2& p) const {
  const Vec3 v = lift_plane_point(p) - other_point;
  const double along = v.dot(other_dir);
  const double sq = v.squaredNorm() - along * along;
  return std::sqrt(std::max(sq, 0.0));
}

Mat slice_plane_basis(const Flat& core) {
  if (core.dim() != core.ambient_dim() - 2)
    throw std::invalid_argument("slice plane needs a codimension-2 core");
  return orthonormal_complement(core.directions(), core.ambient_dim());
}

LeafPair reduce_pair(const Flat& ai, const Flat& aj, const Vec& x,
                     const Mat& plane_basis, int i, int j) {
  const int m = ai.ambient_dim();
  const int n = ai.dim();
  if (aj.ambient_dim() != m || aj.dim() != n)
    throw std::invalid_argument("reduce_pair: mismatched cores");
  if (m != n + 2)
    throw std::invalid_argument("reduce_pair: cores must have codimension 2");
  if (!ai.contains(x))
    throw std::invalid_argument("reduce_pair: x not on the central core");
  if (flat_distance(ai, aj) <= tol::disjoint)
    throw std::invalid_argument("reduce_pair: cores are not disjoint");

  const Vec e1 = plane_basis.col(0);
  const Vec e2 = plane_basis.col(1);

  // Leaf frame before canonical rotation: (e1, e2, w_i) with w_i the
  // direction of a_i inside the leaf.  For n = 0 (disks in the plane) the
  // leaf is a virtual lift to parallel cylinders in R^3.
  Vec w_i;
  Vec3 line_point;
  Vec3 line_dir;
  if (n == 0) {
    w_i = Vec::Zero(m);
    const Vec d = aj.basepoint() - x;
    line_point = Vec3(d.dot(e1), d.dot(e2), 0.0);
    line_dir = Vec3(0.0, 0.0, 1.0);
  } else {
    const auto [bi, bj] = common_parallel_subflats(ai, aj, x);
    const Mat shared = bi.directions();  // n-1 columns
    const auto residual_direction = [&](const Mat& dirs) {
      Mat res = dirs;
      if (shared.cols() > 0)
        res -= shared * (shared.transpose() * dirs);
      Eigen::JacobiSVD<Mat> svd(res, Eigen::ComputeThinU);
      Mat u = svd.matrixU().leftCols(1);
      canonicalize_column_signs(u);
      return Vec(u.col(0));
    };
    w_i = residual_direction(ai.directions());
    const Vec w_j = residual_direction(aj.directions());

    // A point of a_j on the leaf: solve shared^T (p_j + B s - x) = 0 with
    // the least-norm s.
    Vec y0 = aj.basepoint();
    if (shared.cols() > 0) {
      const Mat system = shared.transpose() * aj.directions();
      const Vec rhs = shared.transpose() * (x - aj.basepoint());
      Eigen::CompleteOrthogonalDecomposition<Mat> cod(system);
      const Vec s = cod.solve(rhs);
      y0 += aj.directions() * s;
    }
    const Vec rel = y0 - x;
    line_point = Vec3(rel.dot(e1), rel.dot(e2), rel.dot(w_i));
    line_dir = Vec3(w_j.dot(e1), w_j.dot(e2), w_j.dot(w_i));
    const double norm = line_dir.norm();
    if (norm < 1e-9)
      throw std::runtime_error("reduce_pair: degenerate leaf direction");
    line_dir /= norm;
  }

  // Canonical rotation: the nearest point of the other axis to the z-axis
  // (nearest to the origin for parallel axes) lands on the positive X axis.
  const double dxy2 =
      line_dir[0] * line_dir[0] + line_dir[1] * line_dir[1];
  double s_star;
  if (dxy2 > kParallelEps * kParallelEps) {
    s_star = -(line_point[0] * line_dir[0] + line_point[1] * line_dir[1]) /
             dxy2;
  } else {
    line_dir[0] = 0.0;
    line_dir[1] = 0.0;
    line_dir[2] = line_dir[2] >= 0.0 ? 1.0 : -1.0;
    s_star = -line_point.dot(line_dir);  // nearest the origin instead
  }
  Vec3 q = line_point + s_star * line_dir;
  const double trace = std::hypot(q[0], q[1]);
  if (trace <= tol::disjoint)
    throw std::invalid_argument("reduce_pair: axes intersect in the leaf");

  const double c = q[0] / trace;
  const double s = q[1] / trace;
  Vec3 q_rot(trace, 0.0, q[2]);
  Vec3 d_rot(c * line_dir[0] + s * line_dir[1],
             -s * line_dir[0] + c * line_dir[1], line_dir[2]);
  d_rot[0] = 0.0;  // exact at the nearest point
  {
    const double norm = std::hypot(d_rot[1], d_rot[2]);
    d_rot[1] /= norm;
    d_rot[2] /= norm;
  }

  double flip = 1.0;
  if (std::abs(q_rot[2]) <= 1e-12) {
    q_rot[2] = 0.0;
  } else if (q_rot[2] < 0.0) {
    flip = -1.0;  // rotate by pi about the X axis
    q_rot[2] = -q_rot[2];
    d_rot[1] = -d_rot[1];
    d_rot[2] = -d_rot[2];
  }
  if (d_rot[2] < -1e-12) {
    d_rot[1] = -d_rot[1];
    d_rot[2] = -d_rot[2];
  } else if (std::abs(d_rot[2]) <= 1e-12) {
    d_rot[2] = 0.0;
    if (d_rot[1] < 0.0) d_rot[1] = -d_rot[1];
  }

  LeafPair pair;
  pair.i = i;
  pair.j = j;
  pair.other_point = q_rot;
  pair.other_dir = Vec3(0.0, d_rot[1], d_rot[2]);
  pair.rot_cos = c;
  pair.rot_sin = s;
  pair.rot_flip = flip;
  pair.frame_origin = x;
  pair.frame_x = c * e1 + s * e2;
  pair.frame_y = flip * (-s * e1 + c * e2);
  pair.frame_z = flip * w_i;
  return pair;
}

LeafPair reduce_to_leaf(const PolycylinderPacking& p, int i, int j,
                        const Vec& x) {
  if (i < 0 || j < 0 || i >= static_cast<int>(p.cores().size()) ||
      j >= static_cast<int>(p.cores().size()) || i == j)
    throw std::out_of_range("reduce_to_leaf: bad core indices");
  const Mat basis = slice_plane_basis(p.cores()[i]);
  return reduce_pair(p.cores()[i], p.cores()[j], x, basis, i, j);
}

ConicBisector::ConicBisector(const LeafPair& pair) : pair_(pair) {
  const double qx = pair.other_point[0];
  const double qz = pair.other_point[2];
  const double uy = pair.other_dir[1];
  const double uz = pair.other_dir[2];

  // In the pair's canonical frame (equidistance from the two axes, squares
  // eliminated): uy^2 Y^2 + 2 qx X - 2 uy qz uz Y + qz^2 uz^2 - qx^2 - qz^2.
  const double cc = uy * uy;
  const double dd = 2.0 * qx;
  const double ee = -2.0 * uy * qz * uz;
  const double ff = qz * qz * uz * uz - qx * qx - qz * qz;
  class_ = pair.axes_parallel() ? ConicClass::line : ConicClass::parabola;

  // Graph form X = g(Y) in the canonical frame.
  g2_ = -cc / dd;
  g1_ = -ee / dd;
  g0_ = -ff / dd;

  // Rotate into the shared slice-plane coordinates: (X, Y) = T (a, b) with
  // T = [[c, s], [-fs, fc]].
  const double c = pair.rot_cos, s = pair.rot_sin, f = pair.rot_flip;
  coeffs_[0] = cc * s * s;            // a^2
  coeffs_[1] = -2.0 * cc * s * c;     // a b
  coeffs_[2] = cc * c * c;            // b^2
  coeffs_[3] = c * dd - f * s * ee;   // a
  coeffs_[4] = s * dd + f * c * ee;   // b
  coeffs_[5] = ff;
}

double ConicBisector::value(const Vec2& p) const {
  const double a = p.x(), b = p.y();
  return coeffs_[0] * a * a + coeffs_[1] * a * b + coeffs_[2] * b * b +
         coeffs_[3] * a + coeffs_[4] * b + coeffs_[5];
}

double ConicBisector::clearance(const Vec2& p) const {
  return pair_.dist_other(p) - pair_.dist_central(p);
}

Vec2 ConicBisector::point_at(double t) const {
  const double gx = g0_ + t * (g1_ + t * g2_);
  const double c = pair_.rot_cos, s = pair_.rot_sin, f = pair_.rot_flip;
  return Vec2(c * gx - f * s * t, s * gx + f * c * t);
}

Vec2 ConicBisector::tangent_at(double t) const {
  const double dgx = g1_ + 2.0 * t * g2_;
  const double c = pair_.rot_cos, s = pair_.rot_sin, f = pair_.rot_flip;
  return Vec2(c * dgx - f * s, s * dgx + f * c);
}

double ConicBisector::param_of(const Vec2& p) const {
  const double c = pair_.rot_cos, s = pair_.rot_sin, f = pair_.rot_flip;
  return f * (-s * p.x() + c * p.y());
}

double ConicBisector::quadratic_rank_residual() const {
  double scale = 0.0;
  for (double v : coeffs_) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  const double a = coeffs_[0] / scale;
  const double b = coeffs_[1] / scale;
  const double c = coeffs_[2] / scale;
  return std::abs(b * b - 4.0 * a * c);
}

std::array<double, 5> ConicBisector::compose_with(
    const ConicBisector& other) const {
  const double c = pair_.rot_cos, s = pair_.rot_sin, f = pair_.rot_flip;
  // alpha(t), beta(t): shared coordinates of point_at(t).
  const Poly3 alpha{c * g0_, c * g1_ - f * s, c * g2_};
  const Poly3 beta{s * g0_, s * g1_ + f * c, s * g2_};
  const auto& o = other.coeffs_;
  Poly5 out{};
  axpy(out, o[0], mul_quad(alpha, alpha));
  axpy(out, o[1], mul_quad(alpha, beta));
  axpy(out, o[2], mul_quad(beta, beta));
  out[0] += o[5];
  for (int i = 0; i < 3; ++i) {
    out[i] += o[3] * alpha[i];
    out[i] += o[4] * beta[i];
  }
  return out;
}

std::array<double, 5> ConicBisector::circle_equation(double radius) const {
  const double c = pair_.rot_cos, s = pair_.rot_sin, f = pair_.rot_flip;
  const Poly3 alpha{c * g0_, c * g1_ - f * s, c * g2_};
  const Poly3 beta{s * g0_, s * g1_ + f * c, s * g2_};
  Poly5 out{};
  axpy(out, 1.0, mul_quad(alpha, alpha));
  axpy(out, 1.0, mul_quad(beta, beta));
  out[0] -= radius * radius;
  return out;
}

ConicBisector bisector_conic(const LeafPair& pair) {
  return ConicBisector(pair);
}

bool half_region_contains(const ConicBisector& b, const Vec2& p) {
  return b.clearance(p) >= -1e-12;
}

namespace {

struct VertexCandidate {
  Vec2 point;
  bool on_circle = false;
};

bool satisfies_all(const std::vector<ConicBisector>& bisectors, const Vec2& p,
                   double slack) {
  for (const auto& b : bisectors)
    if (b.clearance(p) < -slack) return false;
  return true;
}

}  // namespace

DirichletSlice build_slice(const PolycylinderPacking& packing, int i,
                           const Vec& x, double clip_radius) {
  if (i < 0 || i >= static_cast<int>(packing.cores().size()))
    throw std::out_of_range("build_slice: bad core index");
  const double hexagon_radius = 2.0 / std::numbers::sqrt3;
  if (clip_radius < hexagon_radius + 0.05)
    throw std::invalid_argument("build_slice: clip radius too small");
  const Flat& core = packing.cores()[i];
  if (!core.contains(x))
    throw std::invalid_argument("build_slice: x not on the chosen core");

  DirichletSlice slice;
  slice.clip_radius = clip_radius;
  slice.plane_basis = slice_plane_basis(core);
  slice.center = x;

  // Neighbors within flat distance 2R + 2 can influence the clipped slice;
  // those beyond 2R + 0.2 provably leave the clip disk inside their
  // half-region and are dropped.
  const double enumeration_radius = 2.0 * clip_radius + 2.0;
  const auto neighbors =
      cores_near_point(packing, x, enumeration_radius);
  std::vector<ConicBisector> bisectors;
  for (const auto& placed : neighbors) {
    const double d = flat_distance(core, placed.flat);
    if (placed.rep_index == i && placed.shift.norm() <= 1e-12 &&
        d <= tol::disjoint)
      continue;  // the central cylinder itself
    if (d > 2.0 * clip_radius + 0.2) continue;
    const LeafPair pair =
        reduce_pair(core, placed.flat, x, slice.plane_basis, i,
                    placed.rep_index);
    bisectors.emplace_back(pair);
  }

  // Deduplicate coincident bisectors (symmetric configurations).
  {
    std::vector<ConicBisector> unique;
    std::vector<std::array<double, 6>> normals;
    for (const auto& b : bisectors) {
      std::array<double, 6> n = b.coeffs();
      double norm = 0.0;
      for (double v : n) norm += v * v;
      norm = std::sqrt(norm);
      for (double& v : n) v /= norm;
      if (n[5] > 0.0)
        for (double& v : n) v = -v;
      bool duplicate = false;
      for (const auto& seen : normals) {
        double dist = 0.0;
        for (int idx = 0; idx < 6; ++idx)
          dist += (n[idx] - seen[idx]) * (n[idx] - seen[idx]);
        if (std::sqrt(dist) < 1e-9) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) {
        normals.push_back(n);
        unique.push_back(b);
      }
    }
    bisectors = std::move(unique);
  }

  const double t_bound = 1.5 * clip_radius + 5.0;
  std::vector<VertexCandidate> candidates;
  for (std::size_t a = 0; a < bisectors.size(); ++a) {
    for (std::size_t b = a + 1; b < bisectors.size(); ++b) {
      const auto poly = bisectors[a].compose_with(bisectors[b]);
      for (double t : real_roots(poly, t_bound))
        candidates.push_back({bisectors[a].point_at(t), false});
    }
    const auto circle = bisectors[a].circle_equation(clip_radius);
    for (double t : real_roots(circle, t_bound))
      candidates.push_back({bisectors[a].point_at(t), true});
  }

  std::vector<Vec2> vertices;
  std::vector<bool> vertex_on_circle;
  for (const auto& cand : candidates) {
    if (cand.point.norm() > clip_radius + tol::constraint) continue;
    if (!satisfies_all(bisectors, cand.point, tol::constraint)) continue;
    bool merged = false;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if ((vertices[v] - cand.point).norm() < kVertexMerge) {
        merged = true;
        if (cand.on_circle) vertex_on_circle[v] = true;
        break;
      }
    if (!merged) {
      vertices.push_back(cand.point);
      vertex_on_circle.push_back(cand.on_circle);
    }
  }

  // CCW order about x; the region is convex and contains the unit disk
  // about x, so polar sorting is sound.
  std::vector<std::size_t> order(vertices.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
    return std::atan2(vertices[lhs].y(), vertices[lhs].x()) <
           std::atan2(vertices[rhs].y(), vertices[rhs].x());
  });
  {
    std::vector<Vec2> sorted;
    std::vector<bool> sorted_circle;
    for (std::size_t v : order) {
      sorted.push_back(vertices[v]);
      sorted_circle.push_back(vertex_on_circle[v]);
    }
    vertices = std::move(sorted);
    vertex_on_circle = std::move(sorted_circle);
  }

  slice.bisectors = bisectors;
  slice.vertices = vertices;

  const auto check_boundary_point = [&](const Vec2& p) {
    return p.norm() <= clip_radius + tol::constraint &&
           satisfies_all(bisectors, p, tol::constraint);
  };

  if (vertices.empty()) {
    // No constraint reaches the clip disk: the slice is the whole disk.
    for (int k = 0; k < 32; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / 32.0;
      const Vec2 p(clip_radius * std::cos(phi), clip_radius * std::sin(phi));
      if (!satisfies_all(bisectors, p, 1e-7))
        throw std::runtime_error(
            "build_slice: inconsistent boundary (missed intersection)");
    }
    slice.arcs.push_back({-1, 0.0, 2.0 * std::numbers::pi});
    slice.bounded = false;
    return slice;
  }

  // Active constraints per vertex.
  std::vector<std::vector<int>> active(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (std::size_t b = 0; b < bisectors.size(); ++b)
      if (std::abs(bisectors[b].clearance(vertices[v])) <= kActiveTol)
        active[v].push_back(static_cast<int>(b));

  bool any_clip_arc = false;
  const std::size_t count = vertices.size();
  for (std::size_t v = 0; v < count; ++v) {
    const std::size_t w = (v + 1) % count;
    const Vec2& pv = vertices[v];
    const Vec2& pw = vertices[w];

    // Candidate arcs: bisectors active at both endpoints, then the clip
    // circle; the surviving candidate is the one whose midpoint satisfies
    // every constraint.
    int chosen = -2;
    double t0 = 0.0, t1 = 0.0;
    if (count > 1) {
      for (const int b : active[v]) {
        if (std::find(active[w].begin(), active[w].end(), b) ==
            active[w].end())
          continue;
        const double ta = bisectors[b].param_of(pv);
        const double tb = bisectors[b].param_of(pw);
        if (std::abs(ta - tb) < 1e-12) continue;
        const double tm = 0.5 * (ta + tb);
        const Vec2 mid = bisectors[b].point_at(tm);
        // CCW traversal keeps x (the origin) strictly to the left; this
        // rejects interior chords when two curves join the same vertices.
        const Vec2 dir = (tb > ta ? 1.0 : -1.0) * bisectors[b].tangent_at(tm);
        const double origin_left = dir.y() * mid.x() - dir.x() * mid.y();
        if (origin_left <= 0.0) continue;
        if (check_boundary_point(mid)) {
          chosen = b;
          t0 = ta;
          t1 = tb;
          break;
        }
      }
    }
    if (chosen == -2 && vertex_on_circle[v] && vertex_on_circle[w]) {
      double phi0 = std::atan2(pv.y(), pv.x());
      double phi1 = std::atan2(pw.y(), pw.x());
      if (count == 1) {
        phi1 = phi0 + 2.0 * std::numbers::pi;
      } else {
        while (phi1 <= phi0 + 1e-15) phi1 += 2.0 * std::numbers::pi;
      }
      const double mid_phi = 0.5 * (phi0 + phi1);
      const Vec2 mid(clip_radius * std::cos(mid_phi),
                     clip_radius * std::sin(mid_phi));
      if (satisfies_all(bisectors, mid, 1e-7)) {
        chosen = -1;
        t0 = phi0;
        t1 = phi1;
      }
    }
    if (chosen == -2)
      throw std::runtime_error("build_slice: boundary assembly failed");
    if (chosen == -1) any_clip_arc = true;
    slice.arcs.push_back({chosen, t0, t1});
  }

  slice.bounded = !any_clip_arc;
  return slice;
}

namespace {

// 24-point Gauss-Legendre nodes/weights on [-1, 1] (symmetric halves).
constexpr int kGlPoints = 24;
constexpr double kGlNode[kGlPoints / 2] = {
    0.0640568928626056260850430826247450385909,
    0.1911188674736163091586398207570696318404,
    0.3150426796961633743867932913198102407864,
    0.4337935076260451384870842319133497124524,
    0.5454214713888395356583756172183723700107,
    0.6480936519369755692524957869107476266696,
    0.7401241915785543642438281030999784255232,
    0.8200019859739029219539498726697452080761,
    0.8864155270044010342131543419821967550873,
    0.9382745520027327585236490017087214496548,
    0.9747285559713094981983919930081690617411,
    0.9951872199970213601799974097007368118745};
constexpr double kGlWeight[kGlPoints / 2] = {
    0.1279381953467521569740561652246953718517,
    0.1258374563468282961213753825111836887264,
    0.1216704729278033912044631534762624256070,
    0.1155056680537256013533444839067835598622,
    0.1074442701159656347825773424466062227946,
    0.0976186521041138882698806644642471544279,
    0.0861901615319532759171852029837426671850,
    0.0733464814110803057340336152531165181193,
    0.0592985849154367807463677585001085845412,
    0.0442774388174198061686027482113382288593,
    0.0285313886289336631813078159518782864491,
    0.0123412297999871995468056670700372915759};

}  // namespace

SliceArea slice_area(const DirichletSlice& s) {
  if (s.arcs.empty()) throw std::invalid_argument("slice has no boundary");
  double area = 0.0;
  for (const auto& arc : s.arcs) {
    if (arc.constraint < 0) {
      area += 0.5 * s.clip_radius * s.clip_radius * (arc.t1 - arc.t0);
      continue;
    }
    const auto& b = s.bisectors[arc.constraint];
    const double mid = 0.5 * (arc.t0 + arc.t1);
    const double half = 0.5 * (arc.t1 - arc.t0);
    double sum = 0.0;
    for (int k = 0; k < kGlPoints / 2; ++k) {
      for (const double sign : {-1.0, 1.0}) {
        const double t = mid + sign * half * kGlNode[k];
        const Vec2 p = b.point_at(t);
        const Vec2 dp = b.tangent_at(t);
        sum += kGlWeight[k] * (p.x() * dp.y() - p.y() * dp.x());
      }
    }
    area += 0.5 * sum * half;
  }
  return {area, !s.bounded};
}

double verify_vertex_bound(const DirichletSlice& s) {
  if (s.vertices.empty()) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : s.vertices) best = std::min(best, v.norm());
  return best;
}

std::optional<double> chord_angle(const ConicBisector& b) {
  const double radius = 2.0 / std::numbers::sqrt3;
  const auto poly = b.circle_equation(radius);
  const auto roots = real_roots(poly, 2.0 * radius + 1.0);
  std::vector<Vec2> points;
  for (const double t : roots) {
    const Vec2 p = b.point_at(t);
    if (std::abs(p.norm() - radius) <= 1e-7) points.push_back(p);
  }
  if (points.size() < 2) return std::nullopt;
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double cosine = std::clamp(
          points[i].dot(points[j]) / (radius * radius), -1.0, 1.0);
      best = std::max(best, std::acos(cosine));
    }
  return best * 180.0 / std::numbers::pi;
}

}  // namespace polypack
