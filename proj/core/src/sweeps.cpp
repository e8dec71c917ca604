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

#include "polypack/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "polypack/parallel.hpp"

namespace polypack {

std::pair<Flat, Flat> random_disjoint_flat_pair(int n, int k, int parallel_dim,
                                                CounterRng& rng) {
  const int m = n + k;
  const int floor_dim = std::max(0, n - k + 1);
  if (parallel_dim < floor_dim || parallel_dim > n)
    throw std::invalid_argument(
        "random_disjoint_flat_pair: parallel_dim outside the feasible range");

  // Shared direction space, then independent completions on both sides.
  Mat stacked_f(m, n), stacked_g(m, n);
  Mat shared(m, parallel_dim);
  for (int c = 0; c < parallel_dim; ++c) shared.col(c) = rng.gaussian_vector(m);
  for (int c = 0; c < parallel_dim; ++c) {
    stacked_f.col(c) = shared.col(c);
    stacked_g.col(c) = shared.col(c);
  }
  for (int c = parallel_dim; c < n; ++c) {
    stacked_f.col(c) = rng.gaussian_vector(m);
    stacked_g.col(c) = rng.gaussian_vector(m);
  }
  const Mat dirs_f = orthonormalize(stacked_f);
  const Mat dirs_g = orthonormalize(stacked_g);

  // dim(F_inf + G_inf) = 2n - parallel_dim <= m - 1, so a complement
  // direction exists; an offset with a component there keeps the flats
  // disjoint.
  Mat joint(m, 2 * n);
  joint.leftCols(n) = dirs_f;
  joint.rightCols(n) = dirs_g;
  Eigen::JacobiSVD<Mat> svd(joint, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0 ? sv[0] : 0.0) * tol::rank_rel;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  if (rank >= m)
    throw std::runtime_error(
        "random_disjoint_flat_pair: degenerate sample (no complement)");
  const Mat comp = svd.matrixU().rightCols(m - rank);

  Vec normal = comp * rng.gaussian_vector(m - rank);
  normal /= normal.norm();

  const Vec base_f = 2.0 * rng.gaussian_vector(m);
  const Vec tangent = joint * rng.gaussian_vector(2 * n) * 0.5;
  const double eps = rng.uniform(0.2, 3.0);
  const Vec base_g = base_f + tangent + eps * normal;

  return {Flat(base_f, dirs_f), Flat(base_g, dirs_g)};
}

TransversalitySweepResult transversality_sweep(int trials, std::uint64_t seed,
                                               int max_n, int max_k) {
  if (trials < 1) throw std::invalid_argument("sweep needs trials >= 1");
  TransversalitySweepResult result;
  result.seed = seed;
  result.lemma_ok = true;
  result.corollary_ok = true;
  result.corollary_min_excess = std::numeric_limits<int>::max();

  std::uint64_t combo_stream = 0;
  for (int k = 1; k <= max_k; ++k) {
    // The strict lemma needs n >= k; the k = 2 corollary covers all n >= 1.
    const int n_start = k == 2 ? 1 : k;
    for (int n = n_start; n <= max_n; ++n) {
      ++combo_stream;
      TransversalityCombo combo;
      combo.n = n;
      combo.k = k;
      combo.pairs = trials;
      combo.min_parallel_dim = std::numeric_limits<int>::max();
      combo.max_parallel_dim = 0;
      combo.strict_ok = true;
      const int floor_dim = std::max(0, n - k + 1);
      for (int trial = 0; trial < trials; ++trial) {
        CounterRng rng(seed, combo_stream * 1000003ull +
                                 static_cast<std::uint64_t>(trial));
        const int target =
            floor_dim + static_cast<int>(rng.uniform() * (n - floor_dim + 1));
        const auto [f, g] =
            random_disjoint_flat_pair(n, k, std::min(target, n), rng);
        const int measured = parallel_dimension(f, g);
        combo.min_parallel_dim = std::min(combo.min_parallel_dim, measured);
        combo.max_parallel_dim = std::max(combo.max_parallel_dim, measured);
        if (measured != std::min(target, n)) ++combo.mismatches;
        if (measured <= n - k) combo.strict_ok = false;
      }
      result.lemma_ok = result.lemma_ok && combo.strict_ok;
      if (k == 2) {
        const int excess = combo.min_parallel_dim - (n - 1);
        result.corollary_min_excess =
            std::min(result.corollary_min_excess, excess);
        if (excess < 0) result.corollary_ok = false;
      }
      result.combos.push_back(combo);
    }
  }
  if (result.corollary_min_excess == std::numeric_limits<int>::max())
    result.corollary_min_excess = 0;
  return result;
}

namespace {

Flat line3(const Vec3& point, const Vec3& dir) {
  Vec base(3);
  base << point[0], point[1], point[2];
  Mat d(3, 1);
  d << dir[0], dir[1], dir[2];
  return Flat(base, d);
}

// Random line in R^3 given azimuth, distance from the z-axis, axial offset
// and tilt; constructed so its nearest point to the z-axis is explicit.
Flat random_leaf_line(double azimuth, double distance, double z_offset,
                      double tilt, double tilt_azimuth_sign) {
  const Vec3 q(distance * std::cos(azimuth), distance * std::sin(azimuth),
               z_offset);
  const Vec3 around(-std::sin(azimuth), std::cos(azimuth), 0.0);
  const Vec3 dir = tilt_azimuth_sign * std::sin(tilt) * around +
                   Vec3(0.0, 0.0, std::cos(tilt));
  return line3(q, dir);
}

struct SliceObservation {
  bool valid = false;
  bool bounded = false;
  bool has_vertices = false;
  double area = 0.0;
  double min_vertex_radius = std::numeric_limits<double>::infinity();
  double max_rank_residual = 0.0;
  double max_chord_angle = -1.0;  // degrees; < 0 when no chord exists
};

SliceObservation observe_slice(const PolycylinderPacking& packing,
                               double clip_radius) {
  SliceObservation obs;
  const Vec x = Vec::Zero(packing.ambient_dim());
  const DirichletSlice slice = build_slice(packing, 0, x, clip_radius);
  obs.valid = true;
  obs.bounded = slice.bounded;
  obs.has_vertices = !slice.vertices.empty();
  obs.area = slice_area(slice).value;
  if (obs.has_vertices) obs.min_vertex_radius = verify_vertex_bound(slice);
  for (const auto& b : slice.bisectors) {
    obs.max_rank_residual =
        std::max(obs.max_rank_residual, b.quadratic_rank_residual());
    if (const auto angle = chord_angle(b))
      obs.max_chord_angle = std::max(obs.max_chord_angle, *angle);
  }
  return obs;
}

// 2 to 6 cylinders in R^3 with the central one on the z-axis; roughly half
// the configurations surround the center so the slice comes out bounded.
PolycylinderPacking random_r3_configuration(CounterRng& rng) {
  std::vector<Flat> cores;
  Vec origin = Vec::Zero(3);
  Mat ez(3, 1);
  ez << 0, 0, 1;
  cores.emplace_back(origin, ez);

  const bool surround = rng.uniform() < 0.5;
  const int neighbors = surround ? 6 : 1 + static_cast<int>(rng.uniform() * 5);
  for (int c = 0; c < neighbors; ++c) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const double azimuth =
          surround ? (2.0 * std::numbers::pi * c / neighbors +
                      rng.uniform(-0.25, 0.25))
                   : rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double distance =
          surround ? rng.uniform(2.0, 2.6) : rng.uniform(2.0, 5.0);
      const double z_offset = rng.uniform(-2.0, 2.0);
      const double tilt = rng.uniform(0.0, std::numbers::pi / 2.0);
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      const Flat candidate =
          random_leaf_line(azimuth, distance, z_offset, tilt, sign);
      bool ok = true;
      for (std::size_t other = 1; other < cores.size(); ++other)
        if (flat_distance(candidate, cores[other]) < 2.0) {
          ok = false;
          break;
        }
      if (ok) {
        cores.push_back(candidate);
        break;
      }
    }
  }
  return PolycylinderPacking(3, std::move(cores));
}

// 2 to 4 cores in R^(n+2), n in {2, 3}: each neighbor shares an (n-1)- or
// n-dimensional direction space with the central core and is pushed off
// along a joint-complement direction, which keeps all flat distances exact.
PolycylinderPacking random_highdim_configuration(CounterRng& rng, int n) {
  const int m = n + 2;
  Mat central_dirs = Mat::Zero(m, n);
  for (int c = 0; c < n; ++c) central_dirs(2 + c, c) = 1.0;
  std::vector<Flat> cores;
  cores.emplace_back(Vec::Zero(m), central_dirs);

  const int neighbors = 1 + static_cast<int>(rng.uniform() * 3);
  for (int c = 0; c < neighbors; ++c) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const int shared_dim = rng.uniform() < 0.4 ? n : n - 1;
      Mat sample(m, n);
      // Random shared_dim-subspace of the central direction space.
      Mat mix(n, shared_dim);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < shared_dim; ++b) mix(a, b) = rng.normal();
      sample.leftCols(shared_dim) = central_dirs * mix;
      for (int extra = shared_dim; extra < n; ++extra)
        sample.col(extra) = rng.gaussian_vector(m);
      Mat dirs;
      try {
        dirs = orthonormalize(sample);
      } catch (const std::invalid_argument&) {
        continue;
      }
      Mat joint(m, 2 * n);
      joint.leftCols(n) = central_dirs;
      joint.rightCols(n) = dirs;
      Eigen::JacobiSVD<Mat> joint_svd(joint, Eigen::ComputeFullU);
      const auto& jsv = joint_svd.singularValues();
      const double jcut = (jsv.size() > 0 ? jsv[0] : 0.0) * tol::rank_rel;
      int jrank = 0;
      for (int si = 0; si < jsv.size(); ++si)
        if (jsv[si] > jcut) ++jrank;
      if (jrank >= m) continue;
      const Mat comp = joint_svd.matrixU().rightCols(m - jrank);
      Vec normal = comp * rng.gaussian_vector(comp.cols());
      normal /= normal.norm();
      const Vec base = rng.uniform(2.05, 4.0) * normal +
                       central_dirs * rng.gaussian_vector(n);
      const Flat candidate(base, dirs);
      bool ok = true;
      for (const auto& other : cores)
        if (flat_distance(candidate, other) < 2.0) {
          ok = false;
          break;
        }
      if (ok && flat_distance(candidate, cores.front()) >= 2.0) {
        cores.push_back(candidate);
        break;
      }
    }
  }
  return PolycylinderPacking(m, std::move(cores));
}

}  // namespace

LemmaSweepResult lemma_sweep(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("sweep needs trials >= 1");
  LemmaSweepResult result;
  result.seed = seed;
  result.min_bounded_area = std::numeric_limits<double>::infinity();
  result.min_vertex_radius = std::numeric_limits<double>::infinity();

  const auto fold = [&](const SliceObservation& obs) {
    if (!obs.valid) return;
    ++result.configs;
    if (obs.bounded) {
      ++result.bounded_count;
      result.min_bounded_area = std::min(result.min_bounded_area, obs.area);
    }
    if (obs.has_vertices)
      result.min_vertex_radius =
          std::min(result.min_vertex_radius, obs.min_vertex_radius);
    result.max_rank_residual =
        std::max(result.max_rank_residual, obs.max_rank_residual);
    if (obs.max_chord_angle >= 0.0)
      result.max_chord_angle_deg =
          std::max(result.max_chord_angle_deg, obs.max_chord_angle);
  };

  // Deterministic equality configurations.
  {
    // Hexagonal product packing: the regular hexagon slice.
    const auto hexagonal = hexagonal_packing(1);
    const Vec x = Vec::Zero(3);
    const DirichletSlice slice = build_slice(hexagonal, 0, x, 8.0);
    result.hexagon_area = slice_area(slice).value;
    result.hexagon_vertex_radius = verify_vertex_bound(slice);
    SliceObservation obs;
    obs.valid = true;
    obs.bounded = slice.bounded;
    obs.has_vertices = !slice.vertices.empty();
    obs.area = result.hexagon_area;
    obs.min_vertex_radius = result.hexagon_vertex_radius;
    for (const auto& b : slice.bisectors) {
      obs.max_rank_residual =
          std::max(obs.max_rank_residual, b.quadratic_rank_residual());
      if (const auto angle = chord_angle(b))
        obs.max_chord_angle = std::max(obs.max_chord_angle, *angle);
    }
    fold(obs);
  }
  {
    // Perpendicular tangent pair: the chord-angle equality case.
    std::vector<Flat> cores;
    cores.push_back(line3(Vec3(0, 0, 0), Vec3(0, 0, 1)));
    cores.push_back(line3(Vec3(2, 0, 0), Vec3(0, 1, 0)));
    PolycylinderPacking tangent(3, std::move(cores));
    const LeafPair pair =
        reduce_to_leaf(tangent, 0, 1, Vec::Zero(3));
    const ConicBisector bisector = bisector_conic(pair);
    const auto angle = chord_angle(bisector);
    result.tangent_pair_angle_deg = angle.value_or(0.0);
    fold(observe_slice(tangent, 8.0));
  }
  {
    // Three mutually tangent parallel cylinders: vertex-radius equality.
    std::vector<Flat> cores;
    cores.push_back(line3(Vec3(0, 0, 0), Vec3(0, 0, 1)));
    cores.push_back(line3(Vec3(2, 0, 0), Vec3(0, 0, 1)));
    cores.push_back(line3(Vec3(1, std::numbers::sqrt3, 0), Vec3(0, 0, 1)));
    fold(observe_slice(PolycylinderPacking(3, std::move(cores)), 8.0));
  }

  std::vector<SliceObservation> observations(trials);
  parallel_for(trials, [&](std::size_t begin, std::size_t end) {
    for (std::size_t trial = begin; trial < end; ++trial) {
      CounterRng rng(seed, 0xC0FFEEull + trial);
      const int kind = static_cast<int>(trial % 10);
      PolycylinderPacking packing =
          kind < 7 ? random_r3_configuration(rng)
                   : random_highdim_configuration(rng, kind < 9 ? 2 : 3);
      observations[trial] = observe_slice(packing, 6.0);
    }
  });
  for (const auto& obs : observations) fold(obs);

  const double angle_limit =
      2.0 * std::acos(std::numbers::sqrt3 - 1.0) * 180.0 / std::numbers::pi;
  result.rank_ok = result.max_rank_residual <= 1e-9;
  result.area_ok = result.bounded_count == 0 ||
                   result.min_bounded_area >= std::sqrt(12.0) - 1e-6;
  result.vertex_ok =
      result.min_vertex_radius >= 2.0 / std::numbers::sqrt3 - 1e-9;
  result.angle_ok = result.max_chord_angle_deg <= angle_limit + 1e-6;
  return result;
}

GaugeSweepResult gauge_sweep(int trials, int centers_per_trial,
                             std::uint64_t seed, double gauge_scale) {
  GaugeSweepResult result;
  RadialGauge f0 = RadialGauge::blichfeldt_f0();
  RadialGauge f1 = RadialGauge::modified_f1();
  if (gauge_scale != 1.0) {
    f0 = f0.scaled(gauge_scale);
    f1 = f1.scaled(gauge_scale);
  }
  result.f0 = validity_sweep(f0, trials, centers_per_trial, seed);
  result.f1 = validity_sweep(f1, trials, centers_per_trial, seed);
  result.ok = result.f0.max_sigma <= 1.0 + 1e-12 &&
              result.f1.max_sigma <= 1.0 + 1e-12;
  return result;
}

}  // namespace polypack
