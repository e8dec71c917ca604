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

#include <doctest.h>

#include <cmath>

#include "polypack/flat.hpp"
#include "polypack/sweeps.hpp"
#include "test_support.hpp"

using namespace polypack;
using namespace polypack::testing;

TEST_CASE("flat construction re-orthonormalizes and validates") {
  Mat skewed(3, 2);
  skewed << 1, 1, 0, 1, 0, 0;
  const Flat f(vec3(0, 0, 1), skewed);
  const Mat& d = f.directions();
  CHECK(std::abs(d.col(0).norm() - 1.0) < 1e-12);
  CHECK(std::abs(d.col(1).norm() - 1.0) < 1e-12);
  CHECK(std::abs(d.col(0).dot(d.col(1))) < 1e-12);

  Mat dependent(3, 2);
  dependent << 1, 2, 0, 0, 0, 0;
  CHECK_THROWS_AS(Flat(vec3(0, 0, 0), dependent), std::invalid_argument);
}

TEST_CASE("tangent cone drops the basepoint") {
  const Flat z_axis = line3(0, 0, 0, 0, 0, 1);
  const Subspace cone = tangent_cone(z_axis);
  CHECK(cone.dim() == 1);
  CHECK(cone.containment_residual(vec3(0, 0, 5)) < 1e-12);

  const Flat plane(vec3(0, 0, 1), axis_directions(3, {0, 1}));
  const Subspace plane_cone = tangent_cone(plane);
  CHECK(plane_cone.containment_residual(vec3(1, 0, 0)) < 1e-12);
  CHECK(plane_cone.containment_residual(vec3(0, 1, 0)) < 1e-12);
  CHECK(plane_cone.containment_residual(vec3(0, 0, 1)) > 0.9);

  // Translation invariance.
  CounterRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Flat f(rng.gaussian_vector(4), Mat(rng.gaussian_vector(4)));
    const Flat shifted = f.translated(rng.gaussian_vector(4));
    CHECK((tangent_cone(f).directions - tangent_cone(shifted).directions)
              .norm() < 1e-14);
  }
}

TEST_CASE("parallel dimension on the R^4 picture configurations") {
  // Two disjoint translates of the same 2-flat.
  const Mat span12 = axis_directions(4, {0, 1});
  const Flat f(Vec::Zero(4), span12);
  Vec up = Vec::Zero(4);
  up[3] = 1.0;
  CHECK(parallel_dimension(f, Flat(up, span12)) == 2);

  // span{e1,e2} against span{e1,e3} + e4.
  const Flat g(up, axis_directions(4, {0, 2}));
  CHECK(parallel_dimension(f, g) == 1);

  // A flat with itself.
  CHECK(parallel_dimension(f, f) == 2);

  CHECK_THROWS_AS(parallel_dimension(f, Flat(Vec::Zero(3))),
                  std::invalid_argument);
}

TEST_CASE("parallel dimension is symmetric and motion invariant") {
  CounterRng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform() * 4);
    const int target = std::max(0, n - 1) +
                       static_cast<int>(rng.uniform() * 2) % 2;
    auto [f, g] = random_disjoint_flat_pair(n, 2, std::min(target, n), rng);
    const int dim_fg = parallel_dimension(f, g);
    CHECK(dim_fg == parallel_dimension(g, f));

    const Mat q = random_rotation(f.ambient_dim(), rng);
    const Vec shift = rng.gaussian_vector(f.ambient_dim());
    const Flat fr(q * f.basepoint() + shift, q * f.directions());
    const Flat gr(q * g.basepoint() + shift, q * g.directions());
    CHECK(parallel_dimension(fr, gr) == dim_fg);
  }
}

TEST_CASE("transversality lemma and corollary hold on random pairs") {
  const auto sweep = transversality_sweep(60, 17);
  CHECK(sweep.lemma_ok);
  CHECK(sweep.corollary_ok);
  CHECK(sweep.corollary_min_excess >= 0);
  // Every generated pair matched its constructed parallel dimension.
  for (const auto& combo : sweep.combos) CHECK(combo.mismatches == 0);
}

TEST_CASE("flat distance closed cases") {
  const Flat z_axis = line3(0, 0, 0, 0, 0, 1);
  const Flat offset = line3(2, 0, 0, 0, 1, 0);
  CHECK(flat_distance(z_axis, offset) == doctest::Approx(2.0).epsilon(1e-12));

  CounterRng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Mat dirs(4, 2);
    for (int c = 0; c < 2; ++c) dirs.col(c) = rng.gaussian_vector(4);
    const Flat f(rng.gaussian_vector(4), dirs);
    const Mat comp = orthonormal_complement(f.directions(), 4);
    const Vec u = comp.col(0);
    CHECK(flat_distance(f, f.translated(3.0 * u)) ==
          doctest::Approx(3.0).epsilon(1e-10));
  }
}

TEST_CASE("flat distance agrees with the grid refinement oracle") {
  CounterRng rng(71);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 3 + trial % 2;
    const Flat f(rng.gaussian_vector(m), Mat(rng.gaussian_vector(m)));
    const Flat g(rng.gaussian_vector(m), Mat(rng.gaussian_vector(m)));
    const double fast = flat_distance(f, g);
    const double oracle = grid_distance_oracle(f, g);
    CHECK(std::abs(fast - oracle) < 1e-6);
    CHECK(fast <= oracle + 1e-9);  // least squares can only do better
  }
}

TEST_CASE("flat distance properties") {
  CounterRng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 3;
    auto [f, g] = random_disjoint_flat_pair(n, 2, n - (trial % 2 == 0 ? 0 : 1),
                                            rng);
    const double d = flat_distance(f, g);
    CHECK(d > 0.0);
    CHECK(flat_distance(g, f) == doctest::Approx(d).epsilon(1e-12));
    const Vec shift = rng.gaussian_vector(f.ambient_dim());
    CHECK(flat_distance(f.translated(shift), g.translated(shift)) ==
          doctest::Approx(d).epsilon(1e-9));

    // Intersecting flats have distance zero: share a point by construction.
    const Vec common = rng.gaussian_vector(f.ambient_dim());
    const Flat a(common, f.directions());
    const Flat b(common, g.directions());
    CHECK(flat_distance(a, b) < 1e-10);
  }
}

TEST_CASE("re-orthonormalization leaves invariants unchanged") {
  CounterRng rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    auto [f, g] = random_disjoint_flat_pair(3, 2, 2, rng);
    // Feeding the basis back through the constructor is a no-op up to
    // rounding.
    const Flat same(f.basepoint(), f.directions());
    CHECK(parallel_dimension(same, g) == parallel_dimension(f, g));
    CHECK(flat_distance(same, g) ==
          doctest::Approx(flat_distance(f, g)).epsilon(1e-12));
    // A well-conditioned re-mix spans the same flat.
    const Mat rot = random_rotation(3, rng);
    Mat mix = rot;
    for (int c = 0; c < 3; ++c) mix.col(c) *= rng.uniform(0.5, 2.0);
    const Flat f2(f.basepoint(), Mat(f.directions() * mix));
    CHECK(parallel_dimension(f2, g) == parallel_dimension(f, g));
    CHECK(flat_distance(f2, g) ==
          doctest::Approx(flat_distance(f, g)).epsilon(1e-9));
  }
}

TEST_CASE("common parallel subflats") {
  SUBCASE("skew lines in R^3 give point subflats") {
    const Flat a = line3(0, 0, 0, 0, 0, 1);
    const Flat b = line3(2, 0, 0, 0, 1, 0);
    const auto [bi, bj] = common_parallel_subflats(a, b, vec3(0, 0, 0));
    CHECK(bi.dim() == 0);
    CHECK(bj.dim() == 0);
    CHECK(bi.basepoint() == vec3(0, 0, 0));
    // Foot of the perpendicular of the origin on b.
    CHECK((bj.basepoint() - vec3(2, 0, 0)).norm() < 1e-12);
  }

  SUBCASE("parallel 2-flats in R^4 choose deterministically") {
    const Mat dirs = axis_directions(4, {2, 3});
    const Flat a(Vec::Zero(4), dirs);
    Vec off = Vec::Zero(4);
    off[0] = 3.0;
    const Flat b(off, dirs);
    const auto [bi, bj] = common_parallel_subflats(a, b, Vec::Zero(4));
    CHECK(bi.dim() == 1);
    // The chosen direction lies in both tangent cones.
    CHECK(tangent_cone(a).containment_residual(bi.directions().col(0)) <
          1e-10);
    CHECK(tangent_cone(b).containment_residual(bi.directions().col(0)) <
          1e-10);
    // Same call, same choice.
    const auto [bi2, bj2] = common_parallel_subflats(a, b, Vec::Zero(4));
    CHECK((bi.directions() - bi2.directions()).norm() < 1e-15);
  }

  SUBCASE("unique shared direction in R^5") {
    const Flat a(Vec::Zero(5), axis_directions(5, {2, 3}));
    Vec off = Vec::Zero(5);
    off[0] = 2.5;
    const Flat b(off, axis_directions(5, {2, 4}));
    const auto [bi, bj] = common_parallel_subflats(a, b, Vec::Zero(5));
    REQUIRE(bi.dim() == 1);
    Vec e3 = Vec::Zero(5);
    e3[2] = 1.0;
    CHECK(std::abs(std::abs(bi.directions().col(0).dot(e3)) - 1.0) < 1e-10);
  }

  SUBCASE("intersecting flats are rejected") {
    const Flat a = line3(0, 0, 0, 0, 0, 1);
    const Flat b = line3(0, 0, 0, 0, 1, 0);
    CHECK_THROWS(common_parallel_subflats(a, b, vec3(0, 0, 0)));
  }
}

TEST_CASE("leaf_at") {
  SUBCASE("two cylinders in R^3 foliate trivially") {
    const Flat a = line3(0, 0, 0, 0, 0, 1);
    const Flat b = line3(2, 0, 1, 0, 1, 0);
    const Flat leaf = leaf_at(vec3(0, 0, 0), a, b);
    CHECK(leaf.dim() == 3);
    CHECK(leaf.ambient_dim() == 3);
  }

  SUBCASE("parallel product cores in R^4 give coordinate leaves") {
    const Mat dirs = axis_directions(4, {2, 3});
    const Flat a(Vec::Zero(4), dirs);
    Vec off = Vec::Zero(4);
    off[0] = 2.0;
    const Flat b(off, dirs);
    const Flat leaf = leaf_at(Vec::Zero(4), a, b);
    CHECK(leaf.dim() == 3);
    // The canonical subflat direction is e4, so the leaf is {x4 = const}.
    Vec e4 = Vec::Zero(4);
    e4[3] = 1.0;
    CHECK(tangent_cone(leaf).containment_residual(e4) > 0.99);
    for (int axis : {0, 1, 2}) {
      Vec e = Vec::Zero(4);
      e[axis] = 1.0;
      CHECK(tangent_cone(leaf).containment_residual(e) < 1e-10);
    }
  }

  SUBCASE("product foliation splits distances in R^5") {
    CounterRng rng(97);
    for (int trial = 0; trial < 20; ++trial) {
      auto [a, b] = random_disjoint_flat_pair(3, 2, (trial % 2) ? 2 : 3, rng);
      const Vec x = a.basepoint();
      const Flat leaf = leaf_at(x, a, b);
      // The line b meets the leaf in.
      const Mat line_dir =
          subspace_intersection(b.directions(), leaf.directions(), 5);
      REQUIRE(line_dir.cols() == 1);
      // A point of b on the leaf: least squares within b's parameters.
      const Mat comp = orthonormal_complement(leaf.directions(), 5);
      Eigen::CompleteOrthogonalDecomposition<Mat> cod(
          Mat(comp.transpose() * b.directions()));
      const Vec s = cod.solve(Vec(comp.transpose() * (x - b.basepoint())));
      const Flat section(Vec(b.basepoint() + b.directions() * s), line_dir);
      for (int sample = 0; sample < 10; ++sample) {
        const Vec p = x + leaf.directions() * rng.gaussian_vector(3) * 2.0;
        CHECK(std::abs(b.distance_to(p) - section.distance_to(p)) < 1e-10);
      }
    }
  }
}

TEST_CASE("orthogonal plane") {
  SUBCASE("z-axis in R^3 gives the xy plane") {
    const Flat a = line3(0, 0, 0, 0, 0, 1);
    const Flat p = orthogonal_plane(a, vec3(0, 0, 0));
    CHECK(p.dim() == 2);
    CHECK(tangent_cone(p).containment_residual(vec3(1, 0, 0)) < 1e-12);
    CHECK(tangent_cone(p).containment_residual(vec3(0, 1, 0)) < 1e-12);
  }

  SUBCASE("span{e3,e4} in R^4 gives span{e1,e2}") {
    const Flat a(Vec::Zero(4), axis_directions(4, {2, 3}));
    const Flat p = orthogonal_plane(a, Vec::Zero(4));
    for (int axis : {0, 1}) {
      Vec e = Vec::Zero(4);
      e[axis] = 1.0;
      CHECK(tangent_cone(p).containment_residual(e) < 1e-12);
    }
  }

  SUBCASE("p_x is contained in every leaf") {
    CounterRng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + trial % 3;
      auto [a, b] = random_disjoint_flat_pair(
          n, 2, n - ((trial % 2 == 0 && n > 0) ? 1 : 0), rng);
      const Vec x = a.basepoint();
      const Flat plane = orthogonal_plane(a, x);
      const Flat leaf = leaf_at(x, a, b);
      for (int c = 0; c < plane.dim(); ++c)
        CHECK(tangent_cone(leaf).containment_residual(
                  plane.directions().col(c)) < 1e-10);
    }
  }

  SUBCASE("rejects points off the flat") {
    const Flat a = line3(0, 0, 0, 0, 0, 1);
    CHECK_THROWS_AS(orthogonal_plane(a, vec3(0.5, 0, 0)),
                    std::invalid_argument);
  }
}
