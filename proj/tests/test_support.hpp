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

#ifndef POLYPACK_TEST_SUPPORT_HPP
#define POLYPACK_TEST_SUPPORT_HPP

#include <cmath>
#include <utility>

#include "polypack/flat.hpp"
#include "polypack/rng.hpp"

namespace polypack::testing {

inline Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

inline Flat line3(double px, double py, double pz, double dx, double dy,
                  double dz) {
  Mat d(3, 1);
  d << dx, dy, dz;
  return Flat(vec3(px, py, pz), d);
}

inline Mat axis_directions(int ambient, std::initializer_list<int> axes) {
  Mat m = Mat::Zero(ambient, static_cast<int>(axes.size()));
  int col = 0;
  for (int a : axes) m(a, col++) = 1.0;
  return m;
}

// Random rotation: Q factor of a Gaussian matrix with positive diagonal.
inline Mat random_rotation(int dim, CounterRng& rng) {
  Mat g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

// Independent distance oracle: coarse parameter-grid minimization of
// |p - q| over both flats with local refinement around the best cell.
inline double grid_distance_oracle(const Flat& f, const Flat& g,
                                   double span = 8.0, int levels = 30) {
  const int df = f.dim(), dg = g.dim();
  const int total = df + dg;
  Vec center = Vec::Zero(total);
  double width = span;
  double best = (f.basepoint() - g.basepoint()).norm();
  const int steps = 5;  // 5^total evaluations per level
  for (int level = 0; level < levels; ++level) {
    Vec best_at = center;
    int grid_points = 1;
    for (int i = 0; i < total; ++i) grid_points *= steps;
    for (int gp = 0; gp < grid_points; ++gp) {
      int rem = gp;
      Vec params(total);
      for (int i = 0; i < total; ++i) {
        const int idx = rem % steps;
        rem /= steps;
        params[i] = center[i] + width * (idx - (steps - 1) / 2.0) /
                                    ((steps - 1) / 2.0);
      }
      const Vec pf = f.basepoint() + f.directions() * params.head(df);
      const Vec pg = g.basepoint() + g.directions() * params.tail(dg);
      const double d = (pf - pg).norm();
      if (d < best) {
        best = d;
        best_at = params;
      }
    }
    center = best_at;
    width *= 0.55;
  }
  return best;
}

}  // namespace polypack::testing

#endif  // POLYPACK_TEST_SUPPORT_HPP
