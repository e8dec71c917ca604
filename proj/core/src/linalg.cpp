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

#include "polypack/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace polypack {

Mat orthonormalize(const Mat& columns) {
  const int m = static_cast<int>(columns.rows());
  const int d = static_cast<int>(columns.cols());
  Mat q(m, d);
  for (int j = 0; j < d; ++j) {
    Vec v = columns.col(j);
    const double original_norm = v.norm();
    if (original_norm < 1e-300)
      throw std::invalid_argument("orthonormalize: zero direction vector");
    // Two projection passes (modified Gram-Schmidt with
    // reorthogonalization).
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) v -= q.col(i).dot(v) * q.col(i);
    const double n = v.norm();
    if (n < 1e-10 * original_norm)
      throw std::invalid_argument(
          "orthonormalize: rank-deficient direction set");
    q.col(j) = v / n;
  }
  return q;
}

Mat orthonormal_complement(const Mat& columns, int ambient_dim) {
  const int d = static_cast<int>(columns.cols());
  if (d == 0) return Mat::Identity(ambient_dim, ambient_dim);
  if (d >= ambient_dim) return Mat(ambient_dim, 0);
  // Column-pivoted QR of the projector keeps the complement axis-aligned
  // whenever the input is (so coordinate cores get coordinate planes).
  const Mat projector =
      Mat::Identity(ambient_dim, ambient_dim) - columns * columns.transpose();
  Eigen::ColPivHouseholderQR<Mat> qr(projector);
  Mat q = qr.householderQ();
  Mat comp = q.leftCols(ambient_dim - d);
  canonicalize_column_signs(comp);
  return comp;
}

void canonicalize_column_signs(Mat& basis) {
  for (int j = 0; j < basis.cols(); ++j) {
    int lead = 0;
    double best = 0.0;
    for (int i = 0; i < basis.rows(); ++i) {
      const double a = std::abs(basis(i, j));
      if (a > best + 1e-12) {
        best = a;
        lead = i;
      }
    }
    if (basis(lead, j) < 0.0) basis.col(j) = -basis.col(j);
  }
}

int numeric_rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = tol::rank_rel * sv[0];
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return rank;
}

namespace {

bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - 1e-12) return true;
    if (a[i] > b[i] + 1e-12) return false;
  }
  return false;
}

}  // namespace

Mat subspace_intersection(const Mat& a, const Mat& b, int ambient_dim) {
  const Mat ca = orthonormal_complement(a, ambient_dim);
  const Mat cb = orthonormal_complement(b, ambient_dim);
  const int rows = static_cast<int>(ca.cols() + cb.cols());
  if (rows == 0) {
    Mat id = Mat::Identity(ambient_dim, ambient_dim);
    return id;
  }
  Mat stacked(rows, ambient_dim);
  stacked.topRows(ca.cols()) = ca.transpose();
  stacked.bottomRows(cb.cols()) = cb.transpose();

  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  const double cutoff = tol::rank_rel * smax;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  const int null_dim = ambient_dim - rank;
  Mat basis = svd.matrixV().rightCols(null_dim);
  canonicalize_column_signs(basis);

  // Columns arrive ordered by descending singular value; within groups of
  // (numerically) tied values, order ascending-lexicographically by
  // coordinates so the choice is reproducible.
  std::vector<int> order(null_dim);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> sigma(null_dim, 0.0);
  for (int i = 0; i < null_dim; ++i) {
    const int svd_index = rank + i;
    sigma[i] = svd_index < sv.size() ? sv[svd_index] : 0.0;
  }
  std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    if (sigma[lhs] > sigma[rhs] + 1e-12 * (smax > 0 ? smax : 1.0)) return true;
    if (sigma[rhs] > sigma[lhs] + 1e-12 * (smax > 0 ? smax : 1.0)) return false;
    return lex_less(basis.col(lhs), basis.col(rhs));
  });
  Mat sorted(ambient_dim, null_dim);
  for (int i = 0; i < null_dim; ++i) sorted.col(i) = basis.col(order[i]);
  return sorted;
}

}  // namespace polypack
