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

#ifndef POLYPACK_LINALG_HPP
#define POLYPACK_LINALG_HPP

#include <Eigen/Dense>

namespace polypack {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Tolerances used throughout the library.  Geometry is unit-scale (unit
// radius cylinders, coordinates of order 10), so absolute tolerances are
// meaningful.
namespace tol {
inline constexpr double ortho = 1e-12;       // basis orthonormality residual
inline constexpr double rank_rel = 1e-9;     // singular values below rank_rel*s_max count as zero
inline constexpr double on_flat = 1e-9;      // point-membership slack
inline constexpr double disjoint = 1e-9;     // flats closer than this count as intersecting
inline constexpr double curve = 1e-10;       // bisector point residual
inline constexpr double constraint = 1e-9;   // slice half-region slack
inline constexpr double min_separation = 2.0 - 1e-9;  // valid packing core distance
}  // namespace tol

// Stable Gram-Schmidt with one reorthogonalization pass.  Columns of the
// result span the same space as the input columns and are orthonormal to
// machine precision.  Throws std::invalid_argument if the input columns are
// (numerically) linearly dependent; rank-deficient bases are an input error,
// never repaired silently.
Mat orthonormalize(const Mat& columns);

// Orthonormal basis of the orthogonal complement of span(columns) in
// R^ambient_dim.  `columns` must already be orthonormal.  For an empty input
// returns the identity basis.
Mat orthonormal_complement(const Mat& columns, int ambient_dim);

// Flips the sign of each column so that its entry of largest magnitude is
// positive (first such entry on near-ties).  Makes SVD-derived bases
// reproducible.
void canonicalize_column_signs(Mat& basis);

// Numerical rank: number of singular values above rank_rel * s_max.
int numeric_rank(const Mat& m);

// Orthonormal basis of span(a) .. intersected with span(b), both inputs
// orthonormal column sets in R^ambient_dim.  Computed as the null space of
// the matrix whose rows span the two orthogonal complements.  Columns come
// out sign-canonicalized and ordered by descending singular value of the
// stacked system, ties broken by ascending lexicographic comparison of the
// coordinate vectors.
Mat subspace_intersection(const Mat& a, const Mat& b, int ambient_dim);

}  // namespace polypack

#endif  // POLYPACK_LINALG_HPP
