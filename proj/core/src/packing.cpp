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

#include "polypack/packing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "polypack/parallel.hpp"
#include "polypack/rng.hpp"

namespace polypack {

namespace {

constexpr std::size_t kEnumerationCap = 4u << 20;  // lattice candidates per query

// Orthonormal basis of the column space of `columns` together with its
// complement (columns need not be independent).
std::pair<Mat, Mat> span_and_complement(const Mat& columns, int ambient) {
  if (columns.cols() == 0)
    return {Mat(ambient, 0), Mat::Identity(ambient, ambient)};
  Eigen::JacobiSVD<Mat> svd(columns, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0 ? sv[0] : 0.0) * tol::rank_rel;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return {svd.matrixU().leftCols(rank), svd.matrixU().rightCols(ambient - rank)};
}

// Integer combinations k of the lattice with |w - M k| <= radius, where
// M = N^T L for a complement basis N.  The admissible set is an ellipsoid;
// a rank-deficient M would make it an unbounded slab, which is the
// degenerate-lattice case we refuse to enumerate.
class LatticeBox {
 public:
  LatticeBox(const Mat& m, const Vec& w, double radius) {
    const int p = static_cast<int>(m.cols());
    count_ = p;
    if (p == 0) return;
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() < p || sv[p - 1] <= 1e-9 * std::max(sv[0], 1.0))
      throw std::runtime_error(
          "lattice enumeration unbounded: lattice nearly degenerate "
          "relative to the core directions");
    const Mat gram_inv =
        svd.matrixV() * sv.array().square().inverse().matrix().asDiagonal() *
        svd.matrixV().transpose();
    const Vec center = gram_inv * (m.transpose() * w);
    lo_.resize(p);
    hi_.resize(p);
    for (int l = 0; l < p; ++l) {
      const double half = radius * std::sqrt(std::max(gram_inv(l, l), 0.0));
      lo_[l] = static_cast<long>(std::floor(center[l] - half - 1e-9));
      hi_[l] = static_cast<long>(std::ceil(center[l] + half + 1e-9));
    }
    std::size_t total = 1;
    for (int l = 0; l < p; ++l) {
      const std::size_t width = static_cast<std::size_t>(hi_[l] - lo_[l] + 1);
      if (total > kEnumerationCap / std::max<std::size_t>(width, 1))
        throw std::runtime_error("lattice enumeration cap exceeded");
      total *= width;
    }
  }

  // Invokes fn(k) for every integer vector in the box.
  template <typename F>
  void for_each(F&& fn) const {
    std::vector<long> k(count_, 0);
    for (int l = 0; l < count_; ++l) k[l] = lo_[l];
    if (count_ == 0) {
      fn(k);
      return;
    }
    while (true) {
      fn(k);
      int l = 0;
      while (l < count_) {
        if (++k[l] <= hi_[l]) break;
        k[l] = lo_[l];
        ++l;
      }
      if (l == count_) break;
    }
  }

 private:
  int count_ = 0;
  std::vector<long> lo_, hi_;
};

Vec lattice_shift(const std::vector<Vec>& lattice, const std::vector<long>& k,
                  int ambient) {
  Vec v = Vec::Zero(ambient);
  for (std::size_t l = 0; l < lattice.size(); ++l)
    v += static_cast<double>(k[l]) * lattice[l];
  return v;
}

bool all_zero(const std::vector<long>& k) {
  return std::all_of(k.begin(), k.end(), [](long x) { return x == 0; });
}

}  // namespace

PolycylinderPacking::PolycylinderPacking(int ambient_dim,
                                         std::vector<Flat> cores,
                                         std::vector<Vec> lattice)
    : ambient_dim_(ambient_dim),
      cores_(std::move(cores)),
      lattice_(std::move(lattice)) {
  if (ambient_dim_ < 2)
    throw std::invalid_argument("packing needs ambient dimension >= 2");
  for (const auto& c : cores_) {
    if (c.ambient_dim() != ambient_dim_)
      throw std::invalid_argument("core ambient dimension mismatch");
    if (c.dim() != ambient_dim_ - 2)
      throw std::invalid_argument("cores must have codimension 2");
  }
  if (static_cast<int>(lattice_.size()) > ambient_dim_)
    throw std::invalid_argument("too many lattice vectors");
  if (!lattice_.empty()) {
    Mat l(ambient_dim_, lattice_.size());
    for (std::size_t i = 0; i < lattice_.size(); ++i) {
      if (lattice_[i].size() != ambient_dim_)
        throw std::invalid_argument("lattice vector dimension mismatch");
      l.col(i) = lattice_[i];
    }
    if (numeric_rank(l) != static_cast<int>(lattice_.size()))
      throw std::invalid_argument("lattice vectors must be independent");
  }
}

std::vector<ValidationIssue> validate(const PolycylinderPacking& p) {
  std::vector<ValidationIssue> issues;
  const int m = p.ambient_dim();
  const double threshold = 2.0;
  Mat lat(m, p.lattice().size());
  for (std::size_t l = 0; l < p.lattice().size(); ++l)
    lat.col(l) = p.lattice()[l];

  const auto& cores = p.cores();
  for (std::size_t i = 0; i < cores.size(); ++i) {
    for (std::size_t j = i; j < cores.size(); ++j) {
      Mat joint(m, cores[i].dim() + cores[j].dim());
      joint.leftCols(cores[i].dim()) = cores[i].directions();
      joint.rightCols(cores[j].dim()) = cores[j].directions();
      const auto [span, comp] = span_and_complement(joint, m);
      if (comp.cols() == 0) {
        // The two direction spaces fill the ambient space: every translate
        // pair intersects.
        if (i != j || p.periodic())
          issues.push_back({static_cast<int>(i), static_cast<int>(j),
                            Vec::Zero(m),
                            flat_distance(cores[i], cores[j])});
        continue;
      }
      const Mat reduced = comp.transpose() * lat;
      const Vec w = comp.transpose() * (cores[i].basepoint() -
                                        cores[j].basepoint());
      LatticeBox box(reduced, w, threshold + 0.5);
      box.for_each([&](const std::vector<long>& k) {
        if (i == j && all_zero(k)) return;
        const Vec shift = lattice_shift(p.lattice(), k, m);
        const double d = flat_distance(cores[i], cores[j].translated(shift));
        if (d < tol::min_separation)
          issues.push_back({static_cast<int>(i), static_cast<int>(j), shift, d});
      });
    }
  }
  return issues;
}

PolycylinderPacking hexagonal_packing(int n) {
  if (n < 0) throw std::invalid_argument("hexagonal packing needs n >= 0");
  const int m = n + 2;
  Mat dirs(m, n);
  dirs.setZero();
  for (int i = 0; i < n; ++i) dirs(2 + i, i) = 1.0;
  Flat core(Vec::Zero(m), dirs);
  Vec l0 = Vec::Zero(m), l1 = Vec::Zero(m);
  l0[0] = 2.0;
  l1[0] = 1.0;
  l1[1] = std::numbers::sqrt3;
  return PolycylinderPacking(m, {core}, {l0, l1});
}

namespace {

std::vector<PlacedCore> placed_cores_near(const PolycylinderPacking& p,
                                          const Vec& x, double radius) {
  const int m = p.ambient_dim();
  std::vector<PlacedCore> found;
  Mat lat(m, p.lattice().size());
  for (std::size_t l = 0; l < p.lattice().size(); ++l)
    lat.col(l) = p.lattice()[l];

  for (std::size_t j = 0; j < p.cores().size(); ++j) {
    const Flat& core = p.cores()[j];
    const Mat comp = orthonormal_complement(core.directions(), m);
    const Mat reduced = comp.transpose() * lat;
    const Vec w = comp.transpose() * (x - core.basepoint());
    LatticeBox box(reduced, w, radius + 1e-9);
    box.for_each([&](const std::vector<long>& k) {
      const Vec shift = lattice_shift(p.lattice(), k, m);
      const Flat placed = core.translated(shift);
      if (placed.distance_to(x) <= radius + 1e-9)
        found.push_back({placed, static_cast<int>(j), shift});
    });
  }
  return found;
}

}  // namespace

std::vector<PlacedCore> cores_in_ball(const PolycylinderPacking& p, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("cores_in_ball needs r > 0");
  return placed_cores_near(p, Vec::Zero(p.ambient_dim()), r + 1.0);
}

std::vector<PlacedCore> cores_near_point(const PolycylinderPacking& p,
                                         const Vec& x, double radius) {
  if (x.size() != p.ambient_dim())
    throw std::invalid_argument("point dimension mismatch");
  return placed_cores_near(p, x, radius);
}

double distance_to_packing(const PolycylinderPacking& p, const Vec& x) {
  if (x.size() != p.ambient_dim())
    throw std::invalid_argument("point dimension mismatch");
  if (p.cores().empty()) return std::numeric_limits<double>::infinity();
  if (!p.periodic()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& core : p.cores())
      best = std::min(best, core.distance_to(x));
    return best - 1.0;
  }
  double radius = 4.0;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const auto near = cores_near_point(p, x, radius);
    if (!near.empty()) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& placed : near)
        best = std::min(best, placed.flat.distance_to(x));
      return best - 1.0;
    }
    radius *= 2.0;
  }
  throw std::runtime_error("distance_to_packing: no core found");
}

bool dirichlet_cell_membership(const PolycylinderPacking& p, int i,
                               const Vec& x) {
  if (i < 0 || i >= static_cast<int>(p.cores().size()))
    throw std::out_of_range("dirichlet_cell_membership: bad core index");
  // Equal radii make the cylinder-distance comparison equivalent to the
  // core-distance comparison.
  const double di = p.cores()[i].distance_to(x);
  const auto rivals = p.periodic()
                          ? cores_near_point(p, x, di + 1e-6)
                          : [&] {
                              std::vector<PlacedCore> all;
                              for (std::size_t j = 0; j < p.cores().size(); ++j)
                                all.push_back({p.cores()[j],
                                               static_cast<int>(j),
                                               Vec::Zero(p.ambient_dim())});
                              return all;
                            }();
  for (const auto& rival : rivals) {
    if (rival.rep_index == i && rival.shift.norm() <= 1e-12) continue;
    if (rival.flat.distance_to(x) < di - 1e-12) return false;
  }
  return true;
}

namespace {

// Uniform grid over 2-plane traces of mutually parallel cores; cell size 1
// so a unit-disk query touches at most 3x3 cells.
class TraceGrid {
 public:
  explicit TraceGrid(std::vector<Eigen::Vector2d> points)
      : points_(std::move(points)) {
    cells_.reserve(points_.size() * 2);
    for (std::size_t idx = 0; idx < points_.size(); ++idx)
      cells_[key(points_[idx])].push_back(static_cast<int>(idx));
  }

  bool covered(const Eigen::Vector2d& q) const {
    const long cx = static_cast<long>(std::floor(q.x()));
    const long cy = static_cast<long>(std::floor(q.y()));
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy) {
        const auto it = cells_.find(pack(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (const int idx : it->second)
          if ((points_[idx] - q).squaredNorm() <= 1.0) return true;
      }
    return false;
  }

 private:
  static std::uint64_t pack(long x, long y) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
           static_cast<std::uint32_t>(y);
  }
  std::uint64_t key(const Eigen::Vector2d& p) const {
    return pack(static_cast<long>(std::floor(p.x())),
                static_cast<long>(std::floor(p.y())));
  }

  std::vector<Eigen::Vector2d> points_;
  std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

}  // namespace

DensityEstimate density_estimate(const PolycylinderPacking& p, double r,
                                 std::uint64_t samples, std::uint64_t seed) {
  if (!(r > 0.0)) throw std::invalid_argument("density window needs r > 0");
  if (samples < 1) throw std::invalid_argument("density needs samples >= 1");
  const int m = p.ambient_dim();

  DensityEstimate estimate;
  estimate.samples = samples;
  estimate.window_radius = r;
  estimate.seed = seed;
  if (p.cores().empty()) return estimate;

  const auto window_cores = cores_in_ball(p, r);

  // Fast path: mutually parallel cores reduce coverage to a 2-plane
  // nearest-trace query.
  bool all_parallel = true;
  const Flat& first = p.cores().front();
  for (const auto& core : p.cores())
    if (parallel_dimension(first, core) != p.core_dim()) {
      all_parallel = false;
      break;
    }

  std::atomic<std::uint64_t> inside{0};
  if (all_parallel && !window_cores.empty()) {
    const Mat comp = orthonormal_complement(first.directions(), m);
    std::vector<Eigen::Vector2d> traces;
    traces.reserve(window_cores.size());
    for (const auto& placed : window_cores) {
      const Vec t = comp.transpose() * placed.flat.basepoint();
      traces.emplace_back(t[0], t[1]);
    }
    const TraceGrid grid(std::move(traces));
    parallel_for(samples, [&](std::size_t begin, std::size_t end) {
      std::uint64_t local = 0;
      for (std::size_t s = begin; s < end; ++s) {
        CounterRng rng(seed, s);
        const Vec x = rng.uniform_in_ball(m, r);
        const Vec t = comp.transpose() * x;
        if (grid.covered({t[0], t[1]})) ++local;
      }
      inside += local;
    });
  } else {
    parallel_for(samples, [&](std::size_t begin, std::size_t end) {
      std::uint64_t local = 0;
      for (std::size_t s = begin; s < end; ++s) {
        CounterRng rng(seed, s);
        const Vec x = rng.uniform_in_ball(m, r);
        for (const auto& placed : window_cores)
          if (placed.flat.distance_to(x) <= 1.0) {
            ++local;
            break;
          }
      }
      inside += local;
    });
  }

  const double value =
      static_cast<double>(inside.load()) / static_cast<double>(samples);
  estimate.value = value;
  estimate.standard_error =
      std::sqrt(std::max(value * (1.0 - value), 0.0) /
                static_cast<double>(samples));
  return estimate;
}

}  // namespace polypack
