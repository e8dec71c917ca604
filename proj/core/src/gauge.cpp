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

#include "polypack/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polypack/rng.hpp"

namespace polypack {

namespace {

double eval_poly(const std::vector<double>& coeffs, double r) {
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * r + *it;
  return v;
}

}  // namespace

RadialGauge::RadialGauge(std::vector<double> breakpoints,
                         std::vector<std::vector<double>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2)
    throw std::invalid_argument("gauge needs at least one interval");
  if (breakpoints_.front() != 0.0)
    throw std::invalid_argument("gauge breakpoints must start at 0");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw std::invalid_argument("gauge breakpoints must increase strictly");
  if (pieces_.size() != breakpoints_.size() - 1)
    throw std::invalid_argument("gauge needs one piece per interval");
  for (const auto& p : pieces_)
    if (p.empty()) throw std::invalid_argument("empty gauge piece");
  // Continuity across interior breakpoints.
  for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i) {
    const double left = eval_poly(pieces_[i - 1], breakpoints_[i]);
    const double right = eval_poly(pieces_[i], breakpoints_[i]);
    if (std::abs(left - right) > 1e-12)
      throw std::invalid_argument("gauge discontinuous at a breakpoint");
  }
}

RadialGauge RadialGauge::blichfeldt_f0() {
  return RadialGauge({0.0, std::numbers::sqrt2}, {{1.0, 0.0, -0.5}});
}

RadialGauge RadialGauge::modified_f1() {
  return RadialGauge({0.0, 2.0 - std::numbers::sqrt2, 1.0, std::numbers::sqrt2},
                     {{1.0}, {2.0, -2.0, 0.5}, {1.0, 0.0, -0.5}});
}

RadialGauge RadialGauge::characteristic(double radius) {
  if (!(radius > 0.0))
    throw std::invalid_argument("characteristic gauge needs radius > 0");
  return RadialGauge({0.0, radius}, {{1.0}});
}

double RadialGauge::operator()(double r) const {
  if (r < 0.0) throw std::invalid_argument("gauge evaluated at negative r");
  if (r > breakpoints_.back()) return 0.0;
  const auto it =
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), r);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (idx == 0) idx = 1;
  if (idx > pieces_.size()) idx = pieces_.size();
  return eval_poly(pieces_[idx - 1], r);
}

RadialGauge RadialGauge::scaled(double s) const {
  auto pieces = pieces_;
  for (auto& p : pieces)
    for (auto& c : p) c *= s;
  return RadialGauge(breakpoints_, std::move(pieces));
}

RadialGauge RadialGauge::dilated(double lambda) const {
  if (!(lambda > 0.0)) throw std::invalid_argument("dilation needs lambda > 0");
  auto breakpoints = breakpoints_;
  for (auto& b : breakpoints) b *= lambda;
  auto pieces = pieces_;
  for (auto& p : pieces) {
    double scale = 1.0;
    for (auto& c : p) {
      c *= scale;
      scale /= lambda;
    }
  }
  return RadialGauge(std::move(breakpoints), std::move(pieces));
}

double eval_gauge(const RadialGauge& g, double r) { return g(r); }

bool is_valid_gauge_shape(const RadialGauge& g, int samples_per_piece) {
  double prev = g(0.0);
  if (prev > 1.0 + 1e-12 || prev < -1e-12) return false;
  const auto& bp = g.breakpoints();
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    for (int s = 1; s <= samples_per_piece; ++s) {
      const double r =
          bp[i] + (bp[i + 1] - bp[i]) * static_cast<double>(s) /
                      samples_per_piece;
      const double v = g(r);
      if (v > 1.0 + 1e-12 || v < -1e-12) return false;
      if (v > prev + 1e-12) return false;
      prev = v;
    }
  }
  return true;
}

double unit_ball_volume(int k) {
  if (k < 0) throw std::invalid_argument("ball volume needs k >= 0");
  double v_even = 1.0;  // V_0
  double v_odd = 2.0;   // V_1
  if (k == 0) return v_even;
  if (k == 1) return v_odd;
  double v = 0.0;
  for (int i = 2; i <= k; ++i) {
    double& prev = (i % 2 == 0) ? v_even : v_odd;
    prev *= 2.0 * std::numbers::pi / i;
    v = prev;
  }
  return v;
}

double sphere_surface_area(int k) {
  if (k < 1) throw std::invalid_argument("sphere surface needs k >= 1");
  return k * unit_ball_volume(k);
}

double radial_integral_closed(const RadialGauge& g, int k) {
  if (k < 1) throw std::invalid_argument("radial integral needs k >= 1");
  const auto& bp = g.breakpoints();
  const auto& pieces = g.pieces();
  double radial = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const double a = bp[i];
    const double b = bp[i + 1];
    // integral of (sum c_j r^j) r^{k-1} = sum c_j (b^{j+k} - a^{j+k})/(j+k)
    for (std::size_t j = 0; j < pieces[i].size(); ++j) {
      const double power = static_cast<double>(j) + k;
      radial += pieces[i][j] *
                (std::pow(b, power) - std::pow(a, power)) / power;
    }
  }
  return sphere_surface_area(k) * radial;
}

namespace {

struct QuadratureBudget {
  std::size_t used = 0;
  std::size_t cap = 0;
};

double adaptive_simpson(const RadialGauge& g, int k, double a, double b,
                        double fa, double fm, double fb, double whole,
                        double eps, QuadratureBudget& budget) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const auto f = [&](double r) { return g(r) * std::pow(r, k - 1); };
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (++budget.used > budget.cap)
    throw std::runtime_error("radial quadrature failed to converge");
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * eps || (b - a) < 1e-14)
    return left + right + delta / 15.0;
  return adaptive_simpson(g, k, a, m, fa, flm, fm, left, eps / 2.0, budget) +
         adaptive_simpson(g, k, m, b, fm, frm, fb, right, eps / 2.0, budget);
}

}  // namespace

double radial_integral_quadrature(const RadialGauge& g, int k, double abs_tol,
                                  std::size_t max_intervals) {
  if (k < 1) throw std::invalid_argument("radial integral needs k >= 1");
  const auto& bp = g.breakpoints();
  const auto f = [&](double r) { return g(r) * std::pow(r, k - 1); };
  QuadratureBudget budget{0, max_intervals};
  double total = 0.0;
  // Subdivide at the gauge breakpoints first: the integrand is smooth on
  // each piece.
  const double span = bp.back();
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const double a = bp[i];
    const double b = bp[i + 1];
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double piece_tol = abs_tol * (b - a) / span;
    total += adaptive_simpson(g, k, a, b, fa, fm, fb, whole, piece_tol, budget);
  }
  return sphere_surface_area(k) * total;
}

double blichfeldt_bound(double body_volume, double j_value) {
  if (!(body_volume > 0.0))
    throw std::invalid_argument("blichfeldt_bound: body volume must be > 0");
  if (!(j_value > 0.0))
    throw std::invalid_argument("blichfeldt_bound: J must be > 0");
  return body_volume / j_value;
}

double sphere_packing_bound(int n) {
  if (n < 1) throw std::invalid_argument("sphere bound needs n >= 1");
  return (n + 2) / std::pow(2.0, 0.5 * (n + 2));
}

double finite_cube_density_factor(double t, int n) {
  if (!(t > 0.0)) throw std::invalid_argument("cube edge must be > 0");
  if (n < 0) throw std::invalid_argument("core dimension must be >= 0");
  return std::pow(1.0 + (2.0 * std::numbers::sqrt2 - 2.0) / t, n);
}

double a2_constant() {
  return (29.0 - 16.0 * std::numbers::sqrt2) / 6.0;
}

double polycylinder_bound() {
  return 6.0 / (29.0 - 16.0 * std::numbers::sqrt2);
}

double CapsuleBody::distance_to_inner_cube(const Vec& x) const {
  if (x.size() != ambient_dim())
    throw std::invalid_argument("capsule: point dimension mismatch");
  const double half = 0.5 * cube_edge;
  double sq = 0.0;
  for (int i = 0; i < core_dim; ++i) {
    const double excess = std::max(std::abs(x[i]) - half, 0.0);
    sq += excess * excess;
  }
  for (int i = core_dim; i < ambient_dim(); ++i) sq += x[i] * x[i];
  return std::sqrt(sq);
}

double ftk_gauge_value(const RadialGauge& f, const CapsuleBody& body,
                       double rho, const Vec& x) {
  if (!(rho > 0.0) || rho > 1.0 + 1e-12)
    throw std::invalid_argument("rho must lie in (0, inradius]");
  if (body.cube_edge < 0.0)
    throw std::invalid_argument("capsule cube edge must be >= 0");
  return f(body.distance_to_inner_cube(x) / rho);
}

bool IsometryConfig::admissible(double min_sep) const {
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j)
      if ((centers[i] - centers[j]).norm() < min_sep) return false;
  return true;
}

double gauge_sum(const RadialGauge& f, const IsometryConfig& config,
                 const Vec& x) {
  double total = 0.0;
  for (const auto& c : config.centers) total += f((x - c).norm());
  return total;
}

namespace {

IsometryConfig random_admissible_config(int dim, int max_centers,
                                        CounterRng& rng) {
  // Rejection sampling in a box of side 8; a center that cannot be placed
  // after a bounded number of attempts is dropped.
  IsometryConfig config;
  for (int c = 0; c < max_centers; ++c) {
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      Vec candidate(dim);
      for (int i = 0; i < dim; ++i) candidate[i] = rng.uniform(-4.0, 4.0);
      bool ok = true;
      for (const auto& existing : config.centers)
        if ((candidate - existing).norm() < 2.0) {
          ok = false;
          break;
        }
      if (ok) {
        config.centers.push_back(std::move(candidate));
        placed = true;
      }
    }
  }
  return config;
}

}  // namespace

ValiditySweepResult validity_sweep(const RadialGauge& f, int trials,
                                   int centers_per_trial, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("validity sweep needs trials >= 1");
  if (centers_per_trial < 1)
    throw std::invalid_argument("validity sweep needs centers >= 1");

  ValiditySweepResult result;
  result.seed = seed;
  const double support = f.support();

  const auto consider = [&](double sigma, int trial, int dim, const Vec& p) {
    if (sigma > result.max_sigma) {
      result.max_sigma = sigma;
      result.worst_trial = trial;
      result.worst_dim = dim;
      result.worst_point = p;
    }
  };

  // Deterministic tangency case: two centers at distance exactly 2,
  // evaluated at the midpoint.  For f0 this attains the extreme value 1.
  {
    IsometryConfig tangent;
    Vec a = Vec::Zero(2), b = Vec::Zero(2);
    a[0] = -1.0;
    b[0] = 1.0;
    tangent.centers = {a, b};
    const Vec mid = Vec::Zero(2);
    result.tangency_sigma = gauge_sum(f, tangent, mid);
    consider(result.tangency_sigma, -1, 2, mid);
    result.evaluations += 1;
  }

  for (int trial = 0; trial < trials; ++trial) {
    const int dim = 2 + trial % 3;  // dimensions 2-4
    CounterRng rng(seed, static_cast<std::uint64_t>(trial) + 1);
    const IsometryConfig config =
        random_admissible_config(dim, centers_per_trial, rng);
    if (config.centers.empty()) continue;

    std::vector<Vec> points;
    // Adversarial points: the centers themselves, pairwise midpoints of
    // nearby centers (tangency candidates), and jittered grid points.
    for (const auto& c : config.centers) points.push_back(c);
    for (std::size_t i = 0; i < config.centers.size(); ++i)
      for (std::size_t j = i + 1; j < config.centers.size(); ++j) {
        if ((config.centers[i] - config.centers[j]).norm() <=
            2.0 * support + 0.5)
          points.push_back(0.5 * (config.centers[i] + config.centers[j]));
      }
    const int grid_points = dim == 2 ? 49 : (dim == 3 ? 64 : 81);
    for (int gp = 0; gp < grid_points; ++gp) {
      Vec p(dim);
      for (int i = 0; i < dim; ++i) p[i] = rng.uniform(-4.5, 4.5);
      points.push_back(std::move(p));
    }

    for (const auto& p : points) {
      consider(gauge_sum(f, config, p), trial, dim, p);
      ++result.evaluations;
    }
  }
  return result;
}

}  // namespace polypack
