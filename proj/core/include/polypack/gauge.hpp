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

#ifndef POLYPACK_GAUGE_HPP
#define POLYPACK_GAUGE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polypack/linalg.hpp"

namespace polypack {

// Piecewise-polynomial radial function on [0, support], identically zero
// beyond the support radius.  breakpoints are 0 = r_0 < r_1 < ... < r_s and
// pieces[i] holds ascending-degree coefficients of the polynomial on
// [r_i, r_{i+1}].
//
// Construction checks the structural invariants (sorted breakpoints,
// continuity across them within 1e-12).  Pointwise bounds (values in [0,1],
// nonincreasing) are properties of a *valid* gauge, checked by sampling via
// is_valid_gauge_shape(); deliberately invalid gauges (e.g. scaled ones fed
// to the validity sweep) are constructible on purpose.
class RadialGauge {
 public:
  RadialGauge(std::vector<double> breakpoints,
              std::vector<std::vector<double>> pieces);

  // r |-> (2 - r^2)/2 on [0, sqrt(2)].
  static RadialGauge blichfeldt_f0();
  // 1, then (2-r)^2/2, then (2-r^2)/2 with breakpoints 2-sqrt(2), 1, sqrt(2).
  static RadialGauge modified_f1();
  // Characteristic function of [0, radius].
  static RadialGauge characteristic(double radius);

  double operator()(double r) const;
  double support() const { return breakpoints_.back(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<std::vector<double>>& pieces() const { return pieces_; }

  // s * f.
  RadialGauge scaled(double s) const;
  // r |-> f(r / lambda); support dilates by lambda.
  RadialGauge dilated(double lambda) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<std::vector<double>> pieces_;
};

// Evaluates g(r); throws on r < 0.
double eval_gauge(const RadialGauge& g, double r);

// Sampled check that values lie in [0, 1 + eps] and are nonincreasing.
bool is_valid_gauge_shape(const RadialGauge& g, int samples_per_piece = 512);

// Vol(B^k) via the two-step recurrence V_k = 2*pi/k * V_{k-2}.
double unit_ball_volume(int k);
// Surface area of S^{k-1} inside R^k.
double sphere_surface_area(int k);

// J(g) = integral of g(|x|) over R^k, exactly:
// surface(S^{k-1}) * sum over pieces of the polynomial antiderivative of
// g(r) r^{k-1}.
double radial_integral_closed(const RadialGauge& g, int k);

// The same integral by adaptive Simpson quadrature on each breakpoint
// interval.  Independent of the closed form; agrees with it to ~1e-10.
// Throws if the subdivision cap is exhausted before the tolerance is met.
double radial_integral_quadrature(const RadialGauge& g, int k,
                                  double abs_tol = 1e-13,
                                  std::size_t max_intervals = 1000000);

// Vol(C) / J(g); throws on nonpositive inputs.
double blichfeldt_bound(double body_volume, double j_value);

// (n+2) / 2^{(n+2)/2}, the classical gauge bound for sphere packings in R^n.
double sphere_packing_bound(int n);

// Finite-box correction factor (1 + (2*sqrt(2)-2)/t)^n multiplying the
// limit bound when density is measured relative to a cube of edge t.
double finite_cube_density_factor(double t, int n);

// 6 / (29 - 16*sqrt(2)) = 1/A_2, the gauge density bound for unit-radius
// polycylinders in any dimension (~0.9415334).
double polycylinder_bound();

// A_2 = J(f_1)/Vol(D^2) = (29 - 16*sqrt(2))/6 in closed form.
double a2_constant();

// The body D^{n+2} + t*I^n (unit inradius), whose inner parallel body at
// distance 1 is the n-cube of edge t embedded in the first n coordinates,
// centered at the origin.
struct CapsuleBody {
  double cube_edge = 0.0;  // t >= 0
  int core_dim = 0;        // n >= 0

  int ambient_dim() const { return core_dim + 2; }

  // Distance from x to the inner cube t*I^n, by coordinate clamping.
  double distance_to_inner_cube(const Vec& x) const;
};

// g(x) = f(d(x, C_-rho)/rho) where C_-rho is the inner parallel body of the
// capsule at distance rho (the centered n-cube for rho = 1).  Requires
// 0 < rho <= 1 (the inradius).
double ftk_gauge_value(const RadialGauge& f, const CapsuleBody& body,
                       double rho, const Vec& x);

// Centers of congruent unit balls placed by isometries; only the
// translation part matters for radial gauges.
struct IsometryConfig {
  std::vector<Vec> centers;

  // Pairwise distances >= min_sep (the unit-ball packing condition).
  bool admissible(double min_sep = 2.0) const;
};

// sigma_Phi(f)(x) = sum over centers c of f(|x - c|).
double gauge_sum(const RadialGauge& f, const IsometryConfig& config,
                 const Vec& x);

struct ValiditySweepResult {
  double max_sigma = 0.0;     // max observed sum over all trials and points
  int worst_trial = -1;
  int worst_dim = 0;
  Vec worst_point;
  double tangency_sigma = 0.0;  // sum at the midpoint of two centers at
                                // distance exactly 2
  std::uint64_t seed = 0;
  long long evaluations = 0;
};

// Empirical check of the gauge property: random admissible configurations
// in dimensions 2-4 (rejection sampling, pairwise distance >= 2) evaluated
// on a grid plus adversarial points (centers, pairwise midpoints).  Also
// always evaluates the deterministic two-center tangency configuration.
ValiditySweepResult validity_sweep(const RadialGauge& f, int trials,
                                   int centers_per_trial, std::uint64_t seed);

}  // namespace polypack

#endif  // POLYPACK_GAUGE_HPP
