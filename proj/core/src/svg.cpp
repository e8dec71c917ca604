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

#include "polypack/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace polypack {

namespace {

// Fixed-precision formatting keeps the output byte-stable.
std::string num(double v) {
  char buf[32];
  if (std::abs(v) < 5e-7) v = 0.0;  // avoid "-0.000000"
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string slice_to_svg(const DirichletSlice& s, const SvgOptions& opt) {
  const double ppu = opt.pixels_per_unit;
  const double view =
      (opt.view_radius > 0.0 ? opt.view_radius : s.clip_radius) + 0.25;
  const double half = view * ppu;

  // y axis flipped, origin centered.
  const auto px = [&](const Vec2& p) { return p.x() * ppu; };
  const auto py = [&](const Vec2& p) { return -p.y() * ppu; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(-half)
      << " " << num(-half) << " " << num(2 * half) << " " << num(2 * half)
      << "\">\n";

  out << "  <g id=\"clip-circle\">\n"
      << "    <circle cx=\"0\" cy=\"0\" r=\"" << num(s.clip_radius * ppu)
      << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n"
      << "  </g>\n";

  out << "  <g id=\"unit-circle\">\n"
      << "    <circle cx=\"0\" cy=\"0\" r=\"" << num(ppu)
      << "\" fill=\"none\" stroke=\"#2266cc\" stroke-width=\"2\"/>\n"
      << "  </g>\n";

  const double lemma_radius = 2.0 / std::numbers::sqrt3;
  out << "  <g id=\"lemma-circle\">\n"
      << "    <circle cx=\"0\" cy=\"0\" r=\"" << num(lemma_radius * ppu)
      << "\" fill=\"none\" stroke=\"#22aa66\" stroke-width=\"1\" "
         "stroke-dasharray=\"6 4\"/>\n"
      << "  </g>\n";

  if (opt.hexagon_overlay) {
    out << "  <g id=\"hexagon\">\n    <path d=\"";
    for (int k = 0; k <= 6; ++k) {
      const double phi = std::numbers::pi * k / 3.0;
      const Vec2 p(lemma_radius * std::cos(phi), lemma_radius * std::sin(phi));
      out << (k == 0 ? "M" : "L") << num(px(p)) << " " << num(py(p));
    }
    out << "Z\" fill=\"none\" stroke=\"#bbaa44\" stroke-width=\"1\" "
           "stroke-dasharray=\"2 3\"/>\n  </g>\n";
  }

  out << "  <g id=\"bisector-arcs\">\n";
  for (const auto& arc : s.arcs) {
    if (arc.constraint < 0) {
      // Clipped boundary: draw the circular arc.
      const double r = s.clip_radius * ppu;
      const Vec2 a(s.clip_radius * std::cos(arc.t0),
                   s.clip_radius * std::sin(arc.t0));
      const Vec2 b(s.clip_radius * std::cos(arc.t1),
                   s.clip_radius * std::sin(arc.t1));
      const double span = arc.t1 - arc.t0;
      if (span >= 2.0 * std::numbers::pi - 1e-12) {
        out << "    <circle cx=\"0\" cy=\"0\" r=\"" << num(r)
            << "\" fill=\"none\" stroke=\"#cc4444\" stroke-width=\"2\"/>\n";
      } else {
        const int large = span > std::numbers::pi ? 1 : 0;
        out << "    <path d=\"M" << num(px(a)) << " " << num(py(a)) << "A"
            << num(r) << " " << num(r) << " 0 " << large << " 0 " << num(px(b))
            << " " << num(py(b))
            << "\" fill=\"none\" stroke=\"#cc4444\" stroke-width=\"2\"/>\n";
      }
      continue;
    }
    // Parabola and line arcs are exact quadratic Beziers: the control point
    // is the intersection of the endpoint tangents (midpoint tangent for
    // straight segments).
    const auto& b = s.bisectors[arc.constraint];
    const Vec2 p0 = b.point_at(arc.t0);
    const Vec2 p1 = b.point_at(arc.t1);
    const Vec2 ctrl = 0.5 * (b.point_at(arc.t0) + b.point_at(arc.t1)) +
                      0.25 * (arc.t1 - arc.t0) *
                          (b.tangent_at(arc.t0) - b.tangent_at(arc.t1));
    out << "    <path d=\"M" << num(px(p0)) << " " << num(py(p0)) << "Q"
        << num(px(ctrl)) << " " << num(py(ctrl)) << " " << num(px(p1)) << " "
        << num(py(p1))
        << "\" fill=\"none\" stroke=\"#cc4444\" stroke-width=\"2\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"vertices\">\n";
  for (const auto& v : s.vertices)
    out << "    <circle cx=\"" << num(px(v)) << "\" cy=\"" << num(py(v))
        << "\" r=\"4\" fill=\"#222222\"/>\n";
  out << "  </g>\n";

  out << "</svg>\n";
  return out.str();
}

}  // namespace polypack
