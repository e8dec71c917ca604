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

#ifndef POLYPACK_SVG_HPP
#define POLYPACK_SVG_HPP

#include <string>

#include "polypack/slice.hpp"

namespace polypack {

struct SvgOptions {
  double pixels_per_unit = 100.0;  // y axis flipped, origin centered
  double view_radius = 0.0;        // 0: fit the clip disk
  bool hexagon_overlay = true;     // regular hexagon circumscribing S_x(1)
};

// Deterministic SVG picture of a slice: unit circle, the 2/sqrt(3) circle,
// bisector boundary arcs, vertices, optional hexagon overlay, each in its
// own <g id=...> group.  Parabola arcs are exact quadratic Beziers.
std::string slice_to_svg(const DirichletSlice& s, const SvgOptions& opt = {});

}  // namespace polypack

#endif  // POLYPACK_SVG_HPP
