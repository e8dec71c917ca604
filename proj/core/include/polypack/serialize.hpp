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

#ifndef POLYPACK_SERIALIZE_HPP
#define POLYPACK_SERIALIZE_HPP

#include <string>

#include "polypack/gauge.hpp"
#include "polypack/packing.hpp"

namespace polypack {

// Packing file: {"ambient_dim": m, "cores": [{"basepoint": [..],
// "directions": [[..], ..]}, ..], "lattice": [[..], ..]} (lattice optional).
// Reals round-trip bit-exactly through the decimal serialization.
std::string packing_to_json(const PolycylinderPacking& p);
PolycylinderPacking packing_from_json(const std::string& text);

// Gauge file: {"breakpoints": [..], "pieces": [[coeffs], ..]}.
std::string gauge_to_json(const RadialGauge& g);
RadialGauge gauge_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace polypack

#endif  // POLYPACK_SERIALIZE_HPP
