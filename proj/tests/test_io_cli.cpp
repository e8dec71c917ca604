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

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "polypack/gauge.hpp"
#include "polypack/serialize.hpp"
#include "polypack/slice.hpp"
#include "polypack/svg.hpp"
#include "test_support.hpp"

using namespace polypack;
using namespace polypack::testing;
using json = nlohmann::json;

namespace {

#ifndef POLYPACK_CLI_PATH
#define POLYPACK_CLI_PATH "polypack"
#endif

std::string scratch_path(const std::string& name) {
  return std::string("polypack_test_") + name;
}

int run_cli(const std::string& args, const std::string& out_name = "out") {
  const std::string cmd = std::string(POLYPACK_CLI_PATH) + " " + args + " > " +
                          scratch_path(out_name) + " 2> " +
                          scratch_path(out_name) + ".err";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("packing json round trip") {
  const auto packing = hexagonal_packing(1);
  const std::string text = packing_to_json(packing);
  const auto back = packing_from_json(text);
  CHECK(back.ambient_dim() == 3);
  REQUIRE(back.cores().size() == 1);
  CHECK((back.cores()[0].basepoint() - packing.cores()[0].basepoint())
            .norm() == 0.0);
  REQUIRE(back.lattice().size() == 2);
  CHECK((back.lattice()[1] - packing.lattice()[1]).norm() == 0.0);

  // Serialized reals survive a decimal round trip bit-exactly.
  CounterRng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const double v = rng.normal() * std::pow(10.0, rng.uniform(-12, 12));
    const json j = v;
    CHECK(json::parse(j.dump()).get<double>() == v);
  }
  // And the full document survives parse -> dump -> parse.
  const json doc = json::parse(text);
  CHECK(json::parse(doc.dump()) == doc);

  CHECK_THROWS_AS(packing_from_json("{ not json"), std::invalid_argument);
  CHECK_THROWS_AS(packing_from_json("{\"cores\": []}"),
                  std::invalid_argument);
}

TEST_CASE("gauge json round trip") {
  const RadialGauge f1 = RadialGauge::modified_f1();
  const auto back = gauge_from_json(gauge_to_json(f1));
  CHECK(back.breakpoints() == f1.breakpoints());
  CHECK(back.pieces() == f1.pieces());
}

TEST_CASE("slice svg output") {
  const auto packing = hexagonal_packing(1);
  const DirichletSlice slice = build_slice(packing, 0, Vec::Zero(3), 4.0);
  const std::string svg = slice_to_svg(slice);
  CHECK(svg.find("<svg") != std::string::npos);
  for (const char* id : {"unit-circle", "lemma-circle", "bisector-arcs",
                         "vertices", "hexagon", "clip-circle"})
    CHECK(svg.find(std::string("g id=\"") + id + "\"") != std::string::npos);
  // Six vertex markers.
  std::size_t markers = 0, at = 0;
  while ((at = svg.find("r=\"4\"", at)) != std::string::npos) {
    ++markers;
    ++at;
  }
  CHECK(markers == 6);
  // Deterministic output.
  CHECK(svg == slice_to_svg(slice));
}

TEST_CASE("cli bound subcommands") {
  REQUIRE(run_cli("bound polycylinder --json " + scratch_path("b.json")) == 0);
  const json report = json::parse(read_text_file(scratch_path("b.json")));
  CHECK(report["pass"].get<bool>());
  const double bound = report["results"]["bound_closed"]["value"];
  CHECK(std::abs(bound - 0.94153344069245348) < 1e-12);

  REQUIRE(run_cli("bound sphere --n 3") == 0);
  REQUIRE(run_cli("bound blichfeldt --gauge f1 --dim 2 --volume pi --json " +
                  scratch_path("bb.json")) == 0);
  const json bb = json::parse(read_text_file(scratch_path("bb.json")));
  CHECK(std::abs(bb["results"]["bound_closed"]["value"].get<double>() -
                 0.94153344069245348) < 1e-12);

  // A gauge loaded from a file behaves like the built-in one.
  const std::string gauge_file = scratch_path("f0.json");
  write_text_file(gauge_file, gauge_to_json(RadialGauge::blichfeldt_f0()));
  REQUIRE(run_cli("bound blichfeldt --gauge " + gauge_file +
                  " --dim 3 --volume ball3 --json " +
                  scratch_path("bf.json")) == 0);
  const json bf = json::parse(read_text_file(scratch_path("bf.json")));
  CHECK(std::abs(bf["results"]["bound_closed"]["value"].get<double>() -
                 sphere_packing_bound(3)) < 1e-12);

  // Usage errors exit with 2.
  CHECK(run_cli("bound sphere") == 2);          // missing --n
  CHECK(run_cli("nonsense") == 2);              // unknown subcommand
  CHECK(run_cli("slice missing_file.json") == 2);
}

TEST_CASE("cli pack and slice flow") {
  const std::string packing_file = scratch_path("hex.json");
  REQUIRE(run_cli("pack hexagonal --n 1 --out " + packing_file) == 0);
  REQUIRE(run_cli("pack validate " + packing_file) == 0);

  const std::string svg_file = scratch_path("slice.svg");
  const std::string report_file = scratch_path("slice.json");
  REQUIRE(run_cli("slice " + packing_file + " --core 0 --svg " + svg_file +
                  " --json " + report_file) == 0);
  const json report = json::parse(read_text_file(report_file));
  CHECK(report["results"]["vertices"]["value"].get<int>() == 6);
  CHECK(std::abs(report["results"]["area"]["value"].get<double>() -
                 std::sqrt(12.0)) < 1e-9);
  CHECK(report["checks"]["lemma2_vertex_radius"].get<bool>());
  CHECK(report["checks"]["lemma3_chord_angle"].get<bool>());
  const std::string svg = read_text_file(svg_file);
  CHECK(svg.find("bisector-arcs") != std::string::npos);

  // Overlapping packing: validation fails with exit 3 everywhere.
  const std::string bad_file = scratch_path("bad.json");
  write_text_file(
      bad_file,
      "{\"ambient_dim\": 2, \"cores\": [{\"basepoint\": [0.0, 0.0], "
      "\"directions\": []}, {\"basepoint\": [1.9, 0.0], \"directions\": "
      "[]}]}");
  CHECK(run_cli("pack validate " + bad_file) == 3);
  CHECK(run_cli("slice " + bad_file) == 3);
  CHECK(run_cli("pack density " + bad_file + " --r 10 --samples 100") == 3);
}

TEST_CASE("cli sweeps and violation exit code") {
  REQUIRE(run_cli("sweep gauges --trials 40 --seed 1 --json " +
                  scratch_path("g1.json")) == 0);
  REQUIRE(run_cli("sweep gauges --trials 40 --seed 1 --json " +
                  scratch_path("g2.json")) == 0);
  CHECK(read_text_file(scratch_path("g1.json")) ==
        read_text_file(scratch_path("g2.json")));

  // A deliberately scaled gauge violates sigma <= 1 and exits 4.
  CHECK(run_cli("sweep gauges --trials 10 --gauge-scale 1.5") == 4);

  REQUIRE(run_cli("sweep transversality --trials 25 --seed 2 --json " +
                  scratch_path("t.json")) == 0);
  const json t = json::parse(read_text_file(scratch_path("t.json")));
  CHECK(t["checks"]["corollary_n_minus_1"].get<bool>());

  REQUIRE(run_cli("sweep lemmas --trials 30 --seed 3 --json " +
                  scratch_path("l.json")) == 0);
  const json l = json::parse(read_text_file(scratch_path("l.json")));
  CHECK(l["checks"]["area_ge_sqrt12"].get<bool>());
  CHECK(l["results"]["hexagon_area"]["value"].get<double>() ==
        doctest::Approx(std::sqrt(12.0)).epsilon(1e-9));
}

TEST_CASE("cli slice on a skew four-dimensional packing") {
  // Central core span{e3,e4}; the neighbor shares e3, tilts its second
  // direction into e2 and sits 2.5 away along e1.
  const std::string file = scratch_path("skew4.json");
  write_text_file(
      file,
      "{\"ambient_dim\": 4, \"cores\": ["
      "{\"basepoint\": [0,0,0,0], \"directions\": [[0,0,1,0],[0,0,0,1]]},"
      "{\"basepoint\": [2.5,0,0,0], \"directions\": "
      "[[0,0,1,0],[0,0.6,0,0.8]]}]}");
  REQUIRE(run_cli("pack validate " + file) == 0);
  const std::string report_file = scratch_path("skew4_slice.json");
  REQUIRE(run_cli("slice " + file + " --json " + report_file) == 0);
  const json report = json::parse(read_text_file(report_file));
  CHECK(report["checks"]["bisectors_rank_le_1"].get<bool>());
  CHECK(report["checks"]["lemma3_chord_angle"].get<bool>());
  CHECK(report["results"]["bounded"]["value"].get<int>() == 0);
  CHECK(report["results"]["area"]["value"].get<double>() > 0.0);
}

TEST_CASE("cli density run") {
  const std::string packing_file = scratch_path("hex2d.json");
  REQUIRE(run_cli("pack hexagonal --n 0 --out " + packing_file) == 0);
  REQUIRE(run_cli("pack density " + packing_file +
                  " --r 25 --samples 100000 --seed 0 --json " +
                  scratch_path("d.json")) == 0);
  const json d = json::parse(read_text_file(scratch_path("d.json")));
  CHECK(std::abs(d["results"]["density"]["value"].get<double>() -
                 std::numbers::pi / std::sqrt(12.0)) < 0.02);
  CHECK(d["seed"].get<std::uint64_t>() == 0);
}
