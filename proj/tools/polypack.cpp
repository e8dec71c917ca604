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
//
// polypack: density bounds, Dirichlet slices and Monte-Carlo density for
// packings of unit-radius polycylinders.
//
//   polypack bound polycylinder | sphere --n N | blichfeldt ...
//   polypack slice <packing.json> [--core I] [--point ...] [--svg out.svg]
//   polypack pack hexagonal|validate|density ...
//   polypack sweep gauges|lemmas|transversality --trials N --seed S
//
// Exit codes: 0 success, 2 usage, 3 invalid packing, 4 property violation.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polypack/gauge.hpp"
#include "polypack/packing.hpp"
#include "polypack/serialize.hpp"
#include "polypack/slice.hpp"
#include "polypack/svg.hpp"
#include "polypack/sweeps.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace polypack;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidPacking = 3;
constexpr int kExitViolation = 4;

std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (const unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Machine-readable run report; wall time goes to the text output only so
// identical seeds rerun to byte-identical JSON.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {
    digest_ = fnv1a(command_);
  }

  void digest_input(const std::string& label, const std::string& data) {
    digest_ = fnv1a(label, digest_);
    digest_ = fnv1a(data, digest_);
  }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  void add(const std::string& name, double value,
           const std::string& provenance) {
    results_[name] = {{"value", value}, {"provenance", provenance}};
    order_.push_back(name);
  }
  void add_int(const std::string& name, long long value,
               const std::string& provenance) {
    results_[name] = {{"value", value}, {"provenance", provenance}};
    order_.push_back(name);
  }
  void check(const std::string& name, bool pass) {
    checks_[name] = pass;
    all_pass_ = all_pass_ && pass;
  }
  bool all_pass() const { return all_pass_; }

  json to_json() const {
    json doc;
    doc["command"] = command_;
    doc["inputs_digest"] = hex64(digest_);
    if (seed_) doc["seed"] = *seed_;
    doc["results"] = results_;
    doc["checks"] = checks_;
    doc["pass"] = all_pass_;
    return doc;
  }

  void emit(const std::string& json_path, double wall_ms) const {
    for (const auto& name : order_) {
      const auto& entry = results_[name];
      std::cout << "  " << name << " = ";
      if (entry["value"].is_number_float())
        std::cout << entry["value"].get<double>();
      else
        std::cout << entry["value"];
      std::cout << "   [" << entry["provenance"].get<std::string>() << "]\n";
    }
    for (auto it = checks_.begin(); it != checks_.end(); ++it)
      std::cout << "  check " << it.key() << ": "
                << (it.value().get<bool>() ? "pass" : "FAIL") << "\n";
    if (seed_) std::cout << "  seed: " << *seed_ << "\n";
    std::cout << "  wall time: " << wall_ms << " ms\n";
    if (!json_path.empty()) {
      const std::string text = to_json().dump(2) + "\n";
      if (json_path == "-")
        std::cout << text;
      else
        write_text_file(json_path, text);
    }
  }

 private:
  std::string command_;
  std::uint64_t digest_;
  std::optional<std::uint64_t> seed_;
  json results_ = json::object();
  json checks_ = json::object();
  std::vector<std::string> order_;
  bool all_pass_ = true;
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

Vec parse_point(const std::string& text, int expected_dim) {
  std::vector<double> coords;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) coords.push_back(std::stod(item));
  if (expected_dim >= 0 && static_cast<int>(coords.size()) != expected_dim)
    throw CLI::ValidationError("--point", "wrong coordinate count");
  Vec p(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) p[i] = coords[i];
  return p;
}

RadialGauge named_gauge(const std::string& name) {
  if (name == "f0") return RadialGauge::blichfeldt_f0();
  if (name == "f1") return RadialGauge::modified_f1();
  return gauge_from_json(read_text_file(name));
}

int cmd_bound_polycylinder(const std::string& json_path) {
  Timer timer;
  Report report("bound polycylinder");
  const double closed = polycylinder_bound();
  const RadialGauge f1 = RadialGauge::modified_f1();
  const double j_closed = radial_integral_closed(f1, 2);
  const double j_quad = radial_integral_quadrature(f1, 2);
  const double via_quadrature =
      blichfeldt_bound(std::numbers::pi, j_quad);
  report.add("bound_closed", closed, "paper");
  report.add("bound_quadrature", via_quadrature, "derived");
  report.add("a2", a2_constant(), "paper");
  report.add("j_f1_closed", j_closed, "derived");
  report.add("j_f1_quadrature", j_quad, "derived");
  report.check("paths_agree_1e-10", std::abs(closed - via_quadrature) < 1e-10);
  std::cout << "polycylinder gauge density bound: " << closed << "\n";
  report.emit(json_path, timer.ms());
  return report.all_pass() ? kExitOk : kExitViolation;
}

int cmd_bound_sphere(int n, const std::string& json_path) {
  Timer timer;
  Report report("bound sphere n=" + std::to_string(n));
  const double bound = sphere_packing_bound(n);
  const RadialGauge f0 = RadialGauge::blichfeldt_f0();
  const double j_closed = radial_integral_closed(f0, n);
  const double j_quad = radial_integral_quadrature(f0, n);
  const double via_quadrature = blichfeldt_bound(unit_ball_volume(n), j_quad);
  report.add("bound_closed", bound, "paper");
  report.add("bound_quadrature", via_quadrature, "derived");
  report.add("j_f0_closed", j_closed, "derived");
  report.add("j_f0_quadrature", j_quad, "derived");
  report.check("paths_agree_1e-10", std::abs(bound - via_quadrature) < 1e-10);
  std::cout << "sphere packing density bound in R^" << n << ": " << bound
            << "\n";
  report.emit(json_path, timer.ms());
  return report.all_pass() ? kExitOk : kExitViolation;
}

int cmd_bound_blichfeldt(const std::string& gauge_name, int dim,
                         const std::string& volume_text,
                         const std::string& json_path) {
  Timer timer;
  Report report("bound blichfeldt gauge=" + gauge_name +
                " dim=" + std::to_string(dim) + " volume=" + volume_text);
  const RadialGauge gauge = named_gauge(gauge_name);
  double volume;
  if (volume_text == "pi")
    volume = std::numbers::pi;
  else if (volume_text.rfind("ball", 0) == 0)
    volume = unit_ball_volume(std::stoi(volume_text.substr(4)));
  else
    volume = std::stod(volume_text);
  const double j_closed = radial_integral_closed(gauge, dim);
  const double j_quad = radial_integral_quadrature(gauge, dim);
  report.add("bound_closed", blichfeldt_bound(volume, j_closed), "derived");
  report.add("bound_quadrature", blichfeldt_bound(volume, j_quad), "derived");
  report.add("j_closed", j_closed, "derived");
  report.add("j_quadrature", j_quad, "derived");
  report.check("paths_agree_1e-10", std::abs(j_closed - j_quad) < 1e-10);
  std::cout << "Blichfeldt bound Vol/J = "
            << blichfeldt_bound(volume, j_closed) << "\n";
  report.emit(json_path, timer.ms());
  return report.all_pass() ? kExitOk : kExitViolation;
}

int cmd_slice(const std::string& packing_path, int core_index,
              const std::string& point_text, double clip,
              const std::string& svg_path, const std::string& json_path) {
  Timer timer;
  Report report("slice " + packing_path + " core=" +
                std::to_string(core_index));
  const std::string packing_text = read_text_file(packing_path);
  report.digest_input("packing", packing_text);
  const PolycylinderPacking packing = packing_from_json(packing_text);

  const auto issues = validate(packing);
  if (!issues.empty()) {
    std::cerr << "invalid packing: " << issues.size()
              << " core pair(s) closer than 2\n";
    return kExitInvalidPacking;
  }
  if (core_index < 0 ||
      core_index >= static_cast<int>(packing.cores().size())) {
    std::cerr << "core index out of range\n";
    return kExitUsage;
  }
  const Vec x = point_text.empty()
                    ? packing.cores()[core_index].basepoint()
                    : parse_point(point_text, packing.ambient_dim());

  const DirichletSlice slice = build_slice(packing, core_index, x, clip);
  const SliceArea area = slice_area(slice);
  const double min_vertex = verify_vertex_bound(slice);
  double max_angle = -1.0;
  double max_rank_residual = 0.0;
  for (const auto& b : slice.bisectors) {
    max_rank_residual = std::max(max_rank_residual,
                                 b.quadratic_rank_residual());
    if (const auto angle = chord_angle(b))
      max_angle = std::max(max_angle, *angle);
  }
  const double hexagon_radius = 2.0 / std::numbers::sqrt3;
  const double angle_limit =
      2.0 * std::acos(std::numbers::sqrt3 - 1.0) * 180.0 / std::numbers::pi;

  report.add_int("vertices", static_cast<long long>(slice.vertices.size()),
                 "derived");
  report.add_int("bounded", slice.bounded ? 1 : 0, "derived");
  report.add("area", area.value, "derived");
  report.add_int("area_is_lower_bound", area.lower_bound ? 1 : 0, "derived");
  if (!slice.vertices.empty())
    report.add("min_vertex_radius", min_vertex, "derived");
  if (max_angle >= 0.0) report.add("max_chord_angle_deg", max_angle, "paper");
  report.add("rank_residual", max_rank_residual, "derived");
  report.check("bisectors_rank_le_1", max_rank_residual <= 1e-9);
  report.check("lemma2_vertex_radius",
               slice.vertices.empty() || min_vertex >= hexagon_radius - 1e-9);
  report.check("lemma3_chord_angle",
               max_angle < 0.0 || max_angle <= angle_limit + 1e-6);
  if (slice.bounded)
    report.check("area_ge_sqrt12", area.value >= std::sqrt(12.0) - 1e-6);

  if (!svg_path.empty()) write_text_file(svg_path, slice_to_svg(slice));

  std::cout << "slice: " << slice.vertices.size() << " vertices, area "
            << area.value << (area.lower_bound ? " (clipped lower bound)" : "")
            << "\n";
  report.emit(json_path, timer.ms());
  return report.all_pass() ? kExitOk : kExitViolation;
}

int cmd_pack_hexagonal(int n, const std::string& out_path) {
  const PolycylinderPacking packing = hexagonal_packing(n);
  const std::string text = packing_to_json(packing);
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_text_file(out_path, text);
  return kExitOk;
}

int cmd_pack_validate(const std::string& packing_path,
                      const std::string& json_path) {
  Timer timer;
  Report report("pack validate " + packing_path);
  const std::string packing_text = read_text_file(packing_path);
  report.digest_input("packing", packing_text);
  const PolycylinderPacking packing = packing_from_json(packing_text);
  const auto issues = validate(packing);
  report.add_int("violations", static_cast<long long>(issues.size()),
                 "derived");
  report.check("valid", issues.empty());
  for (const auto& issue : issues)
    std::cout << "  cores " << issue.i << " and " << issue.j
              << " (shift norm " << issue.shift.norm() << ") at distance "
              << issue.distance << "\n";
  report.emit(json_path, timer.ms());
  return issues.empty() ? kExitOk : kExitInvalidPacking;
}

int cmd_pack_density(const std::string& packing_path, double r,
                     std::uint64_t samples, std::uint64_t seed,
                     const std::string& json_path) {
  Timer timer;
  Report report("pack density " + packing_path + " r=" + std::to_string(r) +
                " samples=" + std::to_string(samples));
  const std::string packing_text = read_text_file(packing_path);
  report.digest_input("packing", packing_text);
  const PolycylinderPacking packing = packing_from_json(packing_text);
  const auto issues = validate(packing);
  if (!issues.empty()) {
    std::cerr << "invalid packing: " << issues.size()
              << " core pair(s) closer than 2\n";
    return kExitInvalidPacking;
  }
  report.set_seed(seed);
  const DensityEstimate estimate = density_estimate(packing, r, samples, seed);
  report.add("density", estimate.value, "derived");
  report.add("standard_error", estimate.standard_error, "derived");
  report.add("window_radius", estimate.window_radius, "derived");
  report.add_int("samples", static_cast<long long>(estimate.samples),
                 "derived");
  std::cout << "density estimate: " << estimate.value << " +/- "
            << estimate.standard_error << " (window r=" << r << ")\n";
  report.emit(json_path, timer.ms());
  return kExitOk;
}

int cmd_sweep_gauges(int trials, int centers, std::uint64_t seed,
                     double gauge_scale, const std::string& json_path) {
  Timer timer;
  Report report("sweep gauges trials=" + std::to_string(trials) +
                " centers=" + std::to_string(centers) +
                " scale=" + std::to_string(gauge_scale));
  report.set_seed(seed);
  const GaugeSweepResult sweep = gauge_sweep(trials, centers, seed,
                                             gauge_scale);
  report.add("max_sigma_f0", sweep.f0.max_sigma, "derived");
  report.add("max_sigma_f1", sweep.f1.max_sigma, "derived");
  report.add("tangency_sigma_f0", sweep.f0.tangency_sigma, "derived");
  report.add("tangency_sigma_f1", sweep.f1.tangency_sigma, "derived");
  report.add_int("evaluations",
                 sweep.f0.evaluations + sweep.f1.evaluations, "derived");
  report.check("sigma_f0_le_1", sweep.f0.max_sigma <= 1.0 + 1e-12);
  report.check("sigma_f1_le_1", sweep.f1.max_sigma <= 1.0 + 1e-12);
  std::cout << "max sigma: f0 " << sweep.f0.max_sigma << ", f1 "
            << sweep.f1.max_sigma << "\n";
  report.emit(json_path, timer.ms());
  return sweep.ok ? kExitOk : kExitViolation;
}

int cmd_sweep_lemmas(int trials, std::uint64_t seed,
                     const std::string& json_path) {
  Timer timer;
  Report report("sweep lemmas trials=" + std::to_string(trials));
  report.set_seed(seed);
  const LemmaSweepResult sweep = lemma_sweep(trials, seed);
  report.add_int("configs", sweep.configs, "derived");
  report.add_int("bounded_slices", sweep.bounded_count, "derived");
  report.add("min_bounded_area", sweep.min_bounded_area, "paper");
  report.add("min_vertex_radius", sweep.min_vertex_radius, "paper");
  report.add("max_chord_angle_deg", sweep.max_chord_angle_deg, "paper");
  report.add("tangent_pair_angle_deg", sweep.tangent_pair_angle_deg, "paper");
  report.add("hexagon_area", sweep.hexagon_area, "paper");
  report.add("hexagon_vertex_radius", sweep.hexagon_vertex_radius, "paper");
  report.add("max_rank_residual", sweep.max_rank_residual, "derived");
  report.check("rank_le_1", sweep.rank_ok);
  report.check("area_ge_sqrt12", sweep.area_ok);
  report.check("vertex_radius_ge_2_sqrt3", sweep.vertex_ok);
  report.check("chord_angle_le_limit", sweep.angle_ok);
  std::cout << "lemma sweep over " << sweep.configs << " configurations ("
            << sweep.bounded_count << " bounded)\n";
  report.emit(json_path, timer.ms());
  return report.all_pass() ? kExitOk : kExitViolation;
}

int cmd_sweep_transversality(int trials, std::uint64_t seed,
                             const std::string& json_path) {
  Timer timer;
  Report report("sweep transversality trials=" + std::to_string(trials));
  report.set_seed(seed);
  const TransversalitySweepResult sweep = transversality_sweep(trials, seed);
  long long pairs = 0;
  for (const auto& combo : sweep.combos) pairs += combo.pairs;
  report.add_int("pairs", pairs, "derived");
  report.add_int("corollary_min_excess", sweep.corollary_min_excess,
                 "derived");
  report.check("lemma_strict", sweep.lemma_ok);
  report.check("corollary_n_minus_1", sweep.corollary_ok);
  for (const auto& combo : sweep.combos)
    std::cout << "  n=" << combo.n << " k=" << combo.k << ": parallel dim in ["
              << combo.min_parallel_dim << ", " << combo.max_parallel_dim
              << "]\n";
  report.emit(json_path, timer.ms());
  return report.all_pass() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polycylinder packing density toolkit"};
  app.require_subcommand(1);

  std::string json_path, svg_path, packing_path, point_text, out_path;
  std::string gauge_name = "f1", volume_text = "pi";
  int n = 1, dim = 2, core_index = 0, trials = 1000, centers = 8;
  double clip = 8.0, window = 50.0, gauge_scale = 1.0;
  std::uint64_t samples = 1000000, seed = 0;

  auto* bound = app.add_subcommand("bound", "density upper bounds");
  bound->require_subcommand(1);
  auto* bound_poly = bound->add_subcommand(
      "polycylinder", "gauge bound for unit-radius polycylinders");
  bound_poly->add_option("--json", json_path, "write a JSON report");
  auto* bound_sphere =
      bound->add_subcommand("sphere", "classical gauge bound for spheres");
  bound_sphere->add_option("--n", n, "dimension")->required();
  bound_sphere->add_option("--json", json_path);
  auto* bound_bl = bound->add_subcommand(
      "blichfeldt", "Vol/J for a gauge and body volume");
  bound_bl->add_option("--gauge", gauge_name, "f0, f1 or a gauge JSON file");
  bound_bl->add_option("--dim", dim, "integration dimension");
  bound_bl->add_option("--volume", volume_text, "body volume (number, pi, ballN)");
  bound_bl->add_option("--json", json_path);

  auto* slice = app.add_subcommand("slice", "Dirichlet slice analysis");
  slice->add_option("packing", packing_path, "packing JSON file")->required();
  slice->add_option("--core", core_index, "core index");
  slice->add_option("--point", point_text, "comma-separated point on the core");
  slice->add_option("--clip", clip, "clip radius");
  slice->add_option("--svg", svg_path, "write an SVG figure");
  slice->add_option("--json", json_path);

  auto* pack = app.add_subcommand("pack", "packing files and density");
  pack->require_subcommand(1);
  auto* pack_hex = pack->add_subcommand("hexagonal",
                                        "write the hexagonal product packing");
  pack_hex->add_option("--n", n, "core dimension")->required();
  pack_hex->add_option("--out", out_path, "output file (default stdout)");
  auto* pack_validate =
      pack->add_subcommand("validate", "check pairwise core separation");
  pack_validate->add_option("packing", packing_path)->required();
  pack_validate->add_option("--json", json_path);
  auto* pack_density =
      pack->add_subcommand("density", "Monte-Carlo covered fraction");
  pack_density->add_option("packing", packing_path)->required();
  pack_density->add_option("--r", window, "window ball radius");
  pack_density->add_option("--samples", samples, "sample count");
  pack_density->add_option("--seed", seed, "RNG seed");
  pack_density->add_option("--json", json_path);

  auto* sweep = app.add_subcommand("sweep", "randomized property sweeps");
  sweep->require_subcommand(1);
  auto* sweep_gauges = sweep->add_subcommand("gauges", "sigma <= 1 sweep");
  sweep_gauges->add_option("--trials", trials);
  sweep_gauges->add_option("--centers", centers, "max centers per trial");
  sweep_gauges->add_option("--seed", seed);
  sweep_gauges->add_option("--gauge-scale", gauge_scale,
                           "scale both gauges (1.5 demonstrates failure)");
  sweep_gauges->add_option("--json", json_path);
  auto* sweep_lemmas =
      sweep->add_subcommand("lemmas", "slice geometry bounds sweep");
  sweep_lemmas->add_option("--trials", trials);
  sweep_lemmas->add_option("--seed", seed);
  sweep_lemmas->add_option("--json", json_path);
  auto* sweep_trans =
      sweep->add_subcommand("transversality", "parallel dimension sweep");
  sweep_trans->add_option("--trials", trials);
  sweep_trans->add_option("--seed", seed);
  sweep_trans->add_option("--json", json_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bound_poly->parsed()) return cmd_bound_polycylinder(json_path);
    if (bound_sphere->parsed()) return cmd_bound_sphere(n, json_path);
    if (bound_bl->parsed())
      return cmd_bound_blichfeldt(gauge_name, dim, volume_text, json_path);
    if (slice->parsed())
      return cmd_slice(packing_path, core_index, point_text, clip, svg_path,
                       json_path);
    if (pack_hex->parsed()) return cmd_pack_hexagonal(n, out_path);
    if (pack_validate->parsed())
      return cmd_pack_validate(packing_path, json_path);
    if (pack_density->parsed())
      return cmd_pack_density(packing_path, window, samples, seed, json_path);
    if (sweep_gauges->parsed())
      return cmd_sweep_gauges(trials, centers, seed, gauge_scale, json_path);
    if (sweep_lemmas->parsed())
      return cmd_sweep_lemmas(trials, seed, json_path);
    if (sweep_trans->parsed())
      return cmd_sweep_transversality(trials, seed, json_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
