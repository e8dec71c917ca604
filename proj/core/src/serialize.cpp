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

#include "polypack/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polypack {

namespace {

using json = nlohmann::ordered_json;

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vec vec_from_json(const json& arr) {
  Vec v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v[i] = arr[i].get<double>();
  return v;
}

}  // namespace

std::string packing_to_json(const PolycylinderPacking& p) {
  json doc;
  doc["ambient_dim"] = p.ambient_dim();
  doc["cores"] = json::array();
  for (const auto& core : p.cores()) {
    json c;
    c["basepoint"] = vec_to_json(core.basepoint());
    json dirs = json::array();
    for (int d = 0; d < core.dim(); ++d)
      dirs.push_back(vec_to_json(core.directions().col(d)));
    c["directions"] = dirs;
    doc["cores"].push_back(c);
  }
  if (p.periodic()) {
    json lat = json::array();
    for (const auto& v : p.lattice()) lat.push_back(vec_to_json(v));
    doc["lattice"] = lat;
  }
  return doc.dump(2) + "\n";
}

PolycylinderPacking packing_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("packing file parse error: ") +
                                e.what());
  }
  if (!doc.contains("ambient_dim") || !doc.contains("cores"))
    throw std::invalid_argument(
        "packing file needs ambient_dim and cores fields");
  const int m = doc["ambient_dim"].get<int>();
  std::vector<Flat> cores;
  for (const auto& c : doc["cores"]) {
    const Vec base = vec_from_json(c.at("basepoint"));
    if (base.size() != m)
      throw std::invalid_argument("core basepoint dimension mismatch");
    const auto& dirs_json = c.at("directions");
    Mat dirs(m, dirs_json.size());
    for (std::size_t d = 0; d < dirs_json.size(); ++d) {
      const Vec dir = vec_from_json(dirs_json[d]);
      if (dir.size() != m)
        throw std::invalid_argument("core direction dimension mismatch");
      dirs.col(d) = dir;
    }
    cores.emplace_back(base, dirs);
  }
  std::vector<Vec> lattice;
  if (doc.contains("lattice"))
    for (const auto& v : doc["lattice"]) lattice.push_back(vec_from_json(v));
  return PolycylinderPacking(m, std::move(cores), std::move(lattice));
}

std::string gauge_to_json(const RadialGauge& g) {
  json doc;
  doc["breakpoints"] = g.breakpoints();
  doc["pieces"] = g.pieces();
  return doc.dump(2) + "\n";
}

RadialGauge gauge_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("gauge file parse error: ") +
                                e.what());
  }
  return RadialGauge(doc.at("breakpoints").get<std::vector<double>>(),
                     doc.at("pieces").get<std::vector<std::vector<double>>>());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace polypack
