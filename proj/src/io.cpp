// Copyright 2026 The evcopula Authors
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

#include "evcopula/io.hpp"

#include <cstdio>
#include <ostream>
#include <vector>

#include "evcopula/errors.hpp"

namespace evc {

PiecewiseLinearPickands PickandsFromJson(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc["vertices"].is_array()) {
    throw Error(ErrorKind::kParseError,
                "expected an object with a \"vertices\" array");
  }
  std::vector<Vertex> raw;
  for (const auto& item : doc["vertices"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
        !item[1].is_number()) {
      throw Error(ErrorKind::kParseError,
                  "each vertex must be a [x, y] pair of numbers");
    }
    raw.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return PiecewiseLinearPickands::Validate(raw);
}

PiecewiseLinearPickands ParsePickands(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  return PickandsFromJson(doc);
}

nlohmann::json PickandsToJson(const PiecewiseLinearPickands& a) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Vertex& v : a.vertices()) vertices.push_back({v.x, v.y});
  return {{"vertices", vertices}};
}

std::string FormatCsvNumber(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void WriteRegionCsv(std::ostream& out, std::span<const RegionSample> samples) {
  out << "tau,rho,slack_sharp,slack_hl\n";
  for (const RegionSample& s : samples) {
    out << FormatCsvNumber(s.tau) << ',' << FormatCsvNumber(s.rho) << ','
        << FormatCsvNumber(s.slack_sharp) << ','
        << FormatCsvNumber(s.slack_hl) << '\n';
  }
}

void WriteSampleCsv(std::ostream& out, std::span<const SamplePair> pairs,
                    bool header) {
  if (header) out << "u,v\n";
  for (const SamplePair& p : pairs) {
    out << FormatCsvNumber(p.u) << ',' << FormatCsvNumber(p.v) << '\n';
  }
}

}  // namespace evc
