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

// Interchange formats.
//
// A Pickands function is exchanged as {"vertices": [[x1, y1], ...]}; an
// empty list is the product copula. CSV output always has a header row and
// prints numbers with 17 significant digits.

#ifndef EVCOPULA_IO_HPP_
#define EVCOPULA_IO_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "evcopula/pickands.hpp"
#include "evcopula/sampler.hpp"
#include "evcopula/verification.hpp"

namespace evc {

// Throws ParseError on malformed JSON or schema, and the usual validation
// errors if the vertices do not form a Pickands function.
PiecewiseLinearPickands PickandsFromJson(const nlohmann::json& doc);
PiecewiseLinearPickands ParsePickands(std::string_view text);

nlohmann::json PickandsToJson(const PiecewiseLinearPickands& a);

std::string FormatCsvNumber(double value);

// Columns tau,rho,slack_sharp,slack_hl.
void WriteRegionCsv(std::ostream& out, std::span<const RegionSample> samples);

// Columns u,v.
void WriteSampleCsv(std::ostream& out, std::span<const SamplePair> pairs,
                    bool header = true);

}  // namespace evc

#endif  // EVCOPULA_IO_HPP_
