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

#ifndef EVCOPULA_CLI_HPP_
#define EVCOPULA_CLI_HPP_

#include <iosfwd>
#include <vector>

#include "evcopula/errors.hpp"

namespace evc::cli {

enum ExitCode : int {
  kOk = 0,
  kIoOrParse = 1,
  kInvalidFunction = 2,
  kInvariantViolation = 3,
};

ExitCode ExitCodeFor(ErrorKind kind);

// One row of the bound-curve table. triangular_* is the measured point of
// the triangular function with tau(T) = tau, which traces the sharp curve.
struct FigureRow {
  double tau = 0.0;
  double hl_lower = 0.0;
  double hl_upper = 0.0;
  double sharp_lower = 0.0;
  double triangular_tau = 0.0;
  double triangular_rho = 0.0;
};

std::vector<FigureRow> FigureData(int grid_points = 1001);
void WriteFigureCsv(std::ostream& out, const std::vector<FigureRow>& rows);

// Entry point shared by the executable and the tests.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace evc::cli

#endif  // EVCOPULA_CLI_HPP_
