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

#include "evcopula/errors.hpp"

namespace evc {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonIncreasingAbscissae: return "NonIncreasingAbscissae";
    case ErrorKind::kEnvelopeViolation: return "EnvelopeViolation";
    case ErrorKind::kConvexityViolation: return "ConvexityViolation";
    case ErrorKind::kSlopeOutOfRange: return "SlopeOutOfRange";
    case ErrorKind::kDomainError: return "DomainError";
    case ErrorKind::kNoVertices: return "NoVertices";
    case ErrorKind::kAdmissibilityError: return "AdmissibilityError";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kNotComparable: return "NotComparable";
    case ErrorKind::kBisectionFailure: return "BisectionFailure";
    case ErrorKind::kInsufficientData: return "InsufficientData";
    case ErrorKind::kInvariantViolation: return "InvariantViolation";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace evc
