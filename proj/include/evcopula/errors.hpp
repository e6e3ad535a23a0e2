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

#ifndef EVCOPULA_ERRORS_HPP_
#define EVCOPULA_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace evc {

enum class ErrorKind {
  kNonIncreasingAbscissae,
  kEnvelopeViolation,
  kConvexityViolation,
  kSlopeOutOfRange,
  kDomainError,
  kNoVertices,
  kAdmissibilityError,
  kNoConvergence,
  kNotComparable,
  kBisectionFailure,
  kInsufficientData,
  kInvariantViolation,
  kParseError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace evc

#endif  // EVCOPULA_ERRORS_HPP_
