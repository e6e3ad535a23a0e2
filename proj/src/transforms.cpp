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

#include "evcopula/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "evcopula/errors.hpp"
#include "evcopula/measures.hpp"

namespace evc {
namespace {

AdmissibleInterval MakeInterval(double x1, double y1, double next_slope,
                                double x) {
  AdmissibleInterval interval;
  interval.hi = 1.0 - (1.0 - y1) * x / x1;
  interval.lo = std::max(1.0 - x, y1 - (x1 - x) * next_slope);
  // Convexity guarantees lo <= hi; only rounding can invert them.
  interval.lo = std::min(interval.lo, interval.hi);
  return interval;
}

void CheckInsertionParameters(double x1, double y1, double x, double y) {
  if (!(x1 > 0.0 && x1 < 1.0)) {
    throw Error(ErrorKind::kDomainError, "x1 must lie in (0,1)");
  }
  if (!(y1 >= std::max(x1, 1.0 - x1) - kEnvelopeTolerance &&
        y1 <= 1.0 + kEnvelopeTolerance)) {
    throw Error(ErrorKind::kDomainError, "y1 outside the envelope at x1");
  }
  if (!(x > 0.0 && x < x1)) {
    throw Error(ErrorKind::kDomainError, "x must lie in (0, x1)");
  }
  if (!TriangularAdmissibleInterval(x1, y1, x).Contains(y)) {
    throw Error(ErrorKind::kDomainError,
                "y = " + std::to_string(y) + " is not an admissible height");
  }
}

}  // namespace

PiecewiseLinearPickands Triangular(double x1, double y1) {
  if (!(x1 > 0.0 && x1 < 1.0)) {
    throw Error(ErrorKind::kDomainError, "x1 must lie in (0,1)");
  }
  const Vertex vertex{x1, y1};
  return PiecewiseLinearPickands::Validate({&vertex, 1});
}

AdmissibleInterval ComputeAdmissibleInterval(const PiecewiseLinearPickands& a,
                                             double x) {
  if (a.empty()) {
    throw Error(ErrorKind::kNoVertices,
                "admissible interval needs a first vertex");
  }
  const Vertex first = a.vertices().front();
  if (!(x > 0.0 && x < first.x)) {
    throw Error(ErrorKind::kDomainError,
                "insertion abscissa must lie in (0, x1)");
  }
  return MakeInterval(first.x, first.y, a.slope(1), x);
}

AdmissibleInterval TriangularAdmissibleInterval(double x1, double y1,
                                                double x) {
  return MakeInterval(x1, y1, (1.0 - y1) / (1.0 - x1), x);
}

PiecewiseLinearPickands VertexInsert(const PiecewiseLinearPickands& a,
                                     double x, double y) {
  const AdmissibleInterval interval = ComputeAdmissibleInterval(a, x);
  if (!interval.Contains(y)) {
    throw Error(ErrorKind::kAdmissibilityError,
                "height " + std::to_string(y) + " outside [" +
                    std::to_string(interval.lo) + ", " +
                    std::to_string(interval.hi) + "]");
  }
  y = std::clamp(y, interval.lo, interval.hi);
  if (y == interval.hi) return a;
  std::vector<Vertex> vertices;
  vertices.reserve(a.vertex_count() + 1);
  vertices.push_back({x, y});
  vertices.insert(vertices.end(), a.vertices().begin(), a.vertices().end());
  return PiecewiseLinearPickands::Validate(vertices);
}

double DeltaTau(double x1, double y1, double x, double y) {
  CheckInsertionParameters(x1, y1, x, y);
  return (x1 - x + x * y1 - x1 * y) * (y1 - y - x * y1 + x1 * y) /
         ((x1 - x) * y * y1);
}

double DeltaRho(double x1, double y1, double x, double y) {
  CheckInsertionParameters(x1, y1, x, y);
  return 6.0 * (x1 * (1.0 - y) - x * (1.0 - y1)) / ((1.0 + y) * (1.0 + y1));
}

double CapitalDelta(const PiecewiseLinearPickands& a,
                    const PiecewiseLinearPickands& b) {
  const double tau_a = Tau(a);
  const double tau_b = Tau(b);
  return Rho(a) - Rho(b) - (SharpLowerBound(tau_a) - SharpLowerBound(tau_b));
}

double CapitalDeltaFromIncrements(double tau_before, double delta_tau,
                                  double delta_rho) {
  return delta_rho - 6.0 * delta_tau /
                         ((2.0 + tau_before) * (2.0 + tau_before + delta_tau));
}

Lemma2Terms ComputeLemma2Terms(double x1, double y1, double x, double y) {
  CheckInsertionParameters(x1, y1, x, y);
  Lemma2Terms t;
  t.n1 = x * (1.0 - y1) - x1 * (1.0 - y);
  t.n2 = t.n1 + y1 - y;
  t.n3 = y * (x1 + y1) + y1 * (1.0 - x);
  t.d1 = 1.0 + y;
  t.d2 = 1.0 + y1;
  t.d3 = x1 * y * (x1 - x + y * (1.0 - x1));
  t.d4 = y1 * (1.0 - x) * (x1 - x);
  t.d5 = 2.0 * x * y * y1 * (1.0 - x1);
  t.d6 = (1.0 - x) * x * y1 * y1;
  return t;
}

double TriangularEqualityHeight(double x1, double y1, double x) {
  return y1 - (x1 - x) * (1.0 - y1) / (1.0 - x1);
}

}  // namespace evc
