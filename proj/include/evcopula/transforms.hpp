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

// Triangular Pickands functions and the leading-vertex insertion map.
//
// Given A with first vertex (x1, y1) and a point x in (0, x1), inserting a
// vertex (x, y) replaces the leading segment of A by the two segments
// (0,1)-(x,y)-(x1,y1). The heights y for which the result is still a Pickands
// function form the admissible interval. The changes in tau and rho under the
// insertion depend on A only through (x1, y1), so they are exposed as plain
// functions of the four parameters.

#ifndef EVCOPULA_TRANSFORMS_HPP_
#define EVCOPULA_TRANSFORMS_HPP_

#include "evcopula/pickands.hpp"

namespace evc {

// Slack for admissible-interval membership.
inline constexpr double kAdmissibleTolerance = 1e-12;

// Single-vertex function through (x1, y1); the product copula when y1 == 1.
PiecewiseLinearPickands Triangular(double x1, double y1);

struct AdmissibleInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool Contains(double y, double tolerance = kAdmissibleTolerance) const {
    return y >= lo - tolerance && y <= hi + tolerance;
  }
  double width() const { return hi - lo; }
};

// Heights y such that (x, y) can be prepended to A:
//   lo = max(1 - x, y1 - (x1 - x) * (y2 - y1) / (x2 - x1))
//   hi = 1 - (1 - y1) * x / x1
// where (x2, y2) is the knot after the first vertex. hi is the no-op height.
// Throws NoVertices when A has no vertex and DomainError unless 0 < x < x1.
AdmissibleInterval ComputeAdmissibleInterval(const PiecewiseLinearPickands& a,
                                             double x);

// Same interval for the triangular function through (x1, y1); it contains
// the interval of every A whose first vertex is (x1, y1).
AdmissibleInterval TriangularAdmissibleInterval(double x1, double y1,
                                                double x);

// The insertion map. Returns A itself when y is the interval's upper end.
// Throws AdmissibilityError if y is not admissible.
PiecewiseLinearPickands VertexInsert(const PiecewiseLinearPickands& a,
                                     double x, double y);

// Exact changes of tau and rho under the insertion of (x, y) in front of a
// first vertex (x1, y1). Throw DomainError unless y lies in the triangular
// admissible interval.
double DeltaTau(double x1, double y1, double x, double y);
double DeltaRho(double x1, double y1, double x, double y);

// rho(a) - rho(b) - (3 tau(a) / (2 + tau(a)) - 3 tau(b) / (2 + tau(b))).
double CapitalDelta(const PiecewiseLinearPickands& a,
                    const PiecewiseLinearPickands& b);

// Delta(phi(A), A) from the parameter route: delta_rho minus the change of
// 3 tau / (2 + tau), given tau(A).
double CapitalDeltaFromIncrements(double tau_before, double delta_tau,
                                  double delta_rho);

// Polynomial factors of Delta(phi(T), T) for a triangular T:
//   Delta = 6 N1 N2 N3 / (D1 D2 (D3 + D4 - D5 + D6)).
struct Lemma2Terms {
  double n1 = 0.0;
  double n2 = 0.0;
  double n3 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;
  double d5 = 0.0;
  double d6 = 0.0;

  double denominator_sum() const { return d3 + d4 - d5 + d6; }
  double Quotient() const {
    return 6.0 * n1 * n2 * n3 / (d1 * d2 * denominator_sum());
  }
};

Lemma2Terms ComputeLemma2Terms(double x1, double y1, double x, double y);

// Height at which the inserted vertex lies on the line through the segment
// after (x1, y1) of the triangular function, so the result is triangular
// again: y1 - (x1 - x)(1 - y1)/(1 - x1). Not necessarily admissible.
double TriangularEqualityHeight(double x1, double y1, double x);

}  // namespace evc

#endif  // EVCOPULA_TRANSFORMS_HPP_
