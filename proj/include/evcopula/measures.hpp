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

// Concordance measures, copula evaluation and the tau-rho bound curves for
// extreme-value copulas C_A(x,y) = (xy)^A(ln x / ln xy).

#ifndef EVCOPULA_MEASURES_HPP_
#define EVCOPULA_MEASURES_HPP_

#include <optional>

#include "evcopula/pickands.hpp"

namespace evc {

// Tolerance for the post-check rho >= 3 tau / (2 + tau).
inline constexpr double kViolationTolerance = 1e-9;

struct MeasurePair {
  double tau = 0.0;
  double rho = 0.0;
  // Interpolation node count; empty for the closed form on a
  // piecewise-linear function.
  std::optional<int> resolution;

  bool exact() const { return !resolution.has_value(); }
};

// Kendall's tau: sum over interior vertices of x(1-x)/y times the slope jump.
double Tau(const PiecewiseLinearPickands& a);

// Spearman's rho: 12 * sum over segments of dx / ((1+y_left)(1+y_right)) - 3.
double Rho(const PiecewiseLinearPickands& a);

// Closed-form pair; throws InvariantViolation if the result breaks
// rho >= 3 tau / (2 + tau) beyond kViolationTolerance.
MeasurePair ExactMeasures(const PiecewiseLinearPickands& a);

// Measures of a general Pickands function through interpolants at N = 64,
// 128, ... until consecutive values of both tau and rho differ by less than
// tolerance. Returns the finer pair. Throws NoConvergence once N would
// exceed kMaxResolution.
inline constexpr int kInitialResolution = 64;
inline constexpr int kMaxResolution = 1 << 20;
MeasurePair MeasuresGeneral(const DependenceEvaluator& f, double tolerance);

// C_A(x, y) on the closed unit square.
double CopulaCdf(const PiecewiseLinearPickands& a, double x, double y);

// dC_A/dx at an interior point, using the right derivative of A. As a
// function of y this is the conditional distribution of V given U = x.
double CopulaPartial1(const PiecewiseLinearPickands& a, double x, double y);

struct BoundCurves {
  double hl_lower = 0.0;     // -1 + sqrt(1 + 3 tau)
  double hl_upper = 0.0;     // min(3 tau / 2, 2 tau - tau^2)
  double sharp_lower = 0.0;  // 3 tau / (2 + tau)
};

double SharpLowerBound(double tau);
double HutchinsonLaiLower(double tau);
double HutchinsonLaiUpper(double tau);
BoundCurves ComputeBoundCurves(double tau);

// 3 tau / (2 + tau) - tau.
double GapFunction(double tau);

struct GapMaximum {
  double argmax = 0.0;
  double max = 0.0;
};

// Grid search over [0,1] followed by Brent refinement in the best cell.
GapMaximum MaximizeGap(int grid_points = 1'000'000);

}  // namespace evc

#endif  // EVCOPULA_MEASURES_HPP_
