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

#include "evcopula/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "evcopula/detail/compensated_sum.hpp"
#include "evcopula/errors.hpp"

namespace evc {

double Tau(const PiecewiseLinearPickands& a) {
  detail::CompensatedSum sum;
  const auto vertices = a.vertices();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex& v = vertices[i];
    const double jump = a.slope(i + 1) - a.slope(i);
    sum.Add(v.x * (1.0 - v.x) / v.y * jump);
  }
  return sum.value();
}

double Rho(const PiecewiseLinearPickands& a) {
  detail::CompensatedSum sum;
  for (std::size_t i = 0; i < a.segment_count(); ++i) {
    const Vertex left = a.knot(i);
    const Vertex right = a.knot(i + 1);
    sum.Add((right.x - left.x) / ((1.0 + left.y) * (1.0 + right.y)));
  }
  // 12 * (1/4) - 3 == 0 for the single segment of A == 1; subtract the
  // compensated remainder so that case comes out exactly zero.
  sum.Add(-0.25);
  return 12.0 * sum.value();
}

namespace {

void CheckSharpBound(double tau, double rho) {
  if (tau < -kViolationTolerance) {
    throw Error(ErrorKind::kInvariantViolation,
                "negative tau = " + std::to_string(tau));
  }
  if (rho < SharpLowerBound(tau) - kViolationTolerance) {
    throw Error(ErrorKind::kInvariantViolation,
                "rho = " + std::to_string(rho) +
                    " below 3 tau / (2 + tau) for tau = " +
                    std::to_string(tau));
  }
}

}  // namespace

MeasurePair ExactMeasures(const PiecewiseLinearPickands& a) {
  MeasurePair pair{Tau(a), Rho(a), std::nullopt};
  CheckSharpBound(pair.tau, pair.rho);
  return pair;
}

MeasurePair MeasuresGeneral(const DependenceEvaluator& f, double tolerance) {
  if (!(tolerance > 0.0)) {
    throw Error(ErrorKind::kDomainError, "tolerance must be positive");
  }
  int n = kInitialResolution;
  PiecewiseLinearPickands coarse = Interpolate(f, n);
  double tau = Tau(coarse);
  double rho = Rho(coarse);
  while (2 * n <= kMaxResolution) {
    const PiecewiseLinearPickands fine = Interpolate(f, 2 * n);
    const double tau_fine = Tau(fine);
    const double rho_fine = Rho(fine);
    if (std::abs(tau_fine - tau) < tolerance &&
        std::abs(rho_fine - rho) < tolerance) {
      CheckSharpBound(tau_fine, rho_fine);
      return {tau_fine, rho_fine, 2 * n};
    }
    tau = tau_fine;
    rho = rho_fine;
    n *= 2;
  }
  throw Error(ErrorKind::kNoConvergence,
              "measures of '" + f.name() + "' did not settle below " +
                  std::to_string(tolerance) + " by N = " +
                  std::to_string(kMaxResolution));
}

double CopulaCdf(const PiecewiseLinearPickands& a, double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw Error(ErrorKind::kDomainError, "copula argument outside [0,1]^2");
  }
  if (x == 0.0 || y == 0.0) return 0.0;
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  const double log_x = std::log(x);
  const double log_sum = log_x + std::log(y);
  return std::exp(log_sum * a(log_x / log_sum));
}

double CopulaPartial1(const PiecewiseLinearPickands& a, double x, double y) {
  if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0)) {
    throw Error(ErrorKind::kDomainError,
                "partial derivative needs an interior point");
  }
  const double log_x = std::log(x);
  const double log_sum = log_x + std::log(y);
  const double t = log_x / log_sum;
  const double value = a(t);
  const double c = std::exp(log_sum * value);
  const double factor = value + (1.0 - t) * a.slope(a.SegmentIndex(t));
  return std::clamp(c / x * factor, 0.0, 1.0);
}

namespace {

void CheckTau(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw Error(ErrorKind::kDomainError, "tau outside [0,1]");
  }
}

}  // namespace

double SharpLowerBound(double tau) { return 3.0 * tau / (2.0 + tau); }

double HutchinsonLaiLower(double tau) {
  return -1.0 + std::sqrt(1.0 + 3.0 * tau);
}

double HutchinsonLaiUpper(double tau) {
  return std::min(1.5 * tau, 2.0 * tau - tau * tau);
}

BoundCurves ComputeBoundCurves(double tau) {
  CheckTau(tau);
  return {HutchinsonLaiLower(tau), HutchinsonLaiUpper(tau),
          SharpLowerBound(tau)};
}

double GapFunction(double tau) {
  CheckTau(tau);
  return SharpLowerBound(tau) - tau;
}

GapMaximum MaximizeGap(int grid_points) {
  if (grid_points < 3) {
    throw Error(ErrorKind::kDomainError, "gap grid needs at least 3 points");
  }
  const double step = 1.0 / (grid_points - 1);
  int best = 0;
  double best_value = GapFunction(0.0);
  for (int i = 1; i < grid_points; ++i) {
    const double value = GapFunction(std::min(1.0, i * step));
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  const double lo = std::max(0.0, (best - 1) * step);
  const double hi = std::min(1.0, (best + 1) * step);
  const auto [argmax, negated] = boost::math::tools::brent_find_minima(
      [](double t) { return -GapFunction(t); }, lo, hi, 52);
  if (-negated < best_value) return {best * step, best_value};
  return {argmax, -negated};
}

}  // namespace evc
