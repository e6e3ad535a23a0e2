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

#include "evcopula/pickands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "evcopula/errors.hpp"

namespace evc {
namespace {

std::string Describe(const Vertex& v) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << v.x << ", " << v.y << ")";
  return os.str();
}

double ChordSlope(const Vertex& a, const Vertex& b) {
  return (b.y - a.y) / (b.x - a.x);
}

// Kink tolerance at a knot: the absolute slope tolerance or the rounding
// noise of the adjacent chord slopes, whichever is larger.
double KinkTolerance(double left_dx, double right_dx) {
  constexpr double kNoise = 8.0 * std::numeric_limits<double>::epsilon();
  return std::max(kSlopeTolerance, kNoise / std::min(left_dx, right_dx));
}

constexpr Vertex kLeftEnd{0.0, 1.0};
constexpr Vertex kRightEnd{1.0, 1.0};

}  // namespace

PiecewiseLinearPickands::PiecewiseLinearPickands(std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)) {
  slopes_.reserve(vertices_.size() + 1);
  for (std::size_t i = 0; i + 1 < vertices_.size() + 2; ++i) {
    slopes_.push_back(ChordSlope(knot(i), knot(i + 1)));
  }
}

PiecewiseLinearPickands PiecewiseLinearPickands::Validate(
    std::span<const Vertex> raw) {
  std::vector<Vertex> points(raw.begin(), raw.end());
  for (const Vertex& v : points) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw Error(ErrorKind::kDomainError,
                  "non-finite vertex " + Describe(v));
    }
    if (v.x <= 0.0 || v.x >= 1.0) {
      throw Error(ErrorKind::kDomainError,
                  "abscissa outside (0,1) at " + Describe(v));
    }
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const Vertex& a, const Vertex& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x)) {
      throw Error(ErrorKind::kNonIncreasingAbscissae,
                  "repeated abscissa at " + Describe(points[i]));
    }
  }
  for (Vertex& v : points) {
    const double floor = std::max(v.x, 1.0 - v.x);
    if (v.y < floor - kEnvelopeTolerance || v.y > 1.0 + kEnvelopeTolerance) {
      throw Error(ErrorKind::kEnvelopeViolation,
                  "vertex " + Describe(v) + " outside max(x,1-x) <= y <= 1");
    }
    v.y = std::clamp(v.y, floor, 1.0);
  }

  std::vector<Vertex> knots;
  knots.reserve(points.size() + 2);
  knots.push_back(kLeftEnd);
  knots.insert(knots.end(), points.begin(), points.end());
  knots.push_back(kRightEnd);

  std::vector<double> slopes(knots.size() - 1);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    slopes[i] = ChordSlope(knots[i], knots[i + 1]);
    if (std::abs(slopes[i]) > 1.0 + kSlopeTolerance) {
      throw Error(ErrorKind::kSlopeOutOfRange,
                  "segment from " + Describe(knots[i]) + " to " +
                      Describe(knots[i + 1]) + " has |slope| > 1");
    }
  }
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    const double tolerance = KinkTolerance(knots[i].x - knots[i - 1].x,
                                           knots[i + 1].x - knots[i].x);
    if (slopes[i] - slopes[i - 1] < -tolerance) {
      throw Error(ErrorKind::kConvexityViolation,
                  "slope decreases at " + Describe(knots[i]));
    }
  }

  // Drop interior knots whose two adjacent chords are collinear.
  std::vector<Vertex> kept{kLeftEnd};
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const Vertex& next = knots[i];
    while (kept.size() >= 2) {
      const Vertex& mid = kept[kept.size() - 1];
      const Vertex& prev = kept[kept.size() - 2];
      const double kink = ChordSlope(mid, next) - ChordSlope(prev, mid);
      if (std::abs(kink) > KinkTolerance(mid.x - prev.x, next.x - mid.x)) {
        break;
      }
      kept.pop_back();
    }
    kept.push_back(next);
  }
  return PiecewiseLinearPickands(
      std::vector<Vertex>(kept.begin() + 1, kept.end() - 1));
}

PiecewiseLinearPickands PiecewiseLinearPickands::Comonotonic() {
  return PiecewiseLinearPickands(std::vector<Vertex>{{0.5, 0.5}});
}

Vertex PiecewiseLinearPickands::knot(std::size_t i) const {
  if (i == 0) return kLeftEnd;
  if (i == vertices_.size() + 1) return kRightEnd;
  return vertices_[i - 1];
}

std::size_t PiecewiseLinearPickands::SegmentIndex(double t) const {
  const auto it = std::upper_bound(
      vertices_.begin(), vertices_.end(), t,
      [](double value, const Vertex& v) { return value < v.x; });
  return static_cast<std::size_t>(it - vertices_.begin());
}

double PiecewiseLinearPickands::operator()(double t) const {
  if (t >= 1.0) return 1.0;
  const std::size_t segment = SegmentIndex(t);
  const Vertex left = knot(segment);
  if (t == left.x) return left.y;
  const Vertex right = knot(segment + 1);
  return left.y + (t - left.x) * (right.y - left.y) / (right.x - left.x);
}

double Eval(const PiecewiseLinearPickands& a, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorKind::kDomainError, "evaluation point outside [0,1]");
  }
  return a(t);
}

double RightDerivative(const PiecewiseLinearPickands& a, double t) {
  if (!(t >= 0.0 && t < 1.0)) {
    throw Error(ErrorKind::kDomainError,
                "right derivative requested outside [0,1)");
  }
  return a.slope(a.SegmentIndex(t));
}

DependenceEvaluator::DependenceEvaluator(std::string name,
                                         std::function<double(double)> fn,
                                         int node_count)
    : name_(std::move(name)), fn_(std::move(fn)), node_count_(node_count) {
  if (node_count_ < 1) {
    throw Error(ErrorKind::kDomainError, "node count must be positive");
  }
}

DependenceEvaluator DependenceEvaluator::Gumbel(double theta, int node_count) {
  if (!(theta >= 1.0) || !std::isfinite(theta)) {
    throw Error(ErrorKind::kDomainError, "Gumbel parameter must be >= 1");
  }
  return DependenceEvaluator(
      "gumbel",
      [theta](double t) {
        if (t <= 0.0 || t >= 1.0) return 1.0;
        // Factor out the larger term so large theta does not underflow.
        const double hi = std::max(t, 1.0 - t);
        const double lo = std::min(t, 1.0 - t);
        return hi * std::pow(1.0 + std::pow(lo / hi, theta), 1.0 / theta);
      },
      node_count);
}

DependenceEvaluator DependenceEvaluator::Mixture(double lambda,
                                                 int node_count) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorKind::kDomainError, "mixture weight must be in [0,1]");
  }
  return DependenceEvaluator(
      "mixture",
      [lambda](double t) {
        return 1.0 - lambda + lambda * std::max(t, 1.0 - t);
      },
      node_count);
}

DependenceEvaluator DependenceEvaluator::FromPiecewise(
    PiecewiseLinearPickands a, int node_count) {
  return DependenceEvaluator(
      "piecewise", [a = std::move(a)](double t) { return a(t); }, node_count);
}

PiecewiseLinearPickands Interpolate(const DependenceEvaluator& f, int n) {
  if (n < 1) {
    throw Error(ErrorKind::kDomainError, "interpolation needs n >= 1");
  }
  std::vector<Vertex> nodes;
  nodes.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    const double t = static_cast<double>(i) / n;
    nodes.push_back({t, f(t)});
  }
  return PiecewiseLinearPickands::Validate(nodes);
}

PiecewiseLinearPickands Interpolate(const DependenceEvaluator& f) {
  return Interpolate(f, f.node_count());
}

namespace {

std::vector<double> MergedBreakpoints(const PiecewiseLinearPickands& a,
                                      const PiecewiseLinearPickands& b) {
  std::vector<double> xs{0.0, 1.0};
  for (const Vertex& v : a.vertices()) xs.push_back(v.x);
  for (const Vertex& v : b.vertices()) xs.push_back(v.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

PiecewiseLinearPickands PointwiseMax(const PiecewiseLinearPickands& a,
                                     const PiecewiseLinearPickands& b) {
  const std::vector<double> xs = MergedBreakpoints(a, b);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double lo = xs[i];
    const double hi = xs[i + 1];
    if (i > 0) out.push_back({lo, std::max(a(lo), b(lo))});
    // Both functions are linear on [lo, hi]; they cross at most once.
    const double d_lo = a(lo) - b(lo);
    const double d_hi = a(hi) - b(hi);
    if ((d_lo < 0.0 && d_hi > 0.0) || (d_lo > 0.0 && d_hi < 0.0)) {
      const double t = lo + (hi - lo) * d_lo / (d_lo - d_hi);
      if (t > lo && t < hi) out.push_back({t, std::max(a(t), b(t))});
    }
  }
  return PiecewiseLinearPickands::Validate(out);
}

PiecewiseLinearPickands ConvexCombination(const PiecewiseLinearPickands& a,
                                          const PiecewiseLinearPickands& b,
                                          double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorKind::kDomainError, "combination weight outside [0,1]");
  }
  const std::vector<double> xs = MergedBreakpoints(a, b);
  std::vector<Vertex> out;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    out.push_back({xs[i], (1.0 - lambda) * a(xs[i]) + lambda * b(xs[i])});
  }
  return PiecewiseLinearPickands::Validate(out);
}

SupportGeometry ComputeSupportGeometry(const PiecewiseLinearPickands& a) {
  SupportGeometry g;
  if (a.empty()) return g;
  if (a.slope(0) <= -1.0 + kSlopeTolerance) g.left = a.vertices().front().x;
  if (a.slope(a.segment_count() - 1) >= 1.0 - kSlopeTolerance) {
    g.right = a.vertices().back().x;
  }
  return g;
}

double SupportCurve(double t, double x) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return std::pow(x, 1.0 / t - 1.0);
}

bool InSupport(const SupportGeometry& geometry, double x, double y,
               double tolerance) {
  return SupportCurve(geometry.left, x) - tolerance <= y &&
         y <= SupportCurve(geometry.right, x) + tolerance;
}

}  // namespace evc
