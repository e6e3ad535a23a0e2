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

// Piecewise-linear Pickands dependence functions.
//
// A Pickands dependence function is a convex A : [0,1] -> [1/2,1] with
// max(t, 1-t) <= A(t) <= 1. The piecewise-linear class is stored as the
// ordered list of interior vertices; the endpoints (0,1) and (1,1) are
// implicit. Every instance is validated at construction and immutable
// afterwards, so all accessors are safe to call concurrently.

#ifndef EVCOPULA_PICKANDS_HPP_
#define EVCOPULA_PICKANDS_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace evc {

// Absolute tolerance on slope differences and envelope checks.
inline constexpr double kSlopeTolerance = 1e-12;
inline constexpr double kEnvelopeTolerance = 1e-12;

struct Vertex {
  double x = 0.0;
  double y = 1.0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

class PiecewiseLinearPickands {
 public:
  // A == 1, the product copula.
  PiecewiseLinearPickands() : slopes_{0.0} {}

  // Checks the raw vertex list and returns the canonical function: vertices
  // sorted by abscissa, envelope round-off clamped, collinear interior
  // vertices removed. Throws evc::Error on invalid input.
  static PiecewiseLinearPickands Validate(std::span<const Vertex> raw);

  static PiecewiseLinearPickands Independence() { return {}; }
  // A_M(t) = max(t, 1-t), the comonotonic copula.
  static PiecewiseLinearPickands Comonotonic();

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  // Knot i for i in [0, vertex_count()+1], endpoints included.
  Vertex knot(std::size_t i) const;
  // Slope of segment i, i in [0, vertex_count()]; segment i joins knot i and
  // knot i+1.
  double slope(std::size_t segment) const { return slopes_[segment]; }
  std::size_t segment_count() const { return slopes_.size(); }

  // Index of the segment containing t; boundary points resolve to the right.
  std::size_t SegmentIndex(double t) const;

  double operator()(double t) const;

  friend bool operator==(const PiecewiseLinearPickands& a,
                         const PiecewiseLinearPickands& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  explicit PiecewiseLinearPickands(std::vector<Vertex> vertices);

  std::vector<Vertex> vertices_;
  std::vector<double> slopes_;
};

// A(t) for t in [0,1]; DomainError otherwise.
double Eval(const PiecewiseLinearPickands& a, double t);

// D+A(t) for t in [0,1). At a vertex abscissa returns the slope of the
// segment to the right.
double RightDerivative(const PiecewiseLinearPickands& a, double t);

// An arbitrary Pickands function given by a callable, together with a default
// interpolation resolution. Only used to produce piecewise-linear
// interpolants; everything downstream works on PiecewiseLinearPickands.
class DependenceEvaluator {
 public:
  DependenceEvaluator(std::string name, std::function<double(double)> fn,
                      int node_count = 1024);

  // Gumbel / logistic family: (t^theta + (1-t)^theta)^(1/theta), theta >= 1.
  static DependenceEvaluator Gumbel(double theta, int node_count = 1024);
  // 1 - lambda + lambda * max(t, 1-t), lambda in [0,1].
  static DependenceEvaluator Mixture(double lambda, int node_count = 1024);
  static DependenceEvaluator FromPiecewise(PiecewiseLinearPickands a,
                                           int node_count = 1024);

  double operator()(double t) const { return fn_(t); }
  const std::string& name() const { return name_; }
  int node_count() const { return node_count_; }

 private:
  std::string name_;
  std::function<double(double)> fn_;
  int node_count_;
};

// Chord interpolant of f at the uniform nodes i/n, i = 0..n. For a convex f
// the result dominates f pointwise. Throws ConvexityViolation (or another
// validation error) if the samples do not describe a Pickands function.
PiecewiseLinearPickands Interpolate(const DependenceEvaluator& f, int n);
PiecewiseLinearPickands Interpolate(const DependenceEvaluator& f);

// Pointwise maximum of two Pickands functions (again a Pickands function).
PiecewiseLinearPickands PointwiseMax(const PiecewiseLinearPickands& a,
                                     const PiecewiseLinearPickands& b);

// (1 - lambda) * a + lambda * b for lambda in [0,1].
PiecewiseLinearPickands ConvexCombination(const PiecewiseLinearPickands& a,
                                          const PiecewiseLinearPickands& b,
                                          double lambda);

// Contact points of A with the lower envelope legs:
// left = max{x : A(x) = 1-x}, right = min{x : A(x) = x}.
struct SupportGeometry {
  double left = 0.0;
  double right = 1.0;
};

SupportGeometry ComputeSupportGeometry(const PiecewiseLinearPickands& a);

// f_t(x) = x^(1/t - 1) for t in (0,1); f_0 = 0 and f_1 = 1. The support of
// the copula measure is {(x,y) : f_left(x) <= y <= f_right(x)}.
double SupportCurve(double t, double x);

bool InSupport(const SupportGeometry& geometry, double x, double y,
               double tolerance = 0.0);

}  // namespace evc

#endif  // EVCOPULA_PICKANDS_HPP_
