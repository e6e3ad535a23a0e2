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

#include "evcopula/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "evcopula/detail/parallel.hpp"
#include "evcopula/errors.hpp"
#include "evcopula/measures.hpp"
#include "evcopula/transforms.hpp"

namespace evc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double Cross(const Vertex& o, const Vertex& a, const Vertex& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

PiecewiseLinearPickands RandomPickands(int n_vertices, Rng& rng) {
  if (n_vertices < 0) {
    throw Error(ErrorKind::kDomainError, "vertex count must be >= 0");
  }
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(n_vertices));
  for (int i = 0; i < n_vertices; ++i) {
    const double x = rng.OpenUniform();
    points.push_back({x, rng.Uniform(std::max(x, 1.0 - x), 1.0)});
  }
  std::sort(points.begin(), points.end(),
            [](const Vertex& a, const Vertex& b) { return a.x < b.x; });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Vertex& a, const Vertex& b) {
                             return a.x == b.x;
                           }),
               points.end());
  points.push_back({1.0, 1.0});

  // Lower convex hull, left to right, starting from (0,1).
  std::vector<Vertex> hull{{0.0, 1.0}};
  for (const Vertex& p : points) {
    while (hull.size() >= 2 &&
           Cross(hull[hull.size() - 2], hull.back(), p) <= 0.0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  const std::vector<Vertex> interior(hull.begin() + 1, hull.end() - 1);
  return PointwiseMax(PiecewiseLinearPickands::Validate(interior),
                      PiecewiseLinearPickands::Comonotonic());
}

PiecewiseLinearPickands RandomPickands(int n_vertices, std::uint64_t seed) {
  Rng rng(seed);
  return RandomPickands(n_vertices, rng);
}

bool RegionSample::violation() const {
  return slack_sharp < -kViolationTolerance || slack_hl < -kViolationTolerance;
}

RegionSample CheckSharpInequality(const PiecewiseLinearPickands& a,
                                  std::string source) {
  RegionSample s{a, std::move(source)};
  s.tau = Tau(a);
  s.rho = Rho(a);
  s.slack_sharp = s.rho - SharpLowerBound(s.tau);
  s.slack_hl = s.rho - HutchinsonLaiLower(s.tau);
  return s;
}

Dominance ComparePointwise(const PiecewiseLinearPickands& a,
                           const PiecewiseLinearPickands& b) {
  bool a_above = false;
  bool b_above = false;
  auto visit = [&](double x) {
    const double va = a(x);
    const double vb = b(x);
    if (va > vb) a_above = true;
    if (vb > va) b_above = true;
  };
  for (const Vertex& v : a.vertices()) visit(v.x);
  for (const Vertex& v : b.vertices()) visit(v.x);
  if (a_above && b_above) {
    throw Error(ErrorKind::kNotComparable,
                "functions cross; neither dominates pointwise");
  }
  if (a_above) return Dominance::kFirstDominates;
  if (b_above) return Dominance::kSecondDominates;
  return Dominance::kEqual;
}

OrderingReport CheckOrdering(const PiecewiseLinearPickands& a,
                             const PiecewiseLinearPickands& b) {
  OrderingReport report;
  report.relation = ComparePointwise(a, b);
  report.tau_first = Tau(a);
  report.tau_second = Tau(b);
  switch (report.relation) {
    case Dominance::kFirstDominates:
      report.consistent = report.tau_first < report.tau_second;
      break;
    case Dominance::kSecondDominates:
      report.consistent = report.tau_second < report.tau_first;
      break;
    case Dominance::kEqual:
      report.consistent = true;
      break;
  }
  return report;
}

void CheckTally::Record(double margin) {
  ++checked;
  const bool ok = strict ? margin > 0.0 : margin >= -tolerance;
  if (!ok) ++violations;
  if (checked == 1 || margin < worst_margin) worst_margin = margin;
}

void CheckTally::Merge(const CheckTally& other) {
  if (other.checked == 0) return;
  worst_margin = checked == 0 ? other.worst_margin
                              : std::min(worst_margin, other.worst_margin);
  checked += other.checked;
  violations += other.violations;
}

bool LemmaReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckTally& c) { return c.passed(); });
}

const CheckTally& LemmaReport::Find(const std::string& name) const {
  for (const CheckTally& c : checks) {
    if (c.name == name) return c;
  }
  throw Error(ErrorKind::kDomainError, "no check named " + name);
}

namespace {

// Indices into the tally vector; order fixes the report layout.
enum Check : std::size_t {
  kDeltaTauIdentity,
  kDeltaRhoIdentity,
  kLemma1,
  kLemma1Strict,
  kLemma2,
  kLemma2Strict,
  kLemma2Equality,
  kFactorization,
  kParameterRoute,
  kN3Positive,
  kDenominatorPositive,
  kCheckCount,
};

std::vector<CheckTally> EmptyTallies() {
  std::vector<CheckTally> t(kCheckCount);
  t[kDeltaTauIdentity] = {"delta_tau_identity", kExactnessTolerance};
  t[kDeltaRhoIdentity] = {"delta_rho_identity", kExactnessTolerance};
  t[kLemma1] = {"lemma1_inequality", kLemmaTolerance};
  t[kLemma1Strict] = {"lemma1_strict", 0.0, true};
  t[kLemma2] = {"lemma2_inequality", kLemmaTolerance};
  t[kLemma2Strict] = {"lemma2_strict", 0.0, true};
  t[kLemma2Equality] = {"lemma2_equality", kExactnessTolerance};
  t[kFactorization] = {"lemma2_factorization", kLemmaTolerance};
  t[kParameterRoute] = {"delta_parameter_route", kLemmaTolerance};
  t[kN3Positive] = {"n3_positive", 0.0, true};
  t[kDenominatorPositive] = {"denominator_positive", 0.0, true};
  return t;
}

// Noise floor below which a strict sign cannot be resolved in double.
constexpr double kResolvableGap = 1e-12;

void TriangularChecks(double x1, double y1, double x, double y,
                      std::vector<CheckTally>& t) {
  const PiecewiseLinearPickands triangle = Triangular(x1, y1);
  const PiecewiseLinearPickands inserted = VertexInsert(triangle, x, y);
  const double delta = CapitalDelta(inserted, triangle);
  t[kLemma2].Record(delta);

  const Lemma2Terms terms = ComputeLemma2Terms(x1, y1, x, y);
  t[kN3Positive].Record(terms.n3);
  t[kDenominatorPositive].Record(terms.denominator_sum());
  const double quotient = terms.Quotient();
  t[kFactorization].Record(-std::abs(quotient - delta));
  const double from_increments = CapitalDeltaFromIncrements(
      Tau(triangle), DeltaTau(x1, y1, x, y), DeltaRho(x1, y1, x, y));
  t[kParameterRoute].Record(-std::abs(from_increments - delta));
  if (inserted.vertex_count() == 2 && quotient > kResolvableGap) {
    t[kLemma2Strict].Record(delta);
  }

  // Equality cases: the inserted vertex on the line of the next segment
  // (result triangular again) and the no-op height.
  const AdmissibleInterval interval = TriangularAdmissibleInterval(x1, y1, x);
  const double y_eq = TriangularEqualityHeight(x1, y1, x);
  if (y_eq >= interval.lo && y_eq <= interval.hi) {
    const PiecewiseLinearPickands flat = VertexInsert(triangle, x, y_eq);
    t[kLemma2Equality].Record(flat.vertex_count() <= 1
                                  ? -std::abs(CapitalDelta(flat, triangle))
                                  : -kInf);
  }
  const PiecewiseLinearPickands noop = VertexInsert(triangle, x, interval.hi);
  t[kLemma2Equality].Record(
      noop == triangle ? -std::abs(CapitalDelta(noop, triangle)) : -kInf);
}

void RunLemmaTrial(std::uint64_t trial_seed, std::vector<CheckTally>& t) {
  Rng rng(trial_seed);
  PiecewiseLinearPickands a;
  while (a.empty()) a = RandomPickands(1 + static_cast<int>(rng.Below(16)), rng);

  const Vertex first = a.vertices().front();
  const double x = first.x * rng.OpenUniform();
  const AdmissibleInterval interval = ComputeAdmissibleInterval(a, x);
  const double y = rng.Uniform(interval.lo, interval.hi);
  const PiecewiseLinearPickands triangle = Triangular(first.x, first.y);

  const PiecewiseLinearPickands inserted = VertexInsert(a, x, y);
  const PiecewiseLinearPickands inserted_triangle = VertexInsert(triangle, x, y);
  const double d_tau = DeltaTau(first.x, first.y, x, y);
  const double d_rho = DeltaRho(first.x, first.y, x, y);
  const double tau_a = Tau(a);
  t[kDeltaTauIdentity].Record(-std::abs(Tau(inserted) - tau_a - d_tau));
  t[kDeltaRhoIdentity].Record(-std::abs(Rho(inserted) - Rho(a) - d_rho));

  const double gap =
      CapitalDelta(inserted, a) - CapitalDelta(inserted_triangle, triangle);
  t[kLemma1].Record(gap);
  const double predicted_gap =
      CapitalDeltaFromIncrements(tau_a, d_tau, d_rho) -
      CapitalDeltaFromIncrements(Tau(triangle), d_tau, d_rho);
  if (first.y < 1.0 && y < interval.hi && !(a == triangle) &&
      predicted_gap > kResolvableGap) {
    t[kLemma1Strict].Record(gap);
  }

  TriangularChecks(first.x, first.y, x, y, t);

  // Independent triangular tuple covering the whole parameter range.
  const double x1 = rng.OpenUniform();
  const double y1 = rng.Uniform(std::max(x1, 1.0 - x1), 1.0);
  if (y1 < 1.0) {
    const double xt = x1 * rng.OpenUniform();
    const AdmissibleInterval it = TriangularAdmissibleInterval(x1, y1, xt);
    TriangularChecks(x1, y1, xt, rng.Uniform(it.lo, it.hi), t);
  }
}

}  // namespace

LemmaReport LemmaSuite(int trials, std::uint64_t seed, int workers) {
  if (trials < 1) {
    throw Error(ErrorKind::kDomainError, "lemma suite needs trials >= 1");
  }
  std::vector<std::vector<CheckTally>> partial(
      static_cast<std::size_t>(std::max(workers, 1)), EmptyTallies());
  detail::ParallelBlocks(
      static_cast<std::size_t>(trials), workers,
      [&](std::size_t worker, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          RunLemmaTrial(DeriveSeed(seed, i), partial[worker]);
        }
      });
  LemmaReport report{trials, seed, EmptyTallies()};
  for (const auto& tallies : partial) {
    for (std::size_t c = 0; c < kCheckCount; ++c) {
      report.checks[c].Merge(tallies[c]);
    }
  }
  return report;
}

namespace {

struct Structured {
  PiecewiseLinearPickands function;
  std::string source;
};

std::vector<Structured> StructuredFamilies() {
  std::vector<Structured> out;
  out.push_back({PiecewiseLinearPickands::Independence(), "independence"});
  out.push_back({PiecewiseLinearPickands::Comonotonic(), "comonotonic"});
  for (int k = 0; k <= 10; ++k) {
    out.push_back({Triangular(0.5, 0.5 + 0.05 * k), "triangular"});
  }
  for (const double x1 : {0.2, 0.35, 0.65, 0.8}) {
    const double floor = std::max(x1, 1.0 - x1);
    for (int k = 0; k <= 10; ++k) {
      out.push_back(
          {Triangular(x1, floor + (1.0 - floor) * k / 10.0), "triangular"});
    }
  }
  for (const double theta : {1.25, 1.5, 2.0, 3.0, 5.0}) {
    out.push_back(
        {Interpolate(DependenceEvaluator::Gumbel(theta), 256), "gumbel"});
  }
  for (const double lambda : {0.25, 0.5, 0.75}) {
    out.push_back(
        {Interpolate(DependenceEvaluator::Mixture(lambda), 256), "mixture"});
  }
  return out;
}

RegionSample RandomRegionSample(std::uint64_t sample_seed, int max_vertices) {
  Rng rng(sample_seed);
  const std::uint64_t kind = rng.Below(8);
  if (kind == 0) {
    const double theta = 1.0 + 9.0 * rng.Uniform();
    return CheckSharpInequality(
        Interpolate(DependenceEvaluator::Gumbel(theta), 256), "gumbel");
  }
  if (kind == 1) {
    return CheckSharpInequality(
        Interpolate(DependenceEvaluator::Mixture(rng.Uniform()), 256),
        "mixture");
  }
  const int n = static_cast<int>(
      rng.Below(static_cast<std::uint64_t>(max_vertices) + 1));
  return CheckSharpInequality(RandomPickands(n, rng), "random");
}

}  // namespace

std::vector<RegionSample> RegionScan(int count, int max_vertices,
                                     std::uint64_t seed, int workers) {
  if (count < 1) {
    throw Error(ErrorKind::kDomainError, "region scan needs count >= 1");
  }
  if (max_vertices < 0) {
    throw Error(ErrorKind::kDomainError, "max_vertices must be >= 0");
  }
  const std::vector<Structured> structured = StructuredFamilies();
  std::vector<RegionSample> samples(static_cast<std::size_t>(count));
  detail::ParallelBlocks(
      samples.size(), workers,
      [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          samples[i] =
              i < structured.size()
                  ? CheckSharpInequality(structured[i].function,
                                         structured[i].source)
                  : RandomRegionSample(DeriveSeed(seed, i), max_vertices);
        }
      });
  return samples;
}

}  // namespace evc
