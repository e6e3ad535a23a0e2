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

// Sampling from C_A by the conditional-distribution method and the empirical
// rank statistics used to cross-check the closed forms.

#ifndef EVCOPULA_SAMPLER_HPP_
#define EVCOPULA_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "evcopula/pickands.hpp"

namespace evc {

struct SamplePair {
  double u = 0.5;
  double v = 0.5;
};

inline constexpr double kBracketLow = 1e-15;
inline constexpr double kBracketHigh = 1.0 - 1e-15;
inline constexpr int kMaxBisectionSteps = 100;
// Pairs are generated in fixed-size chunks with per-chunk seeds, so output is
// the same for any worker count.
inline constexpr std::size_t kSampleChunk = 8192;

// Smallest v in the bracket with dC/du(u, v) >= w, by bisection. The
// conditional distribution has atoms wherever A has kinks, so no derivative
// information is used.
double SolveConditional(const PiecewiseLinearPickands& a, double u, double w);

std::vector<SamplePair> Sample(const PiecewiseLinearPickands& a, std::size_t n,
                               std::uint64_t seed, int workers = 1);

// (concordant - discordant) / C(n,2) via merge-sort inversion counting.
double EmpiricalTau(std::span<const SamplePair> pairs);

// Pearson correlation of ranks (average ranks on ties).
double EmpiricalRho(std::span<const SamplePair> pairs);

// Standard error of an estimator by non-overlapping batch means: the standard
// deviation of the per-batch estimates divided by sqrt(batches).
double BatchStandardError(
    std::span<const SamplePair> pairs,
    const std::function<double(std::span<const SamplePair>)>& estimator,
    int batches = 50);

// Null standard deviations of the two estimators under independence.
double NullSigmaTau(std::size_t n);
double NullSigmaRho(std::size_t n);

// One-sample Kolmogorov-Smirnov statistic against Uniform(0,1).
double KolmogorovSmirnovUniform(std::vector<double> values);
// Asymptotic critical value sqrt(-ln(alpha/2)/2)/sqrt(n).
double KolmogorovCritical(double alpha, std::size_t n);

}  // namespace evc

#endif  // EVCOPULA_SAMPLER_HPP_
