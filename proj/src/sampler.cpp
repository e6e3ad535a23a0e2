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

#include "evcopula/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evcopula/detail/parallel.hpp"
#include "evcopula/errors.hpp"
#include "evcopula/measures.hpp"
#include "evcopula/random.hpp"

namespace evc {

double SolveConditional(const PiecewiseLinearPickands& a, double u, double w) {
  double lo = kBracketLow;
  double hi = kBracketHigh;
  if (CopulaPartial1(a, u, lo) >= w) return lo;
  if (CopulaPartial1(a, u, hi) < w) return hi;
  // Bisect to well below 1e-12, stopping early once the bracket is adjacent
  // doubles.
  constexpr double kWidth = 0x1.0p-60;
  for (int step = 0; step < kMaxBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= kWidth || mid <= lo || mid >= hi) return hi;
    if (CopulaPartial1(a, u, mid) >= w) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw Error(ErrorKind::kBisectionFailure,
              "conditional inverse did not converge");
}

std::vector<SamplePair> Sample(const PiecewiseLinearPickands& a, std::size_t n,
                               std::uint64_t seed, int workers) {
  if (n < 1) throw Error(ErrorKind::kDomainError, "sample size must be >= 1");
  std::vector<SamplePair> pairs(n);
  const std::size_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  detail::ParallelBlocks(
      chunks, workers, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
          Rng rng(DeriveSeed(seed, c));
          const std::size_t stop = std::min(n, (c + 1) * kSampleChunk);
          for (std::size_t i = c * kSampleChunk; i < stop; ++i) {
            const double u = rng.OpenUniform();
            const double w = rng.OpenUniform();
            pairs[i] = {u, SolveConditional(a, u, w)};
          }
        }
      });
  return pairs;
}

namespace {

void RequirePairs(std::span<const SamplePair> pairs) {
  if (pairs.size() < 2) {
    throw Error(ErrorKind::kInsufficientData, "need at least two pairs");
  }
}

// Counts inversions of values[begin, end) while merge-sorting it.
long long CountInversions(std::vector<double>& values,
                          std::vector<double>& scratch, std::size_t begin,
                          std::size_t end) {
  if (end - begin < 2) return 0;
  const std::size_t mid = begin + (end - begin) / 2;
  long long count = CountInversions(values, scratch, begin, mid) +
                    CountInversions(values, scratch, mid, end);
  std::size_t i = begin;
  std::size_t j = mid;
  std::size_t k = begin;
  while (i < mid && j < end) {
    if (values[j] < values[i]) {
      count += static_cast<long long>(mid - i);
      scratch[k++] = values[j++];
    } else {
      scratch[k++] = values[i++];
    }
  }
  while (i < mid) scratch[k++] = values[i++];
  while (j < end) scratch[k++] = values[j++];
  std::copy(scratch.begin() + static_cast<long>(begin),
            scratch.begin() + static_cast<long>(end),
            values.begin() + static_cast<long>(begin));
  return count;
}

std::vector<double> AverageRanks(std::vector<double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j + 1);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

}  // namespace

double EmpiricalTau(std::span<const SamplePair> pairs) {
  RequirePairs(pairs);
  std::vector<SamplePair> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const SamplePair& a, const SamplePair& b) { return a.u < b.u; });
  std::vector<double> v(sorted.size());
  std::transform(sorted.begin(), sorted.end(), v.begin(),
                 [](const SamplePair& p) { return p.v; });
  std::vector<double> scratch(v.size());
  const long long inversions = CountInversions(v, scratch, 0, v.size());
  const double n = static_cast<double>(pairs.size());
  const double total = n * (n - 1.0) / 2.0;
  return (total - 2.0 * static_cast<double>(inversions)) / total;
}

double EmpiricalRho(std::span<const SamplePair> pairs) {
  RequirePairs(pairs);
  std::vector<double> u(pairs.size());
  std::vector<double> v(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    u[i] = pairs[i].u;
    v[i] = pairs[i].v;
  }
  const std::vector<double> ru = AverageRanks(std::move(u));
  const std::vector<double> rv = AverageRanks(std::move(v));
  const double mean = 0.5 * static_cast<double>(pairs.size() + 1);
  long double suv = 0.0L, suu = 0.0L, svv = 0.0L;
  for (std::size_t i = 0; i < ru.size(); ++i) {
    const long double du = ru[i] - mean;
    const long double dv = rv[i] - mean;
    suv += du * dv;
    suu += du * du;
    svv += dv * dv;
  }
  if (suu == 0.0L || svv == 0.0L) {
    throw Error(ErrorKind::kInsufficientData, "constant ranks");
  }
  return static_cast<double>(suv / std::sqrt(suu * svv));
}

double BatchStandardError(
    std::span<const SamplePair> pairs,
    const std::function<double(std::span<const SamplePair>)>& estimator,
    int batches) {
  if (batches < 2 || pairs.size() < 2 * static_cast<std::size_t>(batches)) {
    throw Error(ErrorKind::kInsufficientData,
                "batch means need >= 2 batches of >= 2 pairs");
  }
  const std::size_t size = pairs.size() / static_cast<std::size_t>(batches);
  std::vector<double> estimates;
  estimates.reserve(static_cast<std::size_t>(batches));
  for (int b = 0; b < batches; ++b) {
    estimates.push_back(
        estimator(pairs.subspan(static_cast<std::size_t>(b) * size, size)));
  }
  const double mean =
      std::accumulate(estimates.begin(), estimates.end(), 0.0) / batches;
  double ss = 0.0;
  for (const double e : estimates) ss += (e - mean) * (e - mean);
  return std::sqrt(ss / (batches - 1)) / std::sqrt(static_cast<double>(batches));
}

double NullSigmaTau(std::size_t n) {
  const double m = static_cast<double>(n);
  return std::sqrt(2.0 * (2.0 * m + 5.0) / (9.0 * m * (m - 1.0)));
}

double NullSigmaRho(std::size_t n) {
  return 1.0 / std::sqrt(static_cast<double>(n) - 1.0);
}

double KolmogorovSmirnovUniform(std::vector<double> values) {
  if (values.empty()) {
    throw Error(ErrorKind::kInsufficientData, "empty sample");
  }
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = std::clamp(values[i], 0.0, 1.0);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - x,
                  x - static_cast<double>(i) / n});
  }
  return d;
}

double KolmogorovCritical(double alpha, std::size_t n) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) /
         std::sqrt(static_cast<double>(n));
}

}  // namespace evc
