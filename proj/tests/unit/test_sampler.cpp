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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "evcopula/errors.hpp"
#include "evcopula/measures.hpp"
#include "evcopula/pickands.hpp"
#include "evcopula/random.hpp"
#include "evcopula/sampler.hpp"
#include "evcopula/transforms.hpp"
#include "evcopula/verification.hpp"

namespace evc {
namespace {

std::vector<double> Column(const std::vector<SamplePair>& pairs, bool first) {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const SamplePair& p : pairs) out.push_back(first ? p.u : p.v);
  return out;
}

TEST_CASE("independence sample") {
  const auto pairs = Sample(PiecewiseLinearPickands{}, 100'000, 1);
  double su = 0, sv = 0, suv = 0, suu = 0, svv = 0;
  for (const SamplePair& p : pairs) {
    CHECK(p.u > 0.0);
    CHECK(p.u < 1.0);
    CHECK(p.v > 0.0);
    CHECK(p.v < 1.0);
    su += p.u;
    sv += p.v;
    suv += p.u * p.v;
    suu += p.u * p.u;
    svv += p.v * p.v;
  }
  const double n = static_cast<double>(pairs.size());
  const double cov = suv / n - (su / n) * (sv / n);
  const double corr = cov / std::sqrt((suu / n - su * su / (n * n)) *
                                      (svv / n - sv * sv / (n * n)));
  CHECK(std::abs(corr) < 0.01);
  CHECK(std::abs(EmpiricalTau(pairs)) < 3.0 * NullSigmaTau(pairs.size()));
  CHECK(std::abs(EmpiricalRho(pairs)) < 3.0 * NullSigmaRho(pairs.size()));
}

TEST_CASE("comonotonic sample lies on the diagonal") {
  const auto pairs = Sample(PiecewiseLinearPickands::Comonotonic(), 20'000, 2);
  for (const SamplePair& p : pairs) CHECK(std::abs(p.v - p.u) < 1e-12);
  CHECK(EmpiricalTau(pairs) == 1.0);
  CHECK(EmpiricalRho(pairs) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("triangular sample matches the copula cdf and measures") {
  const auto t = Triangular(0.5, 0.75);
  const std::size_t n = 100'000;
  const auto pairs = Sample(t, n, 3, 4);
  const double alpha = 0.001;
  const double bound = 3.0 * std::sqrt(std::log(2.0 / alpha) / (2.0 * n));
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      const double x = i / 6.0;
      const double y = j / 6.0;
      std::size_t count = 0;
      for (const SamplePair& p : pairs) {
        if (p.u <= x && p.v <= y) ++count;
      }
      CHECK(std::abs(static_cast<double>(count) / n - CopulaCdf(t, x, y)) <
            bound);
    }
  }
  const double crit = KolmogorovCritical(alpha, n);
  CHECK(KolmogorovSmirnovUniform(Column(pairs, true)) < crit);
  CHECK(KolmogorovSmirnovUniform(Column(pairs, false)) < crit);
  const double se_tau = BatchStandardError(pairs, EmpiricalTau);
  const double se_rho = BatchStandardError(pairs, EmpiricalRho);
  CHECK(std::abs(EmpiricalTau(pairs) - 1.0 / 3.0) < 3.0 * se_tau);
  CHECK(std::abs(EmpiricalRho(pairs) - 3.0 / 7.0) < 3.0 * se_rho);
}

TEST_CASE("samples stay between the support curves") {
  const auto a = PiecewiseLinearPickands::Validate(
      std::vector<Vertex>{{0.2, 0.8}, {0.5, 0.6}, {0.7, 0.7}});
  const SupportGeometry g = ComputeSupportGeometry(a);
  REQUIRE(g.left > 0.0);
  REQUIRE(g.right < 1.0);
  for (const SamplePair& p : Sample(a, 20'000, 4)) {
    CHECK(InSupport(g, p.u, p.v, 1e-9));
  }
}

TEST_CASE("conditional inverse") {
  const PiecewiseLinearPickands pi;
  CHECK(SolveConditional(pi, 0.4, 0.3) == doctest::Approx(0.3).epsilon(1e-12));
  const auto a = RandomPickands(5, 17);
  Rng rng(6);
  for (int k = 0; k < 500; ++k) {
    const double u = rng.OpenUniform();
    const double w = rng.OpenUniform();
    const double v = SolveConditional(a, u, w);
    if (v > kBracketLow && v < kBracketHigh) {
      CHECK(CopulaPartial1(a, u, v) >= w);
      CHECK(CopulaPartial1(a, u, std::max(kBracketLow, v - 1e-12)) <=
            w + 1e-12);
    }
  }
}

TEST_CASE("estimators agree with brute force") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto pairs = Sample(RandomPickands(4, seed), 1500, seed);
    CHECK(EmpiricalTau(pairs) ==
          doctest::Approx(oracle::BruteForceKendall(pairs)).epsilon(1e-12));
    CHECK(EmpiricalRho(pairs) ==
          doctest::Approx(oracle::BruteForceSpearman(pairs)).epsilon(1e-12));
  }
  const std::vector<SamplePair> reversed{{0.1, 0.9}, {0.5, 0.5}, {0.9, 0.1}};
  CHECK(EmpiricalTau(reversed) == -1.0);
  CHECK(EmpiricalRho(reversed) == doctest::Approx(-1.0));
}

TEST_CASE("estimators need two pairs") {
  const std::vector<SamplePair> one{{0.2, 0.3}};
  CHECK_THROWS_AS(EmpiricalTau(one), Error);
  CHECK_THROWS_AS(EmpiricalRho(one), Error);
  try {
    EmpiricalTau(one);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInsufficientData);
  }
}

TEST_CASE("sampling is deterministic and independent of worker count") {
  const auto a = RandomPickands(4, 99);
  const auto one = Sample(a, 30'000, 12, 1);
  const auto many = Sample(a, 30'000, 12, 7);
  const auto again = Sample(a, 30'000, 12, 1);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].u == many[i].u);
    CHECK(one[i].v == many[i].v);
    CHECK(one[i].v == again[i].v);
  }
  const auto other = Sample(a, 10, 13, 1);
  CHECK(other[0].u != one[0].u);
}

TEST_CASE("null sigmas and the Kolmogorov critical value") {
  CHECK(NullSigmaTau(100) ==
        doctest::Approx(std::sqrt(2.0 * 205.0 / (9.0 * 100.0 * 99.0))));
  CHECK(NullSigmaRho(101) == doctest::Approx(0.1));
  CHECK(KolmogorovCritical(0.05, 10'000) ==
        doctest::Approx(1.358 / 100.0).epsilon(1e-3));
  CHECK(KolmogorovSmirnovUniform({0.5}) == doctest::Approx(0.5));
}

}  // namespace
}  // namespace evc
