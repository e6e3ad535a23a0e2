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
#include <string>
#include <vector>

#include "doctest.h"

#include "evcopula/errors.hpp"
#include "evcopula/measures.hpp"
#include "evcopula/pickands.hpp"
#include "evcopula/random.hpp"
#include "evcopula/transforms.hpp"
#include "evcopula/verification.hpp"

namespace evc {
namespace {

TEST_CASE("random functions are valid and deterministic") {
  CHECK(RandomPickands(0, 1).empty());
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const int n = static_cast<int>(seed % 17);
    const auto a = RandomPickands(n, seed);
    const auto again = PiecewiseLinearPickands::Validate(a.vertices());
    CHECK(again == a);
    CHECK(static_cast<int>(a.vertex_count()) <= n + 3);
    CHECK(RandomPickands(n, seed) == a);
  }
  CHECK_FALSE(RandomPickands(8, 1) == RandomPickands(8, 2));
}

TEST_CASE("sharp inequality checks") {
  const RegionSample pi = CheckSharpInequality(PiecewiseLinearPickands{});
  CHECK(std::abs(pi.slack_sharp) < 1e-15);
  CHECK(std::abs(pi.slack_hl) < 1e-15);
  CHECK_FALSE(pi.violation());
  for (double x1 : {0.2, 0.5, 0.7}) {
    for (double y1 : {0.8, 0.9, 0.97}) {
      const RegionSample s = CheckSharpInequality(Triangular(x1, y1));
      CHECK(std::abs(s.slack_sharp) < 1e-12);
    }
  }
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto a = RandomPickands(2 + static_cast<int>(seed % 12), seed);
    const RegionSample s = CheckSharpInequality(a, "random");
    CHECK(s.source == "random");
    CHECK_FALSE(s.violation());
    if (a.vertex_count() >= 2) {
      CHECK(s.slack_sharp > 0.0);
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("ordering example") {
  const auto a = Triangular(0.5, 0.9);
  const auto b = Triangular(0.5, 0.75);
  CHECK(ComparePointwise(a, b) == Dominance::kFirstDominates);
  const OrderingReport r = CheckOrdering(a, b);
  CHECK(r.relation == Dominance::kFirstDominates);
  CHECK(r.tau_first == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  CHECK(r.tau_second == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r.consistent);
  const OrderingReport flipped = CheckOrdering(b, a);
  CHECK(flipped.relation == Dominance::kSecondDominates);
  CHECK(flipped.consistent);
  const OrderingReport same = CheckOrdering(a, a);
  CHECK(same.relation == Dominance::kEqual);
  CHECK(same.consistent);
}

TEST_CASE("crossing functions are not comparable") {
  const auto a = Triangular(0.3, 0.8);
  const auto b = Triangular(0.7, 0.8);
  try {
    CheckOrdering(a, b);
    FAIL("expected NotComparable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotComparable);
  }
}

TEST_CASE("insertion below the no-op height is dominated") {
  Rng rng(19);
  int strict = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto a = RandomPickands(1 + static_cast<int>(seed % 12), seed);
    if (a.empty()) continue;
    const Vertex first = a.vertices()[0];
    const double x = rng.Uniform(0.05, 0.95) * first.x;
    const AdmissibleInterval i = ComputeAdmissibleInterval(a, x);
    if (i.width() < 1e-6) continue;
    const double y = rng.Uniform(i.lo, i.hi - 1e-6);
    const auto b = VertexInsert(a, x, y);
    const OrderingReport r = CheckOrdering(a, b);
    CHECK(r.relation == Dominance::kFirstDominates);
    CHECK(r.consistent);
    CHECK(r.tau_second > r.tau_first);
    ++strict;
  }
  CHECK(strict > 500);
}

TEST_CASE("lemma suite passes on a moderate run") {
  const LemmaReport report = LemmaSuite(5000, 3, 2);
  CHECK(report.trials == 5000);
  CHECK(report.passed());
  for (const char* name :
       {"delta_tau_identity", "delta_rho_identity", "lemma1_inequality",
        "lemma1_strict", "lemma2_inequality", "lemma2_strict",
        "lemma2_equality", "lemma2_factorization", "n3_positive",
        "denominator_positive"}) {
    const CheckTally& t = report.Find(name);
    CHECK_MESSAGE(t.checked > 0, name);
    CHECK_MESSAGE(t.passed(), name);
  }
  CHECK(report.Find("lemma2_equality").worst_margin >= -1e-12);
  CHECK_THROWS_AS(report.Find("no_such_check"), std::exception);
}

TEST_CASE("lemma suite is independent of worker count") {
  const LemmaReport one = LemmaSuite(2000, 9, 1);
  const LemmaReport four = LemmaSuite(2000, 9, 4);
  REQUIRE(one.checks.size() == four.checks.size());
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    CHECK(one.checks[i].name == four.checks[i].name);
    CHECK(one.checks[i].checked == four.checks[i].checked);
    CHECK(one.checks[i].violations == four.checks[i].violations);
    CHECK(one.checks[i].worst_margin == four.checks[i].worst_margin);
  }
}

TEST_CASE("region scan invariants") {
  const std::vector<RegionSample> samples = RegionScan(3000, 16, 5, 3);
  CHECK(samples.size() == 3000);
  bool saw_am = false;
  int triangular = 0;
  for (const RegionSample& s : samples) {
    CHECK_FALSE(s.violation());
    CHECK(s.slack_sharp >= -1e-9);
    CHECK(s.slack_hl >= -1e-9);
    if (s.function == PiecewiseLinearPickands::Comonotonic()) {
      saw_am = true;
      CHECK(s.tau == doctest::Approx(1.0));
      CHECK(s.rho == doctest::Approx(1.0));
    }
    if (s.source.rfind("triangular", 0) == 0) {
      CHECK(std::abs(s.slack_sharp) < 1e-12);
      ++triangular;
    }
  }
  CHECK(saw_am);
  CHECK(triangular >= 11);
}

TEST_CASE("region scan is independent of worker count") {
  const auto a = RegionScan(500, 8, 13, 1);
  const auto b = RegionScan(500, 8, 13, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].function == b[i].function);
    CHECK(a[i].tau == b[i].tau);
    CHECK(a[i].rho == b[i].rho);
  }
}

TEST_CASE("hutchinson-lai lower curve lies below the sharp curve") {
  double worst = 1.0;
  for (int i = 1; i < 10'000; ++i) {
    const double tau = i / 10'000.0;
    worst = std::min(worst, SharpLowerBound(tau) - HutchinsonLaiLower(tau));
  }
  CHECK(worst > 0.0);
}

}  // namespace
}  // namespace evc
