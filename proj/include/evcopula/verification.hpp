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

// Randomized and structured checks of the tau-rho inequalities, the
// insertion lemmas and the concordance ordering, plus region scans.

#ifndef EVCOPULA_VERIFICATION_HPP_
#define EVCOPULA_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "evcopula/pickands.hpp"
#include "evcopula/random.hpp"

namespace evc {

// Random Pickands function: n abscissae uniform in (0,1), ordinates uniform
// in the envelope, lower convex hull through the endpoints, then the
// pointwise maximum with A_M. Deterministic per seed.
PiecewiseLinearPickands RandomPickands(int n_vertices, std::uint64_t seed);
PiecewiseLinearPickands RandomPickands(int n_vertices, Rng& rng);

struct RegionSample {
  PiecewiseLinearPickands function;
  std::string source;
  double tau = 0.0;
  double rho = 0.0;
  double slack_sharp = 0.0;  // rho - 3 tau / (2 + tau)
  double slack_hl = 0.0;     // rho - (-1 + sqrt(1 + 3 tau))

  bool violation() const;
};

RegionSample CheckSharpInequality(const PiecewiseLinearPickands& a,
                                  std::string source = "input");

enum class Dominance { kEqual, kFirstDominates, kSecondDominates };

struct OrderingReport {
  Dominance relation = Dominance::kEqual;
  double tau_first = 0.0;
  double tau_second = 0.0;
  // True unless one function strictly dominates and its tau is not strictly
  // smaller.
  bool consistent = true;
};

// Pointwise comparison on the merged breakpoints, which is exact for
// piecewise-linear functions. Throws NotComparable if the functions cross.
Dominance ComparePointwise(const PiecewiseLinearPickands& a,
                           const PiecewiseLinearPickands& b);
OrderingReport CheckOrdering(const PiecewiseLinearPickands& a,
                             const PiecewiseLinearPickands& b);

// One named check inside a randomized suite. margin >= -tolerance passes
// (margin > 0 when strict); worst_margin is the smallest margin seen.
struct CheckTally {
  std::string name;
  double tolerance = 0.0;
  bool strict = false;
  long checked = 0;
  long violations = 0;
  double worst_margin = 0.0;

  void Record(double margin);
  void Merge(const CheckTally& other);
  bool passed() const { return violations == 0; }
};

struct LemmaReport {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckTally> checks;

  bool passed() const;
  const CheckTally& Find(const std::string& name) const;
};

inline constexpr double kLemmaTolerance = 1e-10;
inline constexpr double kExactnessTolerance = 1e-12;

// Per trial: a random A (1..16 vertices), x in (0, x1) and y in I_x^A, plus
// an independent random triangular tuple. Checks the tau/rho increment
// identities, both lemma inequalities with their equality and strictness
// conditions, the reassembled factorization and the sign claims on its
// factors. Trials are seeded by index; the report does not depend on the
// number of workers.
LemmaReport LemmaSuite(int trials, std::uint64_t seed, int workers = 1);

// Region scan: A == 1, A_M, triangular grids and smooth-family interpolants
// first, then random functions with up to max_vertices vertices and random
// smooth-family members.
std::vector<RegionSample> RegionScan(int count, int max_vertices,
                                     std::uint64_t seed, int workers = 1);

}  // namespace evc

#endif  // EVCOPULA_VERIFICATION_HPP_
