// Copyright 2026 The strucres Authors
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

#include <gtest/gtest.h>

#include "property_checks.h"

namespace strucres::checks {
namespace {

void expect_ok(const CheckResult& r) {
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_GT(r.cases, 0u);
}

TEST(Properties, OverlappingTransition) { expect_ok(overlapping_transition_golden()); }
TEST(Properties, ConnectivitySuccess) { expect_ok(connectivity_success_golden()); }
TEST(Properties, CorpusProductivity) { expect_ok(corpus_productivity()); }

TEST(Properties, SubstitutionCommutesWithTrees) {
  for (std::uint32_t seed : {11u, 12u, 13u}) expect_ok(substitution_commutes(60, seed));
}

TEST(Properties, RefutationMatchesClosure) { expect_ok(refutation_matches_closure(3, 30)); }

TEST(Properties, RewritingMatchesSuccessSubtrees) {
  for (std::uint32_t seed : {21u, 22u}) expect_ok(rewriting_matches_success(40, seed));
}

TEST(Properties, RationalStream) { expect_ok(rational_stream_answer(8)); }
TEST(Properties, Fibonacci) { expect_ok(fibonacci_observation()); }

TEST(Properties, Ultrametric) {
  for (std::uint32_t seed : {31u, 32u, 33u}) expect_ok(ultrametric(300, seed));
}

TEST(Properties, ImpliedAtInfinity) { expect_ok(implied_witness()); }

}  // namespace
}  // namespace strucres::checks
