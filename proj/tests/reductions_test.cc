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

#include "strucres/reductions.h"
#include "strucres/unify.h"
#include "test_support.h"

namespace strucres {
namespace {

using testing::prog;
using testing::T;

// Goal lists equal up to a consistent renaming of variables.
bool variant_lists(const GoalList& a, const GoalList& b) {
  if (a.size() != b.size()) return false;
  return is_variant(Term::app("l", a), Term::app("l", b));
}

TEST(SldStep, NatStreams) {
  VarSupply supply(10);
  auto steps = sld_step(prog("P2"), {T("nats(X)")}, 0, supply);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_TRUE(variant_lists(steps[0].goals, {T("nat(A)"), T("nats(B)")}));
  Term bound = steps[0].sigma.apply(T("X"));
  EXPECT_TRUE(is_variant(bound, T("scons(A, B)")));
  EXPECT_EQ(bound, Term::app("scons", {steps[0].goals[0].arg(0), steps[0].goals[1].arg(0)}));
}

TEST(SldStep, FactResolution) {
  VarSupply supply(10);
  auto steps = sld_step(prog("P1"), {T("nat(0)")}, 0, supply);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_TRUE(steps[0].goals.empty());
  EXPECT_TRUE(steps[0].sigma.empty());
}

TEST(SldStep, OnlyTransitiveClauseForMissingEdge) {
  VarSupply supply(10);
  auto steps = sld_step(prog("P6"), {T("conn(c, a)")}, 0, supply);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0].clause, 0u);
  EXPECT_TRUE(variant_lists(steps[0].goals, {T("conn(c, Z)"), T("conn(Z, a)")}));
}

TEST(RewriteStep, Examples) {
  VarSupply supply(10);
  auto p7 = rewrite_step(prog("P7"), {T("p(X)")}, 0, supply);
  ASSERT_EQ(p7.size(), 1u);
  EXPECT_EQ(p7[0].clause, 1u);
  EXPECT_EQ(p7[0].goals, GoalList{T("q(X)")});

  auto p6 = rewrite_step(prog("P6"), {T("conn(X, Y)")}, 0, supply);
  ASSERT_EQ(p6.size(), 1u);
  ASSERT_EQ(p6[0].goals.size(), 2u);
  EXPECT_EQ(p6[0].goals[0].arg(0), T("X"));
  EXPECT_EQ(p6[0].goals[1].arg(1), T("Y"));
  EXPECT_EQ(p6[0].goals[0].arg(1), p6[0].goals[1].arg(0));

  EXPECT_TRUE(rewrite_step(prog("P2"), {T("nats(X)")}, 0, supply).empty());
}

TEST(RewriteStep, NeverBindsGoalVariables) {
  VarSupply supply(50);
  for (const std::string& name : corpus_names()) {
    const Program& p = prog(name);
    for (const Predicate& pr : p.predicates()) {
      GoalList g{most_general_atom(pr, 1)};
      std::set<Var> goal_vars = vars_of(g);
      for (const Step& s : rewrite_step(p, g, 0, supply)) {
        for (const Var& v : s.sigma.domain()) EXPECT_FALSE(goal_vars.count(v)) << name;
      }
    }
  }
}

TEST(NormalForm, Examples) {
  auto p2 = rewrite_normal_form(prog("P2"), {T("nats(X)")}, 100);
  ASSERT_TRUE(std::holds_alternative<NormalForm>(p2));
  EXPECT_EQ(std::get<NormalForm>(p2).goals, GoalList{T("nats(X)")});
  EXPECT_EQ(std::get<NormalForm>(p2).steps, 0u);

  auto p7 = rewrite_normal_form(prog("P7"), {T("p(X)")}, 100);
  ASSERT_TRUE(std::holds_alternative<NormalForm>(p7));
  EXPECT_EQ(std::get<NormalForm>(p7).goals, GoalList{T("q(X)")});
  EXPECT_EQ(std::get<NormalForm>(p7).steps, 1u);

  EXPECT_TRUE(std::holds_alternative<FuelExhausted>(
      rewrite_normal_form(prog("P6"), {T("conn(X, Y)")}, 50)));
}

TEST(NormalForm, GroundNaturalRewritesAway) {
  auto r = rewrite_normal_form(prog("P1"), {T("nat(s(s(0)))")});
  ASSERT_TRUE(std::holds_alternative<NormalForm>(r));
  EXPECT_TRUE(std::get<NormalForm>(r).goals.empty());
}

TEST(NormalForm, OverlapSearchFindsEmptyList) {
  // Clause order sends the deterministic strategy into q(c), which is
  // stuck; the fact p(c) still rewrites the goal away.
  ParsedProgram p = parse_program("p(X) :- q(X). p(c).");
  auto r = rewrite_normal_form(p.program, {T("p(c)")});
  ASSERT_TRUE(std::holds_alternative<NormalForm>(r));
  EXPECT_TRUE(std::get<NormalForm>(r).goals.empty());
}

TEST(NormalForm, ProductiveProgramsTerminateFromMostGeneralGoals) {
  for (const std::string& name : corpus_names()) {
    if (name == "P6" || name == "bad") continue;
    const Program& p = prog(name);
    for (const Predicate& pr : p.predicates()) {
      auto r = rewrite_normal_form(p, {most_general_atom(pr, 1)}, 1000);
      EXPECT_TRUE(std::holds_alternative<NormalForm>(r)) << name << " " << pr.to_string();
    }
  }
}

TEST(NormalForm, Deterministic) {
  auto a = rewrite_normal_form(prog("P8"), {T("fibnats(X, Y)")});
  auto b = rewrite_normal_form(prog("P8"), {T("fibnats(X, Y)")});
  ASSERT_TRUE(std::holds_alternative<NormalForm>(a));
  EXPECT_EQ(std::get<NormalForm>(a).goals, std::get<NormalForm>(b).goals);
}

TEST(SStep, Examples) {
  VarSupply supply(10);
  auto p2 = s_step(prog("P2"), {T("nats(X)")}, supply);
  ASSERT_EQ(p2.size(), 1u);
  ASSERT_EQ(p2[0].goals.size(), 1u);
  EXPECT_TRUE(is_variant(p2[0].goals[0], T("nats(scons(A, B))")));

  auto p1 = s_step(prog("P1"), {T("nat(X)")}, supply);
  bool zero = std::any_of(p1.begin(), p1.end(), [](const Step& s) {
    return s.goals == GoalList{T("nat(0)")};
  });
  EXPECT_TRUE(zero);

  EXPECT_TRUE(s_step(prog("P1"), {}, supply).empty());
}

TEST(SStep, AgreesWithSldResolventOnTheSameGoal) {
  for (const auto& [name, query] : std::vector<std::pair<std::string, std::string>>{
           {"P1", "nat(X)"}, {"P2", "nats(X)"}, {"P7", "q(X)"}, {"P3", "add(X, Y, Z)"}}) {
    VarSupply a(10), b(10);
    GoalList g{T(query)};
    auto s = s_step(prog(name), g, a);
    auto sld = sld_step(prog(name), g, 0, b);
    for (const Step& st : s) {
      bool found = std::any_of(sld.begin(), sld.end(), [&](const Step& r) {
        return r.clause == st.clause && variant_lists(r.sigma.apply(g), st.goals);
      });
      EXPECT_TRUE(found) << name;
    }
  }
}

TEST(SReduce, NormalizesEachStep) {
  VarSupply supply(10);
  auto r = s_reduce(prog("P1"), {T("nat(X)")}, 100, supply);
  ASSERT_TRUE(std::holds_alternative<std::vector<Step>>(r));
  bool empty = false;
  for (const Step& s : std::get<std::vector<Step>>(r)) empty |= s.goals.empty();
  EXPECT_TRUE(empty);
}

TEST(Productivity, Classification) {
  for (const char* name : {"P1", "P2", "P3", "P4", "P5", "P7", "P8", "P9", "P10",
                           "P11", "P12", "good"}) {
    EXPECT_TRUE(std::holds_alternative<Productive>(productivity_check(prog(name))))
        << name << ": " << to_string(productivity_check(prog(name)));
  }
  auto p6 = productivity_check(prog("P6"));
  ASSERT_TRUE(std::holds_alternative<NonProductive>(p6));
  EXPECT_EQ(std::get<NonProductive>(p6).witness.predicate.name, "conn");
  EXPECT_TRUE(std::get<NonProductive>(p6).witness.is_proof());
  EXPECT_EQ(to_string(p6).rfind("non-productive: conn loop", 0), 0u);

  auto bad = productivity_check(prog("bad"));
  ASSERT_TRUE(std::holds_alternative<NonProductive>(bad));
  const LoopWitness& w = std::get<NonProductive>(bad).witness;
  EXPECT_EQ(w.kind, LoopKind::kVariant);
  EXPECT_TRUE(is_variant(w.ancestor, T("bad(f(X))")));
  EXPECT_TRUE(is_variant(w.descendant, T("bad(f(X))")));
}

TEST(Productivity, EmbeddingIsReportedAsHeuristic) {
  // r(a) rewrites to r(f(a)), which embeds r(a) without being an instance
  // of it. The program is in fact productive: the witness is only a hint.
  ParsedProgram p = parse_program("r(a) :- r(f(a)). r(f(a)).");
  auto v = productivity_check(p.program);
  ASSERT_TRUE(std::holds_alternative<NonProductive>(v));
  EXPECT_EQ(std::get<NonProductive>(v).witness.kind, LoopKind::kEmbedding);
  EXPECT_FALSE(std::get<NonProductive>(v).witness.is_proof());
}

TEST(Productivity, InstanceLoopIsAProof) {
  ParsedProgram p = parse_program("q(X) :- q(f(X)).");
  auto v = productivity_check(p.program);
  ASSERT_TRUE(std::holds_alternative<NonProductive>(v));
  EXPECT_EQ(std::get<NonProductive>(v).witness.kind, LoopKind::kInstance);
}

TEST(Productivity, FuelGivesUnknown) {
  EXPECT_TRUE(std::holds_alternative<Unknown>(productivity_check(prog("P1"), 0)));
}

TEST(Embedding, Basic) {
  EXPECT_TRUE(embeds(T("q(X)"), T("q(f(Y))")));
  EXPECT_TRUE(embeds(T("f(a)"), T("g(f(s(a)))")));
  EXPECT_FALSE(embeds(T("f(a, b)"), T("f(b, a)")));
}

}  // namespace
}  // namespace strucres
