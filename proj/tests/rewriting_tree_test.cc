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

#include <regex>

#include "json.hpp"
#include "strucres/reductions.h"
#include "strucres/rewriting_tree.h"
#include "strucres/unify.h"
#include "test_support.h"

namespace strucres {
namespace {

using testing::prog;
using testing::T;
using testing::V;

RewTree tree(const std::string& name, const std::string& query,
             const Substitution& sigma = {}, std::size_t budget = kDefaultTreeBudget) {
  BuildOptions o;
  o.budget = budget;
  return build_rew(prog(name), parse_query(query), sigma, o);
}

std::size_t count_var_nodes(const RewTree& t) {
  return std::count_if(t.nodes().begin(), t.nodes().end(),
                       [](const RewNode& n) { return n.is_var(); });
}

TEST(BuildRew, OverlappingProgramLeftTree) {
  RewTree t = tree("P7", "p(X)");
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(to_string(t.root().clause()), "? ← p(X)");
  const RewNode* p = t.at({0});
  ASSERT_TRUE(p && p->is_term());
  EXPECT_EQ(p->term(), T("p(X)"));
  const RewNode* x1 = t.at({0, 0});
  ASSERT_TRUE(x1 && x1->is_var());
  EXPECT_EQ(x1->var().id, 1u);
  const RewNode* body = t.at({0, 1});
  ASSERT_TRUE(body && body->is_clause());
  EXPECT_EQ(to_string(body->clause()), "p(X) ← q(X)");
  EXPECT_EQ(t.at({0, 1, 0})->term(), T("q(X)"));
  EXPECT_EQ(t.at({0, 1, 0, 0})->var().id, 2u);
  EXPECT_EQ(t.at({0, 1, 0, 1})->var().id, 3u);
  EXPECT_FALSE(t.exhausted());
}

TEST(BuildRew, FibonacciFirstTree) {
  RewTree t = tree("P3", "fibs(0, s(0), X)");
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(count_var_nodes(t), 3u);
  for (std::uint32_t k = 0; k < 3; ++k) EXPECT_EQ(t.at({0, k})->var().id, k + 1);
}

TEST(BuildRew, ConnectivityTreeIsCutByBudget) {
  RewTree t = tree("P6", "conn(a, c)", {}, 60);
  EXPECT_TRUE(t.exhausted());
  // Expansion stops once the budget is reached; the last node expanded may
  // add up to one node per clause.
  EXPECT_LE(t.size(), 60u + prog("P6").size());
  EXPECT_TRUE(std::any_of(t.nodes().begin(), t.nodes().end(),
                          [](const RewNode& n) { return !n.expanded; }));
}

TEST(BuildRew, ParityAndBranching) {
  for (const std::string& name : corpus_names()) {
    const Program& p = prog(name);
    for (const Predicate& pr : p.predicates()) {
      BuildOptions o;
      o.budget = 400;
      RewTree t = build_rew(p, GoalClause{{most_general_atom(pr, 0)}}, {}, o);
      std::set<std::uint32_t> ids;
      for (const RewNode& n : t.nodes()) {
        bool even = n.position.depth() % 2 == 0;
        EXPECT_EQ(even, !n.is_term()) << name;
        if (n.is_var()) {
          EXPECT_TRUE(n.children.empty());
          EXPECT_TRUE(ids.insert(n.var().id).second) << "or-node variable reused";
        }
        if (!n.expanded) continue;
        if (n.is_term()) EXPECT_EQ(n.children.size(), p.size()) << name;
        if (n.is_clause()) EXPECT_EQ(n.children.size(), n.clause().body.size()) << name;
      }
    }
  }
}

TEST(BuildRew, ProductiveProgramsGiveFiniteTrees) {
  const std::vector<std::pair<std::string, std::string>> queries{
      {"P1", "nat(X)"},       {"P1", "nat(s(s(0)))"},  {"P2", "nats(X)"},
      {"P3", "fibs(0, s(0), X)"}, {"P3", "add(s(s(0)), s(0), X)"},
      {"P4", "from(0, X)"},   {"P5", "from(0, X)"},    {"P7", "p(X)"},
      {"P8", "fibnats(X, Y)"}, {"P11", "p(Y)"},         {"P12", "zeros(X)"}};
  for (const auto& [name, q] : queries) {
    ASSERT_TRUE(std::holds_alternative<Productive>(productivity_check(prog(name))));
    EXPECT_FALSE(tree(name, q).exhausted()) << name << " " << q;
  }
}

TEST(ApplySubstTree, OverlappingProgram) {
  RewTree t = tree("P7", "p(X)");
  RewTree applied = apply_subst_tree({{V("X"), T("c")}}, t);
  const RewNode* fact = applied.at({0, 0});
  ASSERT_TRUE(fact && fact->is_clause());
  EXPECT_EQ(to_string(fact->clause()), "p(c) ←");
  RewTree expected = build_rew(prog("P7"), parse_query("p(X)"), {{V("X"), T("c")}},
                               t.derivation_options());
  EXPECT_TRUE(equivalent(applied, expected));
  EXPECT_EQ(applied.at({0})->term(), T("p(c)"));
}

TEST(ApplySubstTree, Identity) {
  for (const auto& [name, q] : std::vector<std::pair<std::string, std::string>>{
           {"P7", "p(X)"}, {"P3", "fibs(0, s(0), X)"}, {"P2", "nats(X)"}}) {
    RewTree t = tree(name, q);
    EXPECT_TRUE(equivalent(apply_subst_tree({}, t), t)) << name;
  }
}

TEST(ApplySubstTree, ConnectivityAgreesAboveTheFrontier) {
  RewTree t = tree("P6", "conn(a, c)", {}, 300);
  // Z is the clause variable of the transitive clause at [0, 0].
  const RewNode* body = t.at({0, 0});
  ASSERT_TRUE(body && body->is_clause());
  Term mid = body->clause().body[0].arg(1);
  ASSERT_TRUE(mid.is_var());
  EXPECT_EQ(mid.var().name, "Z");
  Substitution theta{{mid.var(), T("b")}};
  RewTree applied = apply_subst_tree(theta, t);
  RewTree rebuilt = build_rew(prog("P6"), parse_query("conn(a, c)"), theta,
                              t.derivation_options());
  std::size_t depth = std::min(applied.complete_depth(), rebuilt.complete_depth());
  ASSERT_GE(depth, 5u);
  EXPECT_TRUE(equivalent_up_to(applied, rebuilt, depth + 1));
}

TEST(SuccessSubtree, Examples) {
  RewTree pc = tree("P7", "p(c)");
  auto s = find_success_subtree(pc);
  ASSERT_TRUE(s);
  ASSERT_EQ(s->leaves.size(), 1u);
  EXPECT_EQ(to_string(pc.at(s->leaves[0])->clause()), "p(c) ←");

  EXPECT_FALSE(find_success_subtree(tree("P1", "nat(X)")));
  EXPECT_FALSE(find_success_subtree(tree("P6", "conn(a, c)", {}, 400)));
}

TEST(SuccessSubtree, ConnectivityAfterBindingZ) {
  RewTree t = tree("P6", "conn(a, c)", {}, 400);
  auto next = transition_on(t, 3);
  ASSERT_TRUE(std::holds_alternative<RewTree>(next));
  const RewTree& u = std::get<RewTree>(next);
  auto s = find_success_subtree(u);
  ASSERT_TRUE(s);
  std::vector<std::string> leaves;
  for (const Position& w : s->leaves) leaves.push_back(to_string(u.at(w)->clause()));
  EXPECT_EQ(leaves, (std::vector<std::string>{"conn(a, b) ←", "conn(b, c) ←"}));
}

TEST(Transition, OverlappingProgram) {
  RewTree t = tree("P7", "p(X)");
  auto next = transition_on(t, 1);
  ASSERT_TRUE(std::holds_alternative<RewTree>(next));
  const RewTree& u = std::get<RewTree>(next);
  EXPECT_EQ(u.sigma(), (Substitution{{V("X"), T("c")}}));
  EXPECT_TRUE(equivalent(u, build_rew(prog("P7"), parse_query("p(X)"),
                                      {{V("X"), T("c")}}, t.derivation_options())));
  // The clause for q(c) keeps its or-node variables.
  EXPECT_EQ(u.at({0, 1, 0, 0})->var().id, 2u);
  EXPECT_EQ(u.at({0, 1, 0, 1})->var().id, 3u);
}

TEST(Transition, FibonacciSteps) {
  RewTree t = tree("P3", "fibs(0, s(0), X)");
  auto r = transition_on(t, 3);
  ASSERT_TRUE(std::holds_alternative<RewTree>(r));
  const RewTree& u = std::get<RewTree>(r);
  Term x = u.sigma().apply(T("X"));
  ASSERT_EQ(x.symbol(), "cons");
  EXPECT_EQ(x.arg(0), T("0"));
  const RewNode* c = u.at({0, 2});
  ASSERT_TRUE(c && c->is_clause());
  std::vector<Term> context{c->clause().head};
  context.insert(context.end(), c->clause().body.begin(), c->clause().body.end());
  VarNaming naming = VarNaming::for_terms(context);
  PrintOptions o;
  o.naming = &naming;
  EXPECT_EQ(to_string(c->clause(), o),
            "fibs(0, s(0), cons(0, S)) ← add(0, s(0), Z), fibs(s(0), Z, S)");
  std::vector<std::uint32_t> ids;
  for (const RewNode& n : u.nodes()) {
    if (n.is_var()) ids.push_back(n.var().id);
  }
  EXPECT_EQ(ids, (std::vector<std::uint32_t>{1, 2, 4, 5, 6, 7, 8, 9}));

  auto r2 = transition_on(u, 4);
  ASSERT_TRUE(std::holds_alternative<RewTree>(r2));
  const RewNode* add = std::get<RewTree>(r2).at({0, 2, 0, 0});
  ASSERT_TRUE(add && add->is_clause());
  EXPECT_EQ(to_string(add->clause()), "add(0, s(0), s(0)) ←");
}

TEST(Transition, PredicateClashGivesEmptyTree) {
  RewTree t = tree("P7", "p(X)");
  // X2 sits under q(X) for clause p(c).
  EXPECT_TRUE(std::holds_alternative<EmptyTree>(transition_on(t, 2)));
  EXPECT_TRUE(std::holds_alternative<EmptyTree>(transition_on(t, 99)));
}

TEST(Classify, NatStreams) {
  RewTree t = tree("P2", "nats(X)");
  auto cls = classify_nodes(t, testing::typing("P2"));
  NodeClass c = cls.at({0, 2});
  EXPECT_EQ(c.openness, Openness::kOpen);
  EXPECT_EQ(c.kind, Kind::kCoinductive);
  EXPECT_EQ(cls.at({0, 0}).openness, Openness::kClosed);
}

TEST(Classify, InductiveOnly) {
  RewTree t = tree("P1", "nat(0)");
  for (const auto& [w, c] : classify_nodes(t, testing::typing("P1"))) {
    EXPECT_EQ(c.kind, Kind::kInductive);
    if (t.at(w)->is_var()) EXPECT_EQ(c.openness, Openness::kClosed);
  }
}

TEST(Classify, FibonacciAddIsInductiveOpen) {
  RewTree u = std::get<RewTree>(transition_on(tree("P3", "fibs(0, s(0), X)"), 3));
  auto x4 = u.find_var(4);
  ASSERT_TRUE(x4);
  NodeClass c = classify_nodes(u, testing::typing("P3")).at(u.node(*x4).position);
  EXPECT_EQ(c.openness, Openness::kOpen);
  EXPECT_EQ(c.kind, Kind::kInductive);
}

std::size_t dot_node_statements(const std::string& dot) {
  static const std::regex node(R"(^\s*n[0-9_]*\s*\[)");
  std::size_t count = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) count += std::regex_search(line, node);
  return count;
}

TEST(Dot, Rendering) {
  RewTree single = build_rew(prog("P1"), GoalClause{}, {});
  EXPECT_EQ(dot_node_statements(to_dot(single)), 1u);
  std::string dot = to_dot(tree("P7", "p(X)"));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '{'), std::count(dot.begin(), dot.end(), '}'));
  EXPECT_EQ(dot_node_statements(dot), 7u);
  EXPECT_NE(dot.find("shape=diamond"), std::string::npos);
}

TEST(Json, Rendering) {
  auto j = nlohmann::json::parse(to_json(tree("P7", "p(X)")));
  EXPECT_EQ(j["nodes"].size(), 7u);
  EXPECT_EQ(j["exhausted"], false);
}

}  // namespace
}  // namespace strucres
