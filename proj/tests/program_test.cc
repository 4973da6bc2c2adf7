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

#include "strucres/corpus.h"
#include "strucres/parser.h"
#include "test_support.h"

namespace strucres {
namespace {

using testing::T;

TEST(Parser, NaturalNumbers) {
  ParsedProgram p = parse_program("nat(0). nat(s(X)) :- nat(X).");
  ASSERT_EQ(p.program.size(), 2u);
  EXPECT_TRUE(p.program[0].is_fact());
  EXPECT_EQ(p.program[1].head, T("nat(s(X))"));
  EXPECT_EQ(p.program[1].body, std::vector<Term>{T("nat(X)")});
  EXPECT_EQ(to_string(p.program[1]), "nat(s(X)) ← nat(X)");
}

TEST(Parser, CoinductiveDirective) {
  ParsedProgram p = parse_program(
      ":- coinductive nats/1.\n"
      "nats(scons(X, Y)) :- nat(X), nats(Y).\n");
  EXPECT_TRUE(p.typing.is_coinductive(T("nats(Z)")));
  EXPECT_FALSE(p.typing.is_coinductive(T("nat(Z)")));
}

TEST(Parser, AlternativeNeckAndComments) {
  ParsedProgram p = parse_program("% graph\nconn(X, Y) <- conn(X, Z), conn(Z, Y).\n");
  ASSERT_EQ(p.program.size(), 1u);
  EXPECT_EQ(p.program[0].body.size(), 2u);
}

TEST(Parser, Errors) {
  try {
    parse_program("p(X,Y");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
  }
  EXPECT_THROW(parse_query("?- ."), ParseError);
  EXPECT_THROW(parse_program("p(a). p(a, b)."), ArityClash);
}

TEST(Parser, Queries) {
  EXPECT_EQ(parse_query("?- nats(X).").body, std::vector<Term>{T("nats(X)")});
  EXPECT_EQ(parse_query("?- conn(a,c).").body, std::vector<Term>{T("conn(a, c)")});
  EXPECT_EQ(parse_query("conn(a, c)").body, std::vector<Term>{T("conn(a, c)")});
  EXPECT_EQ(parse_query("p(X), q(X).").body.size(), 2u);
}

TEST(Parser, AnonymousVariablesAreDistinct) {
  Term t = parse_term("p(_, _)");
  EXPECT_FALSE(t.arg(0) == t.arg(1));
}

TEST(Parser, SourceRoundTrip) {
  for (const std::string& name : corpus_names()) {
    const ParsedProgram& p = corpus_entry(name);
    ParsedProgram again = parse_program(to_source(p.program, p.typing));
    EXPECT_TRUE(again.program == p.program) << name;
    EXPECT_EQ(again.typing.coinductive(), p.typing.coinductive()) << name;
  }
}

TEST(Corpus, Shapes) {
  auto c = corpus();
  EXPECT_EQ(c.size(), 14u);
  EXPECT_EQ(c.at("P1").size(), 2u);
  EXPECT_EQ(c.at("P6").size(), 3u);
  ASSERT_EQ(c.at("P12").size(), 1u);
  EXPECT_EQ(c.at("P12")[0].head, T("zeros(scons(0, X))"));
  EXPECT_EQ(c.at("P12")[0].body, std::vector<Term>{T("zeros(X)")});
  EXPECT_EQ(c.at("bad")[0].head, T("bad(f(X))"));
  EXPECT_EQ(c.at("bad")[0].body, std::vector<Term>{T("bad(f(X))")});
  // P8 joins the streams of P2 and P3.
  EXPECT_EQ(c.at("P8").size(), c.at("P2").size() + c.at("P3").size() + 1);
}

TEST(Signature, Inferred) {
  Signature s = infer_signature(testing::prog("P1"));
  EXPECT_EQ(s.functions().at("s"), 1u);
  EXPECT_EQ(s.predicates().at("nat"), 1u);
  EXPECT_EQ(s.constants(), std::vector<std::string>{"0"});
}

TEST(Rename, Apart) {
  VarSupply supply(17);
  Clause c = testing::prog("P1")[1];
  Clause r = rename_apart(c, supply);
  EXPECT_EQ(r.head, Term::app("nat", {Term::app("s", {Term::variable("X", 17)})}));
  Clause r2 = rename_apart(c, supply);
  for (const Var& v : r.vars()) EXPECT_FALSE(r2.vars().count(v));
  Clause ground = testing::prog("P1")[0];
  EXPECT_TRUE(rename_apart(ground, supply) == ground);
}

TEST(Rename, MostGeneralAtom) {
  Term a = most_general_atom(Predicate{"conn", 2}, 4);
  EXPECT_EQ(a.arity(), 2u);
  EXPECT_TRUE(a.arg(0).is_var());
  EXPECT_FALSE(a.arg(0) == a.arg(1));
}

}  // namespace
}  // namespace strucres
