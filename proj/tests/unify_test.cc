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

#include "strucres/unify.h"
#include "test_support.h"

namespace strucres {
namespace {

using testing::T;
using testing::TermGen;
using testing::V;

TEST(Mgm, Examples) {
  EXPECT_EQ(mgm(T("nat(s(X))"), T("nat(s(0))")), (Substitution{{V("X"), T("0")}}));
  EXPECT_FALSE(mgm(T("from(X, scons(X, Y))"), T("from(0, Z)")));
  EXPECT_EQ(mgm(T("p(X)"), T("p(c)")), (Substitution{{V("X"), T("c")}}));
  EXPECT_FALSE(mgm(T("f(X, X)"), T("f(a, b)")));
}

TEST(Mgm, OnlyPatternVariablesAreBound) {
  TermGen gen(5);
  for (int i = 0; i < 300; ++i) {
    Term pattern = gen.term(3);
    Term subject = gen.term(3);
    auto m = mgm(pattern, subject);
    if (!m) continue;
    EXPECT_EQ(m->apply(pattern), subject);
    for (const Var& v : m->domain()) EXPECT_TRUE(occurs(v, pattern));
  }
}

TEST(Mgu, Examples) {
  auto r = mgu(T("nat(X)"), T("nat(0)"), true);
  ASSERT_TRUE(std::holds_alternative<Substitution>(r));
  EXPECT_EQ(std::get<Substitution>(r), (Substitution{{V("X"), T("0")}}));

  EXPECT_TRUE(std::holds_alternative<NoUnify>(mgu(T("X"), T("f(X)"), true)));
  auto cyc = mgu(T("X"), T("f(X)"), false);
  ASSERT_TRUE(std::holds_alternative<RationalBindings>(cyc));
  EXPECT_EQ(std::get<RationalBindings>(cyc).to_string(), "{X = f(X)}");

  auto nats = mgu(T("nats(X)"), T("nats(scons(0, X))"), false);
  ASSERT_TRUE(std::holds_alternative<RationalBindings>(nats));
  RationalTerm x = std::get<RationalBindings>(nats).term_for(V("X"));
  EXPECT_EQ(x.to_string(), "X = scons(0, X)");
}

TEST(Mgu, ClashFails) {
  EXPECT_TRUE(std::holds_alternative<NoUnify>(mgu(T("f(a)"), T("f(b)"), true)));
  EXPECT_TRUE(std::holds_alternative<NoUnify>(mgu(T("f(a)"), T("g(a)"), false)));
}

TEST(Mgu, UnifiesAndIsIdempotent) {
  TermGen gen(9);
  int unified = 0;
  for (int i = 0; i < 500; ++i) {
    Term a = gen.term(3), b = gen.term(3);
    auto s = unify(a, b);
    if (!s) continue;
    ++unified;
    EXPECT_EQ(s->apply(a), s->apply(b));
    EXPECT_TRUE(s->is_idempotent());
  }
  EXPECT_GT(unified, 20);
}

TEST(Mgu, MostGeneral) {
  // Any unifier of a and b factors through the computed one.
  TermGen gen(21);
  for (int i = 0; i < 300; ++i) {
    Term a = gen.term(2), b = gen.term(2);
    auto s = unify(a, b);
    if (!s) continue;
    Substitution ground;
    for (const char* v : {"X", "Y", "Z"}) ground.bind(V(v), gen.term(1, false));
    Substitution other = compose(ground, *s);
    EXPECT_EQ(other.apply(a), other.apply(b));
    // other = ground . s, so s is at least as general.
    EXPECT_EQ(compose(other, *s).apply(a), other.apply(a));
  }
}

TEST(Unifier, TrailUndo) {
  Unifier u(false);
  ASSERT_TRUE(u.unify(T("f(X, Y)"), T("f(a, Z)")));
  std::size_t mark = u.mark();
  ASSERT_TRUE(u.unify(T("Y"), T("g(Y)")));
  EXPECT_TRUE(u.has_cycle());
  u.undo(mark);
  EXPECT_FALSE(u.has_cycle());
  Substitution s = u.solved();
  EXPECT_EQ(s.apply(T("f(X, Y)")), s.apply(T("f(a, Z)")));
}

TEST(Resolvent, Kinds) {
  Resolvent ext = resolvent(T("p(c)"), T("p(X)"));
  EXPECT_EQ(ext.kind, ResolventKind::kExternal);
  EXPECT_EQ(ext.theta, (Substitution{{V("X"), T("c")}}));

  Resolvent in = resolvent(T("p(X1)"), T("p(X)"));
  EXPECT_EQ(in.kind, ResolventKind::kInternal);
  EXPECT_EQ(in.theta, (Substitution{{V("X1"), T("X")}}));

  EXPECT_EQ(resolvent(T("nat(0)"), T("conn(a, b)")).kind, ResolventKind::kNull);
}

TEST(Variant, RenamingOnly) {
  EXPECT_TRUE(is_variant(T("conn(X, Y)"), T("conn(A, B)")));
  EXPECT_FALSE(is_variant(T("conn(X, X)"), T("conn(A, B)")));
  EXPECT_FALSE(is_variant(T("conn(X, a)"), T("conn(A, B)")));
}

}  // namespace
}  // namespace strucres
