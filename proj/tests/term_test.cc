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

#include "strucres/metric.h"
#include "strucres/rational.h"
#include "strucres/substitution.h"
#include "test_support.h"

namespace strucres {
namespace {

using testing::T;
using testing::TermGen;
using testing::V;

TEST(Term, Subterm) {
  EXPECT_EQ(subterm(T("nat(s(0))"), Position{}), T("nat(s(0))"));
  EXPECT_EQ(subterm(T("nat(s(0))"), Position{0}), T("s(0)"));
  EXPECT_EQ(subterm(T("scons(0, scons(s(0), Y))"), Position{1, 0}), T("s(0)"));
  EXPECT_THROW(subterm(T("nat(0)"), Position{1}), PositionOutOfRange);
}

TEST(Term, PositionsArePrefixAndSiblingClosed) {
  TermGen gen(7);
  for (int i = 0; i < 50; ++i) {
    Term t = gen.term(4);
    std::vector<Position> ps = positions(t);
    std::set<Position> all(ps.begin(), ps.end());
    for (const Position& w : ps) {
      if (w.is_root()) continue;
      EXPECT_TRUE(all.count(w.parent()));
      for (std::uint32_t j = 0; j < w.back(); ++j) {
        EXPECT_TRUE(all.count(w.parent().child(j)));
      }
    }
  }
}

TEST(Term, CachedAttributes) {
  Term t = T("f(s(X), a)");
  EXPECT_EQ(t.depth(), 2u);  // leaves have depth 0
  EXPECT_EQ(t.size(), 4u);
  EXPECT_FALSE(t.is_ground());
  EXPECT_TRUE(T("f(s(0), a)").is_ground());
  EXPECT_EQ(T("f(s(X), a)"), t);
  EXPECT_EQ(T("f(s(X), a)").hash(), t.hash());
}

TEST(Term, Printing) {
  EXPECT_EQ(to_string(T("scons(0, scons(s(0), Y))")), "scons(0, scons(s(0), Y))");
  Term clash = Term::app("p", {Term::variable("X"), Term::variable("X", 3)});
  EXPECT_EQ(to_string(clash), "p(X, X_3)");
  std::vector<Term> one{Term::app("p", {Term::variable("X", 3)})};
  VarNaming naming = VarNaming::for_terms(one);
  PrintOptions named;
  named.naming = &naming;
  EXPECT_EQ(to_string(one[0]), "p(X_3)");
  EXPECT_EQ(to_string(one[0], named), "p(X)");
  PrintOptions ascii;
  ascii.ascii = true;
  EXPECT_EQ(to_string(Term::app("s", {Term::diamond()}), ascii), "s(?diamond?)");
}

TEST(Substitution, Apply) {
  EXPECT_EQ(Substitution({{V("X"), T("0")}}).apply(T("nat(X)")), T("nat(0)"));
  Term t = T("from(0, X)");
  EXPECT_EQ(Substitution().apply(t), t);
  EXPECT_EQ(Substitution({{V("X"), T("scons(0, Y)")}}).apply(t),
            T("from(0, scons(0, Y))"));
}

TEST(Substitution, IdentityBindingsDropped) {
  Substitution s;
  s.bind(V("X"), T("X"));
  EXPECT_TRUE(s.empty());
}

TEST(Substitution, Compose) {
  Substitution sigma{{V("X"), T("Y")}};
  EXPECT_EQ(compose(Substitution(), sigma), sigma);
  Substitution expected{{V("X"), T("s(0)")}, {V("Y"), T("s(0)")}};
  EXPECT_EQ(compose(Substitution{{V("Y"), T("s(0)")}}, sigma), expected);
}

TEST(Substitution, ComposeIsAssociativeAndPointwise) {
  TermGen gen(11);
  auto random_subst = [&] {
    Substitution s;
    for (const char* v : {"X", "Y", "Z"}) {
      if (gen.below(2)) s.bind(V(v), gen.term(2));
    }
    return s;
  };
  for (int i = 0; i < 200; ++i) {
    Substitution a = random_subst(), b = random_subst(), c = random_subst();
    Term t = gen.term(3);
    EXPECT_EQ(compose(c, compose(b, a)).apply(t), compose(compose(c, b), a).apply(t));
    EXPECT_EQ(compose(b, a).apply(t), b.apply(a.apply(t)));
  }
}

TEST(Metric, Truncate) {
  EXPECT_EQ(truncate(0, T("nat(0)")).term(), Term::diamond());
  EXPECT_EQ(truncate(2, T("nat(s(0))")).term(),
            Term::app("nat", {Term::app("s", {Term::diamond()})}));
  EXPECT_EQ(truncate(3, T("nat(s(0))")).term(), T("nat(s(0))"));
}

// Least n at which the depth-n truncations differ, found by enumeration.
std::optional<std::uint32_t> gamma_by_truncation(const Term& s, const Term& t) {
  std::uint32_t limit = static_cast<std::uint32_t>(std::max(s.depth(), t.depth()) + 2);
  for (std::uint32_t n = 0; n <= limit; ++n) {
    if (!(truncate(n, s) == truncate(n, t))) return n;
  }
  return std::nullopt;
}

TEST(Metric, Gamma) {
  EXPECT_TRUE(gamma(T("nat(0)"), T("nat(0)")).is_infinite());
  EXPECT_EQ(gamma(T("nat(0)"), T("nat(s(0))")), Gamma::finite(2));
  EXPECT_EQ(gamma(T("nat(0)"), T("conn(a, b)")), Gamma::finite(1));
}

TEST(Metric, GammaAgreesWithTruncationEnumeration) {
  TermGen gen(3);
  for (int i = 0; i < 300; ++i) {
    Term s = gen.term(4), t = gen.term(4);
    auto expected = gamma_by_truncation(s, t);
    Gamma g = gamma(s, t);
    if (!expected) {
      EXPECT_TRUE(g.is_infinite());
    } else {
      ASSERT_FALSE(g.is_infinite());
      EXPECT_EQ(g.value(), *expected);
    }
  }
}

TEST(Metric, Distance) {
  EXPECT_TRUE(distance(T("f(X, a)"), T("f(X, a)")).is_zero());
  Dyadic d = distance(T("nat(0)"), T("nat(s(0))"));
  EXPECT_EQ(d, Dyadic::inverse_power_of_two(2));
  EXPECT_DOUBLE_EQ(d.to_double(), 0.25);
  EXPECT_EQ(d.to_string(), "1/4");
}

TEST(Rational, Unfold) {
  RationalTerm nats(V("X"), {{V("X"), T("scons(0, X)")}});
  Term d = Term::diamond();
  EXPECT_EQ(nats.unfold(2).term(),
            Term::app("scons", {T("0"), Term::app("scons", {d, d})}));
  RationalTerm fx(V("X"), {{V("X"), T("f(X)")}});
  EXPECT_EQ(fx.unfold(2).term(), Term::app("f", {Term::app("f", {d})}));
  EXPECT_EQ(fx.unfold(3).term(),
            Term::app("f", {Term::app("f", {Term::app("f", {d})})}));
  EXPECT_EQ(fx.unfold(0).term(), d);
  EXPECT_TRUE(fx.is_infinite());
}

TEST(Rational, IllFormed) {
  EXPECT_THROW(RationalTerm(V("X"), {{V("X"), T("Y")}, {V("Y"), T("X")}}),
               IllFormedRationalTerm);
}

TEST(Rational, MinimizedMergesBisimilarEquations) {
  RationalTerm r(V("X"), {{V("X"), T("scons(0, Y)")}, {V("Y"), T("scons(0, Y)")}});
  RationalTerm m = r.minimized();
  EXPECT_EQ(m.to_string(), "X = scons(0, X)");
  for (std::uint32_t n = 0; n < 8; ++n) EXPECT_EQ(m.unfold(n), r.unfold(n));
}

TEST(Rational, FiniteSystemIsNotInfinite) {
  RationalTerm r(V("X"), {{V("X"), T("f(Y, a)")}, {V("Y"), T("s(0)")}});
  EXPECT_FALSE(r.is_infinite());
  EXPECT_EQ(r.unfold(5).term(), T("f(s(0), a)"));
}

}  // namespace
}  // namespace strucres
