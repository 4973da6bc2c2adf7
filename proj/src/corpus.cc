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

#include "strucres/corpus.h"

#include <stdexcept>

namespace strucres {

namespace {

const std::vector<std::pair<std::string, std::string>>& sources() {
  static const auto* s = new std::vector<std::pair<std::string, std::string>>{
    {"P1", R"lp(% Natural numbers.
nat(0).
nat(s(X)) :- nat(X).
)lp"},
    {"P2", R"lp(% Streams of natural numbers.
:- coinductive nats/1.
nat(0).
nat(s(X)) :- nat(X).
nats(scons(X, Y)) :- nat(X), nats(Y).
)lp"},
    {"P3", R"lp(% Addition and the Fibonacci stream.
:- coinductive fibs/3.
add(0, Y, Y).
add(s(X), Y, s(Z)) :- add(X, Y, Z).
fibs(X, Y, cons(X, S)) :- add(X, Y, Z), fibs(Y, Z, S).
)lp"},
    {"P4", R"lp(% The stream of naturals counting up from X.
:- coinductive from/2.
from(X, scons(X, Y)) :- from(s(X), Y).
)lp"},
    {"P5", R"lp(% Like p4, but every step needs error(0), which has no clauses.
:- coinductive from/2.
from(X, scons(X, Y)) :- from(s(X), Y), error(0).
)lp"},
    {"P6", R"lp(% Graph connectivity; not observationally productive.
conn(X, Y) :- conn(X, Z), conn(Z, Y).
conn(a, b).
conn(b, c).
)lp"},
    {"P7", R"lp(% Overlapping heads.
p(c).
p(X) :- q(X).
)lp"},
    {"P8", R"lp(% Fibonacci stream paired with a stream of naturals.
:- coinductive nats/1, fibs/3.
nat(0).
nat(s(X)) :- nat(X).
nats(scons(X, Y)) :- nat(X), nats(Y).
add(0, Y, Y).
add(s(X), Y, s(Z)) :- add(X, Y, Z).
fibs(X, Y, cons(X, S)) :- add(X, Y, Z), fibs(Y, Z, S).
fibnats(X, Y) :- fibs(0, s(0), X), nats(Y).
)lp"},
    {"P9", R"lp(anySuccessor(s(X)).
)lp"},
    {"P10", R"lp(:- coinductive p/2.
p(X, f(X)) :- p(X, X).
)lp"},
    {"P11", R"lp(% p4 plus a predicate whose body only observes from/2.
:- coinductive from/2.
from(X, scons(X, Y)) :- from(s(X), Y).
p(Y) :- from(0, X).
)lp"},
    {"P12", R"lp(% The stream of zeros.
:- coinductive zeros/1.
zeros(scons(0, X)) :- zeros(X).
)lp"},
    {"bad", R"lp(% Loops without producing anything.
:- coinductive bad/1.
bad(f(X)) :- bad(f(X)).
)lp"},
    {"good", R"lp(% Builds f(f(...)) one layer per step.
:- coinductive good/1.
good(f(X)) :- good(X).
)lp"},
  };
  return *s;
}

}  // namespace

const std::map<std::string, ParsedProgram>& corpus_entries() {
  static const auto* entries = [] {
    auto* m = new std::map<std::string, ParsedProgram>;
    for (const auto& [name, src] : sources()) m->emplace(name, parse_program(src));
    return m;
  }();
  return *entries;
}

std::map<std::string, Program> corpus() {
  std::map<std::string, Program> out;
  for (const auto& [name, parsed] : corpus_entries()) out.emplace(name, parsed.program);
  return out;
}

const ParsedProgram& corpus_entry(const std::string& name) {
  auto it = corpus_entries().find(name);
  if (it == corpus_entries().end()) throw std::out_of_range("no corpus program " + name);
  return it->second;
}

const std::string& corpus_source(const std::string& name) {
  for (const auto& [n, src] : sources()) {
    if (n == name) return src;
  }
  throw std::out_of_range("no corpus program " + name);
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [n, src] : sources()) out.push_back(n);
  return out;
}

}  // namespace strucres
