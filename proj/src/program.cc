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

#include "strucres/program.h"

#include <algorithm>

namespace strucres {

std::set<Var> Clause::vars() const {
  std::set<Var> out;
  collect_vars(head, out);
  for (const Term& b : body) collect_vars(b, out);
  return out;
}

Clause apply(const Substitution& s, const Clause& c) {
  return {s.apply(c.head), s.apply(c.body)};
}

std::string to_string(const Clause& c, const PrintOptions& opts) {
  VarNaming local;
  PrintOptions o = opts;
  if (!o.naming) {
    local = VarNaming::for_vars(c.vars());
    o.naming = &local;
  }
  std::string out = to_string(c.head, o) + " ←";
  if (!c.body.empty()) out += " " + to_string(c.body, o);
  return out;
}

std::string to_source(const Clause& c) {
  PrintOptions o;
  VarNaming naming = VarNaming::for_vars(c.vars());
  o.naming = &naming;
  std::string out = to_string(c.head, o);
  if (!c.body.empty()) out += " :- " + to_string(c.body, o);
  return out + ".";
}

std::set<Predicate> Program::predicates() const {
  std::set<Predicate> out;
  for (const Clause& c : *clauses_) {
    out.insert(Predicate::of(c.head));
    for (const Term& b : c.body) out.insert(Predicate::of(b));
  }
  return out;
}

std::uint32_t Program::max_gen() const {
  std::uint32_t g = 0;
  for (const Clause& c : *clauses_) {
    g = std::max(g, c.head.max_gen());
    for (const Term& b : c.body) g = std::max(g, b.max_gen());
  }
  return g;
}

ArityClash::ArityClash(const std::string& symbol, std::size_t first,
                       std::size_t second)
    : std::runtime_error("symbol '" + symbol + "' used with arity " +
                         std::to_string(first) + " and " +
                         std::to_string(second)),
      symbol_(symbol) {}

namespace {

void add_checked(std::map<std::string, std::size_t>& table,
                 const std::string& name, std::size_t arity) {
  auto [it, fresh] = table.emplace(name, arity);
  if (!fresh && it->second != arity) throw ArityClash(name, it->second, arity);
}

}  // namespace

void Signature::add_function(const std::string& name, std::size_t arity) {
  add_checked(functions_, name, arity);
}

void Signature::add_predicate(const std::string& name, std::size_t arity) {
  add_checked(predicates_, name, arity);
}

void Signature::add_term(const Term& t) {
  if (t.is_var()) return;
  add_function(t.symbol(), t.arity());
  for (const Term& a : t.args()) add_term(a);
}

void Signature::add_atom(const Term& atom) {
  add_predicate(atom.symbol(), atom.arity());
  for (const Term& a : atom.args()) add_term(a);
}

void Signature::add_clause(const Clause& c) {
  add_atom(c.head);
  for (const Term& b : c.body) add_atom(b);
}

std::vector<std::string> Signature::constants() const {
  std::vector<std::string> out;
  for (const auto& [name, arity] : functions_) {
    if (arity == 0) out.push_back(name);
  }
  return out;
}

Signature infer_signature(const Program& p) {
  Signature sig;
  for (const Clause& c : p) sig.add_clause(c);
  return sig;
}

namespace {

Term move_to_gen(const Term& t, std::uint32_t gen) {
  if (t.is_ground()) return t;
  if (t.is_var()) return Term::variable(t.symbol(), gen);
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(move_to_gen(a, gen));
  return Term::app(t.symbol(), std::move(args));
}

}  // namespace

Clause rename_with(const Clause& c, std::uint32_t gen) {
  std::set<Var> vs = c.vars();
  std::set<std::string> names;
  bool collide = false;
  for (const Var& v : vs) collide = collide || !names.insert(v.name).second;
  if (!collide) {
    Clause out{move_to_gen(c.head, gen), {}};
    out.body.reserve(c.body.size());
    for (const Term& b : c.body) out.body.push_back(move_to_gen(b, gen));
    return out;
  }
  Substitution s;
  for (const Var& v : vs) s.bind(v, Term::variable(to_string(v), gen));
  return apply(s, c);
}

Clause rename_apart(const Clause& c, VarSupply& supply) {
  return rename_with(c, supply.fresh());
}

Term most_general_atom(const Predicate& p, std::uint32_t gen) {
  std::vector<Term> args;
  args.reserve(p.arity);
  for (std::size_t i = 0; i < p.arity; ++i) {
    args.push_back(Term::variable("X" + std::to_string(i + 1), gen));
  }
  return Term::app(p.name, std::move(args));
}

}  // namespace strucres
