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

#ifndef STRUCRES_PROGRAM_H_
#define STRUCRES_PROGRAM_H_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "strucres/substitution.h"
#include "strucres/term.h"

namespace strucres {

struct Predicate {
  std::string name;
  std::size_t arity = 0;

  static Predicate of(const Term& atom) { return {atom.symbol(), atom.arity()}; }
  std::string to_string() const { return name + "/" + std::to_string(arity); }

  auto operator<=>(const Predicate&) const = default;
  bool operator==(const Predicate&) const = default;
};

// Reserved head symbol of goal clauses; never produced by the parser.
inline constexpr std::string_view kGoalHead = "?";

// A ← B0, ..., Bn. Viewed as a depth-one tree: head at the root, body atom
// i at position i.
struct Clause {
  Term head;
  std::vector<Term> body;

  bool is_fact() const { return body.empty(); }
  bool is_goal() const { return !head.is_var() && head.symbol() == kGoalHead; }
  std::set<Var> vars() const;

  bool operator==(const Clause&) const = default;
};

// ? ← B0, ..., Bn.
struct GoalClause {
  std::vector<Term> body;

  Clause as_clause() const { return {Term::app(std::string(kGoalHead)), body}; }
  bool operator==(const GoalClause&) const = default;
};

Clause apply(const Substitution& s, const Clause& c);

// "p(X) ← q(X)" and "p(c) ←"; goal clauses print as "? ← g".
std::string to_string(const Clause& c, const PrintOptions& opts = {});
// Source syntax: "p(X) :- q(X)." and "p(c)."
std::string to_source(const Clause& c);

// Clause sequence P(0..n-1). Copies share the clause store.
class Program {
 public:
  Program() : clauses_(std::make_shared<std::vector<Clause>>()) {}
  explicit Program(std::vector<Clause> clauses)
      : clauses_(std::make_shared<const std::vector<Clause>>(std::move(clauses))) {}

  std::size_t size() const { return clauses_->size(); }
  const Clause& operator[](std::size_t i) const { return (*clauses_)[i]; }
  const std::vector<Clause>& clauses() const { return *clauses_; }
  auto begin() const { return clauses_->begin(); }
  auto end() const { return clauses_->end(); }

  std::set<Predicate> predicates() const;
  std::uint32_t max_gen() const;

  bool operator==(const Program& o) const { return clauses() == o.clauses(); }

 private:
  std::shared_ptr<const std::vector<Clause>> clauses_;
};

enum class Kind { kInductive, kCoinductive };

// Predicate marking; anything unmarked is inductive.
class TypingFunction {
 public:
  void mark_coinductive(const Predicate& p) { coinductive_.insert(p); }
  Kind kind(const Predicate& p) const {
    return coinductive_.count(p) ? Kind::kCoinductive : Kind::kInductive;
  }
  Kind kind_of(const Term& atom) const { return kind(Predicate::of(atom)); }
  bool is_coinductive(const Term& atom) const {
    return kind_of(atom) == Kind::kCoinductive;
  }
  const std::set<Predicate>& coinductive() const { return coinductive_; }

  bool operator==(const TypingFunction&) const = default;

 private:
  std::set<Predicate> coinductive_;
};

class ArityClash : public std::runtime_error {
 public:
  ArityClash(const std::string& symbol, std::size_t first, std::size_t second);
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

// Function and predicate symbols with their arities. Namespaces are kept
// apart: a name may be both a predicate and a function symbol.
class Signature {
 public:
  // Throws ArityClash when a symbol is used at two arities in one namespace.
  void add_function(const std::string& name, std::size_t arity);
  void add_predicate(const std::string& name, std::size_t arity);
  void add_atom(const Term& atom);
  void add_term(const Term& t);
  void add_clause(const Clause& c);

  const std::map<std::string, std::size_t>& functions() const { return functions_; }
  const std::map<std::string, std::size_t>& predicates() const { return predicates_; }
  std::vector<std::string> constants() const;
  bool has_constant() const { return !constants().empty(); }

 private:
  std::map<std::string, std::size_t> functions_;
  std::map<std::string, std::size_t> predicates_;
};

Signature infer_signature(const Program& p);

// Source of fresh variable generations. Each derivation owns one.
class VarSupply {
 public:
  explicit VarSupply(std::uint32_t next = 1) : next_(next) {}
  std::uint32_t fresh() { return next_++; }
  std::uint32_t peek() const { return next_; }

 private:
  std::uint32_t next_;
};

// Moves every variable of c to generation gen.
Clause rename_with(const Clause& c, std::uint32_t gen);
// Renames c with a generation no earlier call on the same supply used.
Clause rename_apart(const Clause& c, VarSupply& supply);

// p(X1, ..., Xk) with variables at the given generation.
Term most_general_atom(const Predicate& p, std::uint32_t gen = 0);

}  // namespace strucres

#endif  // STRUCRES_PROGRAM_H_
