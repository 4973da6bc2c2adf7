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

#ifndef STRUCRES_UNIFY_H_
#define STRUCRES_UNIFY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strucres/rational.h"
#include "strucres/substitution.h"
#include "strucres/term.h"

namespace strucres {

// Most general matcher: sigma with sigma(pattern) == subject, binding only
// pattern variables. Subject variables behave as constants.
std::optional<Substitution> mgm(const Term& pattern, const Term& subject);

// Each term is an instance of the other: equal up to variable renaming.
bool is_variant(const Term& a, const Term& b);

struct NoUnify {};

// Solved form that mentions its own domain: a system of rational
// equations, obtained only when the occurs check is off.
class RationalBindings {
 public:
  explicit RationalBindings(std::map<Var, Term> equations)
      : equations_(std::move(equations)) {}

  const std::map<Var, Term>& equations() const { return equations_; }
  // The rational tree bound to v, minimised.
  RationalTerm term_for(const Var& v) const;
  std::string to_string(const PrintOptions& opts = {}) const;

 private:
  std::map<Var, Term> equations_;
};

using UnifyResult = std::variant<Substitution, RationalBindings, NoUnify>;

// Robinson unification. With the occurs check the result is an idempotent
// mgu or NoUnify. Without it, cyclic solutions come back as
// RationalBindings and acyclic ones as an idempotent Substitution.
UnifyResult mgu(const Term& t, const Term& u, bool occurs_check);

// Occurs-checked mgu as an optional.
std::optional<Substitution> unify(const Term& t, const Term& u);

// Incremental unifier over a triangular binding store with an undo trail.
// Used to accumulate several equations and to backtrack over them.
class Unifier {
 public:
  explicit Unifier(bool occurs_check) : occurs_check_(occurs_check) {}

  bool unify(const Term& a, const Term& b);

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark);

  const std::map<Var, Term>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  // True if the binding graph has a cycle.
  bool has_cycle() const;
  // Fully resolved substitution. Requires !has_cycle().
  Substitution solved() const;

 private:
  struct Walked {
    Term term;
    std::optional<Var> last_var;  // last variable on the chain, if any
  };
  Walked walk(const Term& t) const;
  bool occurs_in(const Var& v, const Term& t) const;
  void set(const Var& v, Term t);
  Term resolve(const Term& t) const;

  bool occurs_check_;
  std::map<Var, Term> bindings_;
  std::vector<std::pair<Var, std::optional<Term>>> trail_;
};

enum class ResolventKind { kNull, kInternal, kExternal };

// Classification of a clause head against a goal term: internal when the
// head matches the term, external when they only unify, null otherwise.
struct Resolvent {
  ResolventKind kind = ResolventKind::kNull;
  Substitution theta;
};

Resolvent resolvent(const Term& clause_head, const Term& goal);

}  // namespace strucres

#endif  // STRUCRES_UNIFY_H_
