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

#ifndef STRUCRES_REDUCTIONS_H_
#define STRUCRES_REDUCTIONS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strucres/program.h"
#include "strucres/substitution.h"
#include "strucres/term.h"

namespace strucres {

// Ordered goals; the empty list is inductive success.
using GoalList = std::vector<Term>;

inline constexpr std::size_t kDefaultRewriteFuel = 10000;

struct Step {
  Substitution sigma;
  GoalList goals;
  std::size_t clause = 0;
};

// Resolution of goal `index` against every clause whose renamed head
// unifies with it (occurs check on). The unifier is applied to the whole
// list, with the clause body spliced in at `index`.
std::vector<Step> sld_step(const Program& p, const GoalList& g,
                           std::size_t index, VarSupply& supply);

// Rewriting of goal `index` by every clause whose renamed head matches it.
// Only clause variables are bound; the remaining goals are untouched.
std::vector<Step> rewrite_step(const Program& p, const GoalList& g,
                               std::size_t index, VarSupply& supply);

// Substitution steps: for each goal and clause whose renamed head has an
// external resolvent with it, the unifier applied to the whole list.
// Nothing is spliced in; callers rewrite the results to normal form.
std::vector<Step> s_step(const Program& p, const GoalList& g,
                         VarSupply& supply);

struct NormalForm {
  GoalList goals;
  std::size_t steps = 0;
};

struct FuelExhausted {
  GoalList partial;
  std::size_t steps = 0;
};

using NormalFormResult = std::variant<NormalForm, FuelExhausted>;

// Rewrites to normal form. When the empty list is reachable by some choice
// of matching clauses it is returned; otherwise the result of rewriting the
// leftmost rewritable goal with its lowest-index clause until none is left.
// `fuel` bounds the number of rewriting steps explored.
NormalFormResult rewrite_normal_form(const Program& p, const GoalList& g,
                                     std::size_t fuel, VarSupply& supply);
NormalFormResult rewrite_normal_form(const Program& p, const GoalList& g,
                                     std::size_t fuel = kDefaultRewriteFuel);

// Full S-resolution steps: each substitution step followed by rewriting to
// normal form.
std::variant<std::vector<Step>, FuelExhausted> s_reduce(const Program& p,
                                                        const GoalList& g,
                                                        std::size_t fuel,
                                                        VarSupply& supply);

// Ancestor `small` is homeomorphically embedded in `big`, with every
// variable embedding into every variable.
bool embeds(const Term& small, const Term& big);

enum class LoopKind {
  kVariant,    // descendant equals the ancestor up to renaming
  kInstance,   // descendant is an instance of the ancestor
  kEmbedding,  // ancestor embeds in the descendant; not a proof
};

std::string to_string(LoopKind k);

struct LoopWitness {
  LoopKind kind = LoopKind::kVariant;
  Predicate predicate;
  Term ancestor = Term::diamond();
  Term descendant = Term::diamond();
  // Atoms from the ancestor down to the descendant.
  std::vector<Term> chain;

  // True for variant and instance witnesses, which guarantee an infinite
  // rewriting reduction.
  bool is_proof() const { return kind != LoopKind::kEmbedding; }
  std::string to_string() const;
};

struct Productive {};
struct NonProductive {
  LoopWitness witness;
};
struct Unknown {
  std::size_t fuel_spent = 0;
};

using ProductivityVerdict = std::variant<Productive, NonProductive, Unknown>;

std::string to_string(const ProductivityVerdict& v);

// Explores rewriting reductions from the most general atom of every
// predicate and from every clause head, watching each atom's ancestor
// chain for loops. `fuel` bounds the atoms expanded.
ProductivityVerdict productivity_check(const Program& p,
                                       std::size_t fuel = kDefaultRewriteFuel);

}  // namespace strucres

#endif  // STRUCRES_REDUCTIONS_H_
