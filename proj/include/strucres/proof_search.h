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

#ifndef STRUCRES_PROOF_SEARCH_H_
#define STRUCRES_PROOF_SEARCH_H_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strucres/metric.h"
#include "strucres/rational.h"
#include "strucres/reductions.h"
#include "strucres/rewriting_tree.h"

namespace strucres {

struct SearchOptions {
  // Rewriting trees built, over the whole search.
  std::size_t fuel = 2000;
  // Nodes per rewriting tree.
  std::size_t tree_budget = 1000;
  // Rewriting steps for each productivity or normal-form check.
  std::size_t rewrite_fuel = kDefaultRewriteFuel;
  // Longest derivation tried by iterative deepening.
  std::size_t max_depth = 64;
};

// One tree transition of a derivation.
struct TransitionStep {
  Position position;        // of the or-node variable
  std::uint32_t or_var = 0;
  std::size_t clause = 0;
  Substitution theta;       // the full external resolvent
  // The resolvent restricted to variables of the resolved term.
  Substitution shown;
};

struct Refutation {
  std::vector<TransitionStep> steps;
  RewTree final_tree;
  SuccessSubtree success;
  // Composed resolvents restricted to the query variables.
  Substitution answer;
};

struct Exhausted {};

struct FuelOut {
  std::size_t spent = 0;
  // The deepest tree reached, if any tree was built.
  std::optional<RewTree> deepest;
};

using RefuteResult = std::variant<Refutation, Exhausted, FuelOut>;

// Iterative deepening over S-derivations from rew(P, ? <- goal, id),
// expanding open or-node variables breadth-first in each tree. Exhausted
// is only reported when the whole transition space was explored.
RefuteResult s_refute(const Program& p, const GoalClause& goal,
                      const SearchOptions& opts = {});
RefuteResult s_refute(const Program& p, const Term& goal,
                      const SearchOptions& opts = {});

struct SldAnswer {
  Substitution answer;
  std::size_t steps = 0;
};

using SldResult = std::variant<SldAnswer, Exhausted, FuelOut>;

// Leftmost SLD resolution with iterative deepening on derivation length.
// Fuel counts resolution steps.
SldResult sld_solve(const Program& p, const GoalClause& goal,
                    const SearchOptions& opts = {});
SldResult sld_solve(const Program& p, const Term& goal,
                    const SearchOptions& opts = {});

struct NonProductiveRejected {
  LoopWitness witness;
};

// A coinductive term node closed against an ancestor of the same
// predicate.
struct LoopClosure {
  Position ancestor;
  Position descendant;
  Term ancestor_term = Term::diamond();
  Term descendant_term = Term::diamond();
};

struct QueryBinding {
  Var var;
  RationalTerm value;
  bool rational = false;  // the denoted tree is infinite
};

struct CoinductiveAnswer {
  std::vector<QueryBinding> bindings;
  std::vector<LoopClosure> loops;
  // Equations produced by closing the loops.
  std::map<Var, Term> unifier;
  std::vector<TransitionStep> steps;
  RewTree final_tree;
};

struct Fail {
  std::string reason;
};

using ColpResult = std::variant<CoinductiveAnswer, Refutation, Fail,
                                NonProductiveRejected, FuelOut>;

// Productivity gate, then S-derivation search in which a coinductive term
// node may also close against a unifiable coinductive ancestor of the same
// predicate (occurs check off).
ColpResult colp_s_solve(const Program& p, const GoalClause& goal,
                        const TypingFunction& ty, const SearchOptions& opts = {});
ColpResult colp_s_solve(const Program& p, const Term& goal,
                        const TypingFunction& ty, const SearchOptions& opts = {});

struct Observation {
  std::uint32_t depth = 0;
  TruncatedTerm approximation{Term::diamond(), 0};
  // Composed resolvents applied to the query.
  Term instance = Term::diamond();
  std::size_t resolvents_used = 0;
  // Coinductive goals still open.
  GoalList residual;
  std::vector<TransitionStep> steps;
  // True when the derivation ended in an inductive success tree before the
  // requested depth was ground; the approximation may then hold variables.
  bool terminated = false;
};

struct InductiveFailure {
  Term goal = Term::diamond();
  std::string reason;
};

using ObserveResult =
    std::variant<Observation, NonProductiveRejected, FuelOut, InductiveFailure>;

// Single fair S-derivation: inductive frontier goals are closed by local
// refutation before any coinductive goal is expanded; coinductive goals are
// expanded shallowest first. Stops once the instantiated query has no
// variables above `depth`.
ObserveResult observe(const Program& p, const Term& goal,
                      const TypingFunction& ty, std::uint32_t depth,
                      const SearchOptions& opts = {});

using GoalEvidence = std::variant<Refutation, CoinductiveAnswer, Observation>;

struct ImpliedWitness {
  Term goal = Term::diamond();
  GoalList normal_form;
  std::size_t rewrite_steps = 0;
  // One entry per goal of the normal form; a single refutation of the goal
  // itself when the normal form is empty.
  std::vector<GoalEvidence> evidence;
};

struct ImpliedFailure {
  std::string reason;
  std::optional<LoopWitness> non_productive;
};

using ImpliedResult = std::variant<ImpliedWitness, ImpliedFailure>;

ImpliedResult implied_at_infinity(const Program& p, const Term& goal,
                                  const TypingFunction& ty,
                                  std::uint32_t depth,
                                  const SearchOptions& opts = {});

}  // namespace strucres

#endif  // STRUCRES_PROOF_SEARCH_H_
