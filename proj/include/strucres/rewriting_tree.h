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

#ifndef STRUCRES_REWRITING_TREE_H_
#define STRUCRES_REWRITING_TREE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strucres/program.h"
#include "strucres/substitution.h"
#include "strucres/term.h"

namespace strucres {

inline constexpr std::size_t kDefaultTreeBudget = 20000;

// Generation used to rename the clause placed at each tree position. One
// table is shared by every tree of a derivation so that rebuilding a tree
// under a larger substitution reproduces the same clause variables.
class ScopeTable {
 public:
  explicit ScopeTable(std::uint32_t base) : next_(base) {}
  std::uint32_t generation(const Position& w);
  std::uint32_t next() const { return next_; }

 private:
  std::map<Position, std::uint32_t> gens_;
  std::uint32_t next_;
};

struct ClauseNode {
  Clause clause;
  // Index of the program clause; absent at the root.
  std::optional<std::size_t> index;
};
struct TermNode {
  Term term;
};
// Or-node variable: a pending unification with clause `clause` of the
// parent term.
struct VarNode {
  std::uint32_t id = 0;
  std::size_t clause = 0;
};

using NodePayload = std::variant<ClauseNode, TermNode, VarNode>;

struct RewNode {
  Position position;
  NodePayload payload;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  // False for nodes left on the frontier when the budget ran out.
  bool expanded = true;

  bool is_clause() const { return std::holds_alternative<ClauseNode>(payload); }
  bool is_term() const { return std::holds_alternative<TermNode>(payload); }
  bool is_var() const { return std::holds_alternative<VarNode>(payload); }
  const Clause& clause() const { return std::get<ClauseNode>(payload).clause; }
  const Term& term() const { return std::get<TermNode>(payload).term; }
  const VarNode& var() const { return std::get<VarNode>(payload); }
};

struct BuildOptions {
  std::size_t budget = kDefaultTreeBudget;
  // Shared renaming table; a fresh one is created when absent.
  std::shared_ptr<ScopeTable> scopes;
  // Or-node variable numbers to keep, by position.
  std::map<Position, std::uint32_t> or_vars;
  std::uint32_t next_or_var = 1;
};

// rew(P, C, sigma): alternating clause/variable or-nodes at even depth and
// term and-nodes at odd depth. Nodes are stored in breadth-first order.
class RewTree {
 public:
  const Program& program() const { return program_; }
  const Clause& goal() const { return goal_; }
  const Substitution& sigma() const { return sigma_; }
  const std::shared_ptr<ScopeTable>& scopes() const { return scopes_; }
  std::size_t budget() const { return budget_; }

  const std::vector<RewNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  const RewNode& root() const { return nodes_.front(); }
  const RewNode& node(std::size_t i) const { return nodes_[i]; }
  const RewNode* at(const Position& w) const;
  // Index of the node holding or-node variable `id`.
  std::optional<std::size_t> find_var(std::uint32_t id) const;

  // True when the budget ran out before the tree was complete.
  bool exhausted() const { return exhausted_; }
  // Depth of the shallowest unexpanded node; the maximum value when the
  // tree is complete.
  std::size_t complete_depth() const;

  const std::map<Position, std::uint32_t>& or_vars() const { return or_vars_; }
  std::uint32_t next_or_var() const { return next_or_var_; }

  // Options that rebuild trees of the same derivation with this tree's
  // clause renaming and or-node numbering.
  BuildOptions derivation_options() const;

  std::string to_string(const PrintOptions& opts = {}) const;

 private:
  friend class TreeBuilder;
  friend RewTree build_rew(const Program&, const Clause&, const Substitution&,
                           BuildOptions);
  friend RewTree apply_subst_tree(const Substitution&, const RewTree&);

  Program program_;
  Clause goal_{Term::diamond(), {}};
  Substitution sigma_;
  std::shared_ptr<ScopeTable> scopes_;
  std::size_t budget_ = kDefaultTreeBudget;
  std::vector<RewNode> nodes_;
  std::map<Position, std::size_t> index_;
  std::map<Position, std::uint32_t> or_vars_;
  std::uint32_t next_or_var_ = 1;
  bool exhausted_ = false;
};

// Builds rew(P, C, sigma) breadth-first. No node is expanded once the tree
// holds `budget` nodes; those left are marked unexpanded. Sigma must be
// idempotent.
RewTree build_rew(const Program& p, const Clause& c, const Substitution& sigma,
                  BuildOptions opts = {});
RewTree build_rew(const Program& p, const GoalClause& g,
                  const Substitution& sigma, BuildOptions opts = {});

// The tree theta(T): every clause and term node instantiated, and every
// variable node whose parent now matches its clause replaced by the
// rewriting tree grown from that clause.
RewTree apply_subst_tree(const Substitution& theta, const RewTree& t);

// Positions of a rewriting subtree, breadth-first.
struct SuccessSubtree {
  std::vector<Position> positions;
  // Fact leaves, in the same order.
  std::vector<Position> leaves;
};

// First success subtree, preferring lower clause indices at term nodes.
std::optional<SuccessSubtree> find_success_subtree(const RewTree& t);

struct EmptyTree {};
using TransitionResult = std::variant<RewTree, EmptyTree>;

// External resolvent of the clause behind the variable node at index
// `var_index` against its parent term, if any.
std::optional<Substitution> external_resolvent(const RewTree& t,
                                               std::size_t var_index);

// T -> T_X for the or-node variable at `var_index`.
TransitionResult transition(const RewTree& t, std::size_t var_index);
// The same, addressed by or-node variable number.
TransitionResult transition_on(const RewTree& t, std::uint32_t or_var);

enum class Openness { kOpen, kClosed };

struct NodeClass {
  Openness openness = Openness::kClosed;
  Kind kind = Kind::kInductive;
};

// Variable nodes are open when their transition is non-empty. Term nodes
// take their predicate's kind and or-nodes their parent's.
std::map<Position, NodeClass> classify_nodes(const RewTree& t,
                                             const TypingFunction& ty);

// Equal up to a bijection between or-node variable numbers.
bool equivalent(const RewTree& a, const RewTree& b);
// The same for the nodes above `depth`, which both trees must have in full.
bool equivalent_up_to(const RewTree& a, const RewTree& b, std::size_t depth);

// Clause nodes are boxes, term nodes ellipses, variable nodes diamonds.
// Unexpanded frontier nodes get a dotted continuation.
std::string to_dot(const RewTree& t, const PrintOptions& opts = {});
// {"nodes": [{"position": [..], "kind": .., "label": ..}], ...}
std::string to_json(const RewTree& t);

}  // namespace strucres

#endif  // STRUCRES_REWRITING_TREE_H_
