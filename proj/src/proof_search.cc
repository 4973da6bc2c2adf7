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

#include "strucres/proof_search.h"

#include <algorithm>
#include <functional>

#include "strucres/unify.h"

namespace strucres {

namespace {

std::set<Var> query_vars(const GoalClause& g) { return vars_of(g.body); }

// Success of the rewriting subtree rooted at each node, ignoring or-node
// variables and anything beyond the budget frontier.
std::vector<char> success_marks(const RewTree& t) {
  const auto& nodes = t.nodes();
  std::vector<char> ok(nodes.size(), 0);
  for (std::size_t i = nodes.size(); i-- > 0;) {
    const RewNode& n = nodes[i];
    if (!n.expanded || n.is_var()) continue;
    if (n.is_clause()) {
      ok[i] = std::all_of(n.children.begin(), n.children.end(),
                          [&](std::size_t c) { return ok[c] != 0; });
    } else {
      ok[i] = std::any_of(n.children.begin(), n.children.end(),
                          [&](std::size_t c) { return ok[c] != 0; });
    }
  }
  return ok;
}

bool within(const RewTree& t, std::size_t i, const Position& top) {
  return top.is_prefix_of(t.node(i).position);
}

// Or-node variables with a non-empty transition, breadth-first, optionally
// restricted to the subtree at `scope`.
std::vector<std::size_t> open_vars(const RewTree& t,
                                   const std::optional<Position>& scope = {}) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t.node(i).is_var()) continue;
    if (scope && !within(t, i, *scope)) continue;
    if (external_resolvent(t, i)) out.push_back(i);
  }
  return out;
}

std::optional<std::pair<RewTree, TransitionStep>> take_transition(
    const RewTree& t, std::size_t var_index) {
  auto theta = external_resolvent(t, var_index);
  if (!theta) return std::nullopt;
  const RewNode& n = t.node(var_index);
  TransitionStep step;
  step.position = n.position;
  step.or_var = n.var().id;
  step.clause = n.var().clause;
  step.theta = *theta;
  step.shown = theta->restricted_to(vars_of(t.node(*n.parent).term()));
  RewTree next = build_rew(t.program(), t.goal(), compose(*theta, t.sigma()),
                           t.derivation_options());
  return std::make_pair(std::move(next), std::move(step));
}

enum class SearchEnd { kFound, kExhausted, kFuelOut };

// Iterative deepening over tree transitions. `accept` inspects each tree
// reached and returns true to stop the search.
class DeepeningSearch {
 public:
  using Accept = std::function<bool(const RewTree&, const std::vector<TransitionStep>&)>;

  DeepeningSearch(const SearchOptions& opts, std::size_t* spent,
                  std::optional<Position> scope, Accept accept)
      : opts_(opts), spent_(spent), scope_(std::move(scope)),
        accept_(std::move(accept)) {}

  SearchEnd run(const RewTree& start) {
    for (std::size_t limit = 0; limit <= opts_.max_depth; ++limit) {
      cut_ = false;
      partial_ = false;
      seen_.clear();
      path_.clear();
      if (dfs(start, limit)) return SearchEnd::kFound;
      if (out_of_fuel_) return SearchEnd::kFuelOut;
      if (!cut_) return partial_ ? SearchEnd::kFuelOut : SearchEnd::kExhausted;
    }
    return SearchEnd::kFuelOut;
  }

  const std::optional<RewTree>& deepest() const { return deepest_; }

 private:
  bool dfs(const RewTree& t, std::size_t remaining) {
    if (!deepest_ || path_.size() > deepest_len_) {
      deepest_ = t;
      deepest_len_ = path_.size();
    }
    if (accept_(t, path_)) return true;
    if (t.exhausted()) partial_ = true;
    std::vector<std::size_t> vars = open_vars(t, scope_);
    if (remaining == 0) {
      if (!vars.empty()) cut_ = true;
      return false;
    }
    for (std::size_t vi : vars) {
      if (*spent_ >= opts_.fuel) {
        out_of_fuel_ = true;
        return false;
      }
      ++*spent_;
      auto next = take_transition(t, vi);
      if (!next) continue;
      std::string key = next->first.sigma().to_string();
      auto it = seen_.find(key);
      if (it != seen_.end() && it->second >= remaining - 1) continue;
      seen_[key] = remaining - 1;
      path_.push_back(std::move(next->second));
      if (dfs(next->first, remaining - 1)) return true;
      path_.pop_back();
      if (out_of_fuel_) return false;
    }
    return false;
  }

  const SearchOptions& opts_;
  std::size_t* spent_;
  std::optional<Position> scope_;
  Accept accept_;
  std::map<std::string, std::size_t> seen_;
  std::vector<TransitionStep> path_;
  std::optional<RewTree> deepest_;
  std::size_t deepest_len_ = 0;
  bool cut_ = false;
  bool partial_ = false;
  bool out_of_fuel_ = false;
};

RewTree initial_tree(const Program& p, const GoalClause& goal,
                     const SearchOptions& opts) {
  BuildOptions b;
  b.budget = opts.tree_budget;
  return build_rew(p, goal, {}, b);
}

// Closes coinductive term nodes against ancestors while proving the
// rewriting subtree below the root, backtracking over clause choices and
// loop partners.
class LoopProver {
 public:
  LoopProver(const RewTree& t, const TypingFunction& ty) : t_(t), ty_(ty) {}

  bool prove() {
    std::vector<Goal> agenda;
    push_children(agenda, 0, {});
    return solve(agenda);
  }

  const Unifier& unifier() const { return unifier_; }
  const std::vector<LoopClosure>& loops() const { return loops_; }

 private:
  struct Goal {
    std::size_t node;
    std::vector<std::size_t> ancestors;
  };
  static constexpr std::size_t kStepCap = 200000;

  void push_children(std::vector<Goal>& agenda, std::size_t clause_node,
                     const std::vector<std::size_t>& ancestors) {
    const auto& kids = t_.node(clause_node).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      agenda.push_back({*it, ancestors});
    }
  }

  bool solve(std::vector<Goal> agenda) {
    if (agenda.empty()) return true;
    if (++steps_ > kStepCap) return false;
    Goal g = std::move(agenda.back());
    agenda.pop_back();
    const RewNode& n = t_.node(g.node);
    if (!n.expanded) return false;
    std::vector<std::size_t> chain = g.ancestors;
    chain.push_back(g.node);
    for (std::size_t c : n.children) {
      const RewNode& cn = t_.node(c);
      if (!cn.is_clause() || !cn.expanded) continue;
      std::vector<Goal> next = agenda;
      push_children(next, c, chain);
      std::size_t mark = unifier_.mark();
      std::size_t loops = loops_.size();
      if (solve(std::move(next))) return true;
      unifier_.undo(mark);
      loops_.resize(loops);
    }
    if (!ty_.is_coinductive(n.term())) return false;
    Predicate pred = Predicate::of(n.term());
    for (auto it = g.ancestors.rbegin(); it != g.ancestors.rend(); ++it) {
      const RewNode& a = t_.node(*it);
      if (Predicate::of(a.term()) != pred) continue;
      std::size_t mark = unifier_.mark();
      if (unifier_.unify(a.term(), n.term())) {
        loops_.push_back({a.position, n.position, a.term(), n.term()});
        if (solve(agenda)) return true;
        loops_.pop_back();
      }
      unifier_.undo(mark);
    }
    return false;
  }

  const RewTree& t_;
  const TypingFunction& ty_;
  Unifier unifier_{false};
  std::vector<LoopClosure> loops_;
  std::size_t steps_ = 0;
};

CoinductiveAnswer assemble(const RewTree& t, const GoalClause& goal,
                           const LoopProver& prover,
                           std::vector<TransitionStep> steps) {
  CoinductiveAnswer a;
  a.loops = prover.loops();
  a.unifier = prover.unifier().bindings();
  for (const Var& v : query_vars(goal)) {
    Term value = t.sigma().apply(Term::variable(v));
    std::map<Var, Term> eqs = a.unifier;
    if (!(value.is_var() && value.var() == v)) eqs.insert_or_assign(v, value);
    RationalTerm r = RationalTerm(v, std::move(eqs)).minimized();
    bool infinite = r.is_infinite();
    a.bindings.push_back({v, std::move(r), infinite});
  }
  a.steps = std::move(steps);
  a.final_tree = t;
  return a;
}

Refutation make_refutation(const RewTree& t, const GoalClause& goal,
                           SuccessSubtree success,
                           std::vector<TransitionStep> steps) {
  Refutation r;
  r.steps = std::move(steps);
  r.final_tree = t;
  r.success = std::move(success);
  r.answer = t.sigma().restricted_to(query_vars(goal));
  return r;
}

GoalClause single(const Term& t) { return GoalClause{{t}}; }

}  // namespace

RefuteResult s_refute(const Program& p, const GoalClause& goal,
                      const SearchOptions& opts) {
  std::optional<Refutation> found;
  std::size_t spent = 0;
  DeepeningSearch search(opts, &spent, std::nullopt,
                         [&](const RewTree& t, const std::vector<TransitionStep>& path) {
                           auto s = find_success_subtree(t);
                           if (!s) return false;
                           found = make_refutation(t, goal, std::move(*s), path);
                           return true;
                         });
  switch (search.run(initial_tree(p, goal, opts))) {
    case SearchEnd::kFound: return std::move(*found);
    case SearchEnd::kExhausted: return Exhausted{};
    case SearchEnd::kFuelOut: break;
  }
  return FuelOut{spent, search.deepest()};
}

RefuteResult s_refute(const Program& p, const Term& goal,
                      const SearchOptions& opts) {
  return s_refute(p, single(goal), opts);
}

SldResult sld_solve(const Program& p, const GoalClause& goal,
                    const SearchOptions& opts) {
  std::uint32_t base = p.max_gen();
  for (const Term& t : goal.body) base = std::max(base, t.max_gen());
  std::set<Var> qv = query_vars(goal);
  std::size_t spent = 0;
  bool cut = false;
  bool out = false;
  std::optional<SldAnswer> answer;
  std::function<bool(const GoalList&, const Substitution&, std::size_t,
                     std::size_t, VarSupply&)>
      dfs = [&](const GoalList& g, const Substitution& acc, std::size_t remaining,
                std::size_t depth, VarSupply& supply) -> bool {
    if (g.empty()) {
      answer = SldAnswer{acc.restricted_to(qv), depth};
      return true;
    }
    if (remaining == 0) {
      cut = true;
      return false;
    }
    if (spent >= opts.fuel) {
      out = true;
      return false;
    }
    ++spent;
    for (Step& s : sld_step(p, g, 0, supply)) {
      if (dfs(s.goals, compose(s.sigma, acc), remaining - 1, depth + 1, supply)) {
        return true;
      }
      if (out) return false;
    }
    return false;
  };
  for (std::size_t limit = 0; limit <= opts.max_depth; ++limit) {
    cut = false;
    VarSupply supply(base + 1);
    if (dfs(goal.body, {}, limit, 0, supply)) return std::move(*answer);
    if (out) return FuelOut{spent, std::nullopt};
    if (!cut) return Exhausted{};
  }
  return FuelOut{spent, std::nullopt};
}

SldResult sld_solve(const Program& p, const Term& goal,
                    const SearchOptions& opts) {
  return sld_solve(p, single(goal), opts);
}

ColpResult colp_s_solve(const Program& p, const GoalClause& goal,
                        const TypingFunction& ty, const SearchOptions& opts) {
  ProductivityVerdict verdict = productivity_check(p, opts.rewrite_fuel);
  if (auto* np = std::get_if<NonProductive>(&verdict)) {
    return NonProductiveRejected{np->witness};
  }
  std::optional<ColpResult> found;
  std::size_t spent = 0;
  DeepeningSearch search(
      opts, &spent, std::nullopt,
      [&](const RewTree& t, const std::vector<TransitionStep>& path) {
        if (auto s = find_success_subtree(t)) {
          found = make_refutation(t, goal, std::move(*s), path);
          return true;
        }
        LoopProver prover(t, ty);
        if (!prover.prove()) return false;
        found = assemble(t, goal, prover, path);
        return true;
      });
  switch (search.run(initial_tree(p, goal, opts))) {
    case SearchEnd::kFound: return std::move(*found);
    case SearchEnd::kExhausted:
      return Fail{"no refutation and no coinductive loop"};
    case SearchEnd::kFuelOut: break;
  }
  return FuelOut{spent, search.deepest()};
}

ColpResult colp_s_solve(const Program& p, const Term& goal,
                        const TypingFunction& ty, const SearchOptions& opts) {
  return colp_s_solve(p, single(goal), ty, opts);
}

namespace {

// Term nodes of the current rewriting subtree that no clause resolves yet,
// breadth-first. A term node follows its first expanded clause child.
std::vector<std::size_t> frontier(const RewTree& t, bool* blocked) {
  std::vector<std::size_t> out;
  std::vector<std::size_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const RewNode& n = t.node(queue[q]);
    if (!n.expanded) {
      *blocked = true;
      continue;
    }
    if (n.is_clause()) {
      for (std::size_t c : n.children) queue.push_back(c);
      continue;
    }
    std::optional<std::size_t> pick;
    for (std::size_t c : n.children) {
      if (t.node(c).is_clause()) {
        pick = c;
        break;
      }
    }
    if (pick) {
      queue.push_back(*pick);
    } else {
      out.push_back(queue[q]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ObserveResult observe(const Program& p, const Term& goal,
                      const TypingFunction& ty, std::uint32_t depth,
                      const SearchOptions& opts) {
  ProductivityVerdict verdict = productivity_check(p, opts.rewrite_fuel);
  if (auto* np = std::get_if<NonProductive>(&verdict)) {
    return NonProductiveRejected{np->witness};
  }
  GoalClause query = single(goal);
  RewTree tree = initial_tree(p, query, opts);
  std::vector<TransitionStep> steps;
  std::size_t spent = 0;
  auto observation = [&](bool terminated, GoalList residual) {
    Observation o;
    o.depth = depth;
    o.instance = tree.sigma().apply(goal);
    o.approximation = truncate(depth, o.instance);
    o.resolvents_used = steps.size();
    o.residual = std::move(residual);
    o.steps = steps;
    o.terminated = terminated;
    return o;
  };
  while (true) {
    if (truncate(depth, tree.sigma().apply(goal)).is_ground()) {
      bool blocked = false;
      GoalList residual;
      for (std::size_t i : frontier(tree, &blocked)) {
        residual.push_back(tree.node(i).term());
      }
      return observation(false, std::move(residual));
    }
    if (spent >= opts.fuel) return FuelOut{spent, tree};
    bool blocked = false;
    std::vector<std::size_t> open = frontier(tree, &blocked);
    if (blocked) return FuelOut{spent, tree};
    if (open.empty()) return observation(true, {});

    auto inductive = std::find_if(open.begin(), open.end(), [&](std::size_t i) {
      return !ty.is_coinductive(tree.node(i).term());
    });
    if (inductive != open.end()) {
      Position at = tree.node(*inductive).position;
      Term stuck = tree.node(*inductive).term();
      std::optional<std::pair<RewTree, std::vector<TransitionStep>>> closed;
      DeepeningSearch local(
          opts, &spent, at,
          [&](const RewTree& t, const std::vector<TransitionStep>& path) {
            const RewNode* n = t.at(at);
            if (!n) return false;
            std::vector<char> ok = success_marks(t);
            if (!ok[n - t.nodes().data()]) return false;
            closed.emplace(t, path);
            return true;
          });
      switch (local.run(tree)) {
        case SearchEnd::kFound:
          tree = std::move(closed->first);
          steps.insert(steps.end(), closed->second.begin(), closed->second.end());
          continue;
        case SearchEnd::kExhausted:
          return InductiveFailure{stuck, "inductive goal has no refutation"};
        case SearchEnd::kFuelOut:
          return FuelOut{spent, tree};
      }
    }

    std::size_t target = open.front();
    std::optional<std::size_t> var;
    for (std::size_t c : tree.node(target).children) {
      if (tree.node(c).is_var() && external_resolvent(tree, c)) {
        var = c;
        break;
      }
    }
    if (!var) {
      return InductiveFailure{tree.node(target).term(),
                              "no clause resolves the coinductive goal"};
    }
    ++spent;
    auto next = take_transition(tree, *var);
    steps.push_back(std::move(next->second));
    tree = std::move(next->first);
  }
}

ImpliedResult implied_at_infinity(const Program& p, const Term& goal,
                                  const TypingFunction& ty,
                                  std::uint32_t depth,
                                  const SearchOptions& opts) {
  ProductivityVerdict verdict = productivity_check(p, opts.rewrite_fuel);
  if (auto* np = std::get_if<NonProductive>(&verdict)) {
    return ImpliedFailure{"non-productive program", np->witness};
  }
  NormalFormResult nf = rewrite_normal_form(p, {goal}, opts.rewrite_fuel);
  if (std::holds_alternative<FuelExhausted>(nf)) {
    return ImpliedFailure{"rewriting did not reach a normal form", std::nullopt};
  }
  ImpliedWitness w;
  w.goal = goal;
  w.normal_form = std::get<NormalForm>(nf).goals;
  w.rewrite_steps = std::get<NormalForm>(nf).steps;
  if (w.normal_form.empty()) {
    RefuteResult r = s_refute(p, goal, opts);
    if (auto* ref = std::get_if<Refutation>(&r)) {
      w.evidence.emplace_back(std::move(*ref));
      return w;
    }
    return ImpliedFailure{"no refutation of " + to_string(goal), std::nullopt};
  }
  SearchOptions loop_opts = opts;
  loop_opts.fuel = std::min<std::size_t>(opts.fuel, 500);
  loop_opts.max_depth = std::min<std::size_t>(opts.max_depth, 16);
  for (const Term& g : w.normal_form) {
    if (!ty.is_coinductive(g)) {
      RefuteResult r = s_refute(p, g, opts);
      if (auto* ref = std::get_if<Refutation>(&r)) {
        w.evidence.emplace_back(std::move(*ref));
        continue;
      }
      return ImpliedFailure{"no refutation of " + to_string(g), std::nullopt};
    }
    ColpResult c = colp_s_solve(p, g, ty, loop_opts);
    if (auto* a = std::get_if<CoinductiveAnswer>(&c)) {
      w.evidence.emplace_back(std::move(*a));
      continue;
    }
    if (auto* ref = std::get_if<Refutation>(&c)) {
      w.evidence.emplace_back(std::move(*ref));
      continue;
    }
    ObserveResult o = observe(p, g, ty, depth, opts);
    if (auto* obs = std::get_if<Observation>(&o)) {
      w.evidence.emplace_back(std::move(*obs));
      continue;
    }
    return ImpliedFailure{"no observation of " + to_string(g), std::nullopt};
  }
  return w;
}

}  // namespace strucres
