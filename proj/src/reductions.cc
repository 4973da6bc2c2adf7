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

#include "strucres/reductions.h"

#include <algorithm>
#include <deque>

#include "strucres/unify.h"

namespace strucres {

namespace {

GoalList splice(const GoalList& g, std::size_t index,
                const std::vector<Term>& body, const Substitution* all) {
  GoalList out;
  out.reserve(g.size() + body.size());
  auto push = [&](const Term& t) { out.push_back(all ? all->apply(t) : t); };
  for (std::size_t j = 0; j < index; ++j) push(g[j]);
  for (const Term& b : body) out.push_back(b);
  for (std::size_t j = index + 1; j < g.size(); ++j) push(g[j]);
  return out;
}

std::uint32_t max_gen(const Program& p, const GoalList& g) {
  std::uint32_t m = p.max_gen();
  for (const Term& t : g) m = std::max(m, t.max_gen());
  return m;
}

// First clause whose head matches g[i], renamed; nullopt if none does.
std::optional<Step> first_rewrite(const Program& p, const GoalList& g,
                                  std::size_t i, VarSupply& supply) {
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (p[c].head.symbol() != g[i].symbol() ||
        p[c].head.arity() != g[i].arity()) {
      continue;
    }
    if (!mgm(p[c].head, g[i])) continue;
    Clause r = rename_apart(p[c], supply);
    Substitution theta = *mgm(r.head, g[i]);
    return Step{theta, splice(g, i, theta.apply(r.body), nullptr), c};
  }
  return std::nullopt;
}

bool rewritable(const Program& p, const Term& t) {
  for (const Clause& c : p) {
    if (mgm(c.head, t)) return true;
  }
  return false;
}

NormalFormResult deterministic_normal_form(const Program& p, GoalList g,
                                           std::size_t fuel,
                                           VarSupply& supply) {
  std::size_t steps = 0;
  while (true) {
    std::optional<Step> next;
    for (std::size_t i = 0; i < g.size() && !next; ++i) {
      next = first_rewrite(p, g, i, supply);
    }
    if (!next) return NormalForm{std::move(g), steps};
    if (steps == fuel) return FuelExhausted{std::move(g), steps};
    g = std::move(next->goals);
    ++steps;
  }
}

}  // namespace

std::vector<Step> sld_step(const Program& p, const GoalList& g,
                           std::size_t index, VarSupply& supply) {
  std::vector<Step> out;
  const Term& goal = g.at(index);
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (p[c].head.symbol() != goal.symbol() ||
        p[c].head.arity() != goal.arity()) {
      continue;
    }
    Clause r = rename_apart(p[c], supply);
    auto sigma = unify(goal, r.head);
    if (!sigma) continue;
    out.push_back({*sigma, splice(g, index, sigma->apply(r.body), &*sigma), c});
  }
  return out;
}

std::vector<Step> rewrite_step(const Program& p, const GoalList& g,
                               std::size_t index, VarSupply& supply) {
  std::vector<Step> out;
  const Term& goal = g.at(index);
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (!mgm(p[c].head, goal)) continue;
    Clause r = rename_apart(p[c], supply);
    Substitution theta = *mgm(r.head, goal);
    out.push_back({theta, splice(g, index, theta.apply(r.body), nullptr), c});
  }
  return out;
}

std::vector<Step> s_step(const Program& p, const GoalList& g,
                         VarSupply& supply) {
  std::vector<Step> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (p[c].head.symbol() != g[i].symbol() ||
          p[c].head.arity() != g[i].arity()) {
        continue;
      }
      Clause r = rename_apart(p[c], supply);
      Resolvent res = resolvent(r.head, g[i]);
      if (res.kind != ResolventKind::kExternal) continue;
      out.push_back({res.theta, res.theta.apply(g), c});
    }
  }
  return out;
}

NormalFormResult rewrite_normal_form(const Program& p, const GoalList& g,
                                     std::size_t fuel, VarSupply& supply) {
  NormalFormResult det = deterministic_normal_form(p, g, fuel, supply);
  if (auto* nf = std::get_if<NormalForm>(&det); nf && nf->goals.empty()) {
    return det;
  }
  // Overlapping heads may hide a route to the empty list. Search every
  // choice of clause for the leftmost goal; a goal no clause matches can
  // never be removed, so such lists are dropped.
  std::deque<std::pair<GoalList, std::size_t>> queue;
  queue.emplace_back(g, 0);
  std::size_t spent = 0;
  while (!queue.empty()) {
    auto [cur, depth] = std::move(queue.front());
    queue.pop_front();
    if (cur.empty()) return NormalForm{{}, depth};
    if (!std::all_of(cur.begin(), cur.end(),
                     [&](const Term& t) { return rewritable(p, t); })) {
      continue;
    }
    if (spent++ == fuel) {
      if (auto* nf = std::get_if<NormalForm>(&det)) {
        return FuelExhausted{nf->goals, nf->steps};
      }
      return det;
    }
    for (Step& s : rewrite_step(p, cur, 0, supply)) {
      queue.emplace_back(std::move(s.goals), depth + 1);
    }
  }
  return det;
}

NormalFormResult rewrite_normal_form(const Program& p, const GoalList& g,
                                     std::size_t fuel) {
  VarSupply supply(max_gen(p, g) + 1);
  return rewrite_normal_form(p, g, fuel, supply);
}

std::variant<std::vector<Step>, FuelExhausted> s_reduce(const Program& p,
                                                        const GoalList& g,
                                                        std::size_t fuel,
                                                        VarSupply& supply) {
  std::vector<Step> out;
  for (Step& s : s_step(p, g, supply)) {
    NormalFormResult nf = rewrite_normal_form(p, s.goals, fuel, supply);
    if (auto* f = std::get_if<FuelExhausted>(&nf)) return std::move(*f);
    s.goals = std::move(std::get<NormalForm>(nf).goals);
    out.push_back(std::move(s));
  }
  return out;
}

bool embeds(const Term& small, const Term& big) {
  if (small.is_var() && big.is_var()) return true;
  if (big.is_var()) return false;
  for (const Term& b : big.args()) {
    if (embeds(small, b)) return true;
  }
  if (small.is_var() || small.symbol() != big.symbol() ||
      small.arity() != big.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < small.arity(); ++i) {
    if (!embeds(small.arg(i), big.arg(i))) return false;
  }
  return true;
}

std::string to_string(LoopKind k) {
  switch (k) {
    case LoopKind::kVariant: return "variant";
    case LoopKind::kInstance: return "instance";
    case LoopKind::kEmbedding: return "embedding";
  }
  return "";
}

std::string LoopWitness::to_string() const {
  VarNaming naming = VarNaming::for_terms(chain);
  PrintOptions o;
  o.naming = &naming;
  std::string out = predicate.name + " loop (" + strucres::to_string(kind) + "): ";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " → ";
    out += strucres::to_string(chain[i], o);
  }
  return out;
}

std::string to_string(const ProductivityVerdict& v) {
  if (std::holds_alternative<Productive>(v)) return "productive";
  if (auto* n = std::get_if<NonProductive>(&v)) {
    return "non-productive: " + n->witness.to_string();
  }
  return "unknown: no verdict after " +
         std::to_string(std::get<Unknown>(v).fuel_spent) + " expansions";
}

ProductivityVerdict productivity_check(const Program& p, std::size_t fuel) {
  VarSupply supply(p.max_gen() + 1);
  std::vector<Term> starts;
  for (const Predicate& pr : p.predicates()) {
    starts.push_back(most_general_atom(pr, supply.fresh()));
  }
  for (const Clause& c : p) starts.push_back(rename_apart(c, supply).head);

  struct Item {
    Term atom;
    std::vector<Term> ancestors;
  };
  std::optional<LoopWitness> heuristic;
  std::size_t spent = 0;
  for (const Term& start : starts) {
    std::vector<Item> stack{{start, {}}};
    while (!stack.empty()) {
      Item item = std::move(stack.back());
      stack.pop_back();
      if (spent == fuel) return Unknown{spent};
      ++spent;
      std::vector<Term> chain = item.ancestors;
      chain.push_back(item.atom);
      for (Step& s : rewrite_step(p, {item.atom}, 0, supply)) {
        for (Term& d : s.goals) {
          std::optional<LoopWitness> found;
          for (std::size_t a = 0; a < chain.size() && !found; ++a) {
            const Term& anc = chain[a];
            if (Predicate::of(anc) != Predicate::of(d)) continue;
            LoopKind kind;
            if (is_variant(anc, d)) {
              kind = LoopKind::kVariant;
            } else if (mgm(anc, d)) {
              kind = LoopKind::kInstance;
            } else if (embeds(anc, d)) {
              kind = LoopKind::kEmbedding;
            } else {
              continue;
            }
            LoopWitness w{kind, Predicate::of(d), anc, d,
                          std::vector<Term>(chain.begin() + a, chain.end())};
            w.chain.push_back(d);
            found = std::move(w);
          }
          if (!found) {
            stack.push_back({std::move(d), chain});
          } else if (found->is_proof()) {
            return NonProductive{std::move(*found)};
          } else if (!heuristic) {
            heuristic = std::move(found);
          }
        }
      }
    }
  }
  if (heuristic) return NonProductive{std::move(*heuristic)};
  return Productive{};
}

}  // namespace strucres
