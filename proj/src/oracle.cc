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

#include "strucres/oracle.h"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "strucres/unify.h"

namespace strucres {

UniverseTooLarge::UniverseTooLarge(std::size_t cap)
    : std::runtime_error("bounded Herbrand universe exceeds " +
                         std::to_string(cap) + " terms") {}

NotGround::NotGround(const Term& t)
    : std::invalid_argument("not ground: " + to_string(t)) {}

std::vector<Term> herbrand_universe(const Program& p, std::size_t depth_bound,
                                    std::size_t cap) {
  Signature sig = infer_signature(p);
  std::vector<std::pair<std::string, std::size_t>> functors;
  std::vector<Term> level;
  for (const auto& [name, arity] : sig.functions()) {
    if (arity == 0) {
      level.push_back(Term::app(name));
    } else {
      functors.emplace_back(name, arity);
    }
  }
  if (level.empty()) {
    std::string name = "c0";
    while (sig.functions().count(name)) name += "_";
    level.push_back(Term::app(name));
  }
  std::set<Term> all(level.begin(), level.end());
  if (all.size() > cap) throw UniverseTooLarge(cap);
  for (std::size_t d = 1; d <= depth_bound; ++d) {
    std::vector<Term> pool(all.begin(), all.end());
    std::vector<Term> fresh;
    for (const auto& [name, arity] : functors) {
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        std::vector<Term> args;
        std::size_t top = 0;
        for (std::size_t i : idx) {
          args.push_back(pool[i]);
          top = std::max(top, pool[i].depth());
        }
        // Only terms whose depth is exactly d are new at this level.
        if (top + 1 == d) {
          fresh.push_back(Term::app(name, std::move(args)));
          if (all.size() + fresh.size() > cap) throw UniverseTooLarge(cap);
        }
        std::size_t k = 0;
        while (k < arity && ++idx[k] == pool.size()) idx[k++] = 0;
        if (k == arity) break;
      }
    }
    if (fresh.empty()) break;
    all.insert(fresh.begin(), fresh.end());
  }
  return {all.begin(), all.end()};
}

namespace {

bool within_bound(const Substitution& s, std::size_t bound) {
  for (const auto& [v, t] : s.bindings()) {
    if (t.depth() > bound) return false;
  }
  return true;
}

// Extends `s` so that s(pattern) equals the ground `fact`.
std::optional<Substitution> extend_match(const Substitution& s,
                                         const Term& pattern, const Term& fact) {
  Term p = s.apply(pattern);
  auto m = mgm(p, fact);
  if (!m) return std::nullopt;
  Substitution out = s;
  for (const auto& [v, t] : m->bindings()) out.bind(v, t);
  return out;
}

}  // namespace

HerbrandSlice forward_closure(const Program& p, std::size_t iterations,
                              std::size_t depth_bound, std::size_t cap) {
  HerbrandSlice slice;
  slice.depth_bound = depth_bound;
  std::optional<std::vector<Term>> universe;
  auto ground_rest = [&](const Clause& c, const Substitution& s,
                         std::set<Term>& out) {
    std::set<Var> left;
    for (const Var& v : vars_of(c.head)) {
      if (!s.lookup(v)) left.insert(v);
    }
    std::vector<Var> free(left.begin(), left.end());
    if (!free.empty() && !universe) universe = herbrand_universe(p, depth_bound, cap);
    std::function<void(std::size_t, Substitution&)> fill =
        [&](std::size_t i, Substitution& cur) {
          if (i == free.size()) {
            out.insert(cur.apply(c.head));
            if (out.size() > cap) throw UniverseTooLarge(cap);
            return;
          }
          for (const Term& u : *universe) {
            Substitution next = cur;
            next.bind(free[i], u);
            fill(i + 1, next);
          }
        };
    Substitution start = s;
    fill(0, start);
  };

  std::set<Term> delta;
  for (std::size_t round = 0; round < iterations; ++round) {
    std::set<Term> derived;
    for (const Clause& c : p) {
      // Body atoms are matched against known facts; from the second round
      // on at least one of them must come from the previous round.
      std::function<void(std::size_t, const Substitution&, bool)> join =
          [&](std::size_t i, const Substitution& s, bool used_delta) {
            if (i == c.body.size()) {
              if (round > 0 && !used_delta) return;
              ground_rest(c, s, derived);
              return;
            }
            for (const Term& fact : slice.terms) {
              if (fact.symbol() != c.body[i].symbol() ||
                  fact.arity() != c.body[i].arity()) {
                continue;
              }
              auto next = extend_match(s, c.body[i], fact);
              if (!next || !within_bound(*next, depth_bound)) continue;
              join(i + 1, *next, used_delta || delta.count(fact) > 0);
            }
          };
      join(0, Substitution{}, false);
    }
    std::set<Term> added;
    for (const Term& t : derived) {
      if (!slice.terms.count(t)) added.insert(t);
    }
    slice.iterations = round + 1;
    if (added.empty()) {
      slice.fixpoint = true;
      break;
    }
    slice.terms.insert(added.begin(), added.end());
    delta = std::move(added);
  }
  return slice;
}

bool member(const HerbrandSlice& slice, const Term& g) {
  if (!g.is_ground()) throw NotGround(g);
  return slice.terms.count(g) > 0;
}

}  // namespace strucres
