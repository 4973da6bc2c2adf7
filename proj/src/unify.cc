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

#include "strucres/unify.h"

#include <functional>
#include <set>
#include <tuple>

namespace strucres {

namespace {

bool match_into(const Term& pattern, const Term& subject,
                std::map<Var, Term>& out) {
  if (pattern.is_var()) {
    auto [it, fresh] = out.emplace(pattern.var(), subject);
    return fresh || it->second == subject;
  }
  if (subject.is_var() || pattern.symbol() != subject.symbol() ||
      pattern.arity() != subject.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_into(pattern.arg(i), subject.arg(i), out)) return false;
  }
  return true;
}

// Older variables survive: lower generation first, then name.
bool older(const Var& a, const Var& b) {
  return std::tie(a.gen, a.name) < std::tie(b.gen, b.name);
}

}  // namespace

std::optional<Substitution> mgm(const Term& pattern, const Term& subject) {
  std::map<Var, Term> out;
  if (!match_into(pattern, subject, out)) return std::nullopt;
  Substitution s;
  for (auto& [v, t] : out) s.bind(v, std::move(t));
  return s;
}

bool is_variant(const Term& a, const Term& b) {
  return mgm(a, b).has_value() && mgm(b, a).has_value();
}

RationalTerm RationalBindings::term_for(const Var& v) const {
  return RationalTerm(v, equations_).minimized();
}

std::string RationalBindings::to_string(const PrintOptions& opts) const {
  VarNaming local;
  PrintOptions o = opts;
  if (!o.naming) {
    std::set<Var> all;
    for (const auto& [v, t] : equations_) {
      all.insert(v);
      collect_vars(t, all);
    }
    local = VarNaming::for_vars(all);
    o.naming = &local;
  }
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : equations_) {
    if (!first) out += ", ";
    first = false;
    out += o.naming->name(v) + " = " + strucres::to_string(t, o);
  }
  return out + "}";
}

Unifier::Walked Unifier::walk(const Term& t) const {
  Walked w{t, std::nullopt};
  while (w.term.is_var()) {
    auto it = bindings_.find(w.term.var());
    if (it == bindings_.end()) break;
    w.last_var = w.term.var();
    w.term = it->second;
  }
  return w;
}

bool Unifier::occurs_in(const Var& v, const Term& t) const {
  std::set<Var> seen;
  std::function<bool(const Term&)> go = [&](const Term& u) -> bool {
    if (u.is_ground()) return false;
    if (u.is_var()) {
      if (u.var() == v) return true;
      auto it = bindings_.find(u.var());
      if (it == bindings_.end() || !seen.insert(u.var()).second) return false;
      return go(it->second);
    }
    for (const Term& a : u.args()) {
      if (go(a)) return true;
    }
    return false;
  };
  return go(t);
}

void Unifier::set(const Var& v, Term t) {
  auto it = bindings_.find(v);
  trail_.emplace_back(v, it == bindings_.end() ? std::nullopt
                                               : std::optional<Term>(it->second));
  bindings_.insert_or_assign(v, std::move(t));
}

void Unifier::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    auto& [v, old] = trail_.back();
    if (old) {
      bindings_.insert_or_assign(v, *old);
    } else {
      bindings_.erase(v);
    }
    trail_.pop_back();
  }
}

bool Unifier::unify(const Term& a, const Term& b) {
  std::size_t start = mark();
  std::vector<std::pair<Term, Term>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    Walked wx = walk(x);
    Walked wy = walk(y);
    if (wx.term.same_node(wy.term) ||
        (wx.last_var && wy.last_var && *wx.last_var == *wy.last_var)) {
      continue;
    }
    if (wx.term.is_var() && wy.term.is_var()) {
      if (wx.term.var() == wy.term.var()) continue;
      if (older(wx.term.var(), wy.term.var())) {
        set(wy.term.var(), wx.term);
      } else {
        set(wx.term.var(), wy.term);
      }
      continue;
    }
    if (wx.term.is_var() || wy.term.is_var()) {
      const Walked& v = wx.term.is_var() ? wx : wy;
      const Walked& t = wx.term.is_var() ? wy : wx;
      if (occurs_check_ && occurs_in(v.term.var(), t.term)) {
        undo(start);
        return false;
      }
      // Bind to the variable that names the application, if any, so that
      // cyclic structure is shared rather than copied.
      set(v.term.var(), t.last_var ? Term::variable(*t.last_var) : t.term);
      continue;
    }
    if (wx.term.symbol() != wy.term.symbol() ||
        wx.term.arity() != wy.term.arity()) {
      undo(start);
      return false;
    }
    if (wx.last_var && wy.last_var) {
      // Identify the two names before descending; this is what makes
      // unification of cyclic systems terminate.
      set(*wx.last_var, Term::variable(*wy.last_var));
    }
    for (std::size_t i = wx.term.arity(); i-- > 0;) {
      work.emplace_back(wx.term.arg(i), wy.term.arg(i));
    }
  }
  return true;
}

bool Unifier::has_cycle() const {
  enum class Mark { kNone, kActive, kDone };
  std::map<Var, Mark> marks;
  std::function<bool(const Var&)> visit = [&](const Var& v) -> bool {
    Mark& m = marks[v];
    if (m == Mark::kActive) return true;
    if (m == Mark::kDone) return false;
    m = Mark::kActive;
    auto it = bindings_.find(v);
    if (it != bindings_.end()) {
      for (const Var& w : vars_of(it->second)) {
        if (bindings_.count(w) && visit(w)) return true;
      }
    }
    marks[v] = Mark::kDone;
    return false;
  };
  for (const auto& [v, t] : bindings_) {
    if (visit(v)) return true;
  }
  return false;
}

Term Unifier::resolve(const Term& t) const {
  if (t.is_ground()) return t;
  if (t.is_var()) {
    auto it = bindings_.find(t.var());
    return it == bindings_.end() ? t : resolve(it->second);
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(resolve(a));
  return Term::app(t.symbol(), std::move(args));
}

Substitution Unifier::solved() const {
  Substitution s;
  for (const auto& [v, t] : bindings_) s.bind(v, resolve(t));
  return s;
}

UnifyResult mgu(const Term& t, const Term& u, bool occurs_check) {
  Unifier un(occurs_check);
  if (!un.unify(t, u)) return NoUnify{};
  if (!occurs_check && un.has_cycle()) {
    return RationalBindings(un.bindings());
  }
  return un.solved();
}

std::optional<Substitution> unify(const Term& t, const Term& u) {
  UnifyResult r = mgu(t, u, true);
  if (auto* s = std::get_if<Substitution>(&r)) return std::move(*s);
  return std::nullopt;
}

Resolvent resolvent(const Term& clause_head, const Term& goal) {
  if (auto m = mgm(clause_head, goal)) {
    return {ResolventKind::kInternal, std::move(*m)};
  }
  if (auto u = unify(clause_head, goal)) {
    return {ResolventKind::kExternal, std::move(*u)};
  }
  return {};
}

}  // namespace strucres
