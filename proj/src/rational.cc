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

#include "strucres/rational.h"

#include <functional>
#include <set>
#include <vector>

#include "strucres/substitution.h"

namespace strucres {

namespace {

// Bound variables occurring in t.
std::vector<Var> bound_vars(const Term& t, const std::map<Var, Term>& eqs) {
  std::vector<Var> out;
  for (const Var& v : vars_of(t)) {
    if (eqs.count(v)) out.push_back(v);
  }
  return out;
}

std::set<Var> reachable(const Var& root, const std::map<Var, Term>& eqs) {
  std::set<Var> seen;
  std::vector<Var> stack{root};
  while (!stack.empty()) {
    Var v = stack.back();
    stack.pop_back();
    auto it = eqs.find(v);
    if (it == eqs.end() || !seen.insert(v).second) continue;
    for (const Var& w : bound_vars(it->second, eqs)) stack.push_back(w);
  }
  return seen;
}

bool on_cycle(const Var& v, const std::map<Var, Term>& eqs) {
  auto it = eqs.find(v);
  if (it == eqs.end()) return false;
  for (const Var& w : bound_vars(it->second, eqs)) {
    if (reachable(w, eqs).count(v)) return true;
  }
  return false;
}

void signature(const Term& t, const std::map<Var, int>& cls, std::string& out) {
  if (t.is_var()) {
    auto it = cls.find(t.var());
    out += it == cls.end() ? "$" + to_string(t.var()) : "#" + std::to_string(it->second);
    return;
  }
  out += t.symbol();
  out += "(";
  for (const Term& a : t.args()) {
    signature(a, cls, out);
    out += ",";
  }
  out += ")";
}

}  // namespace

RationalTerm::RationalTerm(Var root, std::map<Var, Term> equations)
    : root_(std::move(root)), equations_(std::move(equations)) {
  for (const auto& [v, t] : equations_) {
    std::set<Var> chain{v};
    Term cur = t;
    while (cur.is_var()) {
      auto it = equations_.find(cur.var());
      if (it == equations_.end()) break;
      if (!chain.insert(cur.var()).second) {
        throw IllFormedRationalTerm("variable cycle through " + strucres::to_string(v));
      }
      cur = it->second;
    }
  }
}

bool RationalTerm::is_infinite() const {
  for (const Var& v : reachable(root_, equations_)) {
    if (on_cycle(v, equations_)) return true;
  }
  return false;
}

Term RationalTerm::unfold_at(const Term& t, std::uint32_t remaining) const {
  if (remaining == 0) return Term::diamond();
  if (t.is_var()) {
    auto it = equations_.find(t.var());
    return it == equations_.end() ? t : unfold_at(it->second, remaining);
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(unfold_at(a, remaining - 1));
  return Term::app(t.symbol(), std::move(args));
}

TruncatedTerm RationalTerm::unfold(std::uint32_t n) const {
  return TruncatedTerm(unfold_at(Term::variable(root_), n), n);
}

RationalTerm RationalTerm::minimized() const {
  // Collapse variable-to-variable equations.
  std::map<Var, Term> eqs;
  Substitution alias;
  for (const auto& [v, t] : equations_) {
    Term cur = t;
    while (cur.is_var() && equations_.count(cur.var())) {
      cur = equations_.at(cur.var());
    }
    if (cur.is_var()) {
      alias.bind(v, cur);
    } else {
      eqs.emplace(v, cur);
    }
  }
  if (const Term* a = alias.lookup(root_)) {
    return RationalTerm(root_, {{root_, *a}});
  }
  for (auto& [v, t] : eqs) t = alias.apply(t);

  std::set<Var> live = reachable(root_, eqs);
  std::erase_if(eqs, [&](const auto& kv) { return !live.count(kv.first); });

  // Coarsest stable partition of the equation variables.
  std::map<Var, int> cls;
  for (const auto& [v, t] : eqs) cls[v] = 0;
  std::size_t classes = eqs.empty() ? 0 : 1;
  while (true) {
    std::map<std::pair<int, std::string>, int> ids;
    std::map<Var, int> next;
    for (const auto& [v, t] : eqs) {
      std::string sig;
      signature(t, cls, sig);
      auto key = std::make_pair(cls[v], sig);
      auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
      next[v] = it->second;
    }
    cls = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }

  std::map<int, Var> rep;
  for (const auto& [v, c] : cls) {
    if (!rep.count(c)) rep.emplace(c, v);
  }
  if (cls.count(root_)) rep[cls[root_]] = root_;
  Substitution to_rep;
  for (const auto& [v, c] : cls) to_rep.bind(v, Term::variable(rep[c]));

  std::map<Var, Term> merged;
  for (const auto& [c, v] : rep) merged.emplace(v, to_rep.apply(eqs.at(v)));

  // Inline acyclic equations.
  std::map<Var, Term> expanded;
  std::function<Term(const Term&)> expand = [&](const Term& t) -> Term {
    if (t.is_var()) {
      auto it = merged.find(t.var());
      if (it == merged.end() || on_cycle(t.var(), merged)) return t;
      auto memo = expanded.find(t.var());
      if (memo != expanded.end()) return memo->second;
      Term e = expand(it->second);
      expanded.emplace(t.var(), e);
      return e;
    }
    if (t.arity() == 0) return t;
    std::vector<Term> args;
    for (const Term& a : t.args()) args.push_back(expand(a));
    return Term::app(t.symbol(), std::move(args));
  };
  std::map<Var, Term> out;
  for (const auto& [v, t] : merged) {
    if (v == root_ || on_cycle(v, merged)) {
      out.emplace(v, t.is_var() ? t : expand(t));
    }
  }
  live = reachable(root_, out);
  std::erase_if(out, [&](const auto& kv) { return !live.count(kv.first); });
  return RationalTerm(root_, std::move(out));
}

std::string RationalTerm::to_string(const PrintOptions& opts) const {
  VarNaming local;
  PrintOptions o = opts;
  if (!o.naming) {
    std::set<Var> all{root_};
    for (const auto& [v, t] : equations_) {
      all.insert(v);
      collect_vars(t, all);
    }
    local = VarNaming::for_vars(all);
    o.naming = &local;
  }
  auto root_eq = equations_.find(root_);
  std::string out = o.naming->name(root_) + " = " +
                    (root_eq == equations_.end()
                         ? o.naming->name(root_)
                         : strucres::to_string(root_eq->second, o));
  bool first = true;
  for (const auto& [v, t] : equations_) {
    if (v == root_) continue;
    out += first ? " where " : ", ";
    first = false;
    out += o.naming->name(v) + " = " + strucres::to_string(t, o);
  }
  return out;
}

}  // namespace strucres
