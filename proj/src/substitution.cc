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

#include "strucres/substitution.h"

namespace strucres {

Substitution::Substitution(
    std::initializer_list<std::pair<Var, Term>> bindings) {
  for (const auto& [v, t] : bindings) bind(v, t);
}

void Substitution::bind(const Var& v, Term t) {
  if (t.is_var() && t.var() == v) {
    bindings_.erase(v);
    return;
  }
  bindings_.insert_or_assign(v, std::move(t));
}

const Term* Substitution::lookup(const Var& v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (bindings_.empty() || t.is_ground()) return t;
  if (t.is_var()) {
    const Term* b = lookup(t.var());
    return b ? *b : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    changed = changed || !args.back().same_node(a);
  }
  if (!changed) return t;
  return Term::app(t.symbol(), std::move(args));
}

std::vector<Term> Substitution::apply(std::span<const Term> ts) const {
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const Term& t : ts) out.push_back(apply(t));
  return out;
}

std::set<Var> Substitution::domain() const {
  std::set<Var> out;
  for (const auto& [v, t] : bindings_) out.insert(v);
  return out;
}

std::set<Var> Substitution::range_vars() const {
  std::set<Var> out;
  for (const auto& [v, t] : bindings_) collect_vars(t, out);
  return out;
}

bool Substitution::is_idempotent() const {
  for (const auto& [v, t] : bindings_) {
    for (const auto& [w, u] : bindings_) {
      if (occurs(v, u)) return false;
    }
  }
  return true;
}

Substitution Substitution::restricted_to(const std::set<Var>& vars) const {
  Substitution out;
  for (const auto& [v, t] : bindings_) {
    if (vars.count(v)) out.bindings_.emplace(v, t);
  }
  return out;
}

std::string Substitution::to_string(const PrintOptions& opts) const {
  VarNaming local;
  PrintOptions o = opts;
  if (!o.naming) {
    std::set<Var> all = domain();
    for (const Var& v : range_vars()) all.insert(v);
    local = VarNaming::for_vars(all);
    o.naming = &local;
  }
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : bindings_) {
    if (!first) out += ", ";
    first = false;
    out += o.naming->name(v) + " ↦ " + strucres::to_string(t, o);
  }
  return out + "}";
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution out;
  for (const auto& [v, t] : inner.bindings()) out.bind(v, outer.apply(t));
  for (const auto& [v, t] : outer.bindings()) {
    if (!inner.lookup(v)) out.bind(v, t);
  }
  return out;
}

}  // namespace strucres
