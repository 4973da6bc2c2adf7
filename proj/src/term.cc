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

#include "strucres/term.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace strucres {

struct Term::Node {
  bool is_var = false;
  std::string symbol;
  std::uint32_t gen = 0;
  std::vector<Term> args;
  std::size_t hash = 0;
  std::size_t depth = 0;
  std::size_t size = 1;
  std::uint32_t max_gen = 0;
  bool ground = true;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string to_string(const Var& v) {
  if (v.gen == 0) return v.name;
  return v.name + "_" + std::to_string(v.gen);
}

Term Term::variable(std::string name, std::uint32_t gen) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->hash = mix(mix(0x51ed, std::hash<std::string>{}(name)), gen);
  n->symbol = std::move(name);
  n->gen = gen;
  n->max_gen = gen;
  n->ground = false;
  return Term(std::move(n));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  std::size_t h = mix(0xa991, std::hash<std::string>{}(symbol));
  h = mix(h, args.size());
  for (const Term& a : args) {
    h = mix(h, a.node_->hash);
    n->depth = std::max(n->depth, a.node_->depth + 1);
    n->size += a.node_->size;
    n->max_gen = std::max(n->max_gen, a.node_->max_gen);
    n->ground = n->ground && a.node_->ground;
  }
  n->hash = h;
  n->symbol = std::move(symbol);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::diamond() {
  static const Term d = app(std::string(kDiamondSymbol));
  return d;
}

bool Term::is_var() const { return node_->is_var; }
bool Term::is_diamond() const {
  return !node_->is_var && node_->args.empty() &&
         node_->symbol == kDiamondSymbol;
}
const std::string& Term::symbol() const { return node_->symbol; }
std::uint32_t Term::gen() const { return node_->gen; }
Var Term::var() const { return Var{node_->symbol, node_->gen}; }
std::span<const Term> Term::args() const { return node_->args; }
const Term& Term::arg(std::size_t i) const { return node_->args.at(i); }
std::size_t Term::arity() const { return node_->args.size(); }
bool Term::is_ground() const { return node_->ground; }
std::size_t Term::depth() const { return node_->depth; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }
std::uint32_t Term::max_gen() const { return node_->max_gen; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.hash != y.hash || x.is_var != y.is_var || x.gen != y.gen ||
      x.args.size() != y.args.size() || x.symbol != y.symbol) {
    return false;
  }
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (!(x.args[i] == y.args[i])) return false;
  }
  return true;
}

// Variables sort before applications; applications by symbol, arity, then
// arguments left to right.
std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.is_var != y.is_var) {
    return x.is_var ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = x.symbol <=> y.symbol; c != 0) return c;
  if (x.is_var) return x.gen <=> y.gen;
  if (auto c = x.args.size() <=> y.args.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (auto c = x.args[i] <=> y.args[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Position Position::child(std::uint32_t i) const {
  std::vector<std::uint32_t> s = steps_;
  s.push_back(i);
  return Position(std::move(s));
}

Position Position::parent() const {
  if (steps_.empty()) throw std::logic_error("root has no parent");
  return Position(std::vector<std::uint32_t>(steps_.begin(), steps_.end() - 1));
}

bool Position::is_prefix_of(const Position& other) const {
  return steps_.size() <= other.steps_.size() &&
         std::equal(steps_.begin(), steps_.end(), other.steps_.begin());
}

std::string Position::to_string() const {
  if (steps_.empty()) return "ε";
  std::string out = "[";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(steps_[i]);
  }
  return out + "]";
}

PositionOutOfRange::PositionOutOfRange(const Position& w)
    : std::out_of_range("position " + w.to_string() + " is not in the term") {}

Term subterm(const Term& t, const Position& w) {
  Term cur = t;
  for (std::uint32_t i : w.steps()) {
    if (i >= cur.arity()) throw PositionOutOfRange(w);
    cur = cur.arg(i);
  }
  return cur;
}

bool has_position(const Term& t, const Position& w) {
  const Term* cur = &t;
  for (std::uint32_t i : w.steps()) {
    if (i >= cur->arity()) return false;
    cur = &cur->arg(i);
  }
  return true;
}

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  std::deque<std::pair<Position, Term>> queue;
  queue.emplace_back(Position{}, t);
  while (!queue.empty()) {
    auto [w, s] = std::move(queue.front());
    queue.pop_front();
    for (std::uint32_t i = 0; i < s.arity(); ++i) {
      queue.emplace_back(w.child(i), s.arg(i));
    }
    out.push_back(std::move(w));
  }
  return out;
}

void collect_vars(const Term& t, std::set<Var>& out) {
  if (t.is_ground()) return;
  if (t.is_var()) {
    out.insert(t.var());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

std::set<Var> vars_of(const Term& t) {
  std::set<Var> out;
  collect_vars(t, out);
  return out;
}

std::set<Var> vars_of(std::span<const Term> ts) {
  std::set<Var> out;
  for (const Term& t : ts) collect_vars(t, out);
  return out;
}

bool occurs(const Var& v, const Term& t) {
  if (t.is_ground()) return false;
  if (t.is_var()) return t.gen() == v.gen && t.symbol() == v.name;
  for (const Term& a : t.args()) {
    if (occurs(v, a)) return true;
  }
  return false;
}

VarNaming VarNaming::for_vars(const std::set<Var>& vars) {
  std::map<std::string, int> count;
  for (const Var& v : vars) ++count[v.name];
  VarNaming naming;
  for (const Var& v : vars) {
    bool bare = v.gen == 0 || count[v.name] == 1;
    naming.names_[v] = bare ? v.name : to_string(v);
  }
  return naming;
}

VarNaming VarNaming::for_terms(std::span<const Term> ts) {
  return for_vars(vars_of(ts));
}

std::string VarNaming::name(const Var& v) const {
  auto it = names_.find(v);
  return it == names_.end() ? to_string(v) : it->second;
}

namespace {

void print(const Term& t, const PrintOptions& opts, std::string& out) {
  if (t.is_var()) {
    out += opts.naming ? opts.naming->name(t.var()) : to_string(t.var());
    return;
  }
  if (opts.ascii && t.is_diamond()) {
    out += kDiamondAscii;
    return;
  }
  out += t.symbol();
  if (t.arity() == 0) return;
  out += "(";
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ", ";
    print(t.arg(i), opts, out);
  }
  out += ")";
}

}  // namespace

std::string to_string(const Term& t, const PrintOptions& opts) {
  std::string out;
  print(t, opts, out);
  return out;
}

std::string to_string(std::span<const Term> ts, const PrintOptions& opts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ", ";
    print(ts[i], opts, out);
  }
  return out;
}

}  // namespace strucres
