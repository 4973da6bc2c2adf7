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

#include "strucres/rewriting_tree.h"

#include <algorithm>
#include <deque>
#include <limits>

#include "json.hpp"
#include "strucres/unify.h"

namespace strucres {

std::uint32_t ScopeTable::generation(const Position& w) {
  auto [it, fresh] = gens_.emplace(w, next_);
  if (fresh) ++next_;
  return it->second;
}

std::size_t RewTree::complete_depth() const {
  std::size_t d = std::numeric_limits<std::size_t>::max();
  for (const RewNode& n : nodes_) {
    if (!n.expanded) d = std::min(d, n.position.depth());
  }
  return d;
}

const RewNode* RewTree::at(const Position& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

std::optional<std::size_t> RewTree::find_var(std::uint32_t id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].is_var() && nodes_[i].var().id == id) return i;
  }
  return std::nullopt;
}

BuildOptions RewTree::derivation_options() const {
  BuildOptions o;
  o.budget = budget_;
  o.scopes = scopes_;
  o.or_vars = or_vars_;
  o.next_or_var = next_or_var_;
  return o;
}

namespace {

std::uint32_t base_generation(const Program& p, const Clause& c,
                              const Substitution& s) {
  std::uint32_t g = std::max(p.max_gen(), c.head.max_gen());
  for (const Term& b : c.body) g = std::max(g, b.max_gen());
  for (const auto& [v, t] : s.bindings()) {
    g = std::max({g, v.gen, t.max_gen()});
  }
  return g + 1;
}

}  // namespace

// Breadth-first expansion of nodes queued on a tree under construction.
class TreeBuilder {
 public:
  TreeBuilder(RewTree& tree, Substitution sigma)
      : tree_(tree), sigma_(std::move(sigma)) {}

  std::size_t add(Position w, NodePayload payload,
                  std::optional<std::size_t> parent, bool queue) {
    std::size_t i = tree_.nodes_.size();
    tree_.nodes_.push_back({std::move(w), std::move(payload), parent, {}, true});
    if (parent) tree_.nodes_[*parent].children.push_back(i);
    if (queue) queue_.push_back(i);
    return i;
  }

  // Expand exactly the nodes above `depth` instead of following the budget.
  void limit_depth(std::size_t depth) { depth_limit_ = depth; }

  void run() {
    while (!queue_.empty()) {
      std::size_t i = queue_.front();
      queue_.pop_front();
      bool stop = depth_limit_
                      ? tree_.nodes_[i].position.depth() >= *depth_limit_
                      : tree_.exhausted_ || tree_.nodes_.size() >= tree_.budget_;
      if (stop) {
        tree_.exhausted_ = true;
        tree_.nodes_[i].expanded = false;
        continue;
      }
      if (tree_.nodes_[i].is_clause()) {
        expand_clause(i);
      } else if (tree_.nodes_[i].is_term()) {
        expand_term(i);
      }
    }
  }

  // Clause P(i) renamed for position w, and its mgm against t if any.
  static std::pair<Clause, std::optional<Substitution>> match_at(
      RewTree& tree, const Position& w, std::size_t i, const Term& t) {
    Clause r = rename_with(tree.program_[i], tree.scopes_->generation(w));
    std::optional<Substitution> m;
    if (r.head.symbol() == t.symbol() && r.head.arity() == t.arity()) {
      m = mgm(r.head, t);
    }
    return {std::move(r), std::move(m)};
  }

  std::uint32_t or_var(const Position& w) {
    auto [it, fresh] = tree_.or_vars_.emplace(w, tree_.next_or_var_);
    if (fresh) ++tree_.next_or_var_;
    return it->second;
  }

  const Substitution& sigma() const { return sigma_; }

 private:
  void expand_clause(std::size_t i) {
    Clause c = tree_.nodes_[i].clause();
    Position w = tree_.nodes_[i].position;
    for (std::uint32_t j = 0; j < c.body.size(); ++j) {
      add(w.child(j), TermNode{c.body[j]}, i, true);
    }
  }

  void expand_term(std::size_t i) {
    Term t = tree_.nodes_[i].term();
    Position w = tree_.nodes_[i].position;
    for (std::uint32_t k = 0; k < tree_.program_.size(); ++k) {
      Position wk = w.child(k);
      auto [r, m] = match_at(tree_, wk, k, t);
      if (m) {
        add(wk, ClauseNode{apply(sigma_, apply(*m, r)), k}, i, true);
      } else {
        add(wk, VarNode{or_var(wk), k}, i, false);
      }
    }
  }

  RewTree& tree_;
  Substitution sigma_;
  std::deque<std::size_t> queue_;
  std::optional<std::size_t> depth_limit_;
};

namespace {

// Restores breadth-first order (depth, then position) and the index.
void finalize(std::vector<RewNode>& nodes, std::map<Position, std::size_t>& index) {
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Position& x = nodes[a].position;
    const Position& y = nodes[b].position;
    if (x.depth() != y.depth()) return x.depth() < y.depth();
    return x < y;
  });
  std::vector<std::size_t> where(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) where[order[i]] = i;
  std::vector<RewNode> sorted;
  sorted.reserve(nodes.size());
  for (std::size_t i : order) {
    RewNode n = std::move(nodes[i]);
    if (n.parent) n.parent = where[*n.parent];
    for (std::size_t& c : n.children) c = where[c];
    sorted.push_back(std::move(n));
  }
  nodes = std::move(sorted);
  index.clear();
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i].position, i);
}

}  // namespace

RewTree build_rew(const Program& p, const Clause& c, const Substitution& sigma,
                  BuildOptions opts) {
  RewTree t;
  t.program_ = p;
  t.goal_ = c;
  t.sigma_ = sigma;
  t.budget_ = std::max<std::size_t>(opts.budget, 1);
  t.scopes_ = opts.scopes ? opts.scopes
                          : std::make_shared<ScopeTable>(base_generation(p, c, sigma));
  t.or_vars_ = std::move(opts.or_vars);
  t.next_or_var_ = opts.next_or_var;
  TreeBuilder b(t, sigma);
  b.add(Position{}, ClauseNode{apply(sigma, c), std::nullopt}, std::nullopt, true);
  b.run();
  finalize(t.nodes_, t.index_);
  return t;
}

RewTree build_rew(const Program& p, const GoalClause& g,
                  const Substitution& sigma, BuildOptions opts) {
  return build_rew(p, g.as_clause(), sigma, std::move(opts));
}

RewTree apply_subst_tree(const Substitution& theta, const RewTree& t) {
  RewTree out;
  out.program_ = t.program_;
  out.goal_ = t.goal_;
  out.sigma_ = compose(theta, t.sigma_);
  out.scopes_ = t.scopes_;
  out.budget_ = t.budget_;
  out.or_vars_ = t.or_vars_;
  out.next_or_var_ = t.next_or_var_;
  out.exhausted_ = t.exhausted_;
  TreeBuilder b(out, out.sigma_);
  // A partial input is only meaningful above its shallowest frontier node;
  // grown subtrees are completed to that depth.
  if (t.exhausted_) b.limit_depth(t.complete_depth());
  std::vector<std::size_t> moved(t.nodes_.size());
  for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
    const RewNode& n = t.nodes_[i];
    std::optional<std::size_t> parent;
    if (n.parent) parent = moved[*n.parent];
    if (const auto* c = std::get_if<ClauseNode>(&n.payload)) {
      moved[i] = b.add(n.position, ClauseNode{apply(theta, c->clause), c->index},
                       parent, false);
    } else if (const auto* tn = std::get_if<TermNode>(&n.payload)) {
      moved[i] = b.add(n.position, TermNode{theta.apply(tn->term)}, parent, false);
    } else {
      const VarNode& v = std::get<VarNode>(n.payload);
      const Term& above = out.nodes_[*parent].term();
      auto [r, m] = TreeBuilder::match_at(out, n.position, v.clause, above);
      if (m) {
        // The variable is replaced by the tree grown from the now matching
        // clause under the composed substitution.
        moved[i] = b.add(n.position,
                         ClauseNode{apply(out.sigma_, apply(*m, r)), v.clause},
                         parent, true);
      } else {
        moved[i] = b.add(n.position, v, parent, false);
      }
    }
    out.nodes_[moved[i]].expanded = n.expanded;
  }
  b.run();
  finalize(out.nodes_, out.index_);
  return out;
}

std::optional<SuccessSubtree> find_success_subtree(const RewTree& t) {
  const auto& nodes = t.nodes();
  std::vector<char> ok(nodes.size(), 0);
  std::vector<std::size_t> choice(nodes.size(), 0);
  for (std::size_t i = nodes.size(); i-- > 0;) {
    const RewNode& n = nodes[i];
    if (!n.expanded || n.is_var()) continue;
    if (n.is_clause()) {
      ok[i] = std::all_of(n.children.begin(), n.children.end(),
                          [&](std::size_t c) { return ok[c] != 0; });
    } else {
      for (std::size_t c : n.children) {
        if (ok[c]) {
          ok[i] = 1;
          choice[i] = c;
          break;
        }
      }
    }
  }
  if (nodes.empty() || !ok[0]) return std::nullopt;
  std::vector<std::size_t> picked;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    picked.push_back(i);
    if (nodes[i].is_clause()) {
      for (std::size_t c : nodes[i].children) queue.push_back(c);
    } else {
      queue.push_back(choice[i]);
    }
  }
  std::sort(picked.begin(), picked.end());
  SuccessSubtree s;
  for (std::size_t i : picked) {
    s.positions.push_back(nodes[i].position);
    if (nodes[i].is_clause() && nodes[i].children.empty()) {
      s.leaves.push_back(nodes[i].position);
    }
  }
  return s;
}

std::optional<Substitution> external_resolvent(const RewTree& t,
                                               std::size_t var_index) {
  const RewNode& n = t.node(var_index);
  const VarNode& v = n.var();
  const Term& above = t.node(*n.parent).term();
  Clause r = rename_with(t.program()[v.clause],
                         t.scopes()->generation(n.position));
  Resolvent res = resolvent(r.head, above);
  if (res.kind != ResolventKind::kExternal) return std::nullopt;
  return res.theta;
}

TransitionResult transition(const RewTree& t, std::size_t var_index) {
  auto theta = external_resolvent(t, var_index);
  if (!theta) return EmptyTree{};
  return build_rew(t.program(), t.goal(), compose(*theta, t.sigma()),
                   t.derivation_options());
}

TransitionResult transition_on(const RewTree& t, std::uint32_t or_var) {
  auto i = t.find_var(or_var);
  if (!i) return EmptyTree{};
  return transition(t, *i);
}

std::map<Position, NodeClass> classify_nodes(const RewTree& t,
                                             const TypingFunction& ty) {
  std::map<Position, NodeClass> out;
  std::vector<Kind> kinds(t.size(), Kind::kInductive);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const RewNode& n = t.node(i);
    NodeClass c;
    if (n.is_term()) {
      c.kind = ty.kind_of(n.term());
    } else if (n.parent) {
      c.kind = kinds[*n.parent];
    }
    if (n.is_var() && external_resolvent(t, i)) c.openness = Openness::kOpen;
    kinds[i] = c.kind;
    out.emplace(n.position, c);
  }
  return out;
}

namespace {

bool same_node(const RewNode& x, const RewNode& y,
               std::map<std::uint32_t, std::uint32_t>& fwd,
               std::map<std::uint32_t, std::uint32_t>& back) {
  if (x.position != y.position || x.payload.index() != y.payload.index()) {
    return false;
  }
  if (x.is_clause()) {
    const auto& cx = std::get<ClauseNode>(x.payload);
    const auto& cy = std::get<ClauseNode>(y.payload);
    return cx.clause == cy.clause && cx.index == cy.index;
  }
  if (x.is_term()) return x.term() == y.term();
  if (x.var().clause != y.var().clause) return false;
  auto f = fwd.emplace(x.var().id, y.var().id).first;
  auto g = back.emplace(y.var().id, x.var().id).first;
  return f->second == y.var().id && g->second == x.var().id;
}

}  // namespace

bool equivalent(const RewTree& a, const RewTree& b) {
  if (a.size() != b.size() || a.exhausted() != b.exhausted()) return false;
  std::map<std::uint32_t, std::uint32_t> fwd, back;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.node(i).expanded != b.node(i).expanded) return false;
    if (!same_node(a.node(i), b.node(i), fwd, back)) return false;
  }
  return true;
}

bool equivalent_up_to(const RewTree& a, const RewTree& b, std::size_t depth) {
  if (depth > 0 &&
      (a.complete_depth() < depth - 1 || b.complete_depth() < depth - 1)) {
    return false;
  }
  auto shallow = [&](const RewTree& t) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.node(i).position.depth() < depth) out.push_back(i);
    }
    return out;
  };
  std::vector<std::size_t> xs = shallow(a);
  std::vector<std::size_t> ys = shallow(b);
  if (xs.size() != ys.size()) return false;
  std::map<std::uint32_t, std::uint32_t> fwd, back;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!same_node(a.node(xs[k]), b.node(ys[k]), fwd, back)) return false;
  }
  return true;
}

namespace {

VarNaming tree_naming(const RewTree& t) {
  std::set<Var> vars;
  for (const RewNode& n : t.nodes()) {
    if (n.is_clause()) {
      std::set<Var> cv = n.clause().vars();
      vars.insert(cv.begin(), cv.end());
    } else if (n.is_term()) {
      collect_vars(n.term(), vars);
    }
  }
  return VarNaming::for_vars(vars);
}

std::string label(const RewNode& n, const PrintOptions& o) {
  if (n.is_clause()) return to_string(n.clause(), o);
  if (n.is_term()) return to_string(n.term(), o);
  return "X" + std::to_string(n.var().id);
}

std::string dot_id(const Position& w) {
  std::string id = "n";
  for (std::uint32_t s : w.steps()) id += "_" + std::to_string(s);
  return id;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string RewTree::to_string(const PrintOptions& opts) const {
  VarNaming naming = tree_naming(*this);
  PrintOptions o = opts;
  if (!o.naming) o.naming = &naming;
  std::string out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    const RewNode& n = nodes_[i];
    out += std::string(2 * n.position.depth(), ' ') + label(n, o);
    if (!n.expanded) out += "  ...";
    out += "\n";
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return out;
}

std::string to_dot(const RewTree& t, const PrintOptions& opts) {
  VarNaming naming = tree_naming(t);
  PrintOptions o = opts;
  if (!o.naming) o.naming = &naming;
  std::string out = "digraph rew {\n  node [fontname=\"Helvetica\"];\n";
  for (const RewNode& n : t.nodes()) {
    const char* shape = n.is_clause() ? "box" : n.is_term() ? "ellipse" : "diamond";
    out += "  " + dot_id(n.position) + " [label=\"" + dot_escape(label(n, o)) +
           "\", shape=" + shape + "];\n";
    if (!n.expanded) {
      out += "  " + dot_id(n.position) + "_more [label=\"...\", shape=plaintext];\n";
      out += "  " + dot_id(n.position) + " -> " + dot_id(n.position) +
             "_more [style=dotted];\n";
    }
  }
  for (const RewNode& n : t.nodes()) {
    for (std::size_t c : n.children) {
      out += "  " + dot_id(n.position) + " -> " + dot_id(t.node(c).position) + ";\n";
    }
  }
  return out + "}\n";
}

std::string to_json(const RewTree& t) {
  VarNaming naming = tree_naming(t);
  PrintOptions o;
  o.naming = &naming;
  nlohmann::json nodes = nlohmann::json::array();
  for (const RewNode& n : t.nodes()) {
    nlohmann::json j;
    j["position"] = std::vector<std::uint32_t>(n.position.steps().begin(),
                                               n.position.steps().end());
    j["kind"] = n.is_clause() ? "clause" : n.is_term() ? "term" : "var";
    j["label"] = label(n, o);
    if (n.is_clause() && std::get<ClauseNode>(n.payload).index) {
      j["clause"] = *std::get<ClauseNode>(n.payload).index;
    }
    if (n.is_var()) j["clause"] = n.var().clause;
    j["expanded"] = n.expanded;
    nodes.push_back(std::move(j));
  }
  nlohmann::json out;
  out["goal"] = to_string(t.goal(), o);
  out["sigma"] = t.sigma().to_string(o);
  out["exhausted"] = t.exhausted();
  out["nodes"] = std::move(nodes);
  return out.dump(2);
}

}  // namespace strucres
