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

#include "strucres/render.h"

#include <algorithm>

namespace strucres {

namespace {

std::vector<Var> sorted_query_vars(const GoalClause& q) {
  std::set<Var> vs = vars_of(q.body);
  std::vector<Var> out(vs.begin(), vs.end());
  std::stable_sort(out.begin(), out.end(), [](const Var& a, const Var& b) {
    return a.name < b.name;
  });
  return out;
}

std::string var_label(const GoalClause& q, const Var& v) {
  VarNaming naming = VarNaming::for_terms(q.body);
  return naming.name(v);
}

// Depth of the shallowest occurrence of `v` in the query atoms.
std::optional<std::size_t> occurrence_depth(const Term& t, const Var& v,
                                            std::size_t d = 0) {
  if (t.is_var()) {
    if (t.var() == v) return d;
    return std::nullopt;
  }
  std::optional<std::size_t> best;
  for (const Term& a : t.args()) {
    auto r = occurrence_depth(a, v, d + 1);
    if (r && (!best || *r < *best)) best = r;
  }
  return best;
}

}  // namespace

std::vector<AnswerLine> answer_lines(const GoalClause& query,
                                     const Substitution& answer) {
  std::vector<AnswerLine> out;
  for (const Var& v : sorted_query_vars(query)) {
    const Term* t = answer.lookup(v);
    if (!t) continue;
    std::vector<Term> shown = query.body;
    shown.push_back(*t);
    VarNaming naming = VarNaming::for_terms(shown);
    PrintOptions o;
    o.naming = &naming;
    out.push_back({naming.name(v), to_string(*t, o), false});
  }
  return out;
}

std::vector<AnswerLine> answer_lines(const GoalClause& query,
                                     const CoinductiveAnswer& answer) {
  std::vector<AnswerLine> out;
  for (const Var& v : sorted_query_vars(query)) {
    for (const QueryBinding& b : answer.bindings) {
      if (!(b.var == v)) continue;
      if (b.value.equations().empty()) break;
      std::string text = b.value.to_string();
      std::string label = var_label(query, v);
      // The rational term prints its own "X = "; keep the right-hand side.
      auto eq = text.find(" = ");
      out.push_back({label, eq == std::string::npos ? text : text.substr(eq + 3),
                     b.rational});
    }
  }
  return out;
}

std::vector<AnswerLine> answer_lines(const GoalClause& query,
                                     const Observation& obs) {
  std::vector<AnswerLine> out;
  Substitution none;
  for (const Var& v : sorted_query_vars(query)) {
    std::optional<std::size_t> at;
    for (const Term& t : query.body) {
      auto d = occurrence_depth(t, v);
      if (d && (!at || *d < *at)) at = d;
    }
    if (!at) continue;
    // The observed instance binds v at this position.
    Term value = Term::variable(v);
    Term inst = obs.instance;
    std::function<bool(const Term&, const Term&)> find =
        [&](const Term& pattern, const Term& subject) {
          if (pattern.is_var()) {
            if (pattern.var() == v) {
              value = subject;
              return true;
            }
            return false;
          }
          if (subject.is_var()) return false;
          for (std::size_t i = 0; i < pattern.arity(); ++i) {
            if (find(pattern.arg(i), subject.arg(i))) return true;
          }
          return false;
        };
    for (const Term& t : query.body) {
      if (find(t, inst)) break;
    }
    std::uint32_t left = obs.depth > *at ? obs.depth - static_cast<std::uint32_t>(*at) : 0;
    TruncatedTerm cut = truncate(left, value);
    std::vector<Term> shown = query.body;
    shown.push_back(cut.term());
    VarNaming naming = VarNaming::for_terms(shown);
    PrintOptions o;
    o.naming = &naming;
    out.push_back({naming.name(v), to_string(cut.term(), o), false});
  }
  return out;
}

std::string format_line(const AnswerLine& a) {
  std::string s = a.var + " = " + a.term;
  if (a.rational) s += "  (rational)";
  return s;
}

std::string format_resolvent(const Substitution& theta) {
  std::vector<Term> terms;
  for (const auto& [v, t] : theta.bindings()) {
    terms.push_back(Term::variable(v));
    terms.push_back(t);
  }
  VarNaming naming = VarNaming::for_terms(terms);
  PrintOptions o;
  o.naming = &naming;
  std::string out;
  for (const auto& [v, t] : theta.bindings()) {
    if (!out.empty()) out += ", ";
    out += naming.name(v) + " = " + to_string(t, o);
  }
  return out.empty() ? "{}" : out;
}

nlohmann::json answer_json(const std::string& query, const std::string& status,
                           const std::vector<AnswerLine>& answer,
                           std::size_t resolvents,
                           std::optional<std::uint32_t> depth) {
  nlohmann::json j;
  j["query"] = query;
  j["status"] = status;
  j["answer"] = nlohmann::json::array();
  for (const AnswerLine& a : answer) {
    j["answer"].push_back({{"var", a.var}, {"term", a.term}, {"rational", a.rational}});
  }
  if (depth) j["depth"] = *depth;
  j["resolvents"] = resolvents;
  return j;
}

bool valid_answer_json(const nlohmann::json& j) {
  if (!j.is_object()) return false;
  for (const auto& [key, value] : j.items()) {
    if (key != "query" && key != "status" && key != "answer" && key != "depth" &&
        key != "resolvents") {
      return false;
    }
  }
  if (!j.contains("query") || !j["query"].is_string()) return false;
  if (!j.contains("status") || !j["status"].is_string()) return false;
  if (!j.contains("resolvents") || !j["resolvents"].is_number_unsigned()) {
    return false;
  }
  if (j.contains("depth") && !j["depth"].is_number_unsigned()) return false;
  if (!j.contains("answer") || !j["answer"].is_array()) return false;
  for (const auto& a : j["answer"]) {
    if (!a.is_object() || a.size() != 3) return false;
    if (!a.contains("var") || !a["var"].is_string()) return false;
    if (!a.contains("term") || !a["term"].is_string()) return false;
    if (!a.contains("rational") || !a["rational"].is_boolean()) return false;
  }
  return true;
}

}  // namespace strucres
