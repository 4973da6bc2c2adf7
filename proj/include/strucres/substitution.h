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

#ifndef STRUCRES_SUBSTITUTION_H_
#define STRUCRES_SUBSTITUTION_H_

#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strucres/term.h"

namespace strucres {

// Finite map from variables to finite terms. Identity bindings are never
// stored, so the empty substitution is the identity.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Var, Term>> bindings);

  static Substitution identity() { return Substitution(); }

  // Adds or replaces a binding. Binding a variable to itself erases it.
  void bind(const Var& v, Term t);
  const Term* lookup(const Var& v) const;

  // Homomorphic replacement, one pass: the image of a bound variable is not
  // itself rewritten.
  Term apply(const Term& t) const;
  std::vector<Term> apply(std::span<const Term> ts) const;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::map<Var, Term>& bindings() const { return bindings_; }

  std::set<Var> domain() const;
  std::set<Var> range_vars() const;
  // Domain and range variables are disjoint.
  bool is_idempotent() const;

  Substitution restricted_to(const std::set<Var>& vars) const;

  std::string to_string(const PrintOptions& opts = {}) const;

  bool operator==(const Substitution&) const = default;

 private:
  std::map<Var, Term> bindings_;
};

// compose(outer, inner) applies inner first: for every t,
// compose(outer, inner).apply(t) == outer.apply(inner.apply(t)).
Substitution compose(const Substitution& outer, const Substitution& inner);

}  // namespace strucres

#endif  // STRUCRES_SUBSTITUTION_H_
