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

#ifndef STRUCRES_RATIONAL_H_
#define STRUCRES_RATIONAL_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "strucres/metric.h"
#include "strucres/term.h"

namespace strucres {

class IllFormedRationalTerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A possibly infinite term with finitely many distinct subtrees, written as
// a system of equations X = t where t may mention X or other equation
// variables. Variables without an equation are free.
class RationalTerm {
 public:
  // Throws IllFormedRationalTerm if some variable reaches itself through
  // variable-to-variable equations only; such a system denotes no tree.
  RationalTerm(Var root, std::map<Var, Term> equations);

  const Var& root() const { return root_; }
  const std::map<Var, Term>& equations() const { return equations_; }

  // True if the denoted tree is infinite.
  bool is_infinite() const;

  // Depth-n truncation of the denoted tree.
  TruncatedTerm unfold(std::uint32_t n) const;

  // Merges bisimilar equation variables, drops unreachable equations and
  // inlines every equation that is not on a cycle. The root keeps its name.
  RationalTerm minimized() const;

  // "X = scons(0, X)"; further equations follow after "where".
  std::string to_string(const PrintOptions& opts = {}) const;

 private:
  Term unfold_at(const Term& t, std::uint32_t remaining) const;

  Var root_;
  std::map<Var, Term> equations_;
};

}  // namespace strucres

#endif  // STRUCRES_RATIONAL_H_
