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

#ifndef STRUCRES_ORACLE_H_
#define STRUCRES_ORACLE_H_

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "strucres/program.h"
#include "strucres/term.h"

namespace strucres {

inline constexpr std::size_t kDefaultUniverseCap = 100000;

class UniverseTooLarge : public std::runtime_error {
 public:
  explicit UniverseTooLarge(std::size_t cap);
};

class NotGround : public std::invalid_argument {
 public:
  explicit NotGround(const Term& t);
};

// Ground atoms derived by forward chaining with grounding substitutions
// whose terms have depth at most `depth_bound` (constants have depth 0).
struct HerbrandSlice {
  std::set<Term> terms;
  // Rounds actually performed.
  std::size_t iterations = 0;
  std::size_t depth_bound = 0;
  // True when the last round added nothing.
  bool fixpoint = false;
};

// Ground terms over the program's function symbols up to `depth_bound`. A
// fresh constant is added when the program has none. Throws
// UniverseTooLarge past `cap` terms.
std::vector<Term> herbrand_universe(const Program& p, std::size_t depth_bound,
                                    std::size_t cap = kDefaultUniverseCap);

// Semi-naive immediate-consequence rounds, at most `iterations` of them.
// Variables occurring only in a clause head range over the bounded
// universe.
HerbrandSlice forward_closure(const Program& p, std::size_t iterations,
                              std::size_t depth_bound,
                              std::size_t cap = kDefaultUniverseCap);

// Throws NotGround for atoms with variables.
bool member(const HerbrandSlice& slice, const Term& g);

}  // namespace strucres

#endif  // STRUCRES_ORACLE_H_
