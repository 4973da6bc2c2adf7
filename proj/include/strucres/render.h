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

#ifndef STRUCRES_RENDER_H_
#define STRUCRES_RENDER_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "strucres/proof_search.h"

namespace strucres {

// One rendered binding of a query variable.
struct AnswerLine {
  std::string var;
  std::string term;
  bool rational = false;
};

// "X = t" for each query variable bound by `answer`, by variable name.
std::vector<AnswerLine> answer_lines(const GoalClause& query,
                                     const Substitution& answer);
std::vector<AnswerLine> answer_lines(const GoalClause& query,
                                     const CoinductiveAnswer& answer);
// Each query variable cut at the depth left below its first occurrence,
// so the lines agree with the truncated query.
std::vector<AnswerLine> answer_lines(const GoalClause& query,
                                     const Observation& obs);

// "X = t", with "  (rational)" appended for infinite answers.
std::string format_line(const AnswerLine& a);

// A resolvent as "Z = b, Y = s(0)".
std::string format_resolvent(const Substitution& theta);

// {"query", "status", "answer": [{"var", "term", "rational"}], "depth"?,
//  "resolvents"}.
nlohmann::json answer_json(const std::string& query, const std::string& status,
                           const std::vector<AnswerLine>& answer,
                           std::size_t resolvents,
                           std::optional<std::uint32_t> depth = std::nullopt);

// True when `j` has exactly the fields and types above.
bool valid_answer_json(const nlohmann::json& j);

}  // namespace strucres

#endif  // STRUCRES_RENDER_H_
