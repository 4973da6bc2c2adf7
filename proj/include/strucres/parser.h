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

#ifndef STRUCRES_PARSER_H_
#define STRUCRES_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "strucres/program.h"

namespace strucres {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedProgram {
  Program program;
  TypingFunction typing;
  Signature signature;
};

// Clauses in file order, `:- coinductive name/arity.` directives, `%`
// comments. Throws ParseError or ArityClash.
ParsedProgram parse_program(std::string_view text);

// "?- g1, g2." The prefix and the final period are optional; the body must
// not be empty.
GoalClause parse_query(std::string_view text);

// A single term, variables at generation 0.
Term parse_term(std::string_view text);

// Source text that parses back to the same program and typing.
std::string to_source(const Program& p, const TypingFunction& ty = {});

}  // namespace strucres

#endif  // STRUCRES_PARSER_H_
