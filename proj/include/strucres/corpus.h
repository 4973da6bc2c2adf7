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

#ifndef STRUCRES_CORPUS_H_
#define STRUCRES_CORPUS_H_

#include <map>
#include <string>
#include <vector>

#include "strucres/parser.h"

namespace strucres {

// Example programs P1..P12 plus "bad" and "good", keyed by name. Sources
// match the files under programs/.
const std::map<std::string, ParsedProgram>& corpus_entries();
std::map<std::string, Program> corpus();
const ParsedProgram& corpus_entry(const std::string& name);
const std::string& corpus_source(const std::string& name);
std::vector<std::string> corpus_names();

}  // namespace strucres

#endif  // STRUCRES_CORPUS_H_
