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

#ifndef STRUCRES_SESSION_H_
#define STRUCRES_SESSION_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "strucres/parser.h"
#include "strucres/proof_search.h"

namespace strucres {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitFuelOut = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitCantCreate = 73;

enum class Mode { kSld, kSrew, kColp, kObserve, kImplied };

std::optional<Mode> parse_mode(const std::string& s);
std::string to_string(Mode m);
bool needs_depth(Mode m);

struct SessionConfig {
  Mode mode = Mode::kSrew;
  std::optional<std::uint32_t> depth;
  std::size_t fuel = SearchOptions{}.fuel;
  std::optional<std::string> dot_path;
  bool json = false;
};

struct QueryOutcome {
  int exit_code = kExitSuccess;
  // Rendered lines, newline terminated; a single JSON line in JSON mode.
  std::string text;
  // DOT rendering of the last tree of the search, when there is one.
  std::optional<std::string> dot;
};

// Runs one query against a loaded program. Parse errors in the query give
// kExitParse and a message.
QueryOutcome run_query(const ParsedProgram& program, const std::string& query,
                       const SessionConfig& config);

// Batch entry point: loads the file, runs the query, prints to `out` and
// diagnostics to `err`, writes the DOT file if asked.
int run_file(const std::string& program_path, const std::string& query,
             const SessionConfig& config, std::ostream& out, std::ostream& err);

// Line-oriented interactive loop over arbitrary streams.
class Repl {
 public:
  Repl(SessionConfig config, std::ostream& out);

  // Loads a program; false (with a message) on failure.
  bool load(const std::string& path);
  // Handles one input line; false once the session should end.
  bool handle(const std::string& line);
  // Reads lines until end of input or :quit.
  void run(std::istream& in, bool prompt = false);

  const SessionConfig& config() const { return config_; }

 private:
  void command(const std::string& name, const std::string& arg);

  SessionConfig config_;
  std::ostream& out_;
  std::optional<ParsedProgram> program_;
  std::optional<std::string> last_dot_;
};

}  // namespace strucres

#endif  // STRUCRES_SESSION_H_
